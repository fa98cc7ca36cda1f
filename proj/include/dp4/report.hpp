#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dp4/families.hpp"

namespace dp4 {

using ordered_json = nlohmann::ordered_json;

// "0" for an empty fixed part, else "m1*(...)+m2*(...)".
std::string fixed_part_to_string(const FixedPart& fixed);

// JSON object with keys, in order:
// tuple, d, g, dim_w, k, s, tangent_dim, fixed_part, label, rule.
// Lattice-only records carry null dim_w/tangent_dim/label.
ordered_json record_json(const FamilyRecord& rec);
ordered_json records_json(const std::vector<FamilyRecord>& recs);

// CSV with a header row and the same columns as the JSON keys.
std::string records_csv(const std::vector<FamilyRecord>& recs);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& value);

struct RegionRow {
  Coeff d = 0;
  Coeff g = 0;
  RegionLabel label;
};

// One row per (d,g) with 9 <= d <= dmax and 0 <= g <= max_genus(d).
std::vector<RegionRow> region_sweep(Coeff dmax);

ordered_json region_json(const std::vector<RegionRow>& rows);
std::string region_csv(const std::vector<RegionRow>& rows);

// Static SVG scatter of the sweep: one circle per (d,g) colored by region,
// the three boundary curves 10g = d^2-3d+6, g = 2d-12, 2g = 5d-70, and the
// Hodge parabola 8g = d^2-4d+8.
std::string region_svg(const std::vector<RegionRow>& rows);

}  // namespace dp4
