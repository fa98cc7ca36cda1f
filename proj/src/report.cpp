#include "dp4/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dp4 {

std::string fixed_part_to_string(const FixedPart& fixed) {
  if (fixed.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (i > 0) out += "+";
    out += std::to_string(fixed[i].mult) + "*" + to_string(fixed[i].line.cls);
  }
  return out;
}

ordered_json record_json(const FamilyRecord& rec) {
  ordered_json j;
  j["tuple"] = to_string(rec.tuple);
  j["d"] = rec.d;
  j["g"] = rec.g;
  j["dim_w"] = rec.lattice_only ? ordered_json(nullptr) : ordered_json(rec.dim_w);
  j["k"] = rec.k;
  j["s"] = rec.s;
  j["tangent_dim"] =
      rec.lattice_only ? ordered_json(nullptr) : ordered_json(rec.tangent_dim);
  ordered_json fixed = ordered_json::array();
  for (const FixedPartEntry& entry : rec.fixed_part_2) {
    ordered_json item;
    item["line"] = to_string(entry.line.cls);
    item["mult"] = entry.mult;
    fixed.push_back(std::move(item));
  }
  j["fixed_part"] = std::move(fixed);
  j["label"] = rec.lattice_only ? ordered_json(nullptr)
                                : ordered_json(to_string(rec.label.label));
  j["rule"] = to_string(rec.label.rule);
  return j;
}

ordered_json records_json(const std::vector<FamilyRecord>& recs) {
  ordered_json arr = ordered_json::array();
  for (const FamilyRecord& rec : recs) arr.push_back(record_json(rec));
  return arr;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string records_csv(const std::vector<FamilyRecord>& recs) {
  std::string out = "tuple,d,g,dim_w,k,s,tangent_dim,fixed_part,label,rule\n";
  for (const FamilyRecord& rec : recs) {
    out += csv_field(to_string(rec.tuple)) + ",";
    out += std::to_string(rec.d) + ",";
    out += std::to_string(rec.g) + ",";
    out += (rec.lattice_only ? "" : std::to_string(rec.dim_w)) + ",";
    out += std::to_string(rec.k) + ",";
    out += std::to_string(rec.s) + ",";
    out += (rec.lattice_only ? "" : std::to_string(rec.tangent_dim)) + ",";
    out += csv_field(fixed_part_to_string(rec.fixed_part_2)) + ",";
    out += (rec.lattice_only ? "" : to_string(rec.label.label)) + ",";
    out += to_string(rec.label.rule) + "\n";
  }
  return out;
}

std::vector<RegionRow> region_sweep(Coeff dmax) {
  if (dmax < 9) {
    throw BadRangeError("region sweep requires dmax >= 9");
  }
  std::vector<RegionRow> rows;
  for (Coeff d = 9; d <= dmax; ++d) {
    for (Coeff g = 0; g <= max_genus(d); ++g) {
      rows.push_back({d, g, region_of(d, g)});
    }
  }
  return rows;
}

ordered_json region_json(const std::vector<RegionRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const RegionRow& row : rows) {
    ordered_json j;
    j["d"] = row.d;
    j["g"] = row.g;
    j["region"] = to_string(row.label.region);
    j["inequality"] = row.label.inequality;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string region_csv(const std::vector<RegionRow>& rows) {
  std::string out = "d,g,region,inequality\n";
  for (const RegionRow& row : rows) {
    out += std::to_string(row.d) + "," + std::to_string(row.g) + "," +
           to_string(row.label.region) + "," + csv_field(row.label.inequality) +
           "\n";
  }
  return out;
}

namespace {

const char* region_color(Region region) {
  switch (region) {
    case Region::I:
      return "#3b6fb6";
    case Region::II:
      return "#e4572e";
    case Region::III:
      return "#2e933c";
    case Region::IV:
      return "#8e44ad";
    case Region::OutOfRange:
      return "#999999";
  }
  return "#000000";
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string region_svg(const std::vector<RegionRow>& rows) {
  Coeff dmax = 9;
  Coeff gmax = 1;
  for (const RegionRow& row : rows) {
    dmax = std::max(dmax, row.d);
    gmax = std::max(gmax, row.g);
  }
  const double margin_left = 56.0;
  const double margin_right = 160.0;
  const double margin_top = 32.0;
  const double margin_bottom = 48.0;
  const double sx = 16.0;
  const double plot_h = 480.0;
  const double sy = plot_h / static_cast<double>(gmax);
  const double width = margin_left + sx * static_cast<double>(dmax - 9) +
                       margin_right;
  const double height = margin_top + plot_h + margin_bottom;
  auto px = [&](double d) { return margin_left + (d - 9.0) * sx; };
  auto py = [&](double g) { return margin_top + plot_h - g * sy; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         fmt2(width) + "\" height=\"" + fmt2(height) + "\" viewBox=\"0 0 " +
         fmt2(width) + " " + fmt2(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  svg += "<line x1=\"" + fmt2(px(9)) + "\" y1=\"" + fmt2(py(0)) + "\" x2=\"" +
         fmt2(px(static_cast<double>(dmax))) + "\" y2=\"" + fmt2(py(0)) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt2(px(9)) + "\" y1=\"" + fmt2(py(0)) + "\" x2=\"" +
         fmt2(px(9)) + "\" y2=\"" + fmt2(py(static_cast<double>(gmax))) +
         "\" stroke=\"black\"/>\n";
  for (Coeff d = 10; d <= dmax; d += 5) {
    svg += "<text x=\"" + fmt2(px(static_cast<double>(d))) + "\" y=\"" +
           fmt2(py(0) + 16.0) +
           "\" font-size=\"10\" text-anchor=\"middle\">" + std::to_string(d) +
           "</text>\n";
  }
  for (Coeff g = 0; g <= gmax; g += 10) {
    svg += "<text x=\"" + fmt2(px(9) - 6.0) + "\" y=\"" +
           fmt2(py(static_cast<double>(g)) + 3.0) +
           "\" font-size=\"10\" text-anchor=\"end\">" + std::to_string(g) +
           "</text>\n";
  }
  svg += "<text x=\"" + fmt2(px(static_cast<double>(dmax)) + 8.0) + "\" y=\"" +
         fmt2(py(0) + 16.0) + "\" font-size=\"11\">d</text>\n";
  svg += "<text x=\"" + fmt2(px(9) - 6.0) + "\" y=\"" +
         fmt2(margin_top - 10.0) + "\" font-size=\"11\">g</text>\n";

  // boundary curves, sampled at integer d and clipped to the plot range
  struct Curve {
    const char* name;
    const char* color;
    const char* dash;
    double (*value)(double);
  };
  const Curve curves[] = {
      {"10g = d^2-3d+6", "#555555", "",
       [](double d) { return (d * d - 3.0 * d + 6.0) / 10.0; }},
      {"g = 2d-12", "#555555", "6 3", [](double d) { return 2.0 * d - 12.0; }},
      {"2g = 5d-70", "#555555", "2 3",
       [](double d) { return (5.0 * d - 70.0) / 2.0; }},
      {"8g = d^2-4d+8 (Hodge)", "#aaaaaa", "1 2",
       [](double d) { return (d * d - 4.0 * d + 8.0) / 8.0; }},
  };
  for (const Curve& curve : curves) {
    std::string points;
    auto flush = [&]() {
      if (points.empty()) return;
      svg += "<polyline fill=\"none\" stroke=\"" + std::string(curve.color) +
             "\"";
      if (curve.dash[0] != '\0') {
        svg += " stroke-dasharray=\"" + std::string(curve.dash) + "\"";
      }
      svg += " points=\"" + points + "\"><title>" + curve.name +
             "</title></polyline>\n";
      points.clear();
    };
    for (Coeff d = 9; d <= dmax; ++d) {
      const double g = curve.value(static_cast<double>(d));
      if (g < -0.5 || g > static_cast<double>(gmax) + 0.5) {
        flush();
        continue;
      }
      if (!points.empty()) points += " ";
      points += fmt2(px(static_cast<double>(d))) + "," + fmt2(py(g));
    }
    flush();
  }

  // lattice points colored by region
  for (const RegionRow& row : rows) {
    svg += "<circle cx=\"" + fmt2(px(static_cast<double>(row.d))) + "\" cy=\"" +
           fmt2(py(static_cast<double>(row.g))) + "\" r=\"3\" fill=\"" +
           region_color(row.label.region) + "\"><title>(" +
           std::to_string(row.d) + "," + std::to_string(row.g) + ") " +
           to_string(row.label.region) + "</title></circle>\n";
  }

  // legend
  const Region legend[] = {Region::I, Region::II, Region::III, Region::IV};
  double ly = margin_top + 8.0;
  const double lx = width - margin_right + 24.0;
  for (Region region : legend) {
    svg += "<rect x=\"" + fmt2(lx) + "\" y=\"" + fmt2(ly - 9.0) +
           "\" width=\"10\" height=\"10\" fill=\"" + region_color(region) +
           "\"/>\n";
    svg += "<text x=\"" + fmt2(lx + 16.0) + "\" y=\"" + fmt2(ly) +
           "\" font-size=\"11\">" + to_string(region) + "</text>\n";
    ly += 18.0;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace dp4
