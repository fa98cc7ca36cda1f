#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dp4/report.hpp"

namespace {

using dp4::Coeff;
using dp4::FamilyRecord;

constexpr const char* kUsage =
    "usage: dp4 <command> [options]\n"
    "\n"
    "commands:\n"
    "  normalize <class>            standard form and Weyl word of a class\n"
    "  family <class>               full family report for a curve class\n"
    "  enumerate <d> <g>            all families of degree d and genus g\n"
    "  table1                       the 29 families with 14 <= d <= 18 in region II\n"
    "  region --dmax N              region of every (d,g) with 9 <= d <= N\n"
    "  lines                        the 16 line and 10 conic classes\n"
    "\n"
    "options:\n"
    "  --format, -f text|json|csv|svg   output format (svg: region only)\n"
    "  --out, -o PATH                   write output to PATH instead of stdout\n"
    "  --allow-small-degree             emit lattice-only data when d <= 8\n"
    "  --help, -h                       show this message\n"
    "\n"
    "class literals look like \"(9;3,3,3,3,1)\". Exit codes: 0 ok, 2 usage or\n"
    "parse error, 3 domain error, 4 internal error. DP4_NO_COLOR disables ANSI\n"
    "styling.\n";

enum class Format { Text, Json, Csv, Svg };

struct Options {
  std::string command;
  std::vector<std::string> positional;
  Format format = Format::Text;
  std::optional<Coeff> dmax;
  std::optional<std::string> out_path;
  bool allow_small_degree = false;
  bool help = false;
};

Coeff parse_integer(const std::string& text, const char* what) {
  Coeff value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw dp4::ParseError(std::string("expected integer for ") + what +
                          ", got '" + text + "'");
  }
  return value;
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "svg") return Format::Svg;
  throw dp4::ParseError("unknown format '" + text +
                        "' (expected text, json, csv or svg)");
}

Options parse_options(int argc, char** argv) {
  Options opts;
  std::vector<std::string> args(argv + 1, argv + argc);
  std::size_t i = 0;
  auto take_value = [&](const char* flag) -> std::string {
    if (i + 1 >= args.size()) {
      throw dp4::ParseError(std::string("missing value for ") + flag);
    }
    return args[++i];
  };
  for (; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg == "--help" || arg == "-h") {
      opts.help = true;
    } else if (arg == "--format" || arg == "-f") {
      opts.format = parse_format(take_value("--format"));
    } else if (arg == "--dmax") {
      opts.dmax = parse_integer(take_value("--dmax"), "--dmax");
    } else if (arg == "--out" || arg == "-o") {
      opts.out_path = take_value("--out");
    } else if (arg == "--allow-small-degree") {
      opts.allow_small_degree = true;
    } else if (arg.size() > 1 && arg[0] == '-' && arg != "-" &&
               (arg[1] < '0' || arg[1] > '9')) {
      throw dp4::ParseError("unknown option '" + arg + "'");
    } else if (opts.command.empty()) {
      opts.command = arg;
    } else {
      opts.positional.push_back(arg);
    }
  }
  return opts;
}

bool use_color() {
  return isatty(STDOUT_FILENO) != 0 && std::getenv("DP4_NO_COLOR") == nullptr;
}

std::string bold(const std::string& text) {
  if (!use_color()) return text;
  return "\x1b[1m" + text + "\x1b[0m";
}

std::string pad(const std::string& text, std::size_t width) {
  std::string out = text;
  while (out.size() < width) out += ' ';
  return out;
}

// Fixed-width text table; widths are derived from the content.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) line += "  ";
      line += c + 1 < rows[r].size() ? pad(rows[r][c], widths[c]) : rows[r][c];
    }
    out += (r == 0 ? bold(line) : line) + "\n";
  }
  return out;
}

std::vector<std::string> record_row(const FamilyRecord& rec) {
  return {
      dp4::to_string(rec.tuple),
      std::to_string(rec.d),
      std::to_string(rec.g),
      rec.lattice_only ? "n/a" : std::to_string(rec.dim_w),
      std::to_string(rec.k),
      std::to_string(rec.s),
      rec.lattice_only ? "n/a" : std::to_string(rec.tangent_dim),
      dp4::fixed_part_to_string(rec.fixed_part_2),
      rec.lattice_only ? "n/a" : dp4::table_label(rec.label.label),
      dp4::to_string(rec.label.rule),
  };
}

std::string records_text(const std::vector<FamilyRecord>& recs) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"tuple", "d", "g", "dim_W", "k", "s", "tangent", "fixed_part",
                  "label", "rule"});
  for (const FamilyRecord& rec : recs) rows.push_back(record_row(rec));
  return render_table(rows);
}

void emit(const Options& opts, const std::string& payload) {
  if (opts.out_path) {
    std::ofstream out(*opts.out_path, std::ios::binary);
    if (!out) {
      throw dp4::DomainError("cannot open output file '" + *opts.out_path + "'");
    }
    out << payload;
    return;
  }
  std::cout << payload;
}

std::string json_text(const dp4::ordered_json& j) { return j.dump(2) + "\n"; }

void require_positionals(const Options& opts, std::size_t n,
                         const char* signature) {
  if (opts.positional.size() != n) {
    throw dp4::ParseError(std::string("usage: dp4 ") + signature);
  }
}

void reject_svg(const Options& opts) {
  if (opts.format == Format::Svg) {
    throw dp4::ParseError("svg output is only available for the region command");
  }
}

int run_normalize(const Options& opts) {
  require_positionals(opts, 1, "normalize <class>");
  reject_svg(opts);
  const dp4::DivisorClass input = dp4::parse_class(opts.positional[0]);
  const dp4::NormalizeResult result = dp4::normalize(input);
  if (opts.format == Format::Json) {
    dp4::ordered_json j;
    j["input"] = dp4::to_string(input);
    j["standard"] = dp4::to_string(result.standard);
    dp4::ordered_json word = dp4::ordered_json::array();
    for (const dp4::WeylGenerator& g : result.word) {
      word.push_back(dp4::to_string(g));
    }
    j["word"] = std::move(word);
    emit(opts, json_text(j));
    return 0;
  }
  if (opts.format == Format::Csv) {
    std::string out = "input,standard,word\n";
    out += dp4::csv_field(dp4::to_string(input)) + "," +
           dp4::csv_field(dp4::to_string(result.standard)) + "," +
           dp4::csv_field(dp4::to_string(result.word)) + "\n";
    emit(opts, out);
    return 0;
  }
  std::string out;
  out += "input:    " + dp4::to_string(input) + "\n";
  out += "standard: " + dp4::to_string(result.standard) + "\n";
  out += "word:     " + dp4::to_string(result.word) + "\n";
  emit(opts, out);
  return 0;
}

int run_family(const Options& opts) {
  require_positionals(opts, 1, "family <class>");
  reject_svg(opts);
  const dp4::DivisorClass input = dp4::parse_class(opts.positional[0]);
  const dp4::DivisorClass standard = dp4::normalize(input).standard;
  const FamilyRecord rec =
      dp4::make_family_record(standard, opts.allow_small_degree);
  if (opts.format == Format::Json) {
    dp4::ordered_json j = dp4::record_json(rec);
    if (rec.lattice_only) {
      j["dim_bounds"] = nullptr;
    } else {
      const auto [lower, upper] = dp4::hilb_dim_bounds(rec);
      j["dim_bounds"] = {{"lower", lower}, {"upper", upper}};
    }
    emit(opts, json_text(j));
    return 0;
  }
  if (opts.format == Format::Csv) {
    std::string out = dp4::records_csv({rec});
    out.pop_back();  // rejoin the header line with bounds columns
    std::size_t header_end = out.find('\n');
    out.insert(header_end, ",dim_lower,dim_upper");
    if (rec.lattice_only) {
      out += ",,\n";
    } else {
      const auto [lower, upper] = dp4::hilb_dim_bounds(rec);
      out += "," + std::to_string(lower) + "," + std::to_string(upper) + "\n";
    }
    emit(opts, out);
    return 0;
  }
  std::string out;
  out += "tuple:        " + dp4::to_string(rec.tuple) + "\n";
  out += "d:            " + std::to_string(rec.d) + "\n";
  out += "g:            " + std::to_string(rec.g) + "\n";
  out += "dim_W:        " +
         (rec.lattice_only ? "n/a" : std::to_string(rec.dim_w)) + "\n";
  out += "k:            " + std::to_string(rec.k) + "\n";
  out += "s:            " + std::to_string(rec.s) + "\n";
  out += "tangent_dim:  " +
         (rec.lattice_only ? "n/a" : std::to_string(rec.tangent_dim)) + "\n";
  out += "fixed_part:   " + dp4::fixed_part_to_string(rec.fixed_part_2) + "\n";
  out += "label:        " +
         (rec.lattice_only ? "n/a" : dp4::table_label(rec.label.label)) + "\n";
  out += "rule:         " + dp4::to_string(rec.label.rule) + "\n";
  if (rec.lattice_only) {
    out += "dim_bounds:   n/a\n";
  } else {
    const auto [lower, upper] = dp4::hilb_dim_bounds(rec);
    out += "dim_bounds:   [" + std::to_string(lower) + ", " +
           std::to_string(upper) + "]\n";
  }
  emit(opts, out);
  return 0;
}

int run_enumerate(const Options& opts) {
  require_positionals(opts, 2, "enumerate <d> <g>");
  reject_svg(opts);
  const Coeff d = parse_integer(opts.positional[0], "d");
  const Coeff g = parse_integer(opts.positional[1], "g");
  const std::vector<FamilyRecord> recs =
      dp4::enumerate_families(d, g, opts.allow_small_degree);
  if (opts.format == Format::Json) {
    emit(opts, json_text(dp4::records_json(recs)));
    return 0;
  }
  if (opts.format == Format::Csv) {
    emit(opts, dp4::records_csv(recs));
    return 0;
  }
  const bool hodge_violated =
      dp4::ck_mul(4, dp4::ck_add(d, dp4::ck_sub(dp4::ck_mul(2, g), 2))) >
      dp4::ck_mul(d, d);
  std::string out = "families at (d,g) = (" + std::to_string(d) + "," +
                    std::to_string(g) + "): " + std::to_string(recs.size());
  if (recs.empty()) {
    out += hodge_violated ? "  (Hodge bound violated)" : "";
    out += "\n";
  } else {
    out += "\n" + records_text(recs);
  }
  emit(opts, out);
  return 0;
}

int run_table1(const Options& opts) {
  require_positionals(opts, 0, "table1");
  reject_svg(opts);
  const std::vector<FamilyRecord> recs = dp4::table1_records();
  if (opts.format == Format::Json) {
    emit(opts, json_text(dp4::records_json(recs)));
    return 0;
  }
  if (opts.format == Format::Csv) {
    emit(opts, dp4::records_csv(recs));
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"(d,g)", "tuple", "label"});
  for (const FamilyRecord& rec : recs) {
    rows.push_back({"(" + std::to_string(rec.d) + "," + std::to_string(rec.g) +
                        ")",
                    dp4::to_string(rec.tuple), dp4::table_label(rec.label.label)});
  }
  emit(opts, render_table(rows));
  return 0;
}

int run_region(const Options& opts) {
  require_positionals(opts, 0, "region --dmax N");
  if (!opts.dmax) {
    throw dp4::ParseError("region requires --dmax N");
  }
  const std::vector<dp4::RegionRow> rows = dp4::region_sweep(*opts.dmax);
  switch (opts.format) {
    case Format::Json:
      emit(opts, json_text(dp4::region_json(rows)));
      return 0;
    case Format::Csv:
      emit(opts, dp4::region_csv(rows));
      return 0;
    case Format::Svg:
      emit(opts, dp4::region_svg(rows));
      return 0;
    case Format::Text:
      break;
  }
  std::vector<std::vector<std::string>> table;
  table.push_back({"d", "g", "region", "inequality"});
  for (const dp4::RegionRow& row : rows) {
    table.push_back({std::to_string(row.d), std::to_string(row.g),
                     dp4::to_string(row.label.region), row.label.inequality});
  }
  emit(opts, render_table(table));
  return 0;
}

int run_lines(const Options& opts) {
  require_positionals(opts, 0, "lines");
  reject_svg(opts);
  if (opts.format == Format::Json) {
    dp4::ordered_json j;
    dp4::ordered_json lines = dp4::ordered_json::array();
    for (const dp4::LineClass& line : dp4::all_lines()) {
      lines.push_back(dp4::to_string(line.cls));
    }
    dp4::ordered_json conics = dp4::ordered_json::array();
    for (const dp4::ConicClass& conic : dp4::all_conics()) {
      conics.push_back(dp4::to_string(conic.cls));
    }
    j["lines"] = std::move(lines);
    j["conics"] = std::move(conics);
    emit(opts, json_text(j));
    return 0;
  }
  if (opts.format == Format::Csv) {
    std::string out = "kind,class\n";
    for (const dp4::LineClass& line : dp4::all_lines()) {
      out += "line," + dp4::csv_field(dp4::to_string(line.cls)) + "\n";
    }
    for (const dp4::ConicClass& conic : dp4::all_conics()) {
      out += "conic," + dp4::csv_field(dp4::to_string(conic.cls)) + "\n";
    }
    emit(opts, out);
    return 0;
  }
  std::string out;
  out += bold("lines (" + std::to_string(dp4::all_lines().size()) + "):") + "\n";
  for (const dp4::LineClass& line : dp4::all_lines()) {
    out += "  " + dp4::to_string(line.cls) + "\n";
  }
  out += bold("conics (" + std::to_string(dp4::all_conics().size()) + "):") +
         "\n";
  for (const dp4::ConicClass& conic : dp4::all_conics()) {
    out += "  " + dp4::to_string(conic.cls) + "\n";
  }
  emit(opts, out);
  return 0;
}

int run(const Options& opts) {
  if (opts.help || opts.command.empty()) {
    if (opts.help) {
      std::cout << kUsage;
      return 0;
    }
    throw dp4::ParseError("missing command");
  }
  if (opts.command == "normalize") return run_normalize(opts);
  if (opts.command == "family") return run_family(opts);
  if (opts.command == "enumerate") return run_enumerate(opts);
  if (opts.command == "table1") return run_table1(opts);
  if (opts.command == "region") return run_region(opts);
  if (opts.command == "lines") return run_lines(opts);
  throw dp4::ParseError("unknown command '" + opts.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(parse_options(argc, argv));
  } catch (const dp4::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kUsage;
    return 2;
  } catch (const dp4::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const dp4::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
