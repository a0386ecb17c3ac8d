#include "hankelcat/cli.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hankelcat/analysis.hpp"
#include "hankelcat/cache_io.hpp"
#include "hankelcat/conjectures.hpp"
#include "hankelcat/reference_data.hpp"
#include "hankelcat/report_io.hpp"

namespace hankelcat::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string family = "catalan";
  std::optional<int> k;
  std::optional<std::int64_t> m;
  std::int64_t N = 12;
  std::string format = "md";
  std::string cache;
  unsigned jobs = 0;
  std::string budget = "default";
  std::string params;
  std::vector<std::string> ids;
  std::string table_name;
  std::vector<std::int64_t> rows;
  std::string parity = "even";
  std::string cache_action;
  double fraction = 0.01;
  std::uint64_t seed = 1;
};

SeqSpec seq_spec(const Config& c) {
  if (!c.k) throw UsageError("-k is required");
  if (*c.k < 1) throw UsageError("k must be >= 1");
  try {
    return SeqSpec(parse_family(c.family), *c.k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Budget make_budget(const Config& c) {
  Budget b;
  try {
    b = parse_budget(c.budget);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c.jobs) b.jobs = c.jobs;
  return b;
}

Format make_format(const Config& c) {
  try {
    return parse_format(c.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void load_cache_if_set(const Config& c, DetTable& table, std::ostream& err) {
  if (c.cache.empty()) return;
  auto res = load_cache(c.cache, table);
  for (const auto& w : res.warnings) err << "warning: " << w << "\n";
}

void store_cache_if_set(const Config& c, DetTable& table) {
  if (!c.cache.empty()) store_cache(c.cache, table);
}

void print_values(const std::vector<Int>& values, Format f, const std::string& label,
                  std::ostream& out) {
  if (f == Format::Markdown) {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << to_string(values[i]);
    out << "\n";
    return;
  }
  TextTable t{{"n", label}, {}};
  for (std::size_t i = 0; i < values.size(); ++i) t.rows.push_back({std::to_string(i), to_string(values[i])});
  out << render_table(t, f);
}

int cmd_seq(const Config& c, std::ostream& out) {
  auto spec = seq_spec(c);
  if (c.N < 0) throw UsageError("N must be >= 0");
  print_values(seq_prefix(spec, c.N), make_format(c), "value", out);
  return kExitOk;
}

int cmd_det(const Config& c, std::ostream& out, std::ostream& err) {
  auto spec = seq_spec(c);
  if (c.N < 0) throw UsageError("N must be >= 0");
  DetTable table;
  load_cache_if_set(c, table, err);
  auto values = table.sequence(spec, c.m.value_or(0), c.N, c.jobs);
  store_cache_if_set(c, table);
  print_values(values, make_format(c), "det", out);
  return kExitOk;
}

Json check_params(const Config& c) {
  Json params = Json::object();
  if (!c.params.empty()) {
    try {
      params = Json::parse(c.params);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--params is not valid JSON: ") + e.what());
    }
    if (!params.is_object()) throw UsageError("--params must be a JSON object");
  }
  if (c.k) params["k"] = *c.k;
  if (c.m) params["m"] = *c.m;
  return params;
}

int cmd_check(const Config& c, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  for (const auto& id : c.ids) {
    if (id == "all") {
      for (const auto& info : checker_registry()) ids.push_back(info.id);
    } else if (has_checker(id)) {
      ids.push_back(id);
    } else {
      throw UsageError("unknown checker id: " + id);
    }
  }
  if (ids.empty()) throw UsageError("no checker id given");
  auto budget = make_budget(c);
  auto format = make_format(c);
  auto params = check_params(c);
  DetTable table;
  load_cache_if_set(c, table, err);
  std::vector<ConjectureReport> reports;
  for (const auto& id : ids) {
    try {
      reports.push_back(run_checker(id, table, params, budget));
    } catch (const std::invalid_argument& e) {
      throw UsageError(id + ": " + e.what());
    }
  }
  store_cache_if_set(c, table);
  out << render_reports(reports, format);
  return check_exit_code(reports);
}

struct TableDef {
  std::string checker;
  std::string artifact;
  const reference::RatTable& (*reference)();
  bool even;
};

const std::map<std::string, TableDef>& table_defs() {
  static const std::map<std::string, TableDef> defs = {
      {"conj6-degrees", {"conj6", "table", reference::even_degree_table, true}},
      {"conj12-degrees", {"conj12", "table", reference::odd_degree_table, false}},
      {"conj7-A", {"conj7", "A", reference::even_lead_table, true}},
      {"conj7-phi", {"conj7", "A_phi", reference::even_lead_phi_table, true}},
      {"conj13-B", {"conj13", "B", reference::odd_lead_table, false}},
  };
  return defs;
}

std::string cell_text(const Json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return cell.get<std::string>();
  return cell.dump();
}

int cmd_table(const Config& c, std::ostream& out, std::ostream& err) {
  auto it = table_defs().find(c.table_name);
  if (it == table_defs().end()) throw UsageError("unknown table: " + c.table_name);
  const auto& def = it->second;
  const auto& ref = def.reference();
  Json params = Json::object();
  if (!c.rows.empty()) params["rows"] = c.rows;
  DetTable table;
  load_cache_if_set(c, table, err);
  auto report = run_checker(def.checker, table, params, make_budget(c));
  store_cache_if_set(c, table);

  std::size_t width = 0;
  const Json& rows = report.artifacts[def.artifact];
  for (const auto& [row, cells] : rows.items()) width = std::max(width, cells.size());
  TextTable t;
  t.header.push_back(def.even ? "2k" : "2k+1");
  for (std::size_t i = 0; i < width; ++i) t.header.push_back("j=" + std::to_string(i + 2));

  bool mismatch = false, missing = false;
  for (const auto& [row, cells] : rows.items()) {
    const int row_id = std::stoi(row);
    std::vector<std::string> line{row};
    auto printed_row = ref.rows.find(row_id);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int j = static_cast<int>(i) + 2;
      std::string computed = cell_text(cells[i]);
      std::optional<std::string> printed;
      if (printed_row != ref.rows.end() && i < printed_row->second.size()) {
        printed = printed_row->second[i].get_str();
      }
      std::string text = computed.empty() ? "?" : computed;
      if (computed.empty()) {
        missing = true;
        if (printed) text += " (printed " + *printed + ")";
      } else if (printed && *printed != computed) {
        bool known = false;
        if (c.table_name == "conj7-phi") {
          for (const auto& [cell, why] : reference::even_lead_phi_misprints())
            known |= cell.first == row_id && cell.second == j;
        }
        text += known ? " (printed " + *printed + ", presumed misprint)"
                      : " != printed " + *printed;
        mismatch |= !known;
      }
      line.push_back(text);
    }
    while (line.size() < t.header.size()) line.push_back("");
    t.rows.push_back(line);
  }
  out << render_table(t, make_format(c));
  if (mismatch) return kExitRefuted;
  if (missing) return kExitInconclusive;
  return kExitOk;
}

int cmd_gf(const Config& c, std::ostream& out, std::ostream& err) {
  if (!c.k || *c.k < 1) throw UsageError("-k >= 1 is required");
  if (!c.m) throw UsageError("-m is required");
  Parity parity;
  try {
    parity = parse_parity(c.parity);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (*c.m < 1 - *c.k) throw UsageError("m must be >= 1-k");
  auto budget = make_budget(c);
  DetTable table;
  load_cache_if_set(c, table, err);
  auto ex = extract_gf(table, parity, *c.k, *c.m, budget.truncation, budget.jobs);
  store_cache_if_set(c, table);
  auto format = make_format(c);
  if (format == Format::Json) {
    Json j = {{"parity", to_string(parity)},
              {"k", *c.k},
              {"m", *c.m},
              {"factor", poly_json(ex.factor)},
              {"exponent", ex.exponent},
              {"truncation", ex.truncation},
              {"remainder_clean", ex.remainder_clean},
              {"degree", ex.degree},
              {"expected_degree", gf_expected_degree(parity, *c.k, *c.m)},
              {"class", ex.pal_class ? to_string(*ex.pal_class) : "undefined"},
              {"numerator", poly_json(ex.numerator)}};
    out << j.dump(2) << "\n";
  } else {
    TextTable t{{"field", "value"},
                {{"numerator", ex.numerator.to_string("x")},
                 {"degree", std::to_string(ex.degree)},
                 {"expected_degree", std::to_string(gf_expected_degree(parity, *c.k, *c.m))},
                 {"class", ex.pal_class ? to_string(*ex.pal_class) : "undefined"},
                 {"factor", "(" + ex.factor.to_string("x") + ")^" + std::to_string(ex.exponent)},
                 {"truncation", std::to_string(ex.truncation)},
                 {"remainder_clean", ex.remainder_clean ? "true" : "false"}}};
    out << render_table(t, format);
  }
  return ex.remainder_clean ? kExitOk : kExitInconclusive;
}

int cmd_cache(const Config& c, std::ostream& out, std::ostream& err) {
  if (c.cache.empty()) throw UsageError("--cache PATH (or HANKELCAT_CACHE) is required");
  if (c.cache_action == "load") {
    DetTable table;
    auto res = load_cache(c.cache, table);
    for (const auto& w : res.warnings) err << "warning: " << w << "\n";
    out << "loaded " << res.loaded << " records, " << res.already_present << " duplicates, "
        << res.warnings.size() << " warnings\n";
    return kExitOk;
  }
  if (c.cache_action == "store") {
    auto spec = seq_spec(c);
    DetTable table;
    load_cache(c.cache, table);
    table.sequence(spec, c.m.value_or(0), c.N, c.jobs);
    out << "stored " << store_cache(c.cache, table) << " records\n";
    return kExitOk;
  }
  if (c.cache_action == "verify") {
    if (!(c.fraction > 0.0 && c.fraction <= 1.0)) throw UsageError("--fraction must be in (0, 1]");
    auto res = verify_cache(c.cache, c.fraction, c.seed, c.jobs);
    for (const auto& w : res.warnings) err << "warning: " << w << "\n";
    for (const auto& d : res.divergences) {
      err << "divergence: " << format_record(d.key, d.stored) << " recomputed "
          << to_string(d.recomputed) << "\n";
    }
    out << "verified " << res.sampled << " of " << res.records << " records, "
        << res.divergences.size() << " divergent\n";
    return res.divergences.empty() ? kExitOk : kExitFailure;
  }
  throw UsageError("cache action must be load, store or verify");
}

}  // namespace

int check_exit_code(const std::vector<ConjectureReport>& reports) {
  bool refuted = false, inconclusive = false;
  for (const auto& r : reports) {
    auto s = r.status();
    refuted |= s == Status::Refuted;
    inconclusive |= s == Status::Inconclusive;
  }
  if (refuted) return kExitRefuted;
  if (inconclusive) return kExitInconclusive;
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  if (const char* env = std::getenv("HANKELCAT_CACHE")) c.cache = env;

  CLI::App app{"Hankel determinants of Catalan convolution powers and central binomial sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--family", c.family, "catalan or binomial");
  app.add_option("-k", c.k, "sequence parameter k");
  app.add_option("-m", c.m, "shift m (may be negative)")->allow_extra_args(false);
  app.add_option("-N", c.N, "number of terms");
  app.add_option("--format", c.format, "md, csv or json");
  app.add_option("--cache", c.cache, "determinant cache file");
  app.add_option("--jobs", c.jobs, "worker threads (0 = hardware)");
  app.add_option("--budget", c.budget, "preset (default, quick, large) and key=value overrides");

  app.add_subcommand("seq", "print sequence values");
  app.add_subcommand("det", "print Hankel determinants D(0..N-1)");
  auto* check = app.add_subcommand("check", "run checkers; exit 0 consistent, 2 refuted, 3 inconclusive");
  check->add_option("ids", c.ids, "checker ids or 'all'")->required();
  check->add_option("--params", c.params, "JSON object of grid overrides");
  auto* table_cmd = app.add_subcommand("table", "regenerate a reference table and diff it");
  table_cmd->add_option("name", c.table_name, "conj6-degrees, conj12-degrees, conj7-A, conj7-phi, conj13-B")
      ->required();
  table_cmd->add_option("--rows", c.rows, "row labels to regenerate");
  auto* gf = app.add_subcommand("gf", "extract a generating-function numerator");
  gf->add_option("--parity", c.parity, "even (D_{2k,m}) or odd (D_{2k-1,m})");
  auto* cache = app.add_subcommand("cache", "manage the determinant cache");
  cache->add_option("action", c.cache_action, "load, store or verify")->required();
  cache->add_option("--fraction", c.fraction, "share of records recomputed by verify");
  cache->add_option("--seed", c.seed, "sampling seed for verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const std::string sub = app.get_subcommands().front()->get_name();
    if (sub == "seq") return cmd_seq(c, out);
    if (sub == "det") return cmd_det(c, out, err);
    if (sub == "check") return cmd_check(c, out, err);
    if (sub == "table") return cmd_table(c, out, err);
    if (sub == "gf") return cmd_gf(c, out, err);
    return cmd_cache(c, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace hankelcat::cli
