#include "dowling/cli.hpp"

#include "CLI11.hpp"
#include "dowling/dowling.hpp"
#include "dowling/identities.hpp"
#include "dowling/series.hpp"
#include "dowling/triangles.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dowling::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "table";
  std::string output;

  std::string m = "1";
  std::string r = "0";
  std::string x = "1";
  std::string y = "1";
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t max_n = 0;
  std::size_t r_index = 0;
  std::size_t order = 10;
  std::string kind;

  std::string grid;
  std::vector<std::string> only;
  bool timing = false;
  std::string zero_power = "one";
};

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

WhitneyParams params_from(const Options& o) {
  const Rational m = rational_flag("m", o.m);
  if (m == 0) throw UsageError("--m must be nonzero");
  return {m, rational_flag("r", o.r)};
}

TableFormat table_format(const std::string& format) {
  if (format == "csv") return TableFormat::csv;
  if (format == "json") return TableFormat::json;
  return TableFormat::table;
}

std::string csv_cell(const Rational& v) {
  return is_integer(v) ? to_string(v) : "\"" + to_string(v) + "\"";
}

int cmd_table(const Options& o, std::ostream& out) {
  write_triangle(out, whitney_table(params_from(o), o.max_n), table_format(o.format));
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const WhitneyParams params = params_from(o);
  const Rational x = rational_flag("x", o.x);
  const Rational y = rational_flag("y", o.y);
  const DowlingPoly poly = dowling_bivariate(params, o.n);
  const Rational value = eval_poly(poly, x, y);
  if (o.format == "json") {
    auto doc = nlohmann::ordered_json::parse(poly.to_json());
    doc["x"] = to_string(x);
    doc["y"] = to_string(y);
    doc["value"] = to_string(value);
    out << doc.dump() << '\n';
  } else if (o.format == "csv") {
    out << "value\n" << csv_cell(value) << '\n';
  } else {
    out << to_string(value) << '\n';
  }
  return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out) {
  const WhitneyParams params = params_from(o);
  const Rational x = rational_flag("x", o.x);
  const Rational y = rational_flag("y", o.y);
  auto run_kind = [&]() {
    if (o.kind == "egf") return dowling_egf_series(params, x, y, o.order);
    if (o.kind == "ogf-2f1") return ogf_hypergeometric(params, x, y, o.order);
    if (o.kind == "ogf-pf") return ogf_partial_fractions(params, x, y, o.order);
    if (o.kind == "whitney-ogf") return whitney_ogf(params, o.k, o.order);
    throw UsageError("unknown series kind '" + o.kind + "'");
  };
  const TruncatedSeries s = run_kind();
  if (o.format == "json") {
    out << series_to_json(s) << '\n';
  } else if (o.format == "csv") {
    out << "n,coefficient\n";
    for (std::size_t n = 0; n <= s.order(); ++n) out << n << ',' << csv_cell(s[n]) << '\n';
  } else {
    for (std::size_t n = 0; n <= s.order(); ++n) {
      out << (n == 0 ? "" : ", ") << to_string(s[n]);
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.n + o.r_index > kOracleGuard) {
    throw UsageError("oracle needs n + r <= " + std::to_string(kOracleGuard));
  }
  const Integer count = partition_oracle(o.n, o.k, o.r_index);
  const Rational expected = o.k <= o.n ? rstirling2(o.n, o.k, o.r_index) : Rational(0);
  const bool match = Rational(count) == expected;
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = o.n;
    doc["k"] = o.k;
    doc["r"] = o.r_index;
    doc["count"] = count.get_str();
    doc["rstirling2"] = to_string(expected);
    doc["match"] = match;
    out << doc.dump() << '\n';
  } else if (o.format == "csv") {
    out << "n,k,r,count,rstirling2,match\n"
        << o.n << ',' << o.k << ',' << o.r_index << ',' << count.get_str() << ','
        << csv_cell(expected) << ',' << (match ? "true" : "false") << '\n';
  } else {
    out << count.get_str() << (match ? " (match)" : " (mismatch: rstirling2 = " +
                                                        to_string(expected) + ")")
        << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  ParamGrid grid;
  std::string path = o.grid;
  if (path.empty()) {
    if (const char* env = std::getenv("DOWLING_GRID"); env != nullptr && *env != '\0') {
      path = env;
    }
  }
  try {
    grid = path.empty() ? default_grid() : load_grid_config(path);
  } catch (const std::exception& e) {
    throw UsageError(std::string("grid config: ") + e.what());
  }

  std::vector<std::string> ids = o.only.empty() ? all_identity_ids() : o.only;
  for (const auto& id : ids) {
    if (find_entry(id) == nullptr) throw UsageError("unknown identity id '" + id + "'");
  }
  SuiteOptions options;
  if (o.zero_power == "zero") {
    options.zero_pow = ZeroPow::zero;
  } else if (o.zero_power != "one") {
    throw UsageError("--zero-power must be 'one' or 'zero'");
  }

  const IdentityReport report = run_grid(grid, ids, options);
  if (o.format == "json") {
    out << report.to_json(o.timing) << '\n';
  } else if (o.format == "csv") {
    out << "id,instances,passes,failures\n";
    for (const auto& t : report.tallies) {
      out << t.id << ',' << t.instances << ',' << t.passes << ',' << t.failures << '\n';
    }
  } else {
    out << report.to_table(o.timing);
  }
  return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact r-Whitney numbers, bivariate r-Dowling polynomials and identity checks",
               "dowling"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "Write output to PATH instead of stdout");

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "Parameter m (rational, nonzero)")->capture_default_str();
    sub->add_option("--r", o.r, "Parameter r (rational)")->capture_default_str();
  };

  auto* table = app.add_subcommand("table", "Emit the W_{m,r}(n,k) triangle");
  add_params(table);
  table->add_option("--max-n", o.max_n, "Last row")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate D_{m,r}(n;x,y)");
  add_params(eval);
  eval->add_option("--n", o.n, "Degree")->capture_default_str();
  eval->add_option("--x", o.x, "x (rational)")->capture_default_str();
  eval->add_option("--y", o.y, "y (rational)")->capture_default_str();

  auto* series = app.add_subcommand("series", "Generating-function coefficients");
  add_params(series);
  series->add_option("--kind", o.kind, "egf | ogf-2f1 | ogf-pf | whitney-ogf")
      ->required()
      ->check(CLI::IsMember({"egf", "ogf-2f1", "ogf-pf", "whitney-ogf"}));
  series->add_option("--x", o.x, "x (nonnegative integer)")->capture_default_str();
  series->add_option("--y", o.y, "y (rational)")->capture_default_str();
  series->add_option("--k", o.k, "Column index for whitney-ogf")->capture_default_str();
  series->add_option("--order", o.order, "Truncation order")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the identity catalog over a grid");
  verify->add_option("--grid", o.grid, "Grid config file (default: $DOWLING_GRID or built-in)");
  verify->add_option("--only", o.only, "Comma-separated identity ids")->delimiter(',');
  verify->add_flag("--timing", o.timing, "Include wall-clock timings");
  verify->add_option("--zero-power", o.zero_power, "Convention for 0^0 in the displays")
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Count restricted set partitions by enumeration");
  oracle->add_option("--n", o.n, "n")->required();
  oracle->add_option("--k", o.k, "k")->required();
  oracle->add_option("--r", o.r_index, "r")->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("dowling");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << "error: cannot open output file '" << o.output << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (table->parsed()) return cmd_table(o, *sink);
    if (eval->parsed()) return cmd_eval(o, *sink);
    if (series->parsed()) return cmd_series(o, *sink);
    if (verify->parsed()) return cmd_verify(o, *sink);
    if (oracle->parsed()) return cmd_oracle(o, *sink);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace dowling::cli
