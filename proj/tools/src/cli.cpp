#include "qdeform_cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdeform/canonical.hpp"
#include "qdeform/combinatorics.hpp"
#include "qdeform/dynamics.hpp"
#include "qdeform/errors.hpp"
#include "qdeform/qalgebra.hpp"
#include "qdeform/qcore.hpp"
#include "qdeform/qgaussian.hpp"
#include "qdeform/table.hpp"
#include "qdeform/verify.hpp"

namespace qdeform::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 42;

// A user-facing input problem; reported on the error stream with exit 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<double> parse_real(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> values;
  for (const std::string& field : split(text, ',')) {
    const auto v = parse_real(field);
    if (!v) throw InputError(std::string(flag) + ": '" + field + "' is not a finite real");
    values.push_back(*v);
  }
  if (values.empty()) throw InputError(std::string(flag) + " needs at least one value");
  return values;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("QDEFORM_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  std::uint64_t seed = 0;
  const std::string_view text(env);
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InputError("QDEFORM_SEED='" + std::string(text) + "' is not an unsigned integer");
  }
  return seed;
}

Json report_json(const VerificationReport& report) {
  Json tolerances = Json::object();
  Json cases = Json::array();
  for (const CaseResult& c : report.cases) {
    tolerances[c.name] = c.tolerance;
    cases.push_back({{"name", c.name}, {"max_rel_err", c.max_rel_err}, {"pass", c.pass}});
  }
  Json metadata = Json::array();
  for (const auto& [key, value] : report.metadata) metadata.push_back({{"key", key}, {"value", value}});
  return {{"suite", report.suite},  {"seed", report.seed},         {"tolerances", tolerances},
          {"cases", cases},         {"pass", report.pass()},       {"metadata", metadata}};
}

void write_report_csv(std::ostream& out, const VerificationReport& report) {
  out << "suite,seed,name,max_rel_err,tolerance,pass\n";
  for (const CaseResult& c : report.cases) {
    out << report.suite << ',' << report.seed << ',' << c.name << ',' << format_real(c.max_rel_err)
        << ',' << format_real(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
  }
}

Json figure_json(const std::string& name, const FigureTable& table) {
  Json rows = Json::array();
  for (const FigureRow& r : table.rows) {
    rows.push_back({{"curve_id", r.curve_id},
                    {"scale", r.scale},
                    {"x_raw", r.x_raw},
                    {"y_raw", r.y_raw},
                    {"x_rescaled", r.x_rescaled},
                    {"y_rescaled", r.y_rescaled},
                    {"qlog_y", r.qlog_y}});
  }
  return {{"figure", name}, {"q", table.q.value()}, {"rows", rows}};
}

struct Input {
  std::vector<double> xs;
  std::vector<std::size_t> lines;
};

Input read_points(const std::string& path, const std::string& column, bool header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input '" + path + "'");

  std::optional<std::size_t> index;
  if (!column.empty()) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(column.data(), column.data() + column.size(), v);
    if (ec == std::errc() && end == column.data() + column.size()) index = v;
  }
  if (!index && !column.empty() && !header) {
    throw InputError("--column '" + column + "' names a column but --header was not given");
  }

  Input input;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (header && number == 1) {
      if (!index) {
        const auto names = split(line, ',');
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (names[i] == column) index = i;
        }
        if (!index) index = 0;
        if (!column.empty() && !(*index < names.size() && names[*index] == column)) {
          throw InputError("line 1: no column named '" + column + "'");
        }
      }
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto fields = split(line, ',');
    const std::size_t col = index.value_or(0);
    if (col >= fields.size()) {
      throw InputError("line " + std::to_string(number) + ": no column " + std::to_string(col));
    }
    const auto v = parse_real(fields[col]);
    if (!v) {
      throw InputError("line " + std::to_string(number) + ": '" + fields[col] +
                       "' is not a finite real");
    }
    input.xs.push_back(*v);
    input.lines.push_back(number);
  }
  if (input.xs.empty()) throw InputError("input '" + path + "' has no data rows");
  return input;
}

class Sink {
 public:
  Sink(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}

  std::ostream& stream() { return path_.empty() ? out_ : buffer_; }

  void flush() {
    if (path_.empty()) return;
    std::ofstream file(path_, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write '" + path_ + "'");
    file << buffer_.str();
  }

 private:
  std::ostream& out_;
  std::string path_;
  std::ostringstream buffer_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-deformed calculus: evaluation, verification suites and figure data"};
  app.name("qdeform");
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one q-function");
  std::string fn;
  double q = 1.0, x = 0.0, y = 1.0;
  std::string probs;
  bool cutoff = false;
  eval->add_option("fn", fn, "qlog | qexp | qprod | qratio | tsallis")
      ->required()
      ->check(CLI::IsMember({"qlog", "qexp", "qprod", "qratio", "tsallis"}));
  eval->add_option("--q", q, "Entropic index")->required();
  auto* x_opt = eval->add_option("--x", x, "Argument x");
  auto* y_opt = eval->add_option("--y", y, "Argument y");
  eval->add_option("--p", probs, "Comma-separated probabilities (tsallis)");
  eval->add_flag("--cutoff-mode", cutoff, "exp_q returns 0 outside its domain (q < 1)");
  eval->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run a seeded invariant suite");
  std::string suite_arg;
  verify->add_option("suite", suite_arg, "identities | dynamics | stirling | mlp | canonical | all")
      ->required();
  verify->add_option("--seed", seed, "Seed (falls back to QDEFORM_SEED, then 42)");
  verify->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  // fig
  auto* fig = app.add_subcommand("fig", "Emit figure data");
  std::string which;
  std::optional<double> fig_q, grid_min, grid_max;
  std::optional<std::size_t> grid_points;
  std::string scales;
  fig->add_option("which", which, "fig2 | fig3")->required()->check(CLI::IsMember({"fig2", "fig3"}));
  fig->add_option("--q", fig_q, "Entropic index (fig2: 1.3, fig3: 1.7)");
  fig->add_option("--scales", scales, "Comma-separated scale factors");
  fig->add_option("--grid-min", grid_min, "First abscissa");
  fig->add_option("--grid-max", grid_max, "Last abscissa");
  fig->add_option("--grid-points", grid_points, "Number of abscissas");
  fig->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  // canonicalize
  auto* canon = app.add_subcommand("canonicalize", "Canonical q-log form of exp_q(-x + c) data");
  std::string input_path, column;
  double canon_q = 1.0, c = 0.0;
  bool header = false;
  canon->add_option("input", input_path, "File with one x per line, or CSV")->required();
  canon->add_option("--q", canon_q, "Entropic index")->required();
  canon->add_option("--c", c, "Shift c");
  canon->add_option("--column", column, "CSV column index or header name");
  canon->add_flag("--header", header, "First line is a header");
  canon->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Sink sink(out, out_path);
    std::ostream& os = sink.stream();
    int status = kExitOk;

    if (eval->parsed()) {
      const EntropicIndex qi(q);
      const bool need_x = fn == "qexp" || fn == "qprod" || fn == "qratio";
      const bool need_y = fn == "qlog" || fn == "qprod" || fn == "qratio";
      if (need_x && x_opt->count() == 0) throw InputError("eval " + fn + " requires --x");
      if (need_y && y_opt->count() == 0) throw InputError("eval " + fn + " requires --y");
      double value = 0.0;
      if (fn == "qlog") {
        value = q_log(qi, y);
      } else if (fn == "qexp") {
        value = q_exp(qi, x, cutoff ? DomainPolicy::cutoff : DomainPolicy::strict);
      } else if (fn == "qprod") {
        value = q_product(qi, x, y);
      } else if (fn == "qratio") {
        value = q_ratio(qi, x, y);
      } else {
        if (probs.empty()) throw InputError("eval tsallis requires --p");
        value = tsallis_entropy(qi, ProbabilityVector(parse_list(probs, "--p")));
      }
      if (format == "json") {
        os << Json{{"fn", fn}, {"q", q}, {"value", value}}.dump(2) << '\n';
      } else {
        os << format_real(value) << '\n';
      }
    } else if (verify->parsed()) {
      const auto suite = parse_suite(suite_arg);
      if (!suite) {
        err << "unknown suite '" << suite_arg << "'\n" << verify->help();
        return kExitInput;
      }
      const VerificationReport report = run_suite(*suite, resolve_seed(seed));
      if (format == "csv") {
        write_report_csv(os, report);
      } else {
        os << report_json(report).dump(2) << '\n';
      }
      if (!report.pass()) status = kExitFailed;
    } else if (fig->parsed()) {
      FigureTable table;
      if (which == "fig2") {
        Fig2Params p;
        if (fig_q) p.q = *fig_q;
        if (!scales.empty()) p.scales = parse_list(scales, "--scales");
        if (grid_min) p.grid.min = *grid_min;
        if (grid_max) p.grid.max = *grid_max;
        if (grid_points) p.grid.points = *grid_points;
        table = fig2_data(p);
      } else {
        Fig3Params p;
        if (fig_q) p.q = *fig_q;
        if (!scales.empty()) p.scales = parse_list(scales, "--scales");
        if (grid_min) p.grid.min = *grid_min;
        if (grid_max) p.grid.max = *grid_max;
        if (grid_points) p.grid.points = *grid_points;
        table = fig3_data(p);
      }
      if (format == "json") {
        os << figure_json(which, table).dump(2) << '\n';
      } else {
        write_csv(os, table);
      }
    } else if (canon->parsed()) {
      const Input input = read_points(input_path, column, header);
      const EntropicIndex qi(canon_q);
      std::optional<DiscreteQDistribution> dist;
      try {
        dist = build_distribution(qi, input.xs, c);
      } catch (const DomainViolation& e) {
        if (e.index()) {
          throw DomainViolation("line " + std::to_string(input.lines[*e.index()]) + ": " + e.what(),
                                e.constraint(), e.index());
        }
        throw;
      }
      const CanonicalQLogForm form = canonical_form(*dist);
      const auto& p = dist->probabilities();
      if (format == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < p.size(); ++i) {
          rows.push_back({{"line", input.lines[i]}, {"x", input.xs[i]}, {"p", p[i]}});
        }
        os << Json{{"q", canon_q},
                   {"slope", form.slope},
                   {"intercept", form.intercept},
                   {"n", dist->total()},
                   {"rows", rows},
                   {"metadata", {{"c", c}, {"points", p.size()}}}}
                  .dump(2)
           << '\n';
      } else {
        os << "line,x,p,n,slope,intercept,q,c\n";
        for (std::size_t i = 0; i < p.size(); ++i) {
          os << input.lines[i] << ',' << format_real(input.xs[i]) << ',' << format_real(p[i]) << ','
             << format_real(dist->total()) << ',' << format_real(form.slope) << ','
             << format_real(form.intercept) << ',' << format_real(canon_q) << ','
             << format_real(c) << '\n';
        }
      }
    }
    sink.flush();
    return status;
  } catch (const DomainViolation& e) {
    err << "error: " << e.what() << " (constraint value " << format_real(e.constraint()) << ")\n";
  } catch (const NonPositiveArgument& e) {
    err << "error: " << e.what() << " (value " << format_real(e.value()) << ")\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInput;
}

}  // namespace qdeform::cli
