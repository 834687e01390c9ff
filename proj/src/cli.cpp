#include "tdpp/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "tdpp/blockfactor.hpp"
#include "tdpp/determinantal.hpp"
#include "tdpp/report.hpp"
#include "tdpp/svg.hpp"
#include "tdpp/verify.hpp"

namespace tdpp::cli {
namespace {

using nlohmann::json;
using report::Format;

/// Every flag any subcommand accepts; each subcommand echoes the ones it uses.
struct RunConfig {
  std::string subcommand;
  std::optional<double> b;
  std::optional<double> a_mag;
  double a_phase = 0.0;
  std::optional<double> a_re;
  std::optional<double> a_im;
  int k_max = 10;
  int window = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  double z_max = 4.0;
  std::string format;
  std::string out_path;
  std::string svg_path;
  std::string source = "factor";
  std::string pattern;
  bool sweep = false;
  bool details = false;
  unsigned threads = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TrigSymbolDeg1 symbol_from(const RunConfig& cfg) {
  if (!cfg.b) throw UsageError("--b is required");
  double a_mag = 0.0;
  double a_phase = cfg.a_phase;
  if (cfg.a_re || cfg.a_im) {
    const double re = cfg.a_re.value_or(0.0);
    const double im = cfg.a_im.value_or(0.0);
    a_mag = std::hypot(re, im);
    a_phase = std::atan2(im, re);
  } else if (cfg.a_mag) {
    a_mag = *cfg.a_mag;
  } else {
    throw UsageError("--a-mag (or --a-re/--a-im) is required");
  }
  return TrigSymbolDeg1::make(*cfg.b, a_mag, a_phase);
}

json symbol_config(const RunConfig& cfg, const TrigSymbolDeg1& s) {
  return {{"subcommand", cfg.subcommand}, {"b", s.b()}, {"a_mag", s.a_mag()}, {"a_phase", s.a_phase()}};
}

Format format_or(const RunConfig& cfg, Format fallback) {
  return cfg.format.empty() ? fallback : report::parse_format(cfg.format);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

int cmd_probs(const RunConfig& cfg, std::ostream& out) {
  const TrigSymbolDeg1 symbol = symbol_from(cfg);
  if (cfg.k_max < 0 || cfg.k_max > 30) throw UsageError("--k-max must be in [0, 30]");
  const auto rows = run_length_table(symbol, cfg.k_max);
  bool pass = true;
  for (const auto& row : rows) pass = pass && row_spread(row) <= cfg.tolerance;

  std::string text;
  switch (format_or(cfg, Format::Table)) {
    case Format::Json: {
      json config = symbol_config(cfg, symbol);
      config["k_max"] = cfg.k_max;
      config["tolerance"] = cfg.tolerance;
      json results = json::array();
      for (const auto& row : rows) results.push_back(report::to_json(row));
      text = dump(report::make_document(config, cfg.seed, results, pass));
      break;
    }
    case Format::Csv: text = report::run_length_csv(rows); break;
    default: text = report::run_length_table_text(rows); break;
  }
  report::emit_report(text, cfg.out_path, out);
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_region(const RunConfig& cfg, std::ostream& out) {
  const TrigSymbolDeg1 symbol = symbol_from(cfg);
  const Region region = build_region(symbol);
  const double expected = region.complemented ? 1.0 - symbol.b() : symbol.b();
  const bool pass = std::abs(region_area(region) - expected) <= 1e-12;

  std::string text;
  switch (format_or(cfg, Format::Table)) {
    case Format::Json: {
      json config = symbol_config(cfg, symbol);
      config["svg"] = cfg.svg_path;
      text = dump(report::make_document(config, cfg.seed, report::to_json(region), pass));
      break;
    }
    case Format::Csv: text = report::region_csv(region); break;
    default: text = report::region_table_text(region); break;
  }
  if (!cfg.svg_path.empty()) report::emit_report(render_region_svg(region), cfg.svg_path, out);
  report::emit_report(text, cfg.out_path, out);
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const int window = cfg.sweep && cfg.window == 0 ? 10 : cfg.window;
  if (window < 1 || window > 12) throw UsageError("--window must be in [1, 12]");
  std::vector<TrigSymbolDeg1> symbols;
  json config = {{"subcommand", cfg.subcommand}};
  if (cfg.sweep) {
    symbols = standard_symbol_grid();
    config["sweep"] = true;
  } else {
    symbols.push_back(symbol_from(cfg));
    config = symbol_config(cfg, symbols.front());
  }
  config["window"] = window;
  config["tolerance"] = cfg.tolerance;

  const auto reports = compare_sweep(symbols, window, cfg.tolerance, cfg.threads);
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;

  std::string text;
  switch (format_or(cfg, Format::Json)) {
    case Format::Csv: text = report::comparison_csv(reports); break;
    default: {
      json results = json::array();
      for (const auto& r : reports) results.push_back(report::to_json(r, cfg.details));
      text = dump(report::make_document(config, cfg.seed, results, pass));
      break;
    }
  }
  report::emit_report(text, cfg.out_path, out);
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const TrigSymbolDeg1 symbol = symbol_from(cfg);
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::uint8_t> bits;
  if (cfg.source == "factor") {
    bits = sample_factor(build_region(symbol), cfg.samples, rng);
  } else if (cfg.source == "determinantal") {
    bits = sample_window(symbol, cfg.samples, rng);
  } else {
    throw UsageError("--source must be factor or determinantal");
  }
  std::string bit_string;
  bit_string.reserve(bits.size());
  for (auto bit : bits) bit_string.push_back(bit ? '1' : '0');

  std::string text;
  if (format_or(cfg, Format::Text) == Format::Json) {
    json config = symbol_config(cfg, symbol);
    config["n"] = cfg.samples;
    config["source"] = cfg.source;
    text = dump(report::make_document(config, cfg.seed, {{"bits", bit_string}}, true));
  } else {
    text = bit_string + "\n";
  }
  report::emit_report(text, cfg.out_path, out);
  return kExitOk;
}

int cmd_mc(const RunConfig& cfg, std::ostream& out) {
  const TrigSymbolDeg1 symbol = symbol_from(cfg);
  Pattern pattern;
  try {
    pattern = Pattern::parse(cfg.pattern);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--pattern: ") + e.what());
  }
  if (pattern.empty()) throw UsageError("--pattern must not be empty");
  if (cfg.samples < 1000) throw UsageError("--n must be at least 1000");
  std::mt19937_64 rng(cfg.seed);
  const McEstimate est = mc_estimate(build_region(symbol), pattern, cfg.samples, rng);
  const bool pass = std::abs(est.z) <= cfg.z_max;

  std::string text;
  if (format_or(cfg, Format::Json) == Format::Csv) {
    text = report::estimates_csv({est});
  } else {
    json config = symbol_config(cfg, symbol);
    config["pattern"] = cfg.pattern;
    config["n"] = cfg.samples;
    config["z_max"] = cfg.z_max;
    text = dump(report::make_document(config, cfg.seed, report::to_json(est), pass));
  }
  report::emit_report(text, cfg.out_path, out);
  return pass ? kExitOk : kExitVerificationFailed;
}

void add_symbol_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--b", cfg.b, "constant coefficient b");
  auto* mag = sub->add_option("--a-mag", cfg.a_mag, "|a|");
  auto* phase = sub->add_option("--a-phase", cfg.a_phase, "phase of a in radians");
  auto* re = sub->add_option("--a-re", cfg.a_re, "real part of a");
  auto* im = sub->add_option("--a-im", cfg.a_im, "imaginary part of a");
  re->excludes(mag)->excludes(phase);
  im->excludes(mag)->excludes(phase);
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv", "text"}));
  sub->add_option("--out", cfg.out_path, "write the report to PATH instead of stdout");
  sub->add_option("--seed", cfg.seed, "random seed (always echoed in reports)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"One-dependent trigonometric determinantal processes as two-block-factors", "tdpp"};
  app.require_subcommand(1);

  auto* probs = app.add_subcommand("probs", "run-length probabilities D_k four ways");
  add_symbol_options(probs, cfg);
  add_output_options(probs, cfg);
  probs->add_option("--k-max", cfg.k_max, "largest k")->required();
  probs->add_option("--tol", cfg.tolerance, "agreement tolerance");

  auto* region = app.add_subcommand("region", "block-factor region boxes");
  add_symbol_options(region, cfg);
  add_output_options(region, cfg);
  region->add_option("--svg", cfg.svg_path, "also render the region as SVG");

  auto* verify = app.add_subcommand("verify", "compare all cylinder probabilities");
  add_symbol_options(verify, cfg);
  add_output_options(verify, cfg);
  verify->add_option("--window", cfg.window, "longest pattern length");
  verify->add_option("--tol", cfg.tolerance, "absolute tolerance");
  verify->add_flag("--sweep", cfg.sweep, "run the built-in 50-symbol grid");
  verify->add_flag("--details", cfg.details, "include every pattern difference");
  verify->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");

  auto* sample = app.add_subcommand("sample", "sample a window of the process");
  add_symbol_options(sample, cfg);
  add_output_options(sample, cfg);
  sample->add_option("--n", cfg.samples, "number of sites")->required();
  sample->add_option("--source", cfg.source, "factor or determinantal");

  auto* mc = app.add_subcommand("mc", "Monte Carlo check of one pattern");
  add_symbol_options(mc, cfg);
  add_output_options(mc, cfg);
  mc->add_option("--pattern", cfg.pattern, "pattern over 1, 0 and . (free)")->required();
  mc->add_option("--n", cfg.samples, "replications")->required();
  mc->add_option("--z-max", cfg.z_max, "largest acceptable |z|");

  std::vector<std::string> argv_storage{"tdpp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (*probs) return cmd_probs(cfg, out);
    if (*region) return cmd_region(cfg, out);
    if (*verify) {
      if (!cfg.sweep && cfg.window == 0) throw UsageError("--window is required without --sweep");
      return cmd_verify(cfg, out);
    }
    if (*sample) return cmd_sample(cfg, out);
    if (*mc) return cmd_mc(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Inadmissible& e) {
    err << "error: inadmissible symbol: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tdpp::cli
