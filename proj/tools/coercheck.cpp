#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "coercheck/coercheck.hpp"

namespace {

using namespace coercheck;

constexpr int kExitCoercive = 0;
constexpr int kExitNotCoercive = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitBorderline = 4;

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::Coercive: return kExitCoercive;
    case Verdict::NotCoercive: return kExitNotCoercive;
    case Verdict::Unknown: return kExitUnknown;
    case Verdict::Borderline: return kExitBorderline;
  }
  return kExitUnknown;
}

mpfr_prec_t default_precision() {
  if (const char* env = std::getenv("COERCHECK_PRECISION")) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end && *end == '\0' && bits >= 16 && bits <= (1 << 20)) return bits;
    std::cerr << "warning: ignoring invalid COERCHECK_PRECISION='" << env << "'\n";
  }
  return kDefaultPrecision;
}

struct CommonOptions {
  mpfr_prec_t precision = default_precision();
  unsigned seeds = 4;
  bool json = false;
  std::uint64_t oracle_seed = 0;
  std::string input;
  std::string file;

  CertifyOptions certify_options() const {
    CertifyOptions options;
    options.precision = precision;
    options.map_seeds.clear();
    for (unsigned k = 1; k <= seeds; ++k) options.map_seeds.push_back(k);
    return options;
  }

  std::string polynomial_text() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot open file: " + file);
      std::ostringstream text;
      text << in.rdbuf();
      return text.str();
    }
    return input;
  }
};

void add_input_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->fallthrough();
  cmd->add_option("input", opts.input, "polynomial text, e.g. \"x^4 + x^3*y + y^4\"");
  cmd->add_option("--file", opts.file, "read the polynomial text from a file");
  cmd->callback([cmd, &opts] {
    if (opts.input.empty() == opts.file.empty())
      throw CLI::ValidationError(cmd->get_name(),
                                 "provide exactly one of: polynomial text, --file");
  });
}

struct RangeSpec {
  ParamRange range;
};

ParamRange parse_range_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (parts.size() != 4) throw std::runtime_error("range must be NAME:MIN:MAX:STEPS");
  ParamRange range;
  range.name = parts[0];
  range.min = parse_rational(parts[1]);
  range.max = parse_rational(parts[2]);
  long steps = std::stol(parts[3]);
  if (steps < 1) throw std::runtime_error("steps must be at least 1");
  range.steps = static_cast<std::size_t>(steps);
  return range;
}

int cmd_analyze(const CommonOptions& opts) {
  Polynomial f = parse_polynomial(opts.polynomial_text());
  NewtonAnalysis analysis = analyze(f);
  BarycentricMap map = build_map(f, analysis);
  std::cout << analysis_to_json(f, analysis, map).dump(2) << "\n";
  return 0;
}

int cmd_certify(const CommonOptions& opts) {
  Polynomial f = parse_polynomial(opts.polynomial_text());
  Certificate cert = certify(f, opts.certify_options());
  if (opts.json) {
    std::cout << certificate_to_json(cert).dump(2) << "\n";
  } else {
    std::cout << to_string(cert.verdict);
    if (cert.theorem != TheoremId::None) std::cout << " (" << to_string(cert.theorem) << ")";
    std::cout << "\n";
  }
  return verdict_exit_code(cert.verdict);
}

int cmd_nonneg(const CommonOptions& opts) {
  Polynomial f = parse_polynomial(opts.polynomial_text());
  RecognitionResult recognized = recognize_circuit(f);
  if (!recognized) {
    std::cerr << "not a circuit polynomial: " << recognized.reason << "\n";
    return kExitUsage;
  }
  NonnegResult result = circuit_nonnegative(*recognized.circuit, opts.precision);
  if (opts.json) {
    Json out;
    out["status"] = to_string(result.status);
    out["exact"] = result.exact;
    out["theta"] = to_json(result.theta.value());
    if (result.theta.exact) out["theta"]["exact"] = rational_to_string(*result.theta.exact);
    out["meta"] = {{"precision_bits", opts.precision}, {"tool_version", kToolVersion}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(result.status) << "\n";
  }
  switch (result.status) {
    case NonnegStatus::Nonnegative: return 0;
    case NonnegStatus::NotNonnegative: return 1;
    case NonnegStatus::Borderline: return kExitBorderline;
  }
  return kExitUnknown;
}

int cmd_region_scan(const CommonOptions& opts, const std::string& template_text,
                    const std::string& p1_spec, const std::string& p2_spec,
                    const std::string& output, std::size_t jobs) {
  ParamRange p1 = parse_range_spec(p1_spec);
  ParamRange p2 = parse_range_spec(p2_spec);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  RegionScan scan = run_region_scan(template_text, p1, p2, opts.certify_options(), jobs);
  std::string csv = region_scan_csv(scan);
  if (output.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    out << csv;
  }
  return 0;
}

int cmd_radial_scan(const CommonOptions& opts, std::vector<double> radii, std::size_t samples) {
  Polynomial f = parse_polynomial(opts.polynomial_text());
  if (radii.empty()) radii = {1, 10, 100, 1000, 10000};
  if (samples == 0) samples = f.n_vars() >= 3 ? 20000 : 4096;
  RadialProfile profile = radial_scan(f, radii, samples, opts.oracle_seed);
  if (opts.json) {
    std::cout << to_json(profile).dump(2) << "\n";
    return 0;
  }
  std::cout << "radius,min\n";
  for (std::size_t i = 0; i < profile.radii.size(); ++i) {
    std::ostringstream row;
    row.precision(17);
    row << profile.radii[i] << "," << profile.minima[i];
    std::cout << row.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coercheck: coercivity certificates for sparse multivariate polynomials"};
  app.require_subcommand(1);

  CommonOptions opts;
  app.add_option("--precision", opts.precision, "working precision in bits for enclosures")
      ->check(CLI::Range(16, 1 << 20));
  app.add_option("--seeds", opts.seeds, "number of seeded barycentric-map retries");
  app.add_flag("--json", opts.json, "emit JSON");
  app.add_option("--seed", opts.oracle_seed, "seed for sampled directions");

  auto* analyze_cmd =
      app.add_subcommand("analyze", "Newton-polytope analysis and barycentric map as JSON");
  add_input_options(analyze_cmd, opts);

  auto* certify_cmd = app.add_subcommand("certify", "decide or bound coercivity");
  add_input_options(certify_cmd, opts);

  auto* nonneg_cmd =
      app.add_subcommand("nonneg", "nonnegativity test for a circuit polynomial");
  add_input_options(nonneg_cmd, opts);

  std::string template_text, p1_spec, p2_spec, output;
  std::size_t jobs = 0;
  auto* region_cmd =
      app.add_subcommand("region-scan", "verdict grid over a two-parameter family, as CSV");
  region_cmd->fallthrough();
  region_cmd->add_option("template", template_text, "polynomial template with two placeholders")
      ->required();
  region_cmd->add_option("--p1", p1_spec, "first parameter as NAME:MIN:MAX:STEPS")->required();
  region_cmd->add_option("--p2", p2_spec, "second parameter as NAME:MIN:MAX:STEPS")->required();
  region_cmd->add_option("--output", output, "write CSV to a file instead of stdout");
  region_cmd->add_option("--jobs", jobs, "worker threads (0 = auto)");

  std::vector<double> radii;
  std::size_t samples = 0;
  auto* radial_cmd = app.add_subcommand("radial-scan", "sampled sphere minima over radii");
  add_input_options(radial_cmd, opts);
  radial_cmd->add_option("--radii", radii, "radii to scan (default 1,10,100,1000,10000)")
      ->delimiter(',');
  radial_cmd->add_option("--samples", samples, "directions per radius (default 4096; 20000 in 3d)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze_cmd)) return cmd_analyze(opts);
    if (app.got_subcommand(certify_cmd)) return cmd_certify(opts);
    if (app.got_subcommand(nonneg_cmd)) return cmd_nonneg(opts);
    if (app.got_subcommand(region_cmd))
      return cmd_region_scan(opts, template_text, p1_spec, p2_spec, output, jobs);
    if (app.got_subcommand(radial_cmd)) return cmd_radial_scan(opts, radii, samples);
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownVariable& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PlaceholderMismatch& e) {
    std::cerr << "placeholder error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
