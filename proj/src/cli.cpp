#include "gentropy/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gentropy/catalog_id.hpp"
#include "gentropy/error.hpp"
#include "gentropy/report.hpp"
#include "gentropy/verify.hpp"

namespace gentropy::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kVariationalPairs = 100;

std::vector<Distribution> load_input(const CommandConfig& config) {
  auto read = [](std::istream& in, const std::string& name) {
    try {
      return read_distributions(in);
    } catch (const Error& e) {
      throw IoError(name + ": " + e.what());
    }
  };
  if (!config.input_path) return read(std::cin, "<stdin>");
  std::ifstream in(*config.input_path);
  if (!in) throw IoError("cannot open '" + *config.input_path + "'");
  return read(in, *config.input_path);
}

StateRange state_range(const CommandConfig& c) {
  if (c.w_min < 1 || c.w_max < c.w_min) throw UsageError("need 1 <= --wmin <= --wmax");
  return {c.w_min, c.w_max};
}

void require_json(const CommandConfig& c, const char* command) {
  if (c.output && *c.output != OutputFormat::Json)
    throw UsageError(std::string(command) + " only writes json");
}

void require_entropy(const CommandConfig& c) {
  if (c.entropy_id.empty()) throw UsageError("--entropy is required");
}

void require_law(const CommandConfig& c) {
  if (c.law_id.empty()) throw UsageError("--law is required");
}

// Derivative identities need the law in the shape the identity is written
// for: a trace law for trace generators, the matching conjugated law for
// non-trace specs.
std::optional<std::pair<double, double>> variational_constants(const Entropy& s,
                                                               const CompositionLaw& law) {
  if (std::holds_alternative<TraceGenerator>(s)) {
    if (law.kind() == LawKind::RenyiType) return std::nullopt;
    return std::pair{law.alpha(), 0.0};
  }
  if (law.kind() != LawKind::RenyiType) return std::nullopt;
  if (format_entropy_id(Entropy(*law.conjugation())) != format_entropy_id(s)) return std::nullopt;
  return std::pair{law.alpha(), law.conjugation()->beta};
}

Json variational_checks(const Entropy& s, const CompositionLaw& law, const CommandConfig& c) {
  const auto constants = variational_constants(s, law);
  if (!constants) return nullptr;
  const auto [alpha, beta] = *constants;
  const TraceGenerator& f = trace_part(s);
  const StateRange range{std::max<Eigen::Index>(2, c.w_min), std::max<Eigen::Index>(2, c.w_max)};
  const std::size_t pairs = std::min(kVariationalPairs, c.n_samples);
  double first = 0.0, second = 0.0;
  for (std::size_t k = 0; k < pairs; ++k) {
    auto rng = seeded_stream(c.seed, k, 0xd1ff);
    const auto span = static_cast<std::uint64_t>(range.hi - range.lo + 1);
    const auto wa = range.lo + static_cast<Eigen::Index>(rng() % span);
    const auto wb = range.lo + static_cast<Eigen::Index>(rng() % span);
    const Distribution pa = sample_interior(wa, c.seed, 2 * k);
    const Distribution pb = sample_interior(wb, c.seed, 2 * k + 1);
    first = std::max(first, max_first_variation_residual(f, alpha, pa, pb, beta));
    second = std::max(second, max_second_variation_residual(f, alpha, pa, pb));
  }
  Json doc;
  doc["pairs"] = pairs;
  doc["first_variation_max"] = first;
  doc["second_variation_max"] = second;
  return doc;
}

CompositionLaw sweep_law(const std::string& law_id, const Entropy& s, double a3) {
  if (law_id == "fit") {
    if (const auto* nt = std::get_if<NonTraceSpec>(&s)) return CompositionLaw::renyi_type(*nt, a3);
    return CompositionLaw::multiplicative(a3);
  }
  if (law_id == "auto") {
    const std::string& name = entropy_name(s);
    const Params& p = entropy_params(s);
    auto param = [&](const std::string& key) {
      for (const auto& [k, v] : p)
        if (k == key) return v;
      return 0.0;
    };
    if (name == "tsallis") return CompositionLaw::multiplicative(tsallis_alpha(param("q"), param("c")));
    if (name == "bg" || name == "renyi") return CompositionLaw::additive();
    if (name == "logpow")
      return CompositionLaw::renyi_type(std::get<NonTraceSpec>(s), power_h_alpha(param("b")));
    return sweep_law("fit", s, a3);
  }
  return parse_law(law_id);
}

std::string with_param(const std::string& id, const std::string& key, double value) {
  const char sep = id.find(':') == std::string::npos ? ':' : ',';
  return id + sep + key + "=" + format_real(value);
}

}  // namespace

SweepSpec parse_sweep(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw Error(Errc::ParseError, "sweep must look like <param>=<lo>:<hi>:<step>");
  SweepSpec spec;
  spec.param = std::string(text.substr(0, eq));
  std::string_view rest = text.substr(eq + 1);
  double* fields[] = {&spec.lo, &spec.hi, &spec.step};
  for (int i = 0; i < 3; ++i) {
    const auto colon = rest.find(':');
    if ((i < 2) == (colon == std::string_view::npos))
      throw Error(Errc::ParseError, "sweep range must be <lo>:<hi>:<step>");
    *fields[i] = parse_real(rest.substr(0, colon));
    if (colon != std::string_view::npos) rest.remove_prefix(colon + 1);
  }
  return spec;
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  if (!(spec.step > 0.0) || !(spec.hi >= spec.lo) || !std::isfinite(spec.hi))
    throw Error(Errc::ParseError, "sweep grid is empty");
  std::vector<double> out;
  const double slack = spec.step * 1e-9;
  for (long i = 0;; ++i) {
    double v = spec.lo + static_cast<double>(i) * spec.step;
    if (v > spec.hi + slack) break;
    v = std::round(v * 1e12) / 1e12;
    out.push_back(v);
  }
  return out;
}

int cmd_compute(const CommandConfig& config, std::ostream& out) {
  require_entropy(config);
  const Entropy s = parse_entropy(config.entropy_id);
  const auto inputs = load_input(config);
  if (config.output == OutputFormat::Json) {
    Json doc;
    doc["entropy"] = entropy_name(s);
    doc["params"] = to_json(entropy_params(s));
    Json values = Json::array();
    for (const auto& p : inputs) values.push_back(evaluate(s, p));
    doc["values"] = std::move(values);
    out << dump(doc);
    return kPass;
  }
  for (const auto& p : inputs) out << format_real(evaluate(s, p)) << '\n';
  return kPass;
}

int cmd_compose(const CommandConfig& config, std::ostream& out) {
  require_entropy(config);
  require_law(config);
  const Entropy s = parse_entropy(config.entropy_id);
  const CompositionLaw law = parse_law(config.law_id);
  const auto inputs = load_input(config);
  if (inputs.size() % 2 != 0) throw IoError("compose reads distributions in pairs (A line, B line)");

  bool pass = true;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "S_A,S_B,S_AB,composed,residual\n";
  for (std::size_t i = 0; i < inputs.size(); i += 2) {
    const double sa = evaluate(s, inputs[i]);
    const double sb = evaluate(s, inputs[i + 1]);
    const double sab = evaluate(s, product(inputs[i], inputs[i + 1]));
    const double composed = law(sa, sb);
    const double residual = std::abs(sab - composed);
    pass = pass && residual <= config.tolerance;
    Json row;
    row["S_A"] = sa;
    row["S_B"] = sb;
    row["S_AB"] = sab;
    row["composed"] = composed;
    row["residual"] = residual;
    rows.push_back(std::move(row));
    csv << format_real(sa) << ',' << format_real(sb) << ',' << format_real(sab) << ','
        << format_real(composed) << ',' << format_real(residual) << '\n';
  }
  if (config.output == OutputFormat::Csv) {
    out << csv.str();
  } else {
    Json doc;
    doc["entropy"] = format_entropy_id(s);
    doc["law"] = format_law_id(law);
    doc["pairs"] = std::move(rows);
    doc["pass"] = pass;
    doc["tolerance"] = config.tolerance;
    out << dump(doc);
  }
  return pass ? kPass : kVerificationFailure;
}

int cmd_verify(const CommandConfig& config, std::ostream& out) {
  require_entropy(config);
  require_law(config);
  require_json(config, "verify");
  const Entropy s = parse_entropy(config.entropy_id);
  const CompositionLaw law = parse_law(config.law_id);
  const StateRange range = state_range(config);
  if (config.n_samples < 1) throw UsageError("--samples must be positive");

  const ScanReport report =
      composability_scan(s, law, config.n_samples, range, config.seed, config.tolerance);
  Json doc = to_json(report);
  doc["weak"] = to_json(weak_composability_check(s, law, static_cast<int>(std::max(2L, config.w_max))));
  doc["variational"] = variational_checks(s, law, config);
  out << dump(doc);
  return report.pass ? kPass : kVerificationFailure;
}

int cmd_fit(const CommandConfig& config, std::ostream& out) {
  require_entropy(config);
  require_json(config, "fit");
  if (config.n_samples < kMinFitSamples)
    throw UsageError("fit needs --samples >= " + std::to_string(kMinFitSamples));
  const Entropy s = parse_entropy(config.entropy_id);
  const StateRange range = state_range(config);
  const BilinearFit fit = bilinear_fit(trace_part(s), config.n_samples, range, config.seed);
  Json doc;
  doc["entropy"] = entropy_name(s);
  doc["params"] = to_json(entropy_params(s));
  doc["seed"] = config.seed;
  doc["w_min"] = range.lo;
  doc["w_max"] = range.hi;
  doc.update(to_json(fit));
  out << dump(doc);
  return kPass;
}

int cmd_axioms(const CommandConfig& config, std::ostream& out) {
  require_law(config);
  require_json(config, "axioms");
  const CompositionLaw law = parse_law(config.law_id);
  const auto grid = default_axiom_grid(law);
  const AxiomResiduals r = axioms_residual(law, std::span<const double>(grid));
  Json doc;
  doc["law"] = format_law_id(law);
  doc["identity"] = law.identity();
  doc["grid"] = grid;
  doc.update(to_json(r));
  const bool pass = r.worst() <= config.tolerance;
  doc["pass"] = pass;
  doc["tolerance"] = config.tolerance;
  out << dump(doc);
  return pass ? kPass : kVerificationFailure;
}

int cmd_sweep(const CommandConfig& config, std::ostream& out) {
  require_entropy(config);
  if (config.sweep.empty()) throw UsageError("--sweep <param>=<lo>:<hi>:<step> is required");
  if (config.output == OutputFormat::Json) throw UsageError("sweep only writes csv");
  if (config.n_samples < kMinFitSamples)
    throw UsageError("sweep needs --samples >= " + std::to_string(kMinFitSamples));
  const SweepSpec spec = parse_sweep(config.sweep);
  const auto values = sweep_values(spec);
  const StateRange range = state_range(config);
  const std::string law_id = config.law_id.empty() ? "auto" : config.law_id;

  std::ostringstream csv;
  csv << "param,max_residual,mean_residual,a3_fit\n";
  for (double v : values) {
    const Entropy s = parse_entropy(with_param(config.entropy_id, spec.param, v));
    const BilinearFit fit = bilinear_fit(trace_part(s), config.n_samples, range, config.seed);
    const CompositionLaw law = sweep_law(law_id, s, fit.a3);
    const ScanReport r =
        composability_scan(s, law, config.n_samples, range, config.seed, config.tolerance);
    csv << format_real(v) << ',' << format_real(r.max_residual) << ','
        << format_real(r.mean_residual) << ',' << format_real(fit.a3) << '\n';
  }
  out << csv.str();
  return kPass;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized entropies: evaluation and composability verification", "gentropy"};
  app.require_subcommand(1);
  CommandConfig config;
  std::string format;

  auto add_common = [&](CLI::App* sub, bool needs_entropy, bool needs_law) {
    auto* e = sub->add_option("--entropy", config.entropy_id, "entropy id, e.g. tsallis:q=2,c=1");
    auto* l = sub->add_option("--law", config.law_id, "law id: additive | mult:alpha=<r> | renyitype:<spec>,alpha=<r>");
    if (needs_entropy) e->required();
    if (needs_law) l->required();
    sub->add_option("--input", config.input_path, "distribution file (stdin when omitted)");
    sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
    sub->add_option("--samples", config.n_samples, "pairs / samples")->capture_default_str();
    sub->add_option("--wmin", config.w_min, "smallest state count")->capture_default_str();
    sub->add_option("--wmax", config.w_max, "largest state count")->capture_default_str();
    sub->add_option("--tol", config.tolerance, "pass tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--sweep", config.sweep, "<param>=<lo>:<hi>:<step>");
  };

  struct Entry {
    const char* name;
    const char* help;
    Command command;
    bool entropy;
    bool law;
  };
  const Entry entries[] = {
      {"compute", "entropy of each distribution in the input", Command::Compute, true, false},
      {"compose", "compare S(A u B) with Phi(S(A), S(B)) for input line pairs", Command::Compose, true, true},
      {"verify", "randomized composability scan", Command::Verify, true, true},
      {"fit", "bilinear fit of the product-system trace", Command::Fit, true, false},
      {"axioms", "group-law residuals of a composition law", Command::Axioms, false, true},
      {"sweep", "residual table over a one-parameter grid", Command::Sweep, true, false},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, e.entropy, e.law);
    subs.emplace_back(sub, e.command);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  for (const auto& [sub, command] : subs)
    if (sub->parsed()) config.command = command;
  if (format == "json") config.output = OutputFormat::Json;
  if (format == "csv") config.output = OutputFormat::Csv;

  try {
    switch (config.command) {
      case Command::Compute: return cmd_compute(config, out);
      case Command::Compose: return cmd_compose(config, out);
      case Command::Verify: return cmd_verify(config, out);
      case Command::Fit: return cmd_fit(config, out);
      case Command::Axioms: return cmd_axioms(config, out);
      case Command::Sweep: return cmd_sweep(config, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::DomainViolation:
      case Errc::SingularDerivative:
      case Errc::RankDeficient:
        return kNumerical;
      default:
        return kUsage;
    }
  }
  return kUsage;
}

}  // namespace gentropy::cli
