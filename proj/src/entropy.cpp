#include "gentropy/entropy.hpp"

#include <cmath>

#include "gentropy/error.hpp"
#include "gentropy/summation.hpp"

namespace gentropy {

namespace {

// Sum of fn over the nonzero entries; zero-probability states contribute
// exactly nothing (0 ln 0 = 0, 0^q = 0).
double trace_sum(const RealFn& fn, const Distribution& p) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(p.size()));
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] != 0.0) terms.push_back(fn(p[i]));
  return canonical_sum(std::move(terms));
}

void require(bool ok, Errc code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace

double eval_trace(const TraceGenerator& gen, const Distribution& p) { return trace_sum(gen.f, p); }

double eval_nontrace(const NonTraceSpec& spec, const Distribution& p) {
  const double u = trace_sum(spec.h.f, p);
  if (!(u > spec.g_domain_lower))
    throw Error(Errc::DomainViolation,
                spec.name + ": trace " + format_real(u) + " outside the domain of g");
  return spec.g(u);
}

double evaluate(const Entropy& s, const Distribution& p) {
  return std::visit(
      [&](const auto& e) {
        if constexpr (std::is_same_v<std::decay_t<decltype(e)>, TraceGenerator>)
          return eval_trace(e, p);
        else
          return eval_nontrace(e, p);
      },
      s);
}

const TraceGenerator& trace_part(const Entropy& s) {
  if (const auto* t = std::get_if<TraceGenerator>(&s)) return *t;
  return std::get<NonTraceSpec>(s).h;
}

double trace_beta(const Entropy& s) {
  if (const auto* n = std::get_if<NonTraceSpec>(&s)) return n->beta;
  return 0.0;
}

const std::string& entropy_name(const Entropy& s) {
  return std::visit([](const auto& e) -> const std::string& { return e.name; }, s);
}

const Params& entropy_params(const Entropy& s) {
  return std::visit([](const auto& e) -> const Params& { return e.params; }, s);
}

TraceGenerator tsallis_generator(double q, double c) {
  require(q > 0.0 && std::isfinite(q), Errc::ParameterOutOfRange, "tsallis needs q > 0");
  require(q != 1.0, Errc::ParameterOutOfRange, "tsallis q = 1 is the Boltzmann-Gibbs generator");
  require(c > 0.0 && std::isfinite(c), Errc::ParameterOutOfRange, "tsallis needs c > 0");
  const double qm1 = q - 1.0;
  TraceGenerator g;
  g.name = "tsallis";
  g.params = {{"q", q}, {"c", c}};
  // t - t^q = -t (t^{q-1} - 1) = -t expm1((q-1) ln t): no cancellation near q = 1.
  g.f = [=](double t) {
    if (t == 0.0) return 0.0;
    return -c * t * std::expm1(qm1 * std::log(t)) / qm1;
  };
  g.df = [=](double t) { return -c * (q * std::expm1(qm1 * std::log(t)) / qm1 + 1.0); };
  g.d2f = [=](double t) { return -c * q * std::pow(t, q - 2.0); };
  g.smooth_at_zero = q > 1.0;
  return g;
}

TraceGenerator bg_generator(double c) {
  require(c > 0.0 && std::isfinite(c), Errc::ParameterOutOfRange, "bg needs c > 0");
  TraceGenerator g;
  g.name = "bg";
  g.params = {{"c", c}};
  g.f = [=](double t) { return t == 0.0 ? 0.0 : -c * t * std::log(t); };
  g.df = [=](double t) { return -c * (std::log(t) + 1.0); };
  g.d2f = [=](double t) { return -c / t; };
  g.smooth_at_zero = false;
  return g;
}

TraceGenerator two_power_generator(double q1, double q2) {
  require(q1 > 0.0 && q2 > q1 && std::isfinite(q2), Errc::ParameterOutOfRange,
          "twopower needs 0 < q1 < q2");
  require(q1 != 1.0, Errc::ParameterOutOfRange, "twopower with q1 = 1 is the tsallis family");
  const double scale = 1.0 / (q2 - q1);
  TraceGenerator g;
  g.name = "twopower";
  g.params = {{"q1", q1}, {"q2", q2}};
  g.f = [=](double t) { return scale * (std::pow(t, q1) - std::pow(t, q2)); };
  g.df = [=](double t) {
    return scale * (q1 * std::pow(t, q1 - 1.0) - q2 * std::pow(t, q2 - 1.0));
  };
  g.d2f = [=](double t) {
    return scale *
           (q1 * (q1 - 1.0) * std::pow(t, q1 - 2.0) - q2 * (q2 - 1.0) * std::pow(t, q2 - 2.0));
  };
  g.smooth_at_zero = q1 > 1.0;
  return g;
}

PowerH power_h(double a, double b, double q) {
  require(std::isfinite(a) && std::isfinite(b), Errc::ParameterOutOfRange, "power_h: non-finite");
  require(b != 0.0, Errc::DegenerateH, "b = 0 leaves h linear");
  require(q > 0.0 && std::isfinite(q), Errc::ParameterOutOfRange, "power_h needs q > 0");
  require(q != 1.0, Errc::DegenerateH, "q = 1 leaves h linear");
  PowerH out;
  out.h.name = "power_h";
  out.h.params = {{"a", a}, {"b", b}, {"q", q}};
  out.h.f = [=](double t) { return a * t + b * std::pow(t, q); };
  out.h.df = [=](double t) { return a + b * q * std::pow(t, q - 1.0); };
  out.h.d2f = [=](double t) { return b * q * (q - 1.0) * std::pow(t, q - 2.0); };
  out.h.smooth_at_zero = q > 1.0;
  out.beta = a + b;
  out.irregular = q < 1.0;
  return out;
}

NonTraceSpec renyi_spec(double alpha) {
  require(alpha > 0.0 && std::isfinite(alpha), Errc::ParameterOutOfRange, "renyi needs alpha > 0");
  require(alpha != 1.0, Errc::ParameterOutOfRange, "renyi alpha = 1 is Boltzmann-Gibbs");
  NonTraceSpec s;
  s.name = "renyi";
  s.params = {{"alpha", alpha}};
  s.h.name = "power";
  s.h.params = {{"q", alpha}};
  s.h.f = [=](double t) { return std::pow(t, alpha); };
  s.h.df = [=](double t) { return alpha * std::pow(t, alpha - 1.0); };
  s.h.d2f = [=](double t) { return alpha * (alpha - 1.0) * std::pow(t, alpha - 2.0); };
  s.h.smooth_at_zero = alpha >= 1.0;
  const double k = 1.0 - alpha;
  s.g = [=](double u) { return std::log(u) / k; };
  s.g_inv = [=](double x) { return std::exp(k * x); };
  s.beta = 1.0;
  s.g_domain_lower = 0.0;
  return s;
}

NonTraceSpec log_spec(double a, double b, double q) {
  require(q > 1.0, Errc::ParameterOutOfRange, "logpow needs q > 1");
  PowerH ph = power_h(a, b, q);
  require(ph.beta > 0.0, Errc::ParameterOutOfRange, "logpow needs a + b > 0");
  const double beta = ph.beta;
  NonTraceSpec s;
  s.name = "logpow";
  s.params = {{"a", a}, {"b", b}, {"q", q}};
  s.h = std::move(ph.h);
  s.g = [=](double u) { return std::log(u / beta); };
  s.g_inv = [=](double x) { return beta * std::exp(x); };
  s.beta = beta;
  s.g_domain_lower = 0.0;
  return s;
}

BoundaryReport check_boundary(const TraceGenerator& gen) {
  BoundaryReport r;
  r.at_zero = std::abs(gen.f(0.0));
  r.at_one = std::abs(gen.f(1.0));
  r.pass = r.at_zero <= kBoundaryTolerance && r.at_one <= kBoundaryTolerance;
  return r;
}

BoundaryReport check_boundary(const NonTraceSpec& spec) {
  BoundaryReport r;
  r.at_zero = std::abs(spec.h.f(0.0));
  r.at_one = std::abs(spec.g(spec.h.f(1.0)));
  r.pass = r.at_zero <= kBoundaryTolerance && r.at_one <= kBoundaryTolerance;
  return r;
}

BoundaryReport check_boundary(const Entropy& s) {
  return std::visit([](const auto& e) { return check_boundary(e); }, s);
}

double conjugation_residual(const NonTraceSpec& spec, std::span<const double> xs) {
  double worst = 0.0;
  for (double x : xs) worst = std::max(worst, std::abs(spec.g(spec.g_inv(x)) - x));
  return worst;
}

bool g_strictly_monotone(const NonTraceSpec& spec, std::span<const double> us) {
  if (us.size() < 2) return true;
  int sign = 0;
  for (std::size_t i = 1; i < us.size(); ++i) {
    const double d = spec.g(us[i]) - spec.g(us[i - 1]);
    const int s = (d > 0.0) - (d < 0.0);
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
  }
  return true;
}

}  // namespace gentropy
