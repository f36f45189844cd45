#include "gentropy/composition.hpp"

#include "gentropy/error.hpp"

namespace gentropy {

double eval_renyi_type(const NonTraceSpec& conj, double alpha, double x, double y) {
  const double gx = conj.g_inv(x);
  const double gy = conj.g_inv(y);
  const double b = conj.beta;
  // Factored form of X + Y - beta + alpha (X - beta)(Y - beta); the expanded
  // one cancels catastrophically when alpha * beta = 1 and X, Y are small.
  double inner;
  if (alpha == 0.0) {
    inner = gx + gy - b;
  } else {
    const double u = 1.0 - alpha * b;
    inner = ((u + alpha * gx) * (u + alpha * gy) - u) / alpha;
  }
  if (!(inner > conj.g_domain_lower))
    throw Error(Errc::DomainViolation, conj.name + ": composed trace " + format_real(inner) +
                                           " outside the domain of g");
  return conj.g(inner);
}

double tsallis_alpha(double q, double c) {
  if (q == 1.0 || !(c > 0.0) || !std::isfinite(q) || !std::isfinite(c))
    throw Error(Errc::ParameterOutOfRange, "tsallis_alpha needs q != 1, c > 0");
  return (1.0 - q) / c;
}

double power_h_alpha(double b) {
  if (b == 0.0) throw Error(Errc::DegenerateH, "b = 0 leaves h linear");
  return 1.0 / b;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1) throw Error(Errc::EmptyInput, "grid needs at least one point");
  std::vector<double> g(static_cast<std::size_t>(points));
  if (points == 1) {
    g[0] = lo;
    return g;
  }
  for (int i = 0; i < points; ++i)
    g[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  return g;
}

std::vector<double> uniform_image_grid(const Entropy& s, int points) {
  if (points < 1) throw Error(Errc::EmptyInput, "grid needs at least one point");
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(points));
  for (int w = 1; w <= points; ++w) g.push_back(evaluate(s, uniform(w)));
  return g;
}

std::vector<double> default_axiom_grid(const CompositionLaw& law) {
  if (law.kind() == LawKind::RenyiType) return uniform_image_grid(Entropy(*law.conjugation()), 9);
  return linear_grid(0.0, 3.0, 9);
}

}  // namespace gentropy
