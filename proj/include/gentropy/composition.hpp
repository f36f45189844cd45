#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "gentropy/entropy.hpp"

namespace gentropy {

enum class LawKind { Additive, Multiplicative, RenyiType };

/// x + y + alpha x y
inline double eval_multiplicative(double alpha, double x, double y) {
  return x + y + alpha * x * y;
}

/// g(X + Y - beta + alpha (X - beta)(Y - beta)) with X = g_inv(x), Y = g_inv(y):
/// the multiplicative law conjugated by the spec's outer function.
double eval_renyi_type(const NonTraceSpec& conj, double alpha, double x, double y);

/// A composition law Phi(x, y). Immutable value type.
class CompositionLaw {
 public:
  static CompositionLaw additive() { return CompositionLaw(LawKind::Additive, 0.0, std::nullopt); }
  static CompositionLaw multiplicative(double alpha) {
    return CompositionLaw(LawKind::Multiplicative, alpha, std::nullopt);
  }
  static CompositionLaw renyi_type(NonTraceSpec conj, double alpha) {
    return CompositionLaw(LawKind::RenyiType, alpha, std::move(conj));
  }

  LawKind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  const std::optional<NonTraceSpec>& conjugation() const noexcept { return conj_; }

  double operator()(double x, double y) const {
    switch (kind_) {
      case LawKind::Additive: return x + y;
      case LawKind::Multiplicative: return eval_multiplicative(alpha_, x, y);
      case LawKind::RenyiType: break;
    }
    return eval_renyi_type(*conj_, alpha_, x, y);
  }

  /// Neutral element: 0 for the trace laws, g(beta) for conjugated ones.
  double identity() const {
    if (kind_ != LawKind::RenyiType) return 0.0;
    return conj_->g(conj_->beta);
  }

 private:
  CompositionLaw(LawKind kind, double alpha, std::optional<NonTraceSpec> conj)
      : kind_(kind), alpha_(alpha), conj_(std::move(conj)) {}

  LawKind kind_;
  double alpha_;
  std::optional<NonTraceSpec> conj_;
};

/// (1 - q) / c, the constant of the law composing c * tsallis_q.
double tsallis_alpha(double q, double c = 1.0);

/// 1 / b, the constant of the conjugated law composing h(t) = a t + b t^q.
double power_h_alpha(double b);

struct AxiomResiduals {
  double comm_max = 0.0;
  double id_max = 0.0;
  double assoc_max = 0.0;

  double worst() const { return std::max({comm_max, id_max, assoc_max}); }
};

/// Group-law residuals of `law` over every pair and triple drawn from `grid`.
/// `Law` is anything callable as law(x, y) with an identity() member.
template <typename Law>
AxiomResiduals axioms_residual(const Law& law, std::span<const double> grid) {
  AxiomResiduals r;
  const double e = law.identity();
  for (double x : grid) {
    r.id_max = std::max(r.id_max, std::abs(law(x, e) - x));
    for (double y : grid) {
      const double xy = law(x, y);
      r.comm_max = std::max(r.comm_max, std::abs(xy - law(y, x)));
      for (double z : grid)
        r.assoc_max = std::max(r.assoc_max, std::abs(law(x, law(y, z)) - law(xy, z)));
    }
  }
  return r;
}

std::vector<double> linear_grid(double lo, double hi, int points);

/// S(uniform(W)) for W = 1..points: values every composable entropy can
/// take, closed under its law on products of uniforms.
std::vector<double> uniform_image_grid(const Entropy& s, int points);

/// Default grid: 9 points on [0, 3] for trace laws, the uniform image of
/// the conjugating spec for renyi-type laws.
std::vector<double> default_axiom_grid(const CompositionLaw& law);

}  // namespace gentropy
