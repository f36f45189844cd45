#include "gentropy/verify.hpp"

#include <Eigen/QR>
#include <cmath>
#include <limits>

#include "gentropy/catalog_id.hpp"
#include "gentropy/error.hpp"
#include "gentropy/summation.hpp"

namespace gentropy {

namespace {

constexpr std::uint64_t kSecondFactorSeed = 0x9E3779B97F4A7C15ull;
constexpr std::uint32_t kStateCountTag = 0x57a7e;

void check_range(StateRange range) {
  if (range.lo < 1 || range.hi < range.lo)
    throw Error(Errc::ParameterOutOfRange, "state range needs 1 <= lo <= hi");
}

Distribution factor(Eigen::Index states, std::uint64_t seed, std::uint64_t index) {
  if (states == 1) return uniform(1);
  return sample(states, seed, SamplingStrategy::Stratified, index);
}

double trace_of(const TraceGenerator& f, const Distribution& p) { return eval_trace(f, p); }

void require_index(Eigen::Index i, Eigen::Index states, const char* what) {
  if (states < 2) throw Error(Errc::IndexOutOfRange, std::string(what) + ": needs W >= 2");
  if (i < 0 || i >= states - 1)
    throw Error(Errc::IndexOutOfRange, std::string(what) + " index " + std::to_string(i) +
                                           " not in [0, " + std::to_string(states - 1) + ")");
}

void require_derivable(const TraceGenerator& f, const Distribution& pa, const Distribution& pb) {
  if (f.smooth_at_zero) return;
  if (pa.probs().minCoeff() < kInteriorMargin || pb.probs().minCoeff() < kInteriorMargin)
    throw Error(Errc::SingularDerivative,
                f.name + " has no finite f'(0); derivative checks need interior points");
}

}  // namespace

double composability_residual(const Entropy& s, const CompositionLaw& law, const Distribution& a,
                              const Distribution& b) {
  const double joint = evaluate(s, product(a, b));
  return std::abs(joint - law(evaluate(s, a), evaluate(s, b)));
}

SamplePair scan_pair(StateRange range, std::uint64_t seed, std::uint64_t k) {
  check_range(range);
  auto rng = seeded_stream(seed, k, kStateCountTag);
  const auto span = static_cast<std::uint64_t>(range.hi - range.lo + 1);
  const auto wa = range.lo + static_cast<Eigen::Index>(rng() % span);
  const auto wb = range.lo + static_cast<Eigen::Index>(rng() % span);
  return {factor(wa, seed, k), factor(wb, seed ^ kSecondFactorSeed, 3 * k + (k / 3) % 3)};
}

ScanReport composability_scan(const Entropy& s, const CompositionLaw& law, std::size_t n_pairs,
                              StateRange range, std::uint64_t seed, double tolerance) {
  if (n_pairs < 1) throw Error(Errc::EmptyInput, "scan needs at least one pair");
  check_range(range);
  std::vector<double> residuals(n_pairs);
  for (std::size_t k = 0; k < n_pairs; ++k) {
    const auto pair = scan_pair(range, seed, k);
    residuals[k] = composability_residual(s, law, pair.a, pair.b);
  }

  ScanReport r;
  r.entropy = entropy_name(s);
  r.params = entropy_params(s);
  r.law = format_law_id(law);
  r.seed = seed;
  r.n_pairs = n_pairs;
  r.w_range = range;
  r.tolerance = tolerance;
  std::size_t worst = 0;
  for (std::size_t k = 1; k < n_pairs; ++k)
    if (residuals[k] > residuals[worst] || std::isnan(residuals[k])) worst = k;
  r.max_residual = residuals[worst];
  r.mean_residual = pairwise_sum(std::span<const double>(residuals)) / static_cast<double>(n_pairs);
  auto worst_pair = scan_pair(range, seed, worst);
  r.worst_a = worst_pair.a;
  r.worst_b = worst_pair.b;
  r.pass = r.max_residual <= tolerance;
  return r;
}

BilinearFit bilinear_fit(const TraceGenerator& f, std::size_t n_samples, StateRange range,
                         std::uint64_t seed) {
  if (n_samples < kMinFitSamples)
    throw Error(Errc::ParameterOutOfRange,
                "fit needs at least " + std::to_string(kMinFitSamples) + " samples");
  check_range(range);
  range.lo = std::max(range.lo, std::min<Eigen::Index>(4, range.hi));

  const auto n = static_cast<Eigen::Index>(n_samples);
  Eigen::MatrixXd design(n, 4);
  Eigen::VectorXd z(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto pair = scan_pair(range, seed, static_cast<std::uint64_t>(k));
    const double x = trace_of(f, pair.a);
    const double y = trace_of(f, pair.b);
    design.row(k) << 1.0, x, y, x * y;
    z(k) = trace_of(f, product(pair.a, pair.b));
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < 4)
    throw Error(Errc::RankDeficient, "design matrix has rank " + std::to_string(qr.rank()));
  const Eigen::Vector4d coef = qr.solve(z);

  BilinearFit fit;
  fit.a0 = coef(0);
  fit.a1 = coef(1);
  fit.a2 = coef(2);
  fit.a3 = coef(3);
  const Eigen::ArrayXd res = (design * coef - z).array().abs();
  fit.max_residual = res.maxCoeff();
  fit.rms_residual = std::sqrt(res.square().mean());
  fit.n_samples = n_samples;
  const Eigen::VectorXd diag = qr.matrixR().diagonal().cwiseAbs();
  fit.condition_flag = diag(3) < 1e-10 * diag(0);
  return fit;
}

TraceGenerator finite_difference_derivatives(const TraceGenerator& f, double step) {
  TraceGenerator out = f;
  out.name = f.name + "+fd";
  const RealFn fn = f.f;
  out.df = [fn, step](double t) {
    const double h = step * t;
    return (fn(t + h) - fn(t - h)) / (2.0 * h);
  };
  out.d2f = [fn, step](double t) {
    const double h = step * t;
    return (fn(t + h) - 2.0 * fn(t) + fn(t - h)) / (h * h);
  };
  return out;
}

double first_variation_residual(const TraceGenerator& f, double alpha, const Distribution& pa,
                                const Distribution& pb, Eigen::Index l, double beta) {
  require_index(l, pa.size(), "first variation");
  require_derivable(f, pa, pb);
  const double pl = pa[l];
  const double pw = pa[pa.size() - 1];
  std::vector<double> lhs_terms;
  lhs_terms.reserve(static_cast<std::size_t>(pb.size()));
  for (Eigen::Index j = 0; j < pb.size(); ++j)
    lhs_terms.push_back(pb[j] * (f.df(pl * pb[j]) - f.df(pw * pb[j])));
  const double lhs = canonical_sum(std::move(lhs_terms));
  const double rhs = (1.0 - alpha * beta + alpha * eval_trace(f, pb)) * (f.df(pl) - f.df(pw));
  return std::abs(lhs - rhs);
}

double second_variation_residual(const TraceGenerator& f, double alpha, const Distribution& pa,
                                 const Distribution& pb, Eigen::Index l, Eigen::Index m) {
  require_index(l, pa.size(), "second variation (l)");
  require_index(m, pb.size(), "second variation (m)");
  require_derivable(f, pa, pb);
  const double al = pa[l], aw = pa[pa.size() - 1];
  const double bm = pb[m], bw = pb[pb.size() - 1];
  auto d = [&](double t) { return f.df(t) + t * f.d2f(t); };
  const double lhs = (d(al * bm) - d(al * bw)) - (d(aw * bm) - d(aw * bw));
  const double rhs = alpha * (f.df(bm) - f.df(bw)) * (f.df(al) - f.df(aw));
  return std::abs(lhs - rhs);
}

double max_first_variation_residual(const TraceGenerator& f, double alpha, const Distribution& pa,
                                    const Distribution& pb, double beta) {
  double worst = 0.0;
  for (Eigen::Index l = 0; l + 1 < pa.size(); ++l)
    worst = std::max(worst, first_variation_residual(f, alpha, pa, pb, l, beta));
  return worst;
}

double max_second_variation_residual(const TraceGenerator& f, double alpha,
                                     const Distribution& pa, const Distribution& pb) {
  double worst = 0.0;
  for (Eigen::Index l = 0; l + 1 < pa.size(); ++l)
    for (Eigen::Index m = 0; m + 1 < pb.size(); ++m)
      worst = std::max(worst, second_variation_residual(f, alpha, pa, pb, l, m));
  return worst;
}

OdeResidual ode_constant_residual(const TraceGenerator& f, double q,
                                  std::span<const double> grid) {
  if (grid.empty()) throw Error(Errc::EmptyInput, "ode check needs a grid");
  OdeResidual r;
  r.values.reserve(grid.size());
  for (double t : grid) {
    if (!(t > 0.0 && t < 1.0))
      throw Error(Errc::SingularDerivative, "grid point " + format_real(t) + " not in (0, 1)");
    const double v = t * f.d2f(t) + (1.0 - q) * f.df(t);
    if (!std::isfinite(v))
      throw Error(Errc::SingularDerivative, f.name + " derivative not finite at " + format_real(t));
    r.values.push_back(v);
  }
  const auto [lo, hi] = std::minmax_element(r.values.begin(), r.values.end());
  r.spread = *hi - *lo;
  return r;
}

double q_recovery(const TraceGenerator& f, double alpha) {
  if (!f.smooth_at_zero)
    throw Error(Errc::SingularDerivative, f.name + " is not C^1 at 0");
  return alpha * (f.df(1.0) - f.df(0.0));
}

double uniform_law_residual(const TraceGenerator& f, double alpha, int w_max) {
  if (w_max < 2) throw Error(Errc::ParameterOutOfRange, "uniform law check needs w_max >= 2");
  auto h = [&](double t) { return f.f(t) / t; };
  double worst = 0.0;
  for (int w = 2; w <= w_max; ++w) {
    const double hs = h(1.0 / w);
    for (int v = 2; v <= w_max; ++v) {
      const double ht = h(1.0 / v);
      const double joint = h(1.0 / (static_cast<double>(w) * v));
      worst = std::max(worst, std::abs(joint - hs - ht - alpha * hs * ht));
    }
  }
  return worst;
}

WeakCheck weak_composability_check(const Entropy& s, const CompositionLaw& law, int w_max) {
  if (w_max < 2) throw Error(Errc::ParameterOutOfRange, "weak check needs w_max >= 2");
  WeakCheck out;
  std::vector<double> values(static_cast<std::size_t>(w_max) + 1);
  for (int w = 1; w <= w_max; ++w) values[static_cast<std::size_t>(w)] = evaluate(s, uniform(w));
  for (int w = 1; w <= w_max; ++w)
    for (int v = 1; v <= w_max; ++v) {
      const double joint = evaluate(s, uniform(static_cast<Eigen::Index>(w) * v));
      const double r = std::abs(joint - law(values[static_cast<std::size_t>(w)],
                                            values[static_cast<std::size_t>(v)]));
      if (r > out.max_residual) out = {r, w, v};
    }
  return out;
}

SkReport sk_checks(const Entropy& s, std::size_t n_samples, StateRange range, std::uint64_t seed) {
  check_range(range);
  SkReport r;
  r.n_samples = n_samples;
  for (std::size_t k = 0; k < n_samples; ++k) {
    const Distribution p = scan_pair(range, seed, k).a;
    const double value = evaluate(s, p);
    r.expansibility_max = std::max(r.expansibility_max, std::abs(evaluate(s, expand_zero(p)) - value));
    if (value > evaluate(s, uniform(p.size())) + kIdentityTolerance) ++r.maximality_violations;
  }
  return r;
}

}  // namespace gentropy
