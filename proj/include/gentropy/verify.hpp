#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gentropy/composition.hpp"
#include "gentropy/entropy.hpp"
#include "gentropy/simplex.hpp"

namespace gentropy {

/// Composability scans: accumulated rounding over <= 64-term sums.
inline constexpr double kScanTolerance = 1e-10;
/// Closed-form identities evaluated once.
inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr std::size_t kMinFitSamples = 20;

/// Inclusive range of state counts.
struct StateRange {
  Eigen::Index lo = 2;
  Eigen::Index hi = 8;
};

/// |S(A u B) - Phi(S(A), S(B))| for the product system of a and b.
double composability_residual(const Entropy& s, const CompositionLaw& law, const Distribution& a,
                              const Distribution& b);

struct SamplePair {
  Distribution a;
  Distribution b;
};

/// The k-th pair of a scan. State counts are drawn independently from
/// `range`; both factors come from the stratified sampler, arranged so that
/// every nine consecutive pairs visit all nine (kind A, kind B) combinations.
/// One-state factors are uniform(1).
SamplePair scan_pair(StateRange range, std::uint64_t seed, std::uint64_t k);

struct ScanReport {
  std::string entropy;
  Params params;
  std::string law;
  std::uint64_t seed = 0;
  std::size_t n_pairs = 0;
  StateRange w_range;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  Distribution worst_a = uniform(1);
  Distribution worst_b = uniform(1);
  bool pass = false;
  double tolerance = kScanTolerance;
};

ScanReport composability_scan(const Entropy& s, const CompositionLaw& law, std::size_t n_pairs,
                              StateRange range, std::uint64_t seed,
                              double tolerance = kScanTolerance);

/// Least-squares fit z ~ a0 + a1 x + a2 y + a3 x y of the product-system
/// trace z against the factor traces x, y.
struct BilinearFit {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  double rms_residual = 0.0;
  double max_residual = 0.0;
  std::size_t n_samples = 0;
  /// Design matrix is numerically rank-deficient at relative tolerance 1e-10.
  bool condition_flag = false;
};

/// Fits the trace of `f` over `n_samples` scan pairs. The lower state count
/// is raised to 4 whenever the range reaches 4. Throws RankDeficient when
/// the design has rank < 4 at working precision.
BilinearFit bilinear_fit(const TraceGenerator& f, std::size_t n_samples, StateRange range,
                         std::uint64_t seed);

/// Copy of `f` whose derivatives are centered finite differences of f with
/// relative step `step`.
TraceGenerator finite_difference_derivatives(const TraceGenerator& f, double step = 1e-5);

/// First-variation identity for index l (zero-based, l < W-1):
/// |sum_j pB_j [f'(pA_l pB_j) - f'(pA_W pB_j)]
///    - (1 - alpha beta + alpha sum_j f(pB_j)) [f'(pA_l) - f'(pA_W)]|.
/// beta = 0 for trace-form entropies, h(1) for the trace part of non-trace ones.
double first_variation_residual(const TraceGenerator& f, double alpha, const Distribution& pa,
                                const Distribution& pb, Eigen::Index l, double beta = 0.0);

/// Second-variation identity for (l, m), zero-based, l < W-1, m < W'-1:
/// alternating sum of f'(t) + t f''(t) over the four products against
/// alpha [f'(pB_m) - f'(pB_W')] [f'(pA_l) - f'(pA_W)].
double second_variation_residual(const TraceGenerator& f, double alpha, const Distribution& pa,
                                 const Distribution& pb, Eigen::Index l, Eigen::Index m);

/// Largest first/second variation residual over every admissible index.
double max_first_variation_residual(const TraceGenerator& f, double alpha, const Distribution& pa,
                                    const Distribution& pb, double beta = 0.0);
double max_second_variation_residual(const TraceGenerator& f, double alpha,
                                     const Distribution& pa, const Distribution& pb);

struct OdeResidual {
  std::vector<double> values;  ///< t f''(t) + (1 - q) f'(t) on the grid
  double spread = 0.0;         ///< max - min of values
};

OdeResidual ode_constant_residual(const TraceGenerator& f, double q, std::span<const double> grid);

/// alpha (f'(1) - f'(0)); needs f'(0) finite.
double q_recovery(const TraceGenerator& f, double alpha);

/// max over 2 <= W, W' <= w_max of |h(1/(W W')) - h(1/W) - h(1/W') - alpha h(1/W) h(1/W')|
/// with h(t) = f(t) / t.
double uniform_law_residual(const TraceGenerator& f, double alpha, int w_max);

struct WeakCheck {
  double max_residual = 0.0;
  int worst_w = 1;
  int worst_w2 = 1;
};

/// Composability restricted to uniform factors, 1 <= W, W' <= w_max.
WeakCheck weak_composability_check(const Entropy& s, const CompositionLaw& law, int w_max);

struct SkReport {
  double expansibility_max = 0.0;        ///< max |S(expand_zero(p)) - S(p)|
  std::size_t maximality_violations = 0;  ///< samples with S(p) > S(uniform(W)) + 1e-12
  std::size_t n_samples = 0;
};

SkReport sk_checks(const Entropy& s, std::size_t n_samples, StateRange range, std::uint64_t seed);

}  // namespace gentropy
