#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace gentropy {

inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr double kNegativeNoise = -1e-15;
inline constexpr double kInteriorMargin = 1e-3;

/// A point of the probability simplex with W >= 1 states. Immutable once
/// built; the only ways in are the factory functions below, all of which
/// enforce the simplex invariants.
class Distribution {
 public:
  const Eigen::ArrayXd& probs() const noexcept { return probs_; }
  Eigen::Index size() const noexcept { return probs_.size(); }
  double operator[](Eigen::Index i) const { return probs_(i); }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.size() == b.size() && (a.probs_ == b.probs_).all();
  }

 private:
  explicit Distribution(Eigen::ArrayXd probs) : probs_(std::move(probs)) {}

  friend Distribution make_distribution_unchecked(Eigen::ArrayXd probs);

  Eigen::ArrayXd probs_;
};

/// Checks `raw` against the simplex invariants. Entries down to -1e-15 are
/// clamped to zero; with `renormalize` the entries are divided by their sum,
/// otherwise the sum must already be within 1e-12 of one.
Distribution validate(std::span<const double> raw, bool renormalize = false);

template <typename Derived>
Distribution validate(const Eigen::DenseBase<Derived>& raw, bool renormalize = false) {
  Eigen::ArrayXd tmp = raw.derived().template cast<double>();
  return validate(std::span<const double>(tmp.data(), static_cast<std::size_t>(tmp.size())),
                  renormalize);
}

Distribution uniform(Eigen::Index states);

/// Certainty state: all mass on the zero-based index `hot`.
Distribution delta(Eigen::Index states, Eigen::Index hot);

/// Independent composition: entries pA_i * pB_j, row-major (i outer, j inner).
Distribution product(const Distribution& a, const Distribution& b);

/// Appends one state of probability zero.
Distribution expand_zero(const Distribution& p);

enum class SamplingStrategy { Flat, Stratified };

/// Deterministic random distribution, a pure function of its arguments.
///
/// Flat draws W unit exponentials -ln(u), u in (0,1], and normalizes (the
/// flat Dirichlet law). Stratified cycles on `index % 3` between a flat draw,
/// uniform(W), and a near-delta point with mass 1-(W-1)*1e-3 on the state
/// `(index / 3) % W`.
Distribution sample(Eigen::Index states, std::uint64_t seed, SamplingStrategy strategy,
                    std::uint64_t index);

/// Seeded generator for the (seed, index, tag) stream. Streams with distinct
/// arguments are independent; the same arguments always give the same stream.
std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t index, std::uint32_t tag);

/// Flat draw squeezed into the interior: every entry >= margin.
Distribution sample_interior(Eigen::Index states, std::uint64_t seed, std::uint64_t index,
                             double margin = kInteriorMargin);

/// The straight variation curve through an interior point: the first W-1
/// coordinates move along `direction`, the last absorbs the difference.
struct VariationSpec {
  Distribution base;
  Eigen::VectorXd direction;
  double step = 0.0;
};

Distribution variation_point(const VariationSpec& spec, double margin = kInteriorMargin);

/// Text format: one distribution per line, comma separated, `#` comments.
std::vector<Distribution> read_distributions(std::istream& in, bool renormalize = false);
std::string format_distribution(const Distribution& p);

/// Shortest round-trip, locale-independent decimal representation.
std::string format_real(double x);
double parse_real(std::string_view text);

}  // namespace gentropy
