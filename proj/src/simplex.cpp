#include "gentropy/simplex.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <random>
#include <sstream>
#include <system_error>

#include "gentropy/error.hpp"
#include "gentropy/summation.hpp"

namespace gentropy {

Distribution make_distribution_unchecked(Eigen::ArrayXd probs) {
  return Distribution(std::move(probs));
}

Distribution validate(std::span<const double> raw, bool renormalize) {
  if (raw.empty()) throw Error(Errc::EmptyInput, "distribution has no states");
  Eigen::ArrayXd p(static_cast<Eigen::Index>(raw.size()));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double v = raw[i];
    if (!std::isfinite(v)) throw Error(Errc::NegativeProbability, "non-finite entry");
    if (v < kNegativeNoise)
      throw Error(Errc::NegativeProbability, "entry " + std::to_string(i) + " is " + format_real(v));
    p(static_cast<Eigen::Index>(i)) = v < 0.0 ? 0.0 : v;
  }
  const double total = canonical_sum(p);
  if (renormalize) {
    if (!(total > 0.0)) throw Error(Errc::NotNormalized, "entries sum to zero");
    p /= total;
  } else if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw Error(Errc::NotNormalized, "entries sum to " + format_real(total));
  }
  if ((p > 1.0).any()) throw Error(Errc::NotNormalized, "entry exceeds one");
  return make_distribution_unchecked(std::move(p));
}

Distribution uniform(Eigen::Index states) {
  if (states < 1) throw Error(Errc::EmptyInput, "uniform needs at least one state");
  return make_distribution_unchecked(
      Eigen::ArrayXd::Constant(states, 1.0 / static_cast<double>(states)));
}

Distribution delta(Eigen::Index states, Eigen::Index hot) {
  if (states < 1) throw Error(Errc::EmptyInput, "delta needs at least one state");
  if (hot < 0 || hot >= states)
    throw Error(Errc::IndexOutOfRange, "index " + std::to_string(hot) + " not in [0, " +
                                           std::to_string(states) + ")");
  Eigen::ArrayXd p = Eigen::ArrayXd::Zero(states);
  p(hot) = 1.0;
  return make_distribution_unchecked(std::move(p));
}

namespace {

bool is_flat(const Eigen::ArrayXd& p) { return (p == p(0)).all(); }

}  // namespace

Distribution product(const Distribution& a, const Distribution& b) {
  const Eigen::Index wa = a.size(), wb = b.size();
  // (1/W)(1/W') and 1/(WW') can differ in the last bit; flat inputs map to
  // the flat output directly.
  if (is_flat(a.probs()) && is_flat(b.probs())) return uniform(wa * wb);
  Eigen::ArrayXd out(wa * wb);
  for (Eigen::Index i = 0; i < wa; ++i) out.segment(i * wb, wb) = a[i] * b.probs();
  return make_distribution_unchecked(std::move(out));
}

Distribution expand_zero(const Distribution& p) {
  Eigen::ArrayXd out(p.size() + 1);
  out.head(p.size()) = p.probs();
  out(p.size()) = 0.0;
  return make_distribution_unchecked(std::move(out));
}

std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t index, std::uint32_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    tag};
  return std::mt19937_64(seq);
}

namespace {

// u in (0, 1] with 53 random bits.
double unit_open_closed(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

Eigen::ArrayXd flat_draw(Eigen::Index states, std::uint64_t seed, std::uint64_t index) {
  auto rng = seeded_stream(seed, index, 0x5eed);
  Eigen::ArrayXd e(states);
  for (Eigen::Index i = 0; i < states; ++i) e(i) = -std::log(unit_open_closed(rng));
  return e / canonical_sum(e);
}

}  // namespace

Distribution sample(Eigen::Index states, std::uint64_t seed, SamplingStrategy strategy,
                    std::uint64_t index) {
  if (states < 2) throw Error(Errc::DegenerateSampling, "sampling needs W >= 2");
  if (strategy == SamplingStrategy::Flat)
    return make_distribution_unchecked(flat_draw(states, seed, index));
  switch (index % 3) {
    case 0: return make_distribution_unchecked(flat_draw(states, seed, index));
    case 1: return uniform(states);
    default: {
      constexpr double kFloor = 1e-3;
      Eigen::ArrayXd p = Eigen::ArrayXd::Constant(states, kFloor);
      p(static_cast<Eigen::Index>((index / 3) % static_cast<std::uint64_t>(states))) =
          1.0 - static_cast<double>(states - 1) * kFloor;
      return make_distribution_unchecked(std::move(p));
    }
  }
}

Distribution sample_interior(Eigen::Index states, std::uint64_t seed, std::uint64_t index,
                             double margin) {
  if (states < 2) throw Error(Errc::DegenerateSampling, "sampling needs W >= 2");
  if (!(margin >= 0.0) || static_cast<double>(states) * margin >= 1.0)
    throw Error(Errc::ParameterOutOfRange, "margin too large for W states");
  const double free_mass = 1.0 - static_cast<double>(states) * margin;
  return make_distribution_unchecked(margin + free_mass * flat_draw(states, seed, index));
}

Distribution variation_point(const VariationSpec& spec, double margin) {
  const Distribution& base = spec.base;
  const Eigen::Index w = base.size();
  if (w < 2) throw Error(Errc::IndexOutOfRange, "variation needs W >= 2");
  if (spec.direction.size() != w - 1)
    throw Error(Errc::IndexOutOfRange, "direction must have W-1 components");
  if ((base.probs() < margin).any())
    throw Error(Errc::DomainViolation, "base point is not interior");
  if (spec.direction.norm() > 1.0 + 1e-15)
    throw Error(Errc::ParameterOutOfRange, "direction norm exceeds one");

  Eigen::ArrayXd out(w);
  out.head(w - 1) = base.probs().head(w - 1) + spec.step * spec.direction.array();
  out(w - 1) = base[w - 1] - spec.step * spec.direction.sum();
  if ((out < 0.0).any() || (out > 1.0).any())
    throw Error(Errc::StepTooLarge, "step " + format_real(spec.step) + " leaves the simplex");
  return make_distribution_unchecked(std::move(out));
}

std::vector<Distribution> read_distributions(std::istream& in, bool renormalize) {
  std::vector<Distribution> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<double> values;
    std::string_view rest(line);
    rest.remove_prefix(first);
    while (true) {
      const auto comma = rest.find(',');
      std::string_view field = rest.substr(0, comma);
      while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
      while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
        field.remove_suffix(1);
      try {
        values.push_back(parse_real(field));
      } catch (const Error& e) {
        throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    out.push_back(validate(values, renormalize));
  }
  return out;
}

std::string format_distribution(const Distribution& p) {
  std::string s;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += format_real(p[i]);
  }
  return s;
}

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty())
    throw Error(Errc::ParseError, "not a number: '" + std::string(text) + "'");
  return v;
}

}  // namespace gentropy
