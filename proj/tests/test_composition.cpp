#include <doctest.h>

#include <cmath>

#include "gentropy/composition.hpp"
#include "gentropy/error.hpp"
#include "gentropy/verify.hpp"

using namespace gentropy;

namespace {

/// Deliberately non-commutative control law.
struct BrokenLaw {
  double operator()(double x, double y) const { return x + y + x * y * y; }
  double identity() const { return 0.0; }
};

}  // namespace

TEST_CASE("eval_multiplicative") {
  CHECK(eval_multiplicative(0.0, 1.2, 0.3) == 1.2 + 0.3);
  CHECK(eval_multiplicative(-1.0, 0.5, 0.5) == 0.75);
  for (double alpha : {-2.0, -1.0, 0.0, 0.5, 3.0})
    for (double x : {-1.0, 0.0, 0.7, 2.5}) CHECK(eval_multiplicative(alpha, x, 0.0) == x);

  SUBCASE("tsallis q=2 composition of two uniform(2) systems") {
    const auto t2 = tsallis_generator(2.0);
    const double s2 = eval_trace(t2, uniform(2));
    CHECK(eval_multiplicative(-1.0, s2, s2) == doctest::Approx(eval_trace(t2, uniform(4))).epsilon(1e-15));
  }

  SUBCASE("closed-form associativity") {
    const auto grid = linear_grid(-2.0, 3.0, 11);
    for (double alpha : {-1.0, 0.5, 2.0})
      for (double x : grid)
        for (double y : grid)
          for (double z : grid) {
            const double nested = eval_multiplicative(alpha, x, eval_multiplicative(alpha, y, z));
            const double closed = x + y + z + alpha * (x * y + y * z + z * x) + alpha * alpha * x * y * z;
            CHECK(std::abs(nested - closed) <= 1e-13 * std::max(1.0, std::abs(closed)));
          }
  }
}

TEST_CASE("eval_renyi_type") {
  SUBCASE("renyi conjugation with alpha = 1 is additive") {
    for (double a : {0.5, 2.0, 5.0}) {
      const auto law = CompositionLaw::renyi_type(renyi_spec(a), 1.0);
      for (double x : linear_grid(0.0, 5.0, 21))
        for (double y : linear_grid(0.0, 5.0, 21)) CHECK(std::abs(law(x, y) - (x + y)) <= 1e-12);
    }
  }

  SUBCASE("identity element g(beta)") {
    const auto law = CompositionLaw::renyi_type(log_spec(0.5, 0.5, 2.0), 2.0);
    CHECK(law.identity() == 0.0);
    for (double x : linear_grid(-0.6, 0.0, 13)) CHECK(std::abs(law(x, law.identity()) - x) <= 1e-12);
  }

  SUBCASE("log_spec(0.5, 0.5, 2) with alpha = 2") {
    const auto spec = log_spec(0.5, 0.5, 2.0);
    const double x = std::log(0.75);
    CHECK(eval_renyi_type(spec, 2.0, x, x) == doctest::Approx(-0.4700036292457356).epsilon(1e-15));
  }

  SUBCASE("domain violation") {
    const auto spec = log_spec(0.5, 0.5, 2.0);
    CHECK_THROWS_AS(eval_renyi_type(spec, -50.0, std::log(0.5), std::log(0.5)), Error);
  }
}

TEST_CASE("tsallis_alpha and power_h_alpha") {
  CHECK(tsallis_alpha(2.0, 1.0) == -1.0);
  CHECK(tsallis_alpha(0.5, 1.0) == 0.5);
  CHECK(tsallis_alpha(3.0, 2.0) == -1.0);
  CHECK(std::abs(tsallis_alpha(1.0 + 1e-9, 1.0)) <= 1e-8);
  CHECK_THROWS_AS(tsallis_alpha(1.0, 1.0), Error);

  CHECK(power_h_alpha(1.0) == 1.0);
  CHECK(power_h_alpha(0.5) == 2.0);
  CHECK(power_h_alpha(-1.0) == tsallis_alpha(2.0, 1.0));
  CHECK_THROWS_AS(power_h_alpha(0.0), Error);

  SUBCASE("the two formulas agree on the overlap a = c/(q-1), b = -c/(q-1)") {
    for (double q : {0.5, 1.5, 2.0, 3.0})
      for (double c : {1.0, 2.0}) {
        const double b = -c / (q - 1.0);
        CHECK(power_h_alpha(b) == doctest::Approx(tsallis_alpha(q, c)).epsilon(1e-15));
      }
  }

  SUBCASE("brute-force composition on random pairs fixes alpha") {
    // (z - x - y) / (x y) on a pair far from the identity recovers the constant.
    for (auto [q, c] : {std::pair{2.0, 1.0}, {0.5, 1.0}, {3.0, 2.0}}) {
      const auto f = tsallis_generator(q, c);
      for (std::uint64_t k = 0; k < 20; ++k) {
        const auto a = sample_interior(4, 21, 2 * k, 0.05);
        const auto b = sample_interior(3, 21, 2 * k + 1, 0.05);
        const double x = eval_trace(f, a), y = eval_trace(f, b);
        const double z = eval_trace(f, product(a, b));
        CHECK((z - x - y) / (x * y) == doctest::Approx(tsallis_alpha(q, c)).epsilon(1e-10));
      }
    }
    for (auto [a0, b0] : {std::pair{0.0, 1.0}, {0.5, 0.5}, {1.0, -1.0}}) {
      const auto h = power_h(a0, b0, 2.0);
      for (std::uint64_t k = 0; k < 20; ++k) {
        const auto a = sample_interior(4, 23, 2 * k, 0.05);
        const auto b = sample_interior(3, 23, 2 * k + 1, 0.05);
        const double x = eval_trace(h.h, a), y = eval_trace(h.h, b);
        const double z = eval_trace(h.h, product(a, b));
        const double beta = h.beta;
        CHECK((z - x - y + beta) / ((x - beta) * (y - beta)) ==
              doctest::Approx(power_h_alpha(b0)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("axioms_residual") {
  const auto grid = linear_grid(0.0, 3.0, 9);
  for (double alpha : {-1.0, 0.0, 0.5, 2.0}) {
    const auto r = axioms_residual(CompositionLaw::multiplicative(alpha), std::span<const double>(grid));
    CHECK(r.worst() <= 1e-13);
  }
  const auto add = axioms_residual(CompositionLaw::additive(), std::span<const double>(grid));
  CHECK(add.comm_max == 0.0);
  CHECK(add.id_max == 0.0);

  const auto broken = axioms_residual(BrokenLaw{}, std::span<const double>(grid));
  CHECK(broken.comm_max > 0.1);
  CHECK(BrokenLaw{}(1.0, 2.0) == 7.0);
  CHECK(BrokenLaw{}(2.0, 1.0) == 5.0);

  SUBCASE("conjugated laws on their uniform image") {
    const auto law = CompositionLaw::renyi_type(log_spec(0.5, 0.5, 2.0), 2.0);
    const auto g = default_axiom_grid(law);
    CHECK(g.size() == 9);
    CHECK(g.front() == 0.0);
    CHECK(axioms_residual(law, std::span<const double>(g)).worst() <= 1e-13);
  }

  SUBCASE("identity element is read from the law") {
    // A malformed spec whose g(beta) != 0 still has a neutral element g(beta).
    auto spec = renyi_spec(2.0);
    spec.beta = 2.0;
    const auto law = CompositionLaw::renyi_type(spec, 0.5);
    CHECK(law.identity() == doctest::Approx(-std::log(2.0)));
    const auto g = linear_grid(0.0, 1.0, 5);
    CHECK(axioms_residual(law, std::span<const double>(g)).id_max <= 1e-12);
  }
}

TEST_CASE("multiplicative with alpha 0 is additive") {
  const auto m = CompositionLaw::multiplicative(0.0);
  const auto a = CompositionLaw::additive();
  for (double x : linear_grid(-3.0, 3.0, 13))
    for (double y : linear_grid(-3.0, 3.0, 13)) CHECK(m(x, y) == a(x, y));
}
