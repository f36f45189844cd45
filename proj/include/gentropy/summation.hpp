#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace gentropy {

namespace detail {

template <typename Scalar>
Scalar pairwise_sum_range(const Scalar* first, std::size_t n) {
  if (n <= 4) {
    Scalar s = 0;
    for (std::size_t i = 0; i < n; ++i) s += first[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_range(first, half) + pairwise_sum_range(first + half, n - half);
}

}  // namespace detail

/// Pairwise (tree) sum in index order.
template <typename Scalar>
Scalar pairwise_sum(std::span<const Scalar> terms) {
  return detail::pairwise_sum_range(terms.data(), terms.size());
}

/// Pairwise sum of the terms after sorting them ascending. The result depends
/// only on the multiset of terms, so it is exactly invariant under any
/// permutation of the input.
template <typename Scalar>
Scalar canonical_sum(std::vector<Scalar> terms) {
  std::sort(terms.begin(), terms.end());
  return pairwise_sum(std::span<const Scalar>(terms));
}

template <typename Derived>
typename Derived::Scalar canonical_sum(const Eigen::DenseBase<Derived>& terms) {
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> v(terms.size());
  for (Eigen::Index i = 0; i < terms.size(); ++i) v[static_cast<std::size_t>(i)] = terms.derived()(i);
  return canonical_sum(std::move(v));
}

}  // namespace gentropy
