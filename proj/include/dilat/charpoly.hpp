#pragma once

#include <cstddef>
#include <vector>

#include "dilat/digraph.hpp"
#include "dilat/polynomial.hpp"
#include "dilat/types.hpp"

namespace dilat {

/// A union of pairwise vertex-disjoint elementary cycles.
struct LinearSubdigraph {
  std::vector<Cycle> cycles;

  int vertex_count() const;
  int cycle_count() const { return static_cast<int>(cycles.size()); }
  /// (-1)^n(L) times the product of cycle multiplicities.
  BigInt signed_weight() const;
};

/// Caps for the cycle-cover computations. Per call, never global.
struct EnumerationLimits {
  int max_vertices = 64;
  std::size_t max_cycles = 10'000'000;
  /// Memoised subproblems in char_poly_ct; listed subdigraphs in
  /// enumerate_linear_subdigraphs.
  std::size_t max_states = 10'000'000;
};

/// det(xI - T) from the signed census of linear subdigraphs:
/// b_i = sum over i-vertex linear subdigraphs L of (-1)^n(L) * weight(L).
IntPolynomial char_poly_ct(const MultiDigraph& d, const EnumerationLimits& limits = {});

/// All linear subdigraphs covering exactly `i` vertices, each once.
std::vector<LinearSubdigraph> enumerate_linear_subdigraphs(const MultiDigraph& d, int i,
                                                           const EnumerationLimits& limits = {});

/// Division-free Berkowitz algorithm. Returns the coefficients of
/// det(xI - A), highest power first, over the scalar type of A.
template <typename Derived>
std::vector<typename Derived::Scalar> berkowitz(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  std::vector<Scalar> poly{Scalar(1)};
  for (Eigen::Index k = 0; k < n; ++k) {
    // Leading block [[A_k, C], [R, a_kk]]; first column of the Toeplitz factor is
    // 1, -a_kk, -R C, -R A_k C, ..., -R A_k^(k-1) C.
    std::vector<Scalar> column;
    column.reserve(static_cast<std::size_t>(k + 2));
    column.emplace_back(1);
    column.push_back(-a(k, k));
    if (k > 0) {
      const auto block = a.topLeftCorner(k, k);
      Vector<Scalar> power = a.col(k).head(k);
      const Vector<Scalar> row = a.row(k).head(k).transpose();
      for (Eigen::Index j = 0; j < k; ++j) {
        column.push_back(-row.dot(power));
        if (j + 1 < k) power = (block * power).eval();
      }
    }
    std::vector<Scalar> next(static_cast<std::size_t>(k + 2), Scalar(0));
    for (std::size_t r = 0; r < next.size(); ++r)
      for (std::size_t c = 0; c < poly.size() && c <= r; ++c) next[r] += column[r - c] * poly[c];
    poly = std::move(next);
  }
  return poly;
}

/// Independent oracle: det(xI - T) by Berkowitz over exact integers.
IntPolynomial char_poly_oracle(const MultiDigraph& d);

}  // namespace dilat
