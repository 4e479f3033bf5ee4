#pragma once

#include <array>
#include <vector>

#include "dilat/digraph.hpp"
#include "dilat/polynomial.hpp"
#include "dilat/spectral.hpp"

namespace dilat {

/// Lanneau–Thiffeault polynomial x^(2d) - x^(2d-a) - x^d - x^a + 1, 1 <= a <= d-1.
IntPolynomial lt_polynomial(int d, int a);

/// Complexity-4 family: x^(2d) - sum_i (x^(2d-a_i) + x^(a_i))
/// + sum_{j=2..4} (x^(2d-a_1-a_j) + x^(a_1+a_j)) - x^d + 1,
/// with every a_i >= 2 and a_1 + ... + a_4 = 2d.
IntPolynomial c4_polynomial(int d, const std::array<int, 4>& a);

/// Two-cycle formula x^m - x^(m-a1) - x^(a1) - x^(m-a3) + 1, m = a1 + a2.
IntPolynomial shape22_polynomial(int a1, int a2, int a3);

/// Ring formula prod_k (x^(a_k) - 1) - x^(m - b) for n cycles joined in a ring
/// by one through-cycle of length b.
IntPolynomial ring_polynomial(const std::vector<int>& cycle_lengths, int through_length);

/// Connecting edge from (source cycle, offset) to (target cycle, offset).
struct Attachment {
  int source_cycle = 0;
  int source_offset = 0;
  int target_cycle = 0;
  int target_offset = 0;
};

/// n disjoint base cycles plus c connecting edges. Cycle k occupies a
/// contiguous vertex block; offsets are taken modulo the cycle length.
struct Shape {
  std::vector<int> cycle_lengths;
  std::vector<Attachment> attachments;

  int n() const { return static_cast<int>(cycle_lengths.size()); }
  int c() const { return static_cast<int>(attachments.size()); }
  int vertex_count() const;
};

/// Ring arrangement: edge k leaves cycle k at offset through[k] - 1 and enters
/// cycle k+1 (mod n) at offset 0, so the unique through-cycle meets cycle k in
/// exactly through[k] vertices. With n = 1 this is a single chord.
Shape ring_shape(const std::vector<int>& cycle_lengths, const std::vector<int>& through);

MultiDigraph build_shape_nc(const Shape& shape);

/// Cycles of lengths a1, a2 joined so the through-cycle has p vertices on the
/// first and q on the second (a3 = p + q).
MultiDigraph build_shape_22(int a1, int a2, int p, int q);

struct GenusBound {
  int g = 0;
  int d = 0;
  int a = 0;
  RootResult bound;
};

/// Upper bound on the minimal dilatation in genus g >= 6:
/// lambda_{g+1,g} when g = 7+3n or 8+3n, lambda_{g+1,g-2} when g = 6+3n.
/// Genus 5 is outside both cases and is rejected with RangeError.
GenusBound hironaka_bound(int g, double tol = kDefaultTolerance);

}  // namespace dilat
