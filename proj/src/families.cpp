#include "dilat/families.hpp"

#include <numeric>
#include <string>

#include "dilat/errors.hpp"

namespace dilat {
namespace {

IntPolynomial x_pow(int k, int c = 1) { return IntPolynomial::monomial(k, c); }

}  // namespace

IntPolynomial lt_polynomial(int d, int a) {
  if (d < 2 || a < 1 || a > d - 1)
    throw RangeError("lt_polynomial requires 1 <= a <= d-1 (got d=" + std::to_string(d) +
                     ", a=" + std::to_string(a) + ")");
  return x_pow(2 * d) - x_pow(2 * d - a) - x_pow(d) - x_pow(a) + x_pow(0);
}

IntPolynomial c4_polynomial(int d, const std::array<int, 4>& a) {
  int sum = 0;
  for (int ai : a) {
    if (ai < 2)
      throw RangeError("c4_polynomial requires every a_i >= 2 (got " + std::to_string(ai) + ")");
    sum += ai;
  }
  if (sum != 2 * d)
    throw RangeError("c4_polynomial requires a_1+a_2+a_3+a_4 = 2d (got sum " +
                     std::to_string(sum) + ", d=" + std::to_string(d) + ")");
  IntPolynomial p = x_pow(2 * d) - x_pow(d) + x_pow(0);
  for (int ai : a) p = p - x_pow(2 * d - ai) - x_pow(ai);
  for (int j = 1; j < 4; ++j) p = p + x_pow(2 * d - a[0] - a[static_cast<std::size_t>(j)]) +
                                  x_pow(a[0] + a[static_cast<std::size_t>(j)]);
  return p;
}

IntPolynomial shape22_polynomial(int a1, int a2, int a3) {
  if (a1 < 1 || a2 < 1 || a3 < 2 || a3 > a1 + a2)
    throw RangeError("shape22_polynomial parameters out of range");
  const int m = a1 + a2;
  return x_pow(m) - x_pow(m - a1) - x_pow(a1) - x_pow(m - a3) + x_pow(0);
}

IntPolynomial ring_polynomial(const std::vector<int>& cycle_lengths, int through_length) {
  if (cycle_lengths.empty()) throw RangeError("ring_polynomial needs at least one cycle");
  IntPolynomial p = x_pow(0);
  int m = 0;
  for (int a : cycle_lengths) {
    if (a < 1) throw RangeError("cycle lengths must be positive");
    p = p * (x_pow(a) - x_pow(0));
    m += a;
  }
  if (through_length < 1 || through_length > m)
    throw RangeError("through-cycle length out of range");
  return p - x_pow(m - through_length);
}

int Shape::vertex_count() const { return std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0); }

Shape ring_shape(const std::vector<int>& cycle_lengths, const std::vector<int>& through) {
  const auto n = cycle_lengths.size();
  if (n == 0 || through.size() != n)
    throw RangeError("ring_shape needs one through-count per cycle");
  Shape s{cycle_lengths, {}};
  for (std::size_t k = 0; k < n; ++k) {
    if (through[k] < 1 || through[k] > cycle_lengths[k])
      throw RangeError("through-count " + std::to_string(through[k]) + " outside 1.." +
                       std::to_string(cycle_lengths[k]));
    s.attachments.push_back({static_cast<int>(k), through[k] - 1, static_cast<int>((k + 1) % n), 0});
  }
  return s;
}

MultiDigraph build_shape_nc(const Shape& shape) {
  if (shape.cycle_lengths.empty()) throw RangeError("shape needs at least one cycle");
  std::vector<int> base;
  int m = 0;
  for (int a : shape.cycle_lengths) {
    if (a < 1) throw RangeError("cycle lengths must be positive");
    base.push_back(m);
    m += a;
  }
  MultiDigraph d(m);
  for (std::size_t k = 0; k < base.size(); ++k) {
    const int a = shape.cycle_lengths[k];
    for (int i = 0; i < a; ++i) d.add_edge(base[k] + i, base[k] + (i + 1) % a);
  }
  auto vertex = [&](int cycle, int offset) {
    if (cycle < 0 || cycle >= shape.n()) throw RangeError("attachment names a missing cycle");
    const int a = shape.cycle_lengths[static_cast<std::size_t>(cycle)];
    return base[static_cast<std::size_t>(cycle)] + ((offset % a) + a) % a;
  };
  for (const auto& at : shape.attachments)
    d.add_edge(vertex(at.source_cycle, at.source_offset), vertex(at.target_cycle, at.target_offset));
  return d;
}

MultiDigraph build_shape_22(int a1, int a2, int p, int q) {
  if (a1 < 1 || a2 < 1 || p < 1 || p > a1 || q < 1 || q > a2)
    throw RangeError("build_shape_22 requires a1,a2 >= 1, 1 <= p <= a1, 1 <= q <= a2 (got " +
                     std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(p) +
                     "," + std::to_string(q) + ")");
  return build_shape_nc(ring_shape({a1, a2}, {p, q}));
}

GenusBound hironaka_bound(int g, double tol) {
  if (g < 6)
    throw RangeError("hironaka_bound covers g = 6+3n, 7+3n, 8+3n (g >= 6); got g=" +
                     std::to_string(g));
  const int d = g + 1;
  const int a = g % 3 == 0 ? g - 2 : g;
  return {g, d, a, largest_real_root(lt_polynomial(d, a), tol)};
}

}  // namespace dilat
