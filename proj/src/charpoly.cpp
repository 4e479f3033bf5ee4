#include "dilat/charpoly.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "dilat/errors.hpp"

namespace dilat {

int LinearSubdigraph::vertex_count() const {
  int n = 0;
  for (const auto& c : cycles) n += c.length();
  return n;
}

BigInt LinearSubdigraph::signed_weight() const {
  BigInt w = cycle_count() % 2 == 0 ? 1 : -1;
  for (const auto& c : cycles) w *= c.multiplicity;
  return w;
}

namespace {

struct IndexedCycle {
  std::uint64_t mask;
  int length;
  std::size_t index;
};

// Cycles bucketed by their smallest vertex. A linear subdigraph is built by
// walking vertices upward: the lowest undecided vertex is either left
// uncovered or covered by a cycle whose minimum it is.
class CycleCover {
 public:
  CycleCover(const MultiDigraph& d, const EnumerationLimits& limits)
      : m_(d.vertex_count()), limits_(limits) {
    if (m_ > limits.max_vertices || m_ > 64)
      throw SizeError("cycle-cover computations support at most " +
                      std::to_string(std::min(limits.max_vertices, 64)) + " vertices, got " +
                      std::to_string(m_));
    cycles_ = enumerate_elementary_cycles(d, limits.max_cycles);
    by_min_.resize(static_cast<std::size_t>(m_));
    for (std::size_t k = 0; k < cycles_.size(); ++k) {
      const auto& c = cycles_[k];
      by_min_[static_cast<std::size_t>(c.vertices.front())].push_back(
          {c.vertex_mask(), c.length(), k});
    }
  }

  std::uint64_t full_mask() const {
    return m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
  }

  // Signed weighted count of linear subdigraphs inside `free`, indexed by the
  // number of vertices they cover.
  const std::vector<BigInt>& census(std::uint64_t free) {
    if (auto it = memo_.find(free); it != memo_.end()) return it->second;
    std::vector<BigInt> result(static_cast<std::size_t>(m_) + 1, BigInt(0));
    if (free == 0) {
      result[0] = 1;
    } else {
      const int v = std::countr_zero(free);
      const std::uint64_t without_v = free & ~(std::uint64_t{1} << v);
      result = census(without_v);
      for (const auto& c : by_min_[static_cast<std::size_t>(v)]) {
        if ((c.mask & ~free) != 0) continue;
        const auto& rest = census(free & ~c.mask);
        const BigInt& w = cycles_[c.index].multiplicity;
        for (std::size_t k = 0; k + static_cast<std::size_t>(c.length) < result.size(); ++k)
          if (rest[k] != 0) result[k + static_cast<std::size_t>(c.length)] -= w * rest[k];
      }
    }
    if (memo_.size() >= limits_.max_states)
      throw ResourceLimit("linear subdigraph census exceeds " +
                          std::to_string(limits_.max_states) + " states");
    return memo_.emplace(free, std::move(result)).first->second;
  }

  void list(std::uint64_t free, int covered, int target, std::vector<std::size_t>& chosen,
            std::vector<LinearSubdigraph>& out) const {
    if (covered > target || covered + std::popcount(free) < target) return;
    if (free == 0) {
      if (covered != target) return;
      if (out.size() >= limits_.max_states)
        throw ResourceLimit("linear subdigraph count exceeds " +
                            std::to_string(limits_.max_states));
      LinearSubdigraph l;
      for (auto k : chosen) l.cycles.push_back(cycles_[k]);
      out.push_back(std::move(l));
      return;
    }
    const int v = std::countr_zero(free);
    list(free & ~(std::uint64_t{1} << v), covered, target, chosen, out);
    for (const auto& c : by_min_[static_cast<std::size_t>(v)]) {
      if ((c.mask & ~free) != 0) continue;
      chosen.push_back(c.index);
      list(free & ~c.mask, covered + c.length, target, chosen, out);
      chosen.pop_back();
    }
  }

 private:
  int m_;
  EnumerationLimits limits_;
  std::vector<Cycle> cycles_;
  std::vector<std::vector<IndexedCycle>> by_min_;
  std::unordered_map<std::uint64_t, std::vector<BigInt>> memo_;
};

}  // namespace

IntPolynomial char_poly_ct(const MultiDigraph& d, const EnumerationLimits& limits) {
  CycleCover cover(d, limits);
  auto b = cover.census(cover.full_mask());
  // census()[0] is the empty subdigraph, i.e. the leading coefficient 1.
  return IntPolynomial(std::move(b));
}

std::vector<LinearSubdigraph> enumerate_linear_subdigraphs(const MultiDigraph& d, int i,
                                                           const EnumerationLimits& limits) {
  if (i < 0 || i > d.vertex_count())
    throw RangeError("linear subdigraph size " + std::to_string(i) + " outside 0.." +
                     std::to_string(d.vertex_count()));
  CycleCover cover(d, limits);
  std::vector<LinearSubdigraph> out;
  std::vector<std::size_t> chosen;
  cover.list(cover.full_mask(), 0, i, chosen, out);
  return out;
}

IntPolynomial char_poly_oracle(const MultiDigraph& d) {
  if (d.vertex_count() > 200)
    throw SizeError("char_poly_oracle supports at most 200 vertices, got " +
                    std::to_string(d.vertex_count()));
  const Matrix<BigInt> t = d.adjacency().cast<BigInt>();
  return IntPolynomial(berkowitz(t));
}

}  // namespace dilat
