#include "dilat/digraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "dilat/errors.hpp"

namespace dilat {

MultiDigraph::MultiDigraph(int vertex_count) {
  if (vertex_count < 1)
    throw RangeError("digraph needs at least one vertex, got " + std::to_string(vertex_count));
  adj_ = AdjacencyMatrix::Zero(vertex_count, vertex_count);
}

MultiDigraph::MultiDigraph(AdjacencyMatrix adjacency) : adj_(std::move(adjacency)) {
  if (adj_.rows() < 1 || adj_.rows() != adj_.cols())
    throw RangeError("transition matrix must be square and non-empty");
  if ((adj_.array() < 0).any()) throw RangeError("edge multiplicities must be non-negative");
}

MultiDigraph::MultiDigraph(int vertex_count, const std::vector<Edge>& edges)
    : MultiDigraph(vertex_count) {
  for (const auto& e : edges) add_edge(e.from, e.to, e.multiplicity);
}

void MultiDigraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw RangeError("vertex " + std::to_string(v + 1) + " out of range 1.." +
                     std::to_string(vertex_count()));
}

void MultiDigraph::add_edge(int from, int to, std::int64_t multiplicity) {
  check_vertex(from);
  check_vertex(to);
  if (multiplicity < 0 || adj_(from, to) + multiplicity < 0)
    throw RangeError("edge multiplicities must be non-negative");
  adj_(from, to) += multiplicity;
}

MultiDigraph MultiDigraph::with_edge(int from, int to, std::int64_t multiplicity) const {
  MultiDigraph copy = *this;
  copy.add_edge(from, to, multiplicity);
  return copy;
}

std::vector<Edge> MultiDigraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < vertex_count(); ++i)
    for (int j = 0; j < vertex_count(); ++j)
      if (adj_(i, j) > 0) out.push_back({i, j, adj_(i, j)});
  return out;
}

std::vector<int> MultiDigraph::successors(int v) const {
  std::vector<int> out;
  for (int j = 0; j < vertex_count(); ++j)
    if (adj_(v, j) > 0) out.push_back(j);
  return out;
}

std::uint64_t Cycle::vertex_mask() const {
  std::uint64_t mask = 0;
  for (int v : vertices) mask |= std::uint64_t{1} << v;
  return mask;
}

std::int64_t complexity(const MultiDigraph& d) { return d.edge_count() - d.vertex_count(); }

namespace {

std::vector<int> reach(const AdjacencyMatrix& a, int start, bool forward) {
  const int m = static_cast<int>(a.rows());
  std::vector<int> level(static_cast<std::size_t>(m), -1);
  std::queue<int> q;
  level[static_cast<std::size_t>(start)] = 0;
  q.push(start);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w = 0; w < m; ++w) {
      auto k = forward ? a(v, w) : a(w, v);
      if (k > 0 && level[static_cast<std::size_t>(w)] < 0) {
        level[static_cast<std::size_t>(w)] = level[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return level;
}

}  // namespace

bool is_strongly_connected(const MultiDigraph& d) {
  auto fwd = reach(d.adjacency(), 0, true);
  auto bwd = reach(d.adjacency(), 0, false);
  return std::none_of(fwd.begin(), fwd.end(), [](int l) { return l < 0; }) &&
         std::none_of(bwd.begin(), bwd.end(), [](int l) { return l < 0; });
}

int period(const MultiDigraph& d) {
  if (!is_strongly_connected(d)) return 0;
  // For a strongly connected digraph the gcd of level[u] + 1 - level[v] over all
  // edges equals the gcd of the cycle lengths.
  auto level = reach(d.adjacency(), 0, true);
  int g = 0;
  for (const auto& e : d.edges())
    g = std::gcd(g, std::abs(level[static_cast<std::size_t>(e.from)] + 1 -
                             level[static_cast<std::size_t>(e.to)]));
  return g;
}

bool is_primitive(const MultiDigraph& d) { return period(d) == 1; }

bool is_primitive_by_powers(const MultiDigraph& d) {
  const int m = d.vertex_count();
  Matrix<int> support = (d.adjacency().array() > 0).cast<int>();
  long exponent = static_cast<long>(m - 1) * (m - 1) + 1;
  Matrix<int> result = Matrix<int>::Identity(m, m);
  Matrix<int> base = support;
  while (exponent > 0) {
    if (exponent & 1) result = (result * base).cwiseMin(1);
    base = (base * base).cwiseMin(1);
    exponent >>= 1;
  }
  return (result.array() > 0).all();
}

namespace {

class JohnsonCircuits {
 public:
  JohnsonCircuits(const MultiDigraph& d, std::size_t cap)
      : d_(d), cap_(cap), m_(d.vertex_count()) {
    succ_.resize(static_cast<std::size_t>(m_));
    for (int v = 0; v < m_; ++v) succ_[static_cast<std::size_t>(v)] = d.successors(v);
  }

  std::vector<Cycle> run() {
    blocked_.assign(static_cast<std::size_t>(m_), false);
    blist_.assign(static_cast<std::size_t>(m_), {});
    for (start_ = 0; start_ < m_; ++start_) {
      for (int v = start_; v < m_; ++v) {
        blocked_[static_cast<std::size_t>(v)] = false;
        blist_[static_cast<std::size_t>(v)].clear();
      }
      circuit(start_);
    }
    return std::move(out_);
  }

 private:
  bool circuit(int v) {
    bool found = false;
    stack_.push_back(v);
    blocked_[static_cast<std::size_t>(v)] = true;
    for (int w : succ_[static_cast<std::size_t>(v)]) {
      if (w < start_) continue;
      if (w == start_) {
        emit();
        found = true;
      } else if (!blocked_[static_cast<std::size_t>(w)] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (int w : succ_[static_cast<std::size_t>(v)]) {
        if (w < start_) continue;
        auto& b = blist_[static_cast<std::size_t>(w)];
        if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
      }
    }
    stack_.pop_back();
    return found;
  }

  void unblock(int u) {
    blocked_[static_cast<std::size_t>(u)] = false;
    auto pending = std::move(blist_[static_cast<std::size_t>(u)]);
    blist_[static_cast<std::size_t>(u)].clear();
    for (int w : pending)
      if (blocked_[static_cast<std::size_t>(w)]) unblock(w);
  }

  void emit() {
    if (out_.size() >= cap_)
      throw ResourceLimit("elementary cycle count exceeds cap " + std::to_string(cap_));
    Cycle c;
    c.vertices = stack_;
    for (std::size_t i = 0; i < stack_.size(); ++i)
      c.multiplicity *= d_.multiplicity(stack_[i], stack_[(i + 1) % stack_.size()]);
    out_.push_back(std::move(c));
  }

  const MultiDigraph& d_;
  std::size_t cap_;
  int m_;
  int start_ = 0;
  std::vector<std::vector<int>> succ_;
  std::vector<bool> blocked_;
  std::vector<std::vector<int>> blist_;
  std::vector<int> stack_;
  std::vector<Cycle> out_;
};

}  // namespace

std::vector<Cycle> enumerate_elementary_cycles(const MultiDigraph& d, std::size_t cap) {
  return JohnsonCircuits(d, cap).run();
}

MultiDigraph permuted(const MultiDigraph& d, const std::vector<int>& perm) {
  const int m = d.vertex_count();
  if (static_cast<int>(perm.size()) != m) throw RangeError("permutation size mismatch");
  AdjacencyMatrix out = AdjacencyMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = d.multiplicity(i, j);
  return MultiDigraph(std::move(out));
}

namespace {

class CanonicalLabeler {
 public:
  explicit CanonicalLabeler(const MultiDigraph& d) : m_(d.vertex_count()), a_(d.adjacency()) {}

  std::string run() {
    std::vector<int> colors(static_cast<std::size_t>(m_), 0);
    refine(colors);
    search(colors);
    return best_;
  }

 private:
  // Colour refinement: a vertex's new colour is the rank of (old colour,
  // multiset of (out-neighbour colour, multiplicity), same for in-neighbours).
  void refine(std::vector<int>& colors) const {
    int classes = count_classes(colors);
    for (;;) {
      std::vector<std::vector<std::int64_t>> sig(static_cast<std::size_t>(m_));
      for (int v = 0; v < m_; ++v) {
        std::vector<std::pair<int, std::int64_t>> out, in;
        for (int w = 0; w < m_; ++w) {
          if (a_(v, w) > 0) out.emplace_back(colors[static_cast<std::size_t>(w)], a_(v, w));
          if (a_(w, v) > 0) in.emplace_back(colors[static_cast<std::size_t>(w)], a_(w, v));
        }
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        auto& s = sig[static_cast<std::size_t>(v)];
        s.push_back(colors[static_cast<std::size_t>(v)]);
        s.push_back(static_cast<std::int64_t>(out.size()));
        for (auto [c, k] : out) {
          s.push_back(c);
          s.push_back(k);
        }
        for (auto [c, k] : in) {
          s.push_back(c);
          s.push_back(k);
        }
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int v = 0; v < m_; ++v)
        colors[static_cast<std::size_t>(v)] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) -
            sorted.begin());
      int next = static_cast<int>(sorted.size());
      if (next == classes) return;
      classes = next;
    }
  }

  static int count_classes(const std::vector<int>& colors) {
    auto c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(const std::vector<int>& colors) {
    std::vector<int> count(static_cast<std::size_t>(m_), 0);
    for (int c : colors) ++count[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < m_; ++c)
      if (count[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (int v = 0; v < m_; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      std::vector<int> next(static_cast<std::size_t>(m_));
      for (int w = 0; w < m_; ++w) {
        int c = colors[static_cast<std::size_t>(w)];
        next[static_cast<std::size_t>(w)] = 2 * c + ((c == target && w != v) ? 1 : 0);
      }
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& position) {
    std::vector<int> at(static_cast<std::size_t>(m_));
    for (int v = 0; v < m_; ++v) at[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])] = v;
    std::string cert;
    cert.reserve(static_cast<std::size_t>(1 + 8 * m_ * m_));
    cert.push_back(static_cast<char>(m_));
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        auto k = static_cast<std::uint64_t>(a_(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(j)]));
        for (int b = 7; b >= 0; --b) cert.push_back(static_cast<char>((k >> (8 * b)) & 0xff));
      }
    if (best_.empty() || cert < best_) best_ = std::move(cert);
  }

  int m_;
  const AdjacencyMatrix& a_;
  std::string best_;
};

}  // namespace

std::string canonical_form(const MultiDigraph& d) {
  if (d.vertex_count() > kCanonicalFormMaxVertices)
    throw SizeError("canonical_form supports at most " +
                    std::to_string(kCanonicalFormMaxVertices) + " vertices, got " +
                    std::to_string(d.vertex_count()));
  return CanonicalLabeler(d).run();
}

}  // namespace dilat
