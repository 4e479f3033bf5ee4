#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dilat/types.hpp"

namespace dilat {

struct Edge {
  int from = 0;
  int to = 0;
  std::int64_t multiplicity = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Multi-digraph on m vertices, stored as its transition matrix T.
///
/// Vertices are 0-based here; file formats and CLI output are 1-based.
class MultiDigraph {
 public:
  explicit MultiDigraph(int vertex_count);
  explicit MultiDigraph(AdjacencyMatrix adjacency);
  MultiDigraph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.rows()); }
  std::int64_t multiplicity(int from, int to) const { return adj_(from, to); }
  const AdjacencyMatrix& adjacency() const { return adj_; }

  /// Sum of all entries of T.
  std::int64_t edge_count() const { return adj_.sum(); }
  std::int64_t trace() const { return adj_.trace(); }

  void add_edge(int from, int to, std::int64_t multiplicity = 1);
  MultiDigraph with_edge(int from, int to, std::int64_t multiplicity = 1) const;

  /// Edge list sorted by (from, to), one entry per nonzero multiplicity.
  std::vector<Edge> edges() const;
  /// Out-neighbours (distinct targets) of v in ascending order.
  std::vector<int> successors(int v) const;

  friend bool operator==(const MultiDigraph& a, const MultiDigraph& b) { return a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const;
  AdjacencyMatrix adj_;
};

/// Directed elementary cycle, listed from its smallest vertex.
struct Cycle {
  std::vector<int> vertices;
  /// Product of edge multiplicities along the cycle: the number of distinct
  /// edge-level cycles sharing this vertex sequence.
  BigInt multiplicity = 1;

  int length() const { return static_cast<int>(vertices.size()); }
  std::uint64_t vertex_mask() const;
};

/// Edge count minus vertex count ("sum of the entries in T minus m").
std::int64_t complexity(const MultiDigraph& d);

bool is_strongly_connected(const MultiDigraph& d);

/// gcd of all directed cycle lengths, computed from BFS levels of a strongly
/// connected digraph. Returns 0 when d is not strongly connected.
int period(const MultiDigraph& d);

/// Strongly connected with cycle-length gcd 1.
bool is_primitive(const MultiDigraph& d);

/// Primitivity via Wielandt's bound: T^k > 0 entrywise for k = (m-1)^2 + 1.
bool is_primitive_by_powers(const MultiDigraph& d);

/// Every elementary cycle exactly once up to rotation (Johnson's algorithm on
/// the support graph). Throws ResourceLimit past `cap` cycles.
std::vector<Cycle> enumerate_elementary_cycles(const MultiDigraph& d,
                                               std::size_t cap = 10'000'000);

/// Relabels vertex v as perm[v].
MultiDigraph permuted(const MultiDigraph& d, const std::vector<int>& perm);

constexpr int kCanonicalFormMaxVertices = 20;

/// Isomorphism-invariant byte string: equal iff the digraphs are isomorphic.
/// Colour refinement followed by individualization search. SizeError above 20
/// vertices.
std::string canonical_form(const MultiDigraph& d);

// ---- file formats (1-based vertex labels) --------------------------------

/// Parses the text format (`m` then `i j [k]` lines, '#' comments) or, when
/// the first significant character is '{', the JSON variant with fields
/// `vertices` and `edges`.
MultiDigraph parse_digraph(std::string_view text);
MultiDigraph read_digraph_file(const std::string& path);

/// Text format. Each header line is emitted as a "# ..." comment.
std::string format_digraph(const MultiDigraph& d, const std::vector<std::string>& header = {});
std::string format_digraph_json(const MultiDigraph& d);

}  // namespace dilat
