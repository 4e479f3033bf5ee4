#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dilat/digraph.hpp"
#include "dilat/polynomial.hpp"
#include "dilat/spectral.hpp"

namespace dilat {

/// One surviving characteristic polynomial with a representative digraph.
struct Survivor {
  IntPolynomial polynomial;
  MultiDigraph representative{1};
  std::string family;  // "LT(7,6)", "C4(30;15,15,15,15)", or "other"
  std::string shape;   // "(2,2)", ...
  int vertex_count = 0;
  std::int64_t complexity = 0;
  /// Number of enumerated classes sharing this polynomial.
  std::size_t classes = 1;
  std::optional<RootResult> lambda;
  std::string status;  // "below bound", "equals bound", "inconclusive", ...
  /// False when every enumerated realization is imprimitive.
  bool primitive = true;
};

/// Result of an exhaustive search. Every enumerated class is either counted
/// in surviving_classes or in exactly one eliminated bucket.
struct SearchReport {
  std::string name;
  std::map<std::string, std::string> parameters;
  std::size_t total = 0;
  std::size_t surviving_classes = 0;
  std::vector<Survivor> survivors;
  std::map<std::string, std::size_t> eliminated;
  /// Named histograms, e.g. tallies["p(1)"]["(1,1) = -1"].
  std::map<std::string, std::map<std::string, std::size_t>> tallies;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;

  std::size_t eliminated_total() const;
  bool balanced() const { return surviving_classes + eliminated_total() == total; }
};

std::string report_json(const SearchReport& report);
std::string report_table(const SearchReport& report);

struct SearchLimits {
  std::size_t max_candidates = 50'000'000;
};

/// Strongly connected multi-digraphs with m vertices and m + c edges, one per
/// isomorphism class, sorted by canonical form. Generated from ear
/// decompositions (a cycle plus c ears). m <= 14; ResourceLimit (with the
/// candidate estimate) beyond the limits.
std::vector<MultiDigraph> enumerate_digraphs(int m, int c, const SearchLimits& limits = {});

/// Number of ear sequences enumerate_digraphs(m, c) would examine.
std::size_t estimate_ear_candidates(int m, int c);

/// Every strongly connected digraph with m <= m_max and complexity <= 2,
/// classified by its spanning cycle covers and filtered; palindromic survivors
/// must be LT polynomials with 2d = m.
SearchReport verify_case_c_le_2(int m_max);

/// Ring shapes with n = c = 2k+1 cycles, m <= m_max: none palindromic, none
/// antipalindromic; tallies p(1).
SearchReport verify_case_odd_diagonal(int k, int m_max);

/// Calls visit(d) for every strongly connected (n,c)-shape digraph on m
/// vertices: n disjoint cycles covering all vertices plus c extra edges.
/// Duplicates across isomorphism are not removed.
void for_each_shape_digraph(int m, int n, int c, const std::function<void(const MultiDigraph&)>& visit,
                            const SearchLimits& limits = {});

/// Isomorphism classes of strongly connected (n,c)-shape digraphs with
/// characteristic polynomial p. degree(p) <= 14.
std::size_t count_realizations(const IntPolynomial& p, int n, int c, const SearchLimits& limits = {});

/// Dilatation threshold used by genus_candidates: hironaka_bound for g >= 6;
/// for g = 5 the root of LT(7,6), the smallest known genus-5 value.
RootResult genus_threshold(int g, IntPolynomial* threshold_polynomial = nullptr);

/// Palindromic characteristic polynomials of ring shapes (n = c <= c_max)
/// with m in [2g, min(m_max, 6g-6)] and certified lambda <= genus_threshold(g).
/// Imprimitive realizations are kept and flagged (Survivor::primitive).
/// Shapes with one extra edge, (n, n+1) with n+1 <= c_max, are swept for
/// m <= 14 only. `jobs` splits the m-window across threads.
SearchReport genus_candidates(int g, int c_max, int m_max, int jobs = 1);

/// Searches the 9-cycle with loops at 3 and 7 plus four further edges for the
/// digraph with polynomial x^9 - 2x^8 + x^7 - 4x^5 + 4x^4 - x^2 + 2x - 1 and a
/// 7-cycle on {1,2,3,9,6,7,4}. Throws FixtureNotFound if there is none.
MultiDigraph reconstruct_figure4(std::size_t* match_count = nullptr);

}  // namespace dilat
