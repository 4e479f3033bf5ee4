#include "dilat/search.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <numeric>
#include <set>
#include <string>
#include <functional>

#include "dilat/charpoly.hpp"
#include "dilat/errors.hpp"
#include "dilat/families.hpp"

namespace dilat {

std::size_t SearchReport::eliminated_total() const {
  std::size_t n = 0;
  for (const auto& [reason, count] : eliminated) n += count;
  return n;
}

namespace {

constexpr int kFullEnumerationMaxVertices = 14;

const char* const kNotPrimitive = "not primitive";
const char* const kSpectralRadiusOne = "single cycle (spectral radius 1)";
const char* const kPositiveB1 = "b1 > 0";
const char* const kNeither = "neither palindromic nor antipalindromic";
const char* const kAntipalindromic = "antipalindromic";
const char* const kAboveBound = "lambda above bound";

std::string key_of(const IntPolynomial& p) { return to_coefficient_list(p); }

// ---- ear-decomposition enumeration ------------------------------------------

double ear_count(int m, int n, int ears, bool first) {
  if (ears == 0) return n == m ? 1.0 : 0.0;
  double total = 0;
  for (int j = 0; j <= m - n; ++j)
    total += (first ? n : static_cast<double>(n) * n) * ear_count(m, n + j, ears - 1, false);
  return total;
}

class EarEnumerator {
 public:
  EarEnumerator(int m, int c) : m_(m), c_(c), adj_(AdjacencyMatrix::Zero(m, m)) {}

  std::vector<MultiDigraph> run() {
    for (int length = 1; length <= m_; ++length) {
      adj_.setZero();
      for (int v = 0; v < length; ++v) adj_(v, (v + 1) % length) += 1;
      extend(length, c_, true);
    }
    std::vector<MultiDigraph> out;
    out.reserve(classes_.size());
    for (auto& [form, d] : classes_) out.push_back(std::move(d));
    return out;
  }

 private:
  void extend(int n, int ears, bool first) {
    if (ears == 0) {
      if (n == m_) record();
      return;
    }
    const int j_min = ears == 1 ? m_ - n : 0;
    for (int j = j_min; j <= m_ - n; ++j) {
      for (int u = 0; u < (first ? 1 : n); ++u) {
        for (int v = 0; v < n; ++v) {
          add_ear(u, v, n, j, 1);
          extend(n + j, ears - 1, false);
          add_ear(u, v, n, j, -1);
        }
      }
    }
  }

  // Path u -> n -> n+1 -> ... -> n+j-1 -> v through j new vertices.
  void add_ear(int u, int v, int n, int j, int delta) {
    int prev = u;
    for (int k = 0; k < j; ++k) {
      adj_(prev, n + k) += delta;
      prev = n + k;
    }
    adj_(prev, v) += delta;
  }

  void record() {
    MultiDigraph d(adj_);
    auto form = canonical_form(d);
    classes_.try_emplace(std::move(form), std::move(d));
  }

  int m_;
  int c_;
  AdjacencyMatrix adj_;
  std::map<std::string, MultiDigraph> classes_;
};

// ---- shape bookkeeping --------------------------------------------------------

// Edges of d not on the cycles of `cover`, one entry per unit of multiplicity.
std::vector<Edge> extra_edges(const MultiDigraph& d, const LinearSubdigraph& cover) {
  AdjacencyMatrix rest = d.adjacency();
  for (const auto& cyc : cover.cycles)
    for (std::size_t i = 0; i < cyc.vertices.size(); ++i)
      rest(cyc.vertices[i], cyc.vertices[(i + 1) % cyc.vertices.size()]) -= 1;
  std::vector<Edge> out;
  for (int i = 0; i < d.vertex_count(); ++i)
    for (int j = 0; j < d.vertex_count(); ++j)
      for (std::int64_t k = 0; k < rest(i, j); ++k) out.push_back({i, j, 1});
  return out;
}

// For a spanning m-cycle plus chords: the cycle closed by chord s->t runs
// along the base cycle from t forward to s.
std::vector<bool> arc(const std::vector<int>& position, int m, int from, int to) {
  std::vector<bool> in(static_cast<std::size_t>(m), false);
  int p = position[static_cast<std::size_t>(from)];
  const int end = position[static_cast<std::size_t>(to)];
  for (;;) {
    in[static_cast<std::size_t>(p)] = true;
    if (p == end) break;
    p = (p + 1) % m;
  }
  return in;
}

bool disjoint(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// Bucket label of d relative to one spanning cover.
std::string shape_bucket(const MultiDigraph& d, const LinearSubdigraph& cover, std::int64_t c) {
  const int n = cover.cycle_count();
  std::string base = "(" + std::to_string(n) + "," + std::to_string(c) + ")";
  if (n != 1 || c != 2) return base;
  const int m = d.vertex_count();
  const auto& cyc = cover.cycles.front().vertices;
  std::vector<int> position(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < cyc.size(); ++i) position[static_cast<std::size_t>(cyc[i])] = static_cast<int>(i);
  const auto chords = extra_edges(d, cover);
  const auto& e1 = chords[0];
  const auto& e2 = chords[1];
  const bool case2 = disjoint(arc(position, m, e1.to, e1.from), arc(position, m, e2.to, e2.from));
  // A cycle using both chords runs t1..s2, e2, t2..s1, e1.
  const bool chord_pair_cycle =
      disjoint(arc(position, m, e1.to, e2.from), arc(position, m, e2.to, e1.from));
  std::string label = base + (case2 ? " case 2" : " case 1");
  if (chord_pair_cycle) label += " + chord-pair cycle";
  return label;
}

std::optional<std::pair<int, int>> lt_parameters(const IntPolynomial& p) {
  if (p.degree() % 2 != 0) return std::nullopt;
  const int d = p.degree() / 2;
  for (int a = 1; a <= d - 1; ++a)
    if (lt_polynomial(d, a) == p) return std::make_pair(d, a);
  return std::nullopt;
}

void add_survivor(std::map<std::string, Survivor>& by_poly, const IntPolynomial& p,
                  const MultiDigraph& d, const std::string& family, const std::string& shape) {
  auto key = key_of(p);
  auto it = by_poly.find(key);
  if (it != by_poly.end()) {
    ++it->second.classes;
    return;
  }
  Survivor s;
  s.polynomial = p;
  s.representative = d;
  s.family = family;
  s.shape = shape;
  s.vertex_count = d.vertex_count();
  s.complexity = complexity(d);
  by_poly.emplace(std::move(key), std::move(s));
}

std::vector<Survivor> sorted_survivors(std::map<std::string, Survivor>& by_poly) {
  std::vector<Survivor> out;
  for (auto& [k, s] : by_poly) out.push_back(std::move(s));
  std::stable_sort(out.begin(), out.end(), [](const Survivor& a, const Survivor& b) {
    if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
    return key_of(a.polynomial) < key_of(b.polynomial);
  });
  return out;
}

void compositions(int m, int parts, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (parts == 0) {
    if (m == 0) f(cur);
    return;
  }
  for (int a = 1; a <= m - (parts - 1); ++a) {
    cur.push_back(a);
    compositions(m - a, parts - 1, cur, f);
    cur.pop_back();
  }
}

void placements(const std::vector<int>& lengths, std::vector<int>& cur,
                const std::function<void(const std::vector<int>&)>& f) {
  if (cur.size() == lengths.size()) {
    f(cur);
    return;
  }
  for (int p = 1; p <= lengths[cur.size()]; ++p) {
    cur.push_back(p);
    placements(lengths, cur, f);
    cur.pop_back();
  }
}

// Nondecreasing partitions of m into exactly `parts` parts.
void partitions(int m, int parts, int min_part, std::vector<int>& cur,
                const std::function<void(const std::vector<int>&)>& f) {
  if (parts == 0) {
    if (m == 0) f(cur);
    return;
  }
  for (int a = min_part; a * parts <= m; ++a) {
    cur.push_back(a);
    partitions(m - a, parts - 1, a, cur, f);
    cur.pop_back();
  }
}

bool is_min_rotation(const std::vector<int>& v) {
  for (std::size_t r = 1; r < v.size(); ++r) {
    std::vector<int> rot(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
    rot.insert(rot.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
    if (rot < v) return false;
  }
  return true;
}

std::vector<int> greedy_placement(const std::vector<int>& lengths, int b) {
  std::vector<int> p(lengths.size(), 1);
  int rest = b - static_cast<int>(lengths.size());
  for (std::size_t k = 0; k < lengths.size() && rest > 0; ++k) {
    int add = std::min(rest, lengths[k] - 1);
    p[k] += add;
    rest -= add;
  }
  return p;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

// ---- enumerate_digraphs ---------------------------------------------------------

std::size_t estimate_ear_candidates(int m, int c) {
  if (m < 1 || c < 0) return 0;
  if (c == 0) return 1;
  double total = 0;
  for (int length = 1; length <= m; ++length) total += ear_count(m, length, c, true);
  return total > 1e18 ? static_cast<std::size_t>(1e18) : static_cast<std::size_t>(total);
}

std::vector<MultiDigraph> enumerate_digraphs(int m, int c, const SearchLimits& limits) {
  if (m < 1 || c < 0) throw RangeError("enumerate_digraphs needs m >= 1 and c >= 0");
  const auto estimate = estimate_ear_candidates(m, c);
  if (m > kFullEnumerationMaxVertices || estimate > limits.max_candidates)
    throw ResourceLimit("full enumeration for m=" + std::to_string(m) + ", c=" + std::to_string(c) +
                        " would examine ~" + std::to_string(estimate) +
                        " ear sequences (limits: m <= 14, " +
                        std::to_string(limits.max_candidates) + " candidates)");
  return EarEnumerator(m, c).run();
}

// ---- verify_case_c_le_2 ---------------------------------------------------------

SearchReport verify_case_c_le_2(int m_max) {
  if (m_max < 1 || m_max > kFullEnumerationMaxVertices)
    throw RangeError("verify c2 needs 1 <= max-m <= 14");
  SearchReport r;
  r.name = "complexity <= 2";
  r.parameters["max_m"] = std::to_string(m_max);
  r.parameters["c"] = "0..2";
  std::map<std::string, Survivor> survivors;

  for (int m = 1; m <= m_max; ++m) {
    for (int c = 0; c <= 2; ++c) {
      for (const auto& d : enumerate_digraphs(m, c)) {
        ++r.total;
        const IntPolynomial chi = char_poly_ct(d);
        const BigInt p1 = eval_at_one(chi);
        const auto covers = enumerate_linear_subdigraphs(d, m);
        if (chi.b(1) != -d.trace())
          r.counterexamples.push_back("b1 != -trace for " + format_digraph_json(d));
        if (abs(chi.b(m)) == 1 && covers.empty())
          r.counterexamples.push_back("|b_m| = 1 without spanning cover: " + format_digraph_json(d));
        std::set<std::string> buckets;
        for (const auto& cover : covers) {
          if (c >= 1 && cover.cycle_count() > c)
            r.counterexamples.push_back("spanning cover with n > c: " + format_digraph_json(d));
          buckets.insert(shape_bucket(d, cover, c));
        }
        if (covers.empty()) buckets.insert("no spanning cover (c=" + std::to_string(c) + ")");
        for (const auto& b : buckets) ++r.tallies["p(1) by shape"][b + ": p(1) = " + p1.str()];

        const auto cls = classify_palindrome(chi);
        ++r.tallies["class by complexity"]["c=" + std::to_string(c) + " " + to_string(cls)];
        if (cls == PalindromeClass::Palindromic) ++r.tallies["palindromic polynomials"][key_of(chi)];

        if (!is_primitive(d)) {
          ++r.eliminated[kNotPrimitive];
        } else if (c == 0) {
          ++r.eliminated[kSpectralRadiusOne];
        } else if (chi.b(1) > 0) {
          ++r.eliminated[kPositiveB1];
        } else if (cls == PalindromeClass::Neither) {
          ++r.eliminated[kNeither];
        } else if (cls == PalindromeClass::Antipalindromic) {
          ++r.eliminated[kAntipalindromic];
          r.counterexamples.push_back(
              (p1 != 0 ? "antipalindromic with p(1) != 0: " : "primitive antipalindromic with c <= 2: ") +
              to_string(chi));
        } else {
          ++r.surviving_classes;
          auto lt = lt_parameters(chi);
          if (c != 2 || !lt)
            r.counterexamples.push_back("palindromic survivor outside the LT family: " +
                                        to_string(chi) + " (c=" + std::to_string(c) + ")");
          std::string family =
              lt ? "LT(" + std::to_string(lt->first) + "," + std::to_string(lt->second) + ")" : "other";
          add_survivor(survivors, chi, d, family, *buckets.begin());
        }
      }
    }
  }
  r.survivors = sorted_survivors(survivors);

  // LT polynomials that never survive: their two-cycle realizations all have
  // cycle lengths a, 2d-a, d, which share gcd(a, d).
  for (int m = 2; m <= m_max; m += 2) {
    const int d = m / 2;
    for (int a = 1; a <= d - 1; ++a) {
      const auto p = lt_polynomial(d, a);
      const bool seen = std::any_of(r.survivors.begin(), r.survivors.end(),
                                    [&](const Survivor& s) { return s.polynomial == p; });
      if (!seen)
        r.notes.push_back("LT(" + std::to_string(d) + "," + std::to_string(a) + ") not a survivor" +
                          (std::gcd(a, d) > 1 ? " (only imprimitive realizations, gcd(a,d) = " +
                                                    std::to_string(std::gcd(a, d)) + ")"
                                              : ""));
    }
  }
  return r;
}

// ---- verify_case_odd_diagonal -----------------------------------------------

SearchReport verify_case_odd_diagonal(int k, int m_max) {
  const int n = 2 * k + 1;
  if (k < 0 || n > 5) throw RangeError("verify odd needs 0 <= k with 2k+1 <= 5");
  if (m_max < 1 || m_max > kFullEnumerationMaxVertices)
    throw RangeError("verify odd needs 1 <= max-m <= 14");
  SearchReport r;
  r.name = "ring shapes (" + std::to_string(n) + "," + std::to_string(n) + ")";
  r.parameters["k"] = std::to_string(k);
  r.parameters["n"] = std::to_string(n);
  r.parameters["max_m"] = std::to_string(m_max);
  std::map<std::string, Survivor> survivors;

  for (int m = n; m <= m_max; ++m) {
    std::map<std::string, MultiDigraph> classes;
    std::vector<int> cur;
    compositions(m, n, cur, [&](const std::vector<int>& lengths) {
      if (!is_min_rotation(lengths)) return;
      std::vector<int> place;
      placements(lengths, place, [&](const std::vector<int>& p) {
        MultiDigraph d = build_shape_nc(ring_shape(lengths, p));
        classes.try_emplace(canonical_form(d), std::move(d));
      });
    });
    for (const auto& [form, d] : classes) {
      ++r.total;
      const IntPolynomial chi = char_poly_ct(d);
      const BigInt p1 = eval_at_one(chi);
      const auto cls = classify_palindrome(chi);
      ++r.tallies["p(1)"]["p(1) = " + p1.str()];
      ++r.tallies["class"][to_string(cls)];
      if (cls == PalindromeClass::Palindromic)
        r.counterexamples.push_back("palindromic odd ring: " + to_string(chi));
      if (p1 == 0) r.counterexamples.push_back("odd ring with p(1) = 0: " + to_string(chi));

      if (!is_primitive(d)) {
        ++r.eliminated[kNotPrimitive];
      } else if (cls == PalindromeClass::Neither) {
        ++r.eliminated[kNeither];
      } else if (cls == PalindromeClass::Antipalindromic) {
        ++r.eliminated[kAntipalindromic];
      } else {
        ++r.surviving_classes;
        add_survivor(survivors, chi, d, "other", r.name);
      }
    }
  }
  r.survivors = sorted_survivors(survivors);
  return r;
}

// ---- count_realizations --------------------------------------------------------

void for_each_shape_digraph(int m, int n, int c, const std::function<void(const MultiDigraph&)>& visit,
                            const SearchLimits& limits) {
  if (m < 1 || n < 1 || n > m || c < 0) throw RangeError("shape (n,c) out of range for m vertices");
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(m, n, 1, cur, [&](const std::vector<int>& p) { parts.push_back(p); });
  // Multisets of c extra edges over m^2 ordered pairs.
  const double pairs = static_cast<double>(m) * m;
  double per_partition = 1;
  for (int i = 0; i < c; ++i) per_partition = per_partition * (pairs + i) / (i + 1);
  const double estimate = per_partition * static_cast<double>(parts.size());
  if (estimate > static_cast<double>(limits.max_candidates))
    throw ResourceLimit("(" + std::to_string(n) + "," + std::to_string(c) + ")-shapes on " +
                        std::to_string(m) + " vertices: ~" +
                        std::to_string(static_cast<long long>(estimate)) + " candidates");
  const int pair_count = m * m;
  for (const auto& lengths : parts) {
    AdjacencyMatrix adj = build_shape_nc(Shape{lengths, {}}).adjacency();
    std::function<void(int, int)> choose = [&](int from, int left) {
      if (left == 0) {
        MultiDigraph d(adj);
        if (is_strongly_connected(d)) visit(d);
        return;
      }
      for (int e = from; e < pair_count; ++e) {
        adj(e / m, e % m) += 1;
        choose(e, left - 1);
        adj(e / m, e % m) -= 1;
      }
    };
    choose(0, c);
  }
}

std::size_t count_realizations(const IntPolynomial& p, int n, int c, const SearchLimits& limits) {
  if (!p.is_monic()) throw PreconditionViolation("count_realizations needs a monic polynomial");
  const int m = p.degree();
  if (m < 1 || m > kFullEnumerationMaxVertices)
    throw RangeError("count_realizations needs 1 <= degree <= 14, got " + std::to_string(m));
  // b_1 = -trace(T) <= 0 for every non-negative T.
  if (p.b(1) > 0) return 0;
  const auto loops = static_cast<std::int64_t>(-p.b(1));
  std::set<std::string> classes;
  for_each_shape_digraph(m, n, c, [&](const MultiDigraph& d) {
    if (d.trace() != loops) return;
    const Matrix<std::int64_t>& t = d.adjacency();
    // Cheap exact screen, then the cycle-cover computation on the matches.
    const auto screen = berkowitz(t);
    for (int i = 0; i <= m; ++i)
      if (BigInt(screen[static_cast<std::size_t>(i)]) != p.b(i)) return;
    if (char_poly_ct(d) != p) return;
    classes.insert(canonical_form(d));
  }, limits);
  return classes.size();
}

// ---- genus_candidates ------------------------------------------------------------

RootResult genus_threshold(int g, IntPolynomial* threshold_polynomial) {
  if (g < 5) throw RangeError("genus search needs g >= 5, got " + std::to_string(g));
  if (g == 5) {
    if (threshold_polynomial) *threshold_polynomial = lt_polynomial(7, 6);
    return largest_real_root(lt_polynomial(7, 6), 1e-15);
  }
  auto b = hironaka_bound(g, 1e-15);
  if (threshold_polynomial) *threshold_polynomial = lt_polynomial(b.d, b.a);
  return b.bound;
}

namespace {

struct RingCandidate {
  std::vector<int> lengths;
  int through = 0;
  bool primitive = true;
};

struct GenusPartial {
  std::size_t total = 0;
  std::size_t surviving = 0;
  std::map<std::string, std::size_t> eliminated;
  std::map<std::string, std::size_t> shape_counts;
  std::map<std::string, Survivor> survivors;
  std::vector<std::string> counterexamples;
};

std::string ring_family(const IntPolynomial& p, const std::vector<int>& lengths) {
  if (lengths.size() == 2)
    if (auto lt = lt_parameters(p)) return "LT(" + std::to_string(lt->first) + "," + std::to_string(lt->second) + ")";
  if (lengths.size() == 4 && p.degree() % 2 == 0 &&
      std::all_of(lengths.begin(), lengths.end(), [](int a) { return a >= 2; })) {
    std::array<int, 4> a{lengths[0], lengths[1], lengths[2], lengths[3]};
    if (c4_polynomial(p.degree() / 2, a) == p)
      return "C4(" + std::to_string(p.degree() / 2) + ";" + join(lengths) + ")";
  }
  return "other";
}

// Decides lambda(p) <= threshold. Fills lambda when computed.
std::string compare_to_threshold(const IntPolynomial& p, const RootResult& threshold,
                                 const IntPolynomial& threshold_poly, std::optional<RootResult>& lambda) {
  lambda = largest_real_root(p, BigRational(1, 1'000'000'000'000LL));
  if (p == threshold_poly) return "equals bound";
  if (lambda->hi < threshold.lo) return "below bound";
  if (lambda->lo > threshold.hi) return "above bound";
  // Shared factor vanishing in the threshold bracket: the threshold is a root
  // of p, and it is the largest one when nothing of p lies above the bracket.
  const IntPolynomial common = polynomial_gcd(p, threshold_poly);
  if (common.degree() >= 1 && count_roots_above(threshold_poly, threshold.lo) == 1 &&
      count_roots_above(common, threshold.lo) == 1 &&
      count_roots_above(p, threshold.hi) == 0)
    return "equals bound";
  return "inconclusive";
}

void judge(GenusPartial& part, const IntPolynomial& p, const MultiDigraph& rep, bool primitive,
           const std::string& family, const std::string& shape, const RootResult& threshold,
           const IntPolynomial& threshold_poly) {
  // p(t) < 0 at t above the threshold means a root beyond it.
  if (p != threshold_poly && sign_at(p, threshold.hi) < 0) {
    ++part.eliminated[kAboveBound];
    return;
  }
  if (auto it = part.survivors.find(key_of(p)); it != part.survivors.end()) {
    ++it->second.classes;
    ++part.surviving;
    if (primitive && !it->second.primitive) {
      it->second.representative = rep;
      it->second.primitive = true;
    }
    return;
  }
  std::optional<RootResult> lambda;
  std::string status = compare_to_threshold(p, threshold, threshold_poly, lambda);
  if (status == "above bound") {
    ++part.eliminated[kAboveBound];
    return;
  }
  ++part.surviving;
  Survivor s;
  s.polynomial = p;
  s.representative = rep;
  s.family = family;
  s.shape = shape;
  s.vertex_count = rep.vertex_count();
  s.complexity = complexity(rep);
  s.lambda = lambda;
  s.status = status;
  s.primitive = primitive;
  part.survivors.emplace(key_of(p), std::move(s));
}

GenusPartial genus_rings_for_m(int m, int c_max, const RootResult& threshold,
                               const IntPolynomial& threshold_poly) {
  GenusPartial part;
  std::map<std::string, std::pair<IntPolynomial, RingCandidate>> palindromic;
  for (int n = 1; n <= c_max && n <= m; ++n) {
    std::vector<int> cur;
    partitions(m, n, 1, cur, [&](const std::vector<int>& lengths) {
      // prod_k (x^(a_k) - 1), ascending int64 coefficients (|c| <= 2^n).
      std::vector<std::int64_t> prod(static_cast<std::size_t>(m) + 1, 0);
      prod[0] = 1;
      int deg = 0;
      for (int a : lengths) {
        for (int k = deg; k >= 0; --k) {
          prod[static_cast<std::size_t>(k + a)] += prod[static_cast<std::size_t>(k)];
          prod[static_cast<std::size_t>(k)] = -prod[static_cast<std::size_t>(k)];
        }
        deg += a;
      }
      int g = 0;
      for (int a : lengths) g = std::gcd(g, a);
      const std::string shape = "(" + std::to_string(n) + "," + std::to_string(n) + ")";
      for (int b = n; b <= m; ++b) {
        ++part.total;
        ++part.shape_counts[shape];
        auto coeff = [&](int k) {
          return prod[static_cast<std::size_t>(k)] - (k == m - b ? 1 : 0);
        };
        bool pal = true, anti = true;
        for (int k = 0; k <= m; ++k) {
          if (coeff(k) != coeff(m - k)) pal = false;
          if (coeff(k) != -coeff(m - k)) anti = false;
        }
        if (anti) {
          ++part.eliminated[kAntipalindromic];
          continue;
        }
        if (!pal) {
          ++part.eliminated[kNeither];
          continue;
        }
        IntPolynomial p = ring_polynomial(lengths, b);
        palindromic.try_emplace(key_of(p) + "|" + join(lengths) + "|" + std::to_string(b), p,
                                RingCandidate{lengths, b, std::gcd(g, b) == 1});
      }
    });
  }
  for (const auto& [key, entry] : palindromic) {
    const auto& [p, cand] = entry;
    MultiDigraph rep = build_shape_nc(ring_shape(cand.lengths, greedy_placement(cand.lengths, cand.through)));
    if (char_poly_ct(rep) != p)
      part.counterexamples.push_back("ring formula disagrees with cycle-cover census for lengths " +
                                     join(cand.lengths) + ", through " + std::to_string(cand.through));
    const int n = static_cast<int>(cand.lengths.size());
    judge(part, p, rep, cand.primitive, ring_family(p, cand.lengths), "(" + std::to_string(n) + "," + std::to_string(n) + ")",
          threshold, threshold_poly);
  }
  return part;
}

// Ring shape on n cycles plus one arbitrary extra edge; m <= 14.
GenusPartial genus_ring_plus_edge(int m, int n, const RootResult& threshold,
                                  const IntPolynomial& threshold_poly) {
  GenusPartial part;
  std::map<std::string, MultiDigraph> classes;
  std::vector<int> cur;
  compositions(m, n, cur, [&](const std::vector<int>& lengths) {
    if (!is_min_rotation(lengths)) return;
    std::vector<int> place;
    placements(lengths, place, [&](const std::vector<int>& p) {
      const MultiDigraph ring = build_shape_nc(ring_shape(lengths, p));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          MultiDigraph d = ring.with_edge(i, j);
          // Screen with the exact integer determinant expansion; only
          // palindromic candidates are canonicalised and re-derived.
          const auto chi = berkowitz(d.adjacency());
          bool pal = true;
          for (int k = 0; k <= m; ++k)
            if (chi[static_cast<std::size_t>(k)] != chi[static_cast<std::size_t>(m - k)]) pal = false;
          ++part.total;
          if (!pal) {
            ++part.eliminated["not palindromic"];
            continue;
          }
          classes.try_emplace(canonical_form(d), std::move(d));
        }
    });
  });
  const std::string shape = "(" + std::to_string(n) + "," + std::to_string(n + 1) + ")";
  part.shape_counts[shape] = part.total;
  for (const auto& [form, d] : classes) {
    const IntPolynomial chi = char_poly_ct(d);
    judge(part, chi, d, is_primitive(d), "other", shape, threshold, threshold_poly);
  }
  // Totals above count (ring, edge) placements; palindromic duplicates
  // collapse to classes here.
  const std::size_t accounted = part.surviving + [&] {
    std::size_t s = 0;
    for (const auto& [k, v] : part.eliminated) s += v;
    return s;
  }();
  if (accounted < part.total) part.eliminated["isomorphic duplicate"] += part.total - accounted;
  return part;
}

}  // namespace

SearchReport genus_candidates(int g, int c_max, int m_max, int jobs) {
  if (g < 5) throw RangeError("genus_candidates needs g >= 5, got " + std::to_string(g));
  if (c_max < 1 || c_max > 5) throw RangeError("genus_candidates supports 1 <= max-c <= 5");
  const int lo_m = 2 * g;
  const int hi_m = std::min(m_max, 6 * g - 6);
  if (hi_m > 64) throw ResourceLimit("m window above 64 vertices");
  IntPolynomial threshold_poly;
  const RootResult threshold = genus_threshold(g, &threshold_poly);

  SearchReport r;
  r.name = "genus " + std::to_string(g) + " candidates";
  r.parameters["genus"] = std::to_string(g);
  r.parameters["max_c"] = std::to_string(c_max);
  r.parameters["m_window"] = std::to_string(lo_m) + ".." + std::to_string(hi_m);
  r.parameters["threshold"] = threshold.decimal(10);
  r.parameters["threshold_polynomial"] = to_string(threshold_poly);
  if (g == 5) r.notes.push_back("genus 5 threshold: largest root of LT(7,6)");

  struct Task {
    int m;
    int n;  // 0 = rings (n = c <= c_max); otherwise ring + one edge on n cycles
  };
  std::vector<Task> tasks;
  for (int m = lo_m; m <= hi_m; ++m) tasks.push_back({m, 0});
  for (int n = 1; n + 1 <= c_max; ++n)
    for (int m = lo_m; m <= std::min(hi_m, kFullEnumerationMaxVertices); ++m) tasks.push_back({m, n});
  if (c_max >= 2 && lo_m > kFullEnumerationMaxVertices)
    r.notes.push_back("(n,n+1) ring-plus-edge sweeps need m <= 14; window starts at " +
                      std::to_string(lo_m) + ", so only ring shapes n = c were searched");

  auto run = [&](const Task& t) {
    return t.n == 0 ? genus_rings_for_m(t.m, c_max, threshold, threshold_poly)
                    : genus_ring_plus_edge(t.m, t.n, threshold, threshold_poly);
  };
  std::vector<GenusPartial> results(tasks.size());
  const int workers = std::max(1, jobs);
  for (std::size_t start = 0; start < tasks.size(); start += static_cast<std::size_t>(workers)) {
    std::vector<std::future<GenusPartial>> batch;
    for (std::size_t i = start; i < std::min(tasks.size(), start + static_cast<std::size_t>(workers)); ++i)
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, run, tasks[i]));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }

  std::map<std::string, Survivor> merged;
  for (auto& part : results) {
    r.total += part.total;
    r.surviving_classes += part.surviving;
    for (const auto& [k, v] : part.eliminated) r.eliminated[k] += v;
    for (const auto& [k, v] : part.shape_counts) r.tallies["candidates by shape"][k] += v;
    for (auto& c : part.counterexamples) r.counterexamples.push_back(std::move(c));
    for (auto& [key, s] : part.survivors) {
      auto it = merged.find(key);
      if (it == merged.end()) merged.emplace(key, std::move(s));
      else it->second.classes += s.classes;
    }
  }
  r.survivors = sorted_survivors(merged);
  for (const auto& s : r.survivors) {
    ++r.tallies["survivors by family"][s.family.substr(0, s.family.find('('))];
    ++r.tallies["survivors by m - 2g"][std::to_string(s.vertex_count - 2 * g)];
    if (!s.primitive) ++r.tallies["survivors by family"]["imprimitive realization only"];
    if (s.status == "inconclusive") r.notes.push_back("inconclusive: " + to_string(s.polynomial));
  }
  return r;
}

// ---- reconstruct_figure4 ------------------------------------------------------

namespace {

bool has_cycle_on(const MultiDigraph& d, const std::vector<int>& vertex_set) {
  std::vector<int> order(vertex_set.begin() + 1, vertex_set.end());
  std::sort(order.begin(), order.end());
  do {
    int prev = vertex_set.front();
    bool ok = true;
    for (int v : order) {
      if (d.multiplicity(prev, v) == 0) {
        ok = false;
        break;
      }
      prev = v;
    }
    if (ok && d.multiplicity(prev, vertex_set.front()) > 0) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

MultiDigraph reconstruct_figure4(std::size_t* match_count) {
  const IntPolynomial target = parse_polynomial("x^9 - 2x^8 + x^7 - 4x^5 + 4x^4 - x^2 + 2x - 1");
  const std::vector<int> seven = {0, 1, 2, 8, 5, 6, 3};  // {1,2,3,9,6,7,4}, 0-based
  MultiDigraph base(9);
  for (int v = 0; v < 9; ++v) base.add_edge(v, (v + 1) % 9);
  base.add_edge(2, 2);
  base.add_edge(6, 6);

  std::optional<MultiDigraph> first;
  std::size_t matches = 0;
  constexpr int kPairs = 81;
  for (int e1 = 0; e1 < kPairs; ++e1)
    for (int e2 = e1; e2 < kPairs; ++e2)
      for (int e3 = e2; e3 < kPairs; ++e3)
        for (int e4 = e3; e4 < kPairs; ++e4) {
          MultiDigraph d = base;
          for (int e : {e1, e2, e3, e4}) d.add_edge(e / 9, e % 9);
          if (!has_cycle_on(d, seven)) continue;
          if (char_poly_ct(d) != target) continue;
          ++matches;
          if (!first) first = d;
        }
  if (match_count) *match_count = matches;
  if (!first)
    throw FixtureNotFound("no 9-cycle + loops(3,7) + 4 edges digraph matches the polynomial and 7-cycle");
  return *first;
}

}  // namespace dilat
