#include <set>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "dilat/charpoly.hpp"
#include "dilat/errors.hpp"
#include "dilat/families.hpp"
#include "dilat/fixtures.hpp"
#include "dilat/search.hpp"

using namespace dilat;

namespace {

std::size_t tally(const SearchReport& r, const std::string& name, const std::string& key) {
  auto it = r.tallies.find(name);
  if (it == r.tallies.end()) return 0;
  auto jt = it->second.find(key);
  return jt == it->second.end() ? 0 : jt->second;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("enumeration matches exhaustive matrix search") {
  CHECK(enumerate_digraphs(3, 0).size() == 1);
  for (auto [m, c] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}) {
    std::set<std::vector<std::int64_t>> got;
    for (const auto& d : enumerate_digraphs(m, c)) {
      CHECK(d.vertex_count() == m);
      CHECK(complexity(d) == c);
      CHECK(oracle::strongly_connected(d));
      got.insert(oracle::brute_canonical(d));
    }
    CAPTURE(m);
    CAPTURE(c);
    CHECK(got.size() == enumerate_digraphs(m, c).size());
    CHECK(got == oracle::brute_classes(m, c));
  }
}

TEST_CASE("two vertices, one extra edge") {
  const auto classes = enumerate_digraphs(2, 1);
  CHECK(classes.size() == 2);
  MultiDigraph loop(2);
  loop.add_edge(0, 1);
  loop.add_edge(1, 0);
  loop.add_edge(0, 0);
  MultiDigraph doubled(2);
  doubled.add_edge(0, 1, 2);
  doubled.add_edge(1, 0);
  std::set<std::string> forms;
  for (const auto& d : classes) forms.insert(canonical_form(d));
  CHECK(forms.count(canonical_form(loop)) == 1);
  CHECK(forms.count(canonical_form(doubled)) == 1);
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_digraphs(15, 1), ResourceLimit);
  SearchLimits tiny;
  tiny.max_candidates = 10;
  CHECK_THROWS_AS(enumerate_digraphs(6, 2, tiny), ResourceLimit);
  CHECK(estimate_ear_candidates(5, 0) == 1);
}

TEST_CASE("complexity <= 2 up to 9 vertices") {
  const auto r = verify_case_c_le_2(9);
  CHECK(r.balanced());
  CHECK(r.counterexamples.empty());
  std::size_t one_one = 0;
  for (const auto& [key, count] : r.tallies.at("p(1) by shape")) {
    if (key.rfind("(1,1):", 0) == 0) {
      CHECK(key == "(1,1): p(1) = -1");
      one_one += count;
    }
    if (key.rfind("(1,2) case 1:", 0) == 0) CHECK(key == "(1,2) case 1: p(1) = -2");
    if (key.rfind("(1,2) case 2", 0) == 0) CHECK(key == "(1,2) case 2: p(1) = -1");
    if (key.rfind("(1,2) case 1 + chord-pair", 0) == 0) CHECK(key == "(1,2) case 1 + chord-pair cycle: p(1) = -3");
    if (key.rfind("(2,2)", 0) == 0) CHECK(key == "(2,2): p(1) = -1");
  }
  CHECK(one_one > 0);
  for (const auto& s : r.survivors) {
    CHECK(s.vertex_count % 2 == 0);
    const int d = s.vertex_count / 2;
    bool is_lt = false;
    for (int a = 1; a < d; ++a) is_lt = is_lt || s.polynomial == lt_polynomial(d, a);
    CHECK(is_lt);
    CHECK(s.complexity == 2);
  }
  CHECK(r.survivors.size() == 5);
  CHECK_THROWS_AS(verify_case_c_le_2(15), RangeError);
}

TEST_CASE("odd diagonal rings") {
  const auto r0 = verify_case_odd_diagonal(0, 10);
  CHECK(r0.balanced());
  CHECK(tally(r0, "p(1)", "p(1) = -1") == r0.total);
  const auto r1 = verify_case_odd_diagonal(1, 12);
  CHECK(r1.balanced());
  CHECK(r1.counterexamples.empty());
  CHECK(tally(r1, "class", "palindromic") == 0);
  CHECK(tally(r1, "class", "antipalindromic") == 0);
  CHECK(r1.surviving_classes == 0);
  CHECK_THROWS_AS(verify_case_odd_diagonal(3, 10), RangeError);
}

TEST_CASE("realization counts") {
  CHECK(count_realizations(lt_polynomial(7, 6), 2, 2) == 6);
  CHECK(count_realizations(lt_polynomial(7, 1), 2, 2) >= 1);
  CHECK(count_realizations(parse_polynomial("x^14 + x^13 + 1"), 2, 2) == 0);
  CHECK_THROWS_AS(count_realizations(lt_polynomial(8, 1), 2, 2), RangeError);
  // Cross-check the small case by brute force over all (2,2) shapes on 6 vertices.
  const auto target = lt_polynomial(3, 1);
  std::set<std::vector<std::int64_t>> classes;
  for_each_shape_digraph(6, 2, 2, [&](const MultiDigraph& d) {
    if (oracle::leibniz_charpoly(d) == target) classes.insert(oracle::brute_canonical(d));
  });
  CHECK(count_realizations(target, 2, 2) == classes.size());
}

TEST_CASE("genus candidates") {
  const auto g5 = genus_candidates(5, 2, 24);
  CHECK(g5.balanced());
  bool lt76 = false;
  for (const auto& s : g5.survivors)
    if (s.polynomial == lt_polynomial(7, 6)) {
      lt76 = true;
      CHECK(s.status == "equals bound");
    }
  CHECK(lt76);

  const auto g11 = genus_candidates(11, 4, 60);
  CHECK(g11.balanced());
  CHECK(g11.counterexamples.empty());
  bool c4 = false, lt = false;
  for (const auto& s : g11.survivors) {
    if (s.polynomial == c4_polynomial(30, {15, 15, 15, 15})) {
      c4 = true;
      CHECK(s.lambda->decimal(5) == "1.06626");
      CHECK(s.status == "below bound");
    }
    if (s.polynomial == lt_polynomial(12, 11)) {
      lt = true;
      CHECK(s.status == "equals bound");
    }
    CHECK(s.status != "above bound");
  }
  CHECK(c4);
  CHECK(lt);
  CHECK_THROWS_AS(genus_candidates(4, 2, 10), RangeError);
}

TEST_CASE("parallel search is deterministic") {
  const auto a = genus_candidates(6, 3, 20, 1);
  const auto b = genus_candidates(6, 3, 20, 3);
  CHECK(report_json(a) == report_json(b));
}

TEST_CASE("reports") {
  const auto r = verify_case_odd_diagonal(1, 8);
  const auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["total"] == r.total);
  CHECK(j["balanced"] == true);
  CHECK(report_table(r).find("candidates: " + std::to_string(r.total)) != std::string::npos);
}

TEST_CASE("figure 4 reconstruction") {
  std::size_t matches = 0;
  const auto d = reconstruct_figure4(&matches);
  CHECK(matches >= 1);
  CHECK(d == figure4_digraph());
  const auto chi = char_poly_ct(d);
  CHECK(classify_palindrome(chi) == PalindromeClass::Antipalindromic);
  CHECK(eval_at_one(chi) == 0);
}

}
