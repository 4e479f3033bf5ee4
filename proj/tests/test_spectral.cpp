#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "dilat/charpoly.hpp"
#include "dilat/errors.hpp"
#include "dilat/families.hpp"
#include "dilat/fixtures.hpp"
#include "dilat/spectral.hpp"

using namespace dilat;

namespace {

// Largest real eigenvalue of the companion matrix, in doubles.
double companion_root(const IntPolynomial& p) {
  const int n = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coefficient_of_power(i).convert_to<double>();
  const Eigen::VectorXcd ev = c.eigenvalues();
  double best = -1e300;
  for (const auto& z : ev)
    if (std::abs(z.imag()) < 1e-4) best = std::max(best, z.real());
  return best;
}

double spectral_radius(const MultiDigraph& d) {
  const Eigen::MatrixXd t = d.adjacency().cast<double>();
  return t.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("closed forms and known values") {
  const auto phi = largest_real_root(parse_polynomial("x^2 - x - 1"), 1e-12);
  CHECK(phi.width() <= BigRational(1e-12));
  CHECK(phi.approx() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(phi.sign_lo == -1);
  CHECK(phi.sign_hi == 1);
  CHECK(largest_real_root(parse_polynomial("x^60 - x^31 - x^30 - x^29 + 1")).decimal(5) == "1.03262");
  CHECK(largest_real_root(parse_polynomial("x^60 - 4x^45 + 5x^30 - 4x^15 + 1")).decimal(5) == "1.06626");
  CHECK(largest_real_root(lt_polynomial(7, 6)).decimal(5) == "1.14879");
  // The polynomial written as the genus-11 bound, and the LT(12,11) root itself.
  CHECK(largest_real_root(parse_polynomial("x^22 - x^12 - x^11 - x^10 + 1")).decimal(5) == "1.09178");
  CHECK(largest_real_root(lt_polynomial(12, 11)).decimal(5) == "1.08377");
}

TEST_CASE("exact roots and degenerate inputs") {
  const auto r = largest_real_root(parse_polynomial("x^2 - 4"));
  CHECK(r.exact());
  CHECK(r.lo == 2);
  const auto one = largest_real_root(parse_polynomial("x^5 - 1"));
  CHECK(one.exact());
  CHECK(one.lo == 1);
  const auto dbl = largest_real_root(parse_polynomial("x^3 - 3x^2 + 3x - 1"));
  CHECK(dbl.lo == 1);
  const auto sq = largest_real_root(parse_polynomial("x^4 - 4x^2 + 4"), 1e-12);  // (x^2-2)^2
  CHECK(sq.approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));
  CHECK_THROWS_AS(largest_real_root(parse_polynomial("x^2 + 1")), NoRootAtLeastOne);
  CHECK_THROWS_AS(largest_real_root(parse_polynomial("x + 1")), NoRootAtLeastOne);
  CHECK_THROWS_AS(largest_real_root(parse_polynomial("x^2 - 2"), 0.0), RangeError);
}

TEST_CASE("roots agree with companion-matrix eigenvalues") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coeff(-3, 3);
  int checked = 0;
  for (int t = 0; t < 400; ++t) {
    std::vector<BigInt> c{1};
    const int n = 2 + static_cast<int>(rng() % 9);
    for (int i = 0; i < n; ++i) c.push_back(coeff(rng));
    const IntPolynomial p(c);
    const double expected = companion_root(p);
    CAPTURE(to_string(p));
    // Multiple roots split by up to ~eps^(1/k) in floating point.
    if (expected < 1 - 1e-4) {
      CHECK_THROWS_AS(largest_real_root(p), NoRootAtLeastOne);
      continue;
    }
    if (expected < 1 + 1e-4) continue;
    const auto r = largest_real_root(p, 1e-12);
    CHECK(r.approx() == doctest::Approx(expected).epsilon(1e-4));
    CHECK(count_roots_above(p, r.hi) == 0);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("Sturm counts") {
  const auto p = parse_polynomial("x^3 - 6x^2 + 11x - 6");  // 1, 2, 3
  CHECK(count_roots_above(p, BigRational(0)) == 3);
  CHECK(count_roots_above(p, BigRational(3, 2)) == 2);
  CHECK(count_roots_above(p, BigRational(2)) == 1);
  CHECK(count_roots_above(p, BigRational(3)) == 0);
  CHECK(count_roots_above(parse_polynomial("x^4 - 2x^2 + 1"), BigRational(0)) == 1);
}

TEST_CASE("Perron eigenvalue") {
  MultiDigraph loops(1);
  loops.add_edge(0, 0, 3);
  const auto three = pf_eigenvalue(loops);
  CHECK(three.lo == 3);
  CHECK(three.hi == 3);
  const auto f1 = pf_eigenvalue(figure1_digraph());
  const auto root = largest_real_root(char_poly_ct(figure1_digraph()));
  CHECK(abs(f1.midpoint() - root.midpoint()) <= BigRational(2e-10));
  MultiDigraph c4(4);
  for (int v = 0; v < 4; ++v) c4.add_edge(v, (v + 1) % 4);
  CHECK_THROWS_AS(pf_eigenvalue(c4), PreconditionViolation);

  std::mt19937_64 rng(33);
  for (int t = 0; t < 150; ++t) {
    const auto d = oracle::random_strongly_connected(rng, 8, 2);
    if (!is_primitive(d)) continue;
    const auto pf = pf_eigenvalue(d, 1e-12);
    CHECK(pf.width() <= BigRational(1e-12));
    CHECK(pf.approx() == doctest::Approx(spectral_radius(d)).epsilon(1e-9));
    const auto r = largest_real_root(char_poly_ct(d), 1e-12);
    CHECK(pf.lo <= r.hi);
    CHECK(r.lo <= pf.hi);
  }
}

TEST_CASE("Ham-Song inequality") {
  MultiDigraph two(1);
  two.add_edge(0, 0, 2);
  CHECK(ham_song_check(two));
  CHECK(ham_song_check(figure1_digraph()));
  for (int d = 2; d <= 15; ++d)
    for (int a = 1; a <= d - 1; ++a) {
      if (std::gcd(a, d) != 1) continue;
      // Cycles of lengths a and 2d-a, through-cycle of length p + q = d.
      for (int p = 1; p <= a && p < d; ++p) {
        const auto g = build_shape_22(a, 2 * d - a, p, d - p);
        REQUIRE(char_poly_ct(g) == lt_polynomial(d, a));
        CHECK(ham_song_check(g));
      }
    }
}

TEST_CASE("certified comparison") {
  RootResult a{BigRational(1), BigRational(2), 0, 0};
  RootResult b{BigRational(3), BigRational(4), 0, 0};
  RootResult c{BigRational(3, 2), BigRational(5, 2), 0, 0};
  CHECK(certified_compare(a, b) == -1);
  CHECK(certified_compare(b, a) == 1);
  CHECK_FALSE(certified_compare(a, c).has_value());
  RootResult e{BigRational(2), BigRational(2), 0, 0};
  CHECK(certified_compare(e, e) == 0);
}

TEST_CASE("adding an edge never lowers the spectral radius") {
  MultiDigraph c6(6);
  for (int v = 0; v < 6; ++v) c6.add_edge(v, (v + 1) % 6);
  const auto [before, after] = monotonicity_witness(c6, {0, 3});
  CHECK(before.lo == 1);
  CHECK(after.lo > 1);

  const auto [f1, f1_more] = monotonicity_witness(figure1_digraph(), {0, 1});
  CHECK(f1.hi < f1_more.lo);

  std::mt19937_64 rng(35);
  int done = 0;
  while (done < 200) {
    const auto d = oracle::random_strongly_connected(rng, 8, 2);
    if (!is_primitive(d)) continue;
    const int m = d.vertex_count();
    const std::pair<int, int> e{static_cast<int>(rng() % static_cast<unsigned>(m)),
                                static_cast<int>(rng() % static_cast<unsigned>(m))};
    const auto [x, y] = monotonicity_witness(d, e);
    CHECK(x.hi <= y.lo);
    ++done;
  }
}

TEST_CASE("p_n roots decrease towards 1") {
  BigRational previous(100);
  for (int n : {1, 10, 100, 1000}) {
    const IntPolynomial p = IntPolynomial::monomial(24) + IntPolynomial::monomial(20, n) -
                            IntPolynomial::monomial(19, n) - IntPolynomial::monomial(13) -
                            IntPolynomial::monomial(12) - IntPolynomial::monomial(11) -
                            IntPolynomial::monomial(5, n) + IntPolynomial::monomial(4, n) +
                            IntPolynomial::monomial(0);
    CHECK(classify_palindrome(p) == PalindromeClass::Palindromic);
    const auto r = largest_real_root(p);
    CHECK(r.lo > 1);
    CHECK(r.hi < previous);
    previous = r.lo;
  }
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(BigRational(1, 8), 2) == "0.13");
  CHECK(to_decimal(BigRational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(BigRational(2), 3) == "2.000");
  CHECK(to_decimal(BigRational(7, 3), 0) == "2");
}

}
