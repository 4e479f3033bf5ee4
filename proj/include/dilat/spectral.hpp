#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dilat/digraph.hpp"
#include "dilat/polynomial.hpp"
#include "dilat/types.hpp"

namespace dilat {

inline constexpr double kDefaultTolerance = 1e-10;

/// Certified bracket [lo, hi] around a largest real root.
///
/// For roots of polynomials, no real root lies in (hi, inf) and the
/// squarefree part changes sign (or vanishes) across the bracket;
/// sign_lo / sign_hi record its signs at the endpoints. For Perron eigenvalues
/// the bracket is a pair of Collatz–Wielandt bounds and the signs are 0.
struct RootResult {
  BigRational lo;
  BigRational hi;
  int sign_lo = 0;
  int sign_hi = 0;

  bool exact() const { return lo == hi; }
  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / 2; }
  /// Midpoint rounded half-up to `digits` fractional digits, e.g. "1.10918".
  std::string decimal(int digits = 5) const;
  double approx() const;
};

/// Decimal rendering of a rational, rounded half-up.
std::string to_decimal(const BigRational& x, int digits);

/// Largest real root of p in [1, inf), bracketed to width <= tol by exact
/// rational bisection below the Cauchy bound. Throws NoRootAtLeastOne when p
/// has no real root >= 1.
RootResult largest_real_root(const IntPolynomial& p, const BigRational& tol);
RootResult largest_real_root(const IntPolynomial& p, double tol = kDefaultTolerance);

/// Number of distinct real roots of p in (t, inf) (Sturm).
int count_roots_above(const IntPolynomial& p, const BigRational& t);

/// Primitive greatest common divisor in Z[x] with positive leading coefficient.
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Spectral radius of a primitive T from Collatz–Wielandt bounds on a
/// fixed-point power iterate. PreconditionViolation if d is not primitive.
RootResult pf_eigenvalue(const MultiDigraph& d, const BigRational& tol);
RootResult pf_eigenvalue(const MultiDigraph& d, double tol = kDefaultTolerance);

/// complexity(d) <= lambda^m - 1, decided rigorously from the bracket.
/// Throws Inconclusive when the bracket straddles the threshold.
bool ham_song_check(const MultiDigraph& d, double tol = kDefaultTolerance);

/// -1 if a lies certainly below b, +1 if certainly above, 0 if both brackets
/// are the same exact point, nullopt if they overlap otherwise.
std::optional<int> certified_compare(const RootResult& a, const RootResult& b);

/// (lambda(d), lambda(d + extra_edge)) with brackets refined until they are
/// separated (or the characteristic polynomials coincide). d must be strongly
/// connected. Throws RefinementLimit if separation fails at 1e-15.
std::pair<RootResult, RootResult> monotonicity_witness(const MultiDigraph& d,
                                                       std::pair<int, int> extra_edge);

}  // namespace dilat
