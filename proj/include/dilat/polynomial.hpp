#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dilat/types.hpp"

namespace dilat {

/// Dense integer polynomial stored by descending powers.
///
/// Index i of coefficients() holds b_i, the coefficient of x^(degree - i), so a
/// characteristic polynomial reads x^m + b_1 x^(m-1) + ... + b_m. Low-order zero
/// coefficients are kept: x^m has m + 1 entries. The leading entry is nonzero
/// unless the polynomial is the zero constant.
class IntPolynomial {
 public:
  IntPolynomial();
  explicit IntPolynomial(std::vector<BigInt> descending);

  /// c * x^k.
  static IntPolynomial monomial(int k, BigInt c = 1);
  /// Builds from ascending coefficients (index k holds the coefficient of x^k).
  static IntPolynomial from_ascending(std::vector<BigInt> ascending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// b_i: coefficient of x^(degree - i).
  const BigInt& b(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  /// Coefficient of x^k (zero when k is out of range).
  BigInt coefficient_of_power(int k) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  std::vector<BigInt> ascending() const;

  bool is_monic() const { return coeffs_.front() == 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_.front() == 0; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

 private:
  std::vector<BigInt> coeffs_;
};

enum class PalindromeClass { Palindromic, Antipalindromic, Neither };

std::string to_string(PalindromeClass c);

/// Pretty form with descending powers, e.g. "x^14 - x^8 - x^7 - x^6 + 1".
std::string to_string(const IntPolynomial& p);
/// Coefficient-list form, e.g. "[1,0,-1]".
std::string to_coefficient_list(const IntPolynomial& p);

/// Parses either the pretty form or the coefficient-list form. A leading '['
/// selects the list form. Throws ParseError.
IntPolynomial parse_polynomial(std::string_view text);

/// Palindromic iff b_i = b_{m-i} for all i; antipalindromic iff b_i = -b_{m-i}.
/// Requires a monic polynomial (PreconditionViolation otherwise).
PalindromeClass classify_palindrome(const IntPolynomial& p);

/// Sum of the coefficients.
BigInt eval_at_one(const IntPolynomial& p);

/// Exact value p(x).
BigRational evaluate(const IntPolynomial& p, const BigRational& x);
/// Sign of p(x), computed exactly.
int sign_at(const IntPolynomial& p, const BigRational& x);

/// Formal derivative.
IntPolynomial derivative(const IntPolynomial& p);

}  // namespace dilat
