#include "dilat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "dilat/errors.hpp"

namespace dilat {
namespace {

std::vector<BigInt> strip_leading_zeros(std::vector<BigInt> c) {
  auto first = std::find_if(c.begin(), c.end(), [](const BigInt& v) { return v != 0; });
  if (first == c.end()) return {BigInt(0)};
  c.erase(c.begin(), first);
  return c;
}

class PrettyParser {
 public:
  explicit PrettyParser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    std::map<int, BigInt> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [power, coeff] = term();
      terms[power] += sign * coeff;
      skip_space();
    }
    int degree = terms.rbegin()->first;
    std::vector<BigInt> desc(static_cast<std::size_t>(degree) + 1, BigInt(0));
    for (const auto& [k, c] : terms) desc[static_cast<std::size_t>(degree - k)] = c;
    return IntPolynomial(strip_leading_zeros(std::move(desc)));
  }

 private:
  std::pair<int, BigInt> term() {
    BigInt coeff = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigInt(digits());
      have_number = true;
      skip_space();
      if (peek() == '*') {
        take();
        skip_space();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!have_number) fail("expected a term");
      return {0, coeff};
    }
    take();
    int power = 1;
    skip_space();
    if (peek() == '^') {
      take();
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      power = std::stoi(e);
    }
    return {power, coeff};
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(take());
    return out;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

IntPolynomial parse_list(std::string_view text) {
  std::string body(text);
  auto open = body.find('[');
  auto close = body.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("polynomial: malformed coefficient list \"" + body + "\"");
  for (std::size_t i = close + 1; i < body.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(body[i])))
      throw ParseError("polynomial: trailing characters after ']'");
  std::vector<BigInt> coeffs;
  std::stringstream items(body.substr(open + 1, close - open - 1));
  std::string item;
  while (std::getline(items, item, ',')) {
    auto b = item.find_first_not_of(" \t\r\n");
    auto e = item.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw ParseError("polynomial: empty list entry");
    std::string tok = item.substr(b, e - b + 1);
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size() ||
        !std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(start), tok.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw ParseError("polynomial: bad coefficient \"" + tok + "\"");
    if (tok[0] == '+') tok.erase(0, 1);
    coeffs.emplace_back(tok);
  }
  if (coeffs.empty()) throw ParseError("polynomial: empty coefficient list");
  if (coeffs.size() > 1 && coeffs.front() == 0)
    throw ParseError("polynomial: leading coefficient must be nonzero");
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial::IntPolynomial() : coeffs_{BigInt(0)} {}

IntPolynomial::IntPolynomial(std::vector<BigInt> descending) : coeffs_(std::move(descending)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

IntPolynomial IntPolynomial::monomial(int k, BigInt c) {
  std::vector<BigInt> d(static_cast<std::size_t>(k) + 1, BigInt(0));
  d.front() = std::move(c);
  return IntPolynomial(strip_leading_zeros(std::move(d)));
}

IntPolynomial IntPolynomial::from_ascending(std::vector<BigInt> ascending) {
  std::reverse(ascending.begin(), ascending.end());
  return IntPolynomial(strip_leading_zeros(std::move(ascending)));
}

BigInt IntPolynomial::coefficient_of_power(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree() - k)];
}

std::vector<BigInt> IntPolynomial::ascending() const {
  return {coeffs_.rbegin(), coeffs_.rend()};
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  auto x = a.ascending();
  auto y = b.ascending();
  if (x.size() < y.size()) std::swap(x, y);
  for (std::size_t k = 0; k < y.size(); ++k) x[k] += y[k];
  return IntPolynomial::from_ascending(std::move(x));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  auto neg = b.ascending();
  for (auto& c : neg) c = -c;
  return a + IntPolynomial::from_ascending(std::move(neg));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  auto x = a.ascending();
  auto y = b.ascending();
  std::vector<BigInt> out(x.size() + y.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return IntPolynomial::from_ascending(std::move(out));
}

std::string to_string(PalindromeClass c) {
  switch (c) {
    case PalindromeClass::Palindromic: return "palindromic";
    case PalindromeClass::Antipalindromic: return "antipalindromic";
    case PalindromeClass::Neither: return "neither";
  }
  return "neither";
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const int deg = p.degree();
  for (int k = deg; k >= 0; --k) {
    const BigInt& c = p.coefficients()[static_cast<std::size_t>(deg - k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string to_coefficient_list(const IntPolynomial& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ",";
    out += p.coefficients()[i].str();
  }
  return out + "]";
}

IntPolynomial parse_polynomial(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("polynomial: empty input");
  if (text[first] == '[') return parse_list(text.substr(first));
  return PrettyParser(text).parse();
}

PalindromeClass classify_palindrome(const IntPolynomial& p) {
  if (!p.is_monic())
    throw PreconditionViolation("classify_palindrome requires a monic polynomial, got " +
                                to_string(p));
  const auto& b = p.coefficients();
  const std::size_t m = b.size() - 1;
  bool palindromic = true;
  bool anti = true;
  for (std::size_t i = 0; i <= m; ++i) {
    if (b[i] != b[m - i]) palindromic = false;
    if (b[i] != -b[m - i]) anti = false;
  }
  // b_0 = 1 rules out both holding at once.
  if (palindromic) return PalindromeClass::Palindromic;
  if (anti) return PalindromeClass::Antipalindromic;
  return PalindromeClass::Neither;
}

BigInt eval_at_one(const IntPolynomial& p) {
  BigInt sum = 0;
  for (const auto& c : p.coefficients()) sum += c;
  return sum;
}

BigRational evaluate(const IntPolynomial& p, const BigRational& x) {
  BigRational acc = 0;
  for (const auto& c : p.coefficients()) acc = acc * x + BigRational(c);
  return acc;
}

int sign_at(const IntPolynomial& p, const BigRational& x) {
  // Clear the denominator: sum_k c_k n^k d^(deg-k) has the sign of p(n/d) for d > 0.
  const BigInt n = numerator(x);
  const BigInt d = denominator(x);
  BigInt acc = 0;
  BigInt dpow = 1;
  const auto& c = p.coefficients();
  // Horner in n with the d-powers folded into the lower coefficients.
  acc = c.front();
  for (std::size_t i = 1; i < c.size(); ++i) {
    dpow *= d;
    acc = acc * n + c[i] * dpow;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

IntPolynomial derivative(const IntPolynomial& p) {
  auto asc = p.ascending();
  if (asc.size() == 1) return IntPolynomial();
  std::vector<BigInt> out(asc.size() - 1);
  for (std::size_t k = 1; k < asc.size(); ++k) out[k - 1] = asc[k] * static_cast<long>(k);
  return IntPolynomial::from_ascending(std::move(out));
}

}  // namespace dilat
