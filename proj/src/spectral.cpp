#include "dilat/spectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dilat/charpoly.hpp"
#include "dilat/errors.hpp"

namespace dilat {
namespace {

// Ascending integer coefficients, no zero leading (top) entries except for 0.
using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return (p.size() == 1 && p[0] == 0) ? -1 : static_cast<int>(p.size()) - 1; }

int sgn(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

BigInt content(const Poly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    g = gcd(g, abs(c));
    if (g == 1) break;
  }
  return g;
}

// Divides by the (positive) content, preserving signs.
void reduce_content(Poly& p) {
  BigInt g = content(p);
  if (g > 1)
    for (auto& c : p) c /= g;
}

// R = lc(B)^e A - Q B with deg R < deg B. Returns e through `steps`.
Poly pseudo_remainder(Poly a, const Poly& b, int& steps) {
  steps = 0;
  const int db = deg(b);
  const BigInt& lc = b.back();
  while (deg(a) >= db) {
    const int shift = deg(a) - db;
    const BigInt top = a.back();
    for (auto& c : a) c *= lc;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(k + shift)] -= top * b[static_cast<std::size_t>(k)];
    trim(a);
    ++steps;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  reduce_content(a);
  reduce_content(b);
  while (deg(b) >= 0) {
    int steps = 0;
    Poly r = pseudo_remainder(a, b, steps);
    reduce_content(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Exact quotient a / b in Z[x]; b primitive and dividing a.
Poly exact_divide(Poly a, const Poly& b) {
  const int db = deg(b);
  const int dq = deg(a) - db;
  Poly q(static_cast<std::size_t>(dq) + 1, BigInt(0));
  for (int k = dq; k >= 0; --k) {
    const BigInt& top = a[static_cast<std::size_t>(k + db)];
    if (top % b.back() != 0) throw std::logic_error("exact_divide: inexact quotient");
    BigInt c = top / b.back();
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(k + j)] -= c * b[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k)] = std::move(c);
  }
  return q;
}

Poly derivative(const Poly& p) {
  if (p.size() == 1) return {BigInt(0)};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<long>(k);
  return d;
}

// Sign of p(n/den) for den > 0.
int sign_at(const Poly& p, const BigInt& n, const BigInt& den) {
  BigInt acc = p.back();
  BigInt dpow = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    dpow *= den;
    acc = acc * n + p[k] * dpow;
  }
  return sgn(acc);
}

int sign_at(const Poly& p, const BigRational& x) { return sign_at(p, numerator(x), denominator(x)); }

int sign_variations(const Poly& p) {
  int v = 0;
  int last = 0;
  for (const auto& c : p) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Squarefree part of p with positive leading coefficient.
Poly squarefree_part(const Poly& p) {
  Poly prim = p;
  reduce_content(prim);
  if (deg(prim) <= 0) return prim;
  Poly g = poly_gcd(prim, derivative(prim));
  Poly q = deg(g) > 0 ? exact_divide(prim, g) : prim;
  if (q.back() < 0)
    for (auto& c : q) c = -c;
  return q;
}

class RootCounter {
 public:
  explicit RootCounter(Poly squarefree) : q_(std::move(squarefree)) {}

  const Poly& poly() const { return q_; }

  // Distinct roots in (t, inf). Descartes' bound on q(t + y) is exact when it
  // is 0 or 1; otherwise fall back to a Sturm count.
  int count_above(const BigRational& t) {
    int v = descartes_above(t);
    if (v <= 1) return v;
    return sturm_count_above(t);
  }

  int sturm_count_above(const BigRational& t) {
    build_sturm();
    int at_t = variations_at(t);
    int at_inf = 0;
    int last = 0;
    for (const auto& s : sturm_) {
      int sg = sgn(s.back());
      if (sg != 0 && last != 0 && sg != last) ++at_inf;
      if (sg != 0) last = sg;
    }
    return at_t - at_inf;
  }

 private:
  int descartes_above(const BigRational& t) const {
    const BigInt n = numerator(t);
    const BigInt den = denominator(t);
    const std::size_t size = q_.size();
    const int degree = static_cast<int>(size) - 1;
    // den^deg q((z + n) / den) = sum_k q_k den^(deg-k) (z + n)^k.
    Poly a(size);
    BigInt dpow = 1;
    for (int k = degree; k >= 0; --k) {
      a[static_cast<std::size_t>(k)] = q_[static_cast<std::size_t>(k)] * dpow;
      dpow *= den;
    }
    for (int i = 0; i < degree; ++i)
      for (int j = degree - 1; j >= i; --j) a[static_cast<std::size_t>(j)] += n * a[static_cast<std::size_t>(j + 1)];
    return sign_variations(a);
  }

  void build_sturm() {
    if (!sturm_.empty()) return;
    sturm_.push_back(q_);
    Poly d = derivative(q_);
    reduce_content(d);
    if (deg(d) < 0) return;
    sturm_.push_back(std::move(d));
    for (;;) {
      const Poly& a = sturm_[sturm_.size() - 2];
      const Poly& b = sturm_.back();
      int steps = 0;
      Poly r = pseudo_remainder(a, b, steps);
      if (deg(r) < 0) break;
      // -rem(a, b) up to a positive factor.
      const bool flip = !(b.back() < 0 && steps % 2 == 1);
      if (flip)
        for (auto& c : r) c = -c;
      reduce_content(r);
      sturm_.push_back(std::move(r));
    }
  }

  int variations_at(const BigRational& t) const {
    int v = 0;
    int last = 0;
    for (const auto& s : sturm_) {
      int sg = sign_at(s, t);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  }

  Poly q_;
  std::vector<Poly> sturm_;
};

BigRational pow(const BigRational& x, int e) {
  BigRational r = 1;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

}  // namespace

std::string to_decimal(const BigRational& x, int digits) {
  if (digits < 0) digits = 0;
  BigInt scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  const bool negative = x < 0;
  BigRational scaled = abs(x) * BigRational(scale) + BigRational(1, 2);
  BigInt rounded = numerator(scaled) / denominator(scaled);
  BigInt whole = rounded / scale;
  BigInt frac = rounded % scale;
  std::string out = (negative && rounded != 0 ? "-" : "") + whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

std::string RootResult::decimal(int digits) const { return to_decimal(midpoint(), digits); }

double RootResult::approx() const { return midpoint().convert_to<double>(); }

RootResult largest_real_root(const IntPolynomial& p, double tol) {
  return largest_real_root(p, BigRational(tol));
}

RootResult largest_real_root(const IntPolynomial& p, const BigRational& tol) {
  if (tol <= 0) throw RangeError("tolerance must be positive");
  if (p.degree() < 1) throw PreconditionViolation("largest_real_root needs degree >= 1");
  if (!p.is_monic()) throw PreconditionViolation("largest_real_root needs a monic polynomial");

  BigInt bound = 0;
  for (int i = 1; i <= p.degree(); ++i) bound = std::max(bound, abs(p.b(i)));
  bound += 1;  // Cauchy: every root has modulus < 1 + max |b_i|.

  RootCounter counter(squarefree_part(p.ascending()));
  const Poly& q = counter.poly();

  BigRational lo = 1;
  BigRational hi = BigRational(bound);
  auto finish = [&](const BigRational& a, const BigRational& b) {
    return RootResult{a, b, sign_at(q, a), sign_at(q, b)};
  };

  int above = counter.count_above(lo);
  if (above == 0) {
    if (sign_at(q, lo) == 0) return finish(lo, lo);
    throw NoRootAtLeastOne("no real root >= 1 for " + to_string(p));
  }
  bool isolated = above == 1;
  int sign_hi = sign_at(q, hi);
  while (hi - lo > tol) {
    BigRational mid = (lo + hi) / 2;
    int s = sign_at(q, mid);
    if (isolated) {
      if (s == 0) return finish(mid, mid);
      if (s == sign_hi) hi = mid;
      else lo = mid;
      continue;
    }
    int c = counter.count_above(mid);
    if (c == 0) {
      if (s == 0) return finish(mid, mid);
      hi = mid;
      sign_hi = s;
    } else {
      lo = mid;
      isolated = c == 1;
    }
  }
  return finish(lo, hi);
}

int count_roots_above(const IntPolynomial& p, const BigRational& t) {
  if (p.is_zero()) throw PreconditionViolation("count_roots_above on the zero polynomial");
  RootCounter counter(squarefree_part(p.ascending()));
  return counter.sturm_count_above(t);
}

IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return polynomial_gcd(b, b);
  if (b.is_zero()) return polynomial_gcd(a, a);
  return IntPolynomial::from_ascending(poly_gcd(a.ascending(), b.ascending()));
}

RootResult pf_eigenvalue(const MultiDigraph& d, double tol) {
  return pf_eigenvalue(d, BigRational(tol));
}

RootResult pf_eigenvalue(const MultiDigraph& d, const BigRational& tol) {
  if (tol <= 0) throw RangeError("tolerance must be positive");
  if (!is_primitive(d)) throw PreconditionViolation("pf_eigenvalue requires a primitive digraph");
  const int m = d.vertex_count();
  const Matrix<BigInt> t = d.adjacency().cast<BigInt>();

  // Working precision: enough bits to resolve tol twice over, plus headroom.
  const auto tol_bits = static_cast<long>(msb(denominator(tol))) - static_cast<long>(msb(numerator(tol))) + 1;
  const long precision = 64 + 2 * std::max(tol_bits, 1L) + 4 * m;

  Vector<BigInt> v = Vector<BigInt>::Constant(m, BigInt(1) << precision);
  constexpr long kMaxIterations = 2'000'000;
  for (long iter = 0; iter < kMaxIterations; ++iter) {
    Vector<BigInt> tv = t * v;
    if (iter % 4 == 0 && (v.array() > 0).all()) {
      // Collatz–Wielandt: min_i (Tv)_i / v_i <= rho <= max_i (Tv)_i / v_i.
      BigRational lo(tv(0), v(0));
      BigRational hi = lo;
      for (int i = 1; i < m; ++i) {
        BigRational r(tv(i), v(i));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      if (hi - lo <= tol) return RootResult{lo, hi, 0, 0};
    }
    // Iterate with T + I: same Perron vector, and the shift damps eigenvalues
    // of modulus near rho that are not positive reals.
    Vector<BigInt> w = tv + v;
    std::size_t top = 0;
    for (int i = 0; i < m; ++i)
      if (w(i) > 0) top = std::max<std::size_t>(top, msb(w(i)));
    if (static_cast<long>(top) > precision) {
      const auto shift = static_cast<unsigned>(static_cast<long>(top) - precision);
      for (int i = 0; i < m; ++i) w(i) >>= shift;
    }
    v = std::move(w);
  }
  throw ResourceLimit("power iteration did not reach the requested tolerance");
}

bool ham_song_check(const MultiDigraph& d, double tol) {
  const RootResult lambda = pf_eigenvalue(d, tol);
  const BigRational c(complexity(d));
  const int m = d.vertex_count();
  if (pow(lambda.lo, m) - 1 >= c) return true;
  if (pow(lambda.hi, m) - 1 < c) return false;
  throw Inconclusive("bracket [" + to_decimal(lambda.lo, 12) + ", " + to_decimal(lambda.hi, 12) +
                     "] too wide to decide c <= lambda^m - 1");
}

std::optional<int> certified_compare(const RootResult& a, const RootResult& b) {
  if (a.hi < b.lo) return -1;
  if (b.hi < a.lo) return 1;
  if (a.exact() && b.exact() && a.lo == b.lo) return 0;
  return std::nullopt;
}

std::pair<RootResult, RootResult> monotonicity_witness(const MultiDigraph& d,
                                                       std::pair<int, int> extra_edge) {
  if (!is_strongly_connected(d))
    throw PreconditionViolation("monotonicity_witness requires a strongly connected digraph");
  const MultiDigraph bigger = d.with_edge(extra_edge.first, extra_edge.second);
  const IntPolynomial before = char_poly_ct(d);
  const IntPolynomial after = char_poly_ct(bigger);
  if (before == after) {
    RootResult r = largest_real_root(before);
    return {r, r};
  }
  const BigRational floor_tol(1, BigInt("1000000000000000"));
  for (BigRational tol(1, 10'000'000'000LL);; tol /= 1000) {
    RootResult a = largest_real_root(before, tol);
    RootResult b = largest_real_root(after, tol);
    auto cmp = certified_compare(a, b);
    if (a.hi <= b.lo) return {a, b};
    if (cmp && *cmp > 0)
      throw std::logic_error("spectral radius decreased after adding an edge");
    if (tol <= floor_tol)
      throw RefinementLimit("brackets overlap at tolerance 1e-15 with distinct polynomials");
  }
}

}  // namespace dilat
