#include "galcong/poly.hpp"

#include <sstream>

namespace galcong {

RatPoly to_rat(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

std::pair<IntPoly, Integer> clear_denominators(const RatPoly& p) {
  Integer l = 1;
  for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    Integer n = v.get_num() * (l / v.get_den());
    c.push_back(n);
  }
  return {IntPoly(std::move(c)), l};
}

IntPoly to_int(const RatPoly& p) {
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    if (v.get_den() != 1) throw NotIntegral("coefficient " + v.get_str() + " is not an integer");
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c(p.coeffs());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return inv * p;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.size() < b.size()) return {RatPoly(), a};
  std::vector<Rational> r(a.coeffs());
  std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
  const Rational lc = b.leading();
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational f = r[i + b.size() - 1] / lc;
    q[i] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= f * b.coeffs()[j];
  }
  r.resize(b.size() - 1);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Integer lc = b.leading();
  if (lc != 1 && lc != -1) throw InvalidArgument("integer divmod needs a divisor with unit leading coefficient");
  if (a.size() < b.size()) return {IntPoly(), a};
  std::vector<Integer> r(a.coeffs());
  std::vector<Integer> q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer f = r[i + b.size() - 1] * lc;
    q[i] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= f * b.coeffs()[j];
  }
  r.resize(b.size() - 1);
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.size() < b.size()) return std::nullopt;
  std::vector<Integer> r(a.coeffs());
  std::vector<Integer> q(a.size() - b.size() + 1, Integer(0));
  const Integer& lc = b.leading();
  for (std::size_t i = q.size(); i-- > 0;) {
    const Integer& top = r[i + b.size() - 1];
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Integer f = top / lc;
    q[i] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= f * b.coeffs()[j];
  }
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  RatPoly g = gcd(to_rat(a), to_rat(b));
  if (g.is_zero()) return IntPoly();
  return primitive_part(clear_denominators(g).first);
}

XGcd xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    RatPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  RatPoly g = gcd(p, derivative(p));
  return make_monic(divmod(p, g).first);
}

bool is_squarefree(const RatPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, derivative(p)).is_constant();
}

Rational resultant(const RatPoly& a0, const RatPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  RatPoly a = a0, b = b0;
  Rational acc = 1;
  while (true) {
    const std::size_t m = *a.degree();
    const std::size_t n = *b.degree();
    if (n == 0) {
      Rational r;
      mpz_pow_ui(r.get_num_mpz_t(), b.leading().get_num_mpz_t(), m);
      mpz_pow_ui(r.get_den_mpz_t(), b.leading().get_den_mpz_t(), m);
      r.canonicalize();
      return acc * r;
    }
    RatPoly r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    const std::size_t k = *r.degree();
    if ((m * n) % 2 == 1) acc = -acc;
    Rational lp;
    mpz_pow_ui(lp.get_num_mpz_t(), b.leading().get_num_mpz_t(), m - k);
    mpz_pow_ui(lp.get_den_mpz_t(), b.leading().get_den_mpz_t(), m - k);
    lp.canonicalize();
    acc *= lp;
    a = std::move(b);
    b = std::move(r);
  }
}

Integer discriminant(const IntPoly& p) {
  if (!p.degree() || *p.degree() == 0) throw InvalidArgument("discriminant of a constant");
  const std::size_t n = *p.degree();
  Rational r = resultant(to_rat(p), to_rat(derivative(p))) / Rational(p.leading());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  if (r.get_den() != 1) throw InvalidArgument("non-integral discriminant");
  return r.get_num();
}

RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("interpolation needs matching node/value counts");
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  RatPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * RatPoly{-xs[i], Rational(1)} + RatPoly::constant(dd[i]);
  }
  return acc;
}

RatPoly reciprocal_scaled(const RatPoly& p, const Rational& c) {
  if (p.is_zero()) return p;
  const std::size_t d = *p.degree();
  std::vector<Rational> r(d + 1);
  Rational pw = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    r[d - k] = p[k] * pw;
    pw *= c;
  }
  return RatPoly(std::move(r));
}

namespace {

template <class T>
std::string poly_string(const Poly<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const T& c = p.coeffs()[i];
    if (c == 0) continue;
    T mag = c < 0 ? T(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return poly_string(p, var); }
std::string to_string(const RatPoly& p, const std::string& var) { return poly_string(p, var); }

std::string to_csv(const IntPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p.coeffs()[i].get_str();
  }
  return out;
}

}  // namespace galcong
