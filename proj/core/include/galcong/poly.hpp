#pragma once

// Dense univariate polynomials over Z and Q, lowest degree first.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galcong/errors.hpp"

namespace galcong {

using Integer = mpz_class;
using Rational = mpq_class;

template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, std::size_t deg) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }

  /// Coefficient of x^i; zero beyond the degree.
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  T eval(const T& x) const {
    T acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly operator-() const {
    std::vector<T> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> r(a.c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Lexicographic order on (degree, coefficients from low to high).
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rat(const IntPoly& p);
/// Multiplies through by the lcm of denominators; returns (integer poly, that lcm).
std::pair<IntPoly, Integer> clear_denominators(const RatPoly& p);
/// Throws NotIntegral if a coefficient has a denominator.
IntPoly to_int(const RatPoly& p);

Integer content(const IntPoly& p);
/// Primitive part with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);
RatPoly make_monic(const RatPoly& p);

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.size() <= 1) return Poly<T>();
  std::vector<T> r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * T(static_cast<unsigned long>(i));
  return Poly<T>(std::move(r));
}

/// Quotient and remainder over Q. Throws DivisionByZero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Quotient and remainder over Z; the divisor must have leading coefficient +-1.
std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b);
/// Exact quotient over Z when b divides a in Z[x].
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Monic gcd over Q (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// Gcd over Z normalized to a primitive polynomial with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Extended gcd over Q: returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
  RatPoly g, s, t;
};
XGcd xgcd(const RatPoly& a, const RatPoly& b);

/// Monic squarefree part (product of the distinct irreducible factors).
RatPoly squarefree_part(const RatPoly& p);
bool is_squarefree(const RatPoly& p);

/// Res(a, b) = lc(a)^deg(b) * prod_{a(t)=0} b(t).
Rational resultant(const RatPoly& a, const RatPoly& b);
Integer discriminant(const IntPoly& p);

/// Unique polynomial of degree < xs.size() through the given points.
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// p(x) -> x^deg * p(c/x).
RatPoly reciprocal_scaled(const RatPoly& p, const Rational& c);

std::string to_string(const IntPoly& p, const std::string& var = "T");
std::string to_string(const RatPoly& p, const std::string& var = "T");
/// Comma-separated coefficients, lowest degree first ("" for zero).
std::string to_csv(const IntPoly& p);

}  // namespace galcong
