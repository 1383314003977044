#pragma once

// Polynomials over a prime field F_p with arbitrary-precision p.

#include <cstdint>
#include <utility>
#include <vector>

#include "galcong/poly.hpp"

namespace galcong {

/// Dense polynomial over F_p; coefficients are canonical residues in [0, p).
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(Integer p, std::vector<Integer> coeffs);
  /// Reduction of an integer polynomial modulo p.
  static FpPoly reduce(const IntPoly& f, const Integer& p);
  /// Reduction of a rational polynomial; throws DenominatorAtEll if a denominator is divisible by p.
  static FpPoly reduce(const RatPoly& f, const Integer& p);
  static FpPoly constant(const Integer& p, const Integer& v);
  static FpPoly x(const Integer& p);

  const Integer& modulus() const { return p_; }
  const std::vector<Integer>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& leading() const { return c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  /// Symmetric-free lift: coefficients in [0, p).
  IntPoly lift() const;

  FpPoly monic() const;
  Integer eval(const Integer& x) const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const Integer& s, const FpPoly& a);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }
  /// Degree first, then coefficient tuple from low to high.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

 private:
  void normalize();
  Integer p_;
  std::vector<Integer> c_;
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly gcd(const FpPoly& a, const FpPoly& b);  // monic
struct FpXGcd {
  FpPoly g, s, t;
};
FpXGcd xgcd(const FpPoly& a, const FpPoly& b);
FpPoly derivative(const FpPoly& a);
FpPoly powmod(const FpPoly& base, const Integer& exp, const FpPoly& modulus);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  unsigned long multiplicity;
  friend bool operator==(const FpFactor&, const FpFactor&) = default;
};

/// Complete factorization of f modulo the prime p into monic irreducibles,
/// sorted by degree then coefficient tuple. The equal-degree splitting
/// draws from a generator seeded by (f, p, seed), so output is reproducible.
/// Throws NotPrime, or InvalidArgument when f vanishes mod p.
std::vector<FpFactor> factor_mod_p(const IntPoly& f, const Integer& p, std::uint64_t seed = 0);
std::vector<FpFactor> factor_mod_p(const FpPoly& f, std::uint64_t seed = 0);

}  // namespace galcong
