#pragma once

// Characters of tame inertia written in fundamental characters of level h.

#include <string>
#include <vector>

#include "galcong/poly.hpp"

namespace galcong {

/// θ_h^d for the fixed fundamental character θ_h of level h at ℓ.
class TameCharacter {
 public:
  /// d is reduced to its canonical residue in [0, ℓ^h − 2].
  TameCharacter(Integer ell, unsigned long h, const Integer& d);

  const Integer& ell() const { return ell_; }
  unsigned long level() const { return h_; }
  const Integer& exponent() const { return d_; }
  Integer order_modulus() const;  // ℓ^h − 1

  friend bool operator==(const TameCharacter&, const TameCharacter&) = default;

 private:
  Integer ell_;
  unsigned long h_;
  Integer d_;
};

/// Multiset of tame inertia weights t_i/e; kept in digit order.
struct TIMultiset {
  std::vector<Rational> entries;
  unsigned long e = 1;

  std::vector<Rational> sorted() const;
  Rational sum() const;
  /// Multiset equality, ignoring order.
  bool same_multiset(const TIMultiset& other) const;
};

/// Base-ℓ digits t_1..t_h of the canonical exponent.
std::vector<Integer> digits(const TameCharacter& chi);
TIMultiset ti_multiset(const TameCharacter& chi, unsigned long e);
/// Restriction to the inertia of a totally ramified extension of degree e′.
TameCharacter restrict_ramified(const TameCharacter& chi, unsigned long e_prime);
/// Union of the TI multisets. Throws MixedPrimes.
TIMultiset ti_rep_multiset(const std::vector<TameCharacter>& chars, unsigned long e);

std::string to_string(const TIMultiset& ti);

}  // namespace galcong
