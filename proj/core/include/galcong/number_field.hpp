#pragma once

// Number fields Q[x]/(g), elements of Z[α] ⊗ Q, primes above ℓ and residue fields.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "galcong/modpoly.hpp"
#include "galcong/poly.hpp"

namespace galcong {

/// E = Q[x]/(g) for a monic irreducible g. Cheap to copy; shares its data.
class NumberField {
 public:
  /// Validates that g is monic, squarefree and irreducible over Q.
  explicit NumberField(IntPoly gen_poly);
  static NumberField rationals();

  const IntPoly& gen_poly() const { return d_->gen_poly; }
  std::size_t degree() const { return d_->degree; }
  const Integer& disc() const { return d_->disc; }

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.d_ == b.d_ || a.d_->gen_poly == b.d_->gen_poly;
  }
  friend bool operator!=(const NumberField& a, const NumberField& b) { return !(a == b); }

 private:
  struct Data {
    IntPoly gen_poly;
    std::size_t degree;
    Integer disc;
  };
  std::shared_ptr<const Data> d_;
};

class FieldElement {
 public:
  /// coords in the power basis 1, α, …, α^{d−1}; shorter vectors are zero-padded.
  FieldElement(NumberField field, std::vector<Rational> coords);
  static FieldElement from_rational(const NumberField& field, const Rational& v);
  static FieldElement generator(const NumberField& field);

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  RatPoly as_poly() const { return RatPoly(coords_); }
  bool is_zero() const;
  bool is_rational() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  FieldElement inverse() const;  // throws ZeroElement
  FieldElement pow(long e) const;

  /// det(T − mult_a), degree [E:Q].
  RatPoly charpoly() const;
  /// Monic minimal polynomial over Q.
  RatPoly minpoly() const;
  bool is_integral() const;
  /// Product of all embeddings.
  Rational norm() const;
  Rational trace() const;
  /// Common denominator of the coordinates.
  Integer denominator() const;

  std::string to_string(const std::string& var = "a") const;

 private:
  NumberField field_;
  std::vector<Rational> coords_;
};

Rational norm(const FieldElement& a);

/// A prime λ of Z[α] above ℓ, given by a monic irreducible factor of g mod ℓ.
struct PrimeIdeal {
  NumberField field;
  Integer ell;
  std::size_t f;
  std::size_t e;
  IntPoly local_factor;  // monic, coefficients in [0, ℓ)
  std::size_t index;     // position in primes_above output
};

/// Primes above ℓ via the Kummer–Dedekind factorization of g mod ℓ.
/// Splitting is trusted when ℓ² ∤ disc(g), when Dedekind's criterion shows
/// Z[α] is ℓ-maximal, or when the caller attests ℓ ∤ [O_E : Z[α]].
/// Throws NotPrime, IndexDivisor.
std::vector<PrimeIdeal> primes_above(const NumberField& E, const Integer& ell, bool attest_index = false,
                                     std::uint64_t seed = 0);

/// True iff Dedekind's criterion shows ℓ does not divide the index of Z[α].
bool dedekind_maximal_at(const IntPoly& g, const Integer& ell, std::uint64_t seed = 0);

/// The residue field F_ℓ[x]/(local_factor) of a prime ideal.
class ResidueField {
 public:
  explicit ResidueField(const PrimeIdeal& lambda);
  ResidueField(Integer ell, FpPoly modulus);

  const Integer& characteristic() const { return ell_; }
  std::size_t degree() const { return *modulus_.degree(); }
  const FpPoly& modulus() const { return modulus_; }

  FpPoly reduce(const FpPoly& a) const;
  FpPoly element(const std::vector<Integer>& coords) const;
  FpPoly zero() const { return FpPoly(ell_, {}); }
  FpPoly one() const { return FpPoly::constant(ell_, 1); }
  FpPoly add(const FpPoly& a, const FpPoly& b) const { return reduce(a + b); }
  FpPoly sub(const FpPoly& a, const FpPoly& b) const { return reduce(a - b); }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const { return reduce(a * b); }
  FpPoly pow(const FpPoly& a, const Integer& e) const;
  FpPoly inverse(const FpPoly& a) const;  // throws ZeroElement
  FpPoly frobenius(const FpPoly& a) const { return pow(a, ell_); }

 private:
  Integer ell_;
  FpPoly modulus_;
};

/// Image of a in the residue field of λ. Throws DenominatorAtEll.
FpPoly reduce_mod_lambda(const FieldElement& a, const PrimeIdeal& lambda);

enum class EmbeddingComparison { AllBelow, SomeAbove, Equal };
const char* to_string(EmbeddingComparison c);

/// Compares max over embeddings ι of |ι(a)|² with C0_sq, exactly.
EmbeddingComparison max_abs_embedding(const FieldElement& a, const Rational& C0_sq);

/// Polynomial whose roots are all products z_i·z_j of roots of the monic m.
RatPoly pairwise_product_poly(const RatPoly& m);

}  // namespace galcong
