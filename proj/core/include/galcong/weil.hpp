#pragma once

// q-Weil integers and Weil weights of Frobenius characteristic polynomials.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "galcong/number_field.hpp"

namespace galcong {

/// Monic polynomial over E with a Frobenius size q.
struct CharPolyOverE {
  NumberField field;
  std::vector<FieldElement> coeffs;  // lowest degree first, leading entry 1
  Integer q;

  CharPolyOverE(NumberField field, std::vector<FieldElement> coeffs, Integer q);
  /// A polynomial with rational coefficients viewed over E.
  static CharPolyOverE from_rational(const NumberField& field, const RatPoly& p, const Integer& q);

  std::size_t degree() const { return coeffs.size() - 1; }
  bool is_E_integral() const;
  friend bool operator==(const CharPolyOverE& a, const CharPolyOverE& b) {
    return a.field == b.field && a.coeffs == b.coeffs && a.q == b.q;
  }
};

/// True iff every complex root z of m satisfies |z|² = q^w. m must be monic.
bool is_weil_integer_poly(const IntPoly& m, const Integer& q, unsigned long w);
/// Same test for a monic polynomial with rational coefficients.
bool is_weil_poly(const RatPoly& m, const Integer& q, unsigned long w);

/// ∏_ι ι(P): the characteristic polynomial over Q, degree n·[E:Q]. Throws NotIntegral.
IntPoly norm_poly(const CharPolyOverE& P);
/// As norm_poly without the integrality requirement.
RatPoly norm_poly_rational(const CharPolyOverE& P);

/// Weights counted with multiplicity in the full norm polynomial.
struct WeilWeightMultiset {
  std::vector<unsigned long> entries;  // sorted
  std::size_t field_degree = 1;

  Integer sum() const;
  /// Multiplicities divided by [E:Q], when every multiplicity is divisible.
  std::optional<std::vector<unsigned long>> over_E() const;
  friend bool operator==(const WeilWeightMultiset&, const WeilWeightMultiset&) = default;
};

struct NotTypeW {
  RatPoly factor;
  std::string reason;
};

using WeilWeightsResult = std::variant<WeilWeightMultiset, NotTypeW>;

/// Weights of the roots of P. Throws ZeroRoot when P(0) vanishes.
WeilWeightsResult weil_weights(const CharPolyOverE& P);
/// Weights of a monic rational polynomial, the Q-view of the above.
WeilWeightsResult weil_weights(const RatPoly& P, const Integer& q, std::size_t field_degree = 1);

/// Every coefficient of T^{n−i} satisfies |ι(c)|² ≤ C(n,i)²·q^{w_total} for all ι.
bool coefficient_weil_bound_check(const CharPolyOverE& P, unsigned long w_total);

std::string to_string(const WeilWeightMultiset& w);

}  // namespace galcong
