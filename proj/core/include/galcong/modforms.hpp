#pragma once

// Level-one cusp forms, Hecke eigenforms, Eisenstein-type congruences and
// the audit of the large-ℓ congruence theorem.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galcong/engine.hpp"

namespace galcong {

/// Rational q-expansion a_0 + a_1 q + … + a_prec q^prec.
struct QExpansion {
  std::vector<Rational> coeffs;
  std::size_t prec() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const QExpansion&, const QExpansion&) = default;
};

QExpansion operator*(const QExpansion& a, const QExpansion& b);  // truncated to the smaller precision

/// B_k for even k ≥ 2. Throws OddWeight.
Rational bernoulli(unsigned long k);
/// E_k = 1 − (2k/B_k) Σ σ_{k−1}(n) qⁿ. Throws OddWeight, InvalidArgument for k = 2.
QExpansion eisenstein(unsigned long k, std::size_t prec);
/// (E_4³ − E_6²)/1728.
QExpansion delta(std::size_t prec);

/// dim S_k(SL_2(Z)).
std::size_t cusp_dimension(long k);
/// Echelon basis with a_i(f_j) = δ_ij for 1 ≤ i, j ≤ d. Throws InsufficientPrecision when prec < d.
std::vector<QExpansion> miller_basis(unsigned long k, std::size_t prec);

using RatMatrix = std::vector<std::vector<Rational>>;

/// Matrix of T_p on the basis: column j holds the coordinates of T_p f_j. Throws InsufficientPrecision.
RatMatrix hecke_matrix(unsigned long k, unsigned long p, const std::vector<QExpansion>& basis);
/// det(T − M) by the Faddeev–LeVerrier recursion.
RatPoly matrix_charpoly(const RatMatrix& m);

struct EpsValue {
  Integer generator;   // generator of (Z/NZ)^×
  FieldElement value;  // ε(generator), a root of unity in the Hecke field
};

struct Eigenform {
  unsigned long k;
  Integer N = 1;
  std::vector<EpsValue> eps;  // empty means trivial
  NumberField hecke_field;
  std::map<unsigned long, FieldElement> ap;
  std::vector<FieldElement> an;  // a_0..a_prec when computed internally
  std::size_t prec = 0;          // largest index with known coefficients
  unsigned long separating_prime = 0;

  /// ε(x mod N). Throws BadPrime when gcd(x, N) ≠ 1.
  FieldElement eps_at(const Integer& x) const;
};

/// Normalized eigenforms of S_k(SL_2(Z)), one per Galois orbit.
/// Throws NonSeparating, InsufficientPrecision.
std::vector<Eigenform> eigenforms(unsigned long k, std::size_t prec);

/// T² − a_q T + ε(q) q^{k−1} with Hodge–Tate data {0, k−1} per embedding. Throws BadPrime.
RepDescriptor frobenius_descriptor(const Eigenform& f, const Integer& q, const PrimeIdeal& lambda);

enum class ScanMode { EisensteinScan, FixedEll };

struct CongruenceWitness {
  long i;
  long j;
  PrimeIdeal lam;
  std::vector<unsigned long> checked_primes;
  unsigned long sturm;
  unsigned long p_max;
  const Integer& ell() const { return lam.ell; }
};

/// ⌈k·[SL_2(Z):Γ_0(N)]/12⌉.
unsigned long sturm_bound(unsigned long k, const Integer& N);
/// max(50, 4·sturm).
unsigned long default_p_max(unsigned long k, const Integer& N);

/// Witnesses of a_p ≡ p^i + p^j modulo λ for all primes p ≤ p_max with p ∤ ℓN.
/// Throws InsufficientCoefficients.
std::vector<CongruenceWitness> detect_congruences(const Eigenform& f, ScanMode mode, unsigned long p_max,
                                                  const Integer& fixed_ell = 0);

/// Re-checks the residues of a witness.
bool verify_witness(const CongruenceWitness& w, const Eigenform& f);

enum class AuditStatus { Consistent, Inapplicable, Contradiction };
const char* to_string(AuditStatus s);

struct AuditGate {
  std::string name;
  bool pass;
  std::string detail;
};

struct AuditReport {
  AuditStatus status;
  std::vector<AuditGate> gates;
  std::string reason;
  std::optional<bool> lemma_character;  // ε̄(x) = x^{i+j−(k−1)}
  std::optional<bool> lemma_unramified; // i + j ≡ k − 1 (mod ℓ − 1) and ε̄ = 1, when ℓ ∤ N
};

AuditReport audit_eisenstein_witness(const CongruenceWitness& w, const Eigenform& f, const Integer& q);

}  // namespace galcong
