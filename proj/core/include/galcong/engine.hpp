#pragma once

// Representation descriptors, validators, the gap principle and
// certificate-producing replays of the congruence theorems.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galcong/bounds.hpp"
#include "galcong/tame.hpp"
#include "galcong/weil.hpp"

namespace galcong {

enum class SemistableKind { Crystalline, Semistable, AfterExtension, Unknown };

struct SemistableFlag {
  SemistableKind kind = SemistableKind::Crystalline;
  unsigned long e_prime = 1;  // only meaningful for AfterExtension
  friend bool operator==(const SemistableFlag&, const SemistableFlag&) = default;
};

std::string to_string(const SemistableFlag& f);
/// crystalline | semistable | after-extension(e′) | unknown. Throws InvalidArgument.
SemistableFlag parse_semistable_flag(const std::string& s);

struct LocalDescriptorV {
  CharPolyOverE charpoly;
  bool semistable_at_v = true;
};

struct LocalDescriptorU {
  Integer ell;
  unsigned long e_u = 1;
  unsigned long e_cap = 1;
  std::vector<unsigned long> ht;  // one block of n entries per embedding of E
  std::vector<TameCharacter> tame_chars;
  SemistableFlag semistable_flag;

  /// Ramification index of the field over which the representation is semistable.
  std::optional<unsigned long> effective_e() const;
};

struct RepDescriptor {
  unsigned long n;
  NumberField field;
  unsigned long b;
  LocalDescriptorV at_v;
  LocalDescriptorU at_u;
};

bool operator==(const RepDescriptor& a, const RepDescriptor& b);

/// Exact sum of a multiset.
Rational sigma(const std::vector<Rational>& xs);
Integer sigma(const std::vector<unsigned long>& xs);

bool is_E_integral(const CharPolyOverE& P);

struct TypeGReport {
  bool holds = false;
  std::optional<WeilWeightMultiset> weights;
  std::optional<NotTypeW> not_type_w;
  Integer sum_W = 0;
  Integer sum_HT = 0;
  Integer total_weight = 0;  // Σ W when type (G) holds
};

/// Σ(W_v) = 2Σ(HT_u), both in the norm view.
TypeGReport is_type_G(const RepDescriptor& desc);

/// Σ_v deg_v Σ(W_v) = 2 Σ_u deg_u Σ(HT_u).
bool global_weight_identity(const std::vector<std::pair<unsigned long, Rational>>& v_data,
                            const std::vector<std::pair<unsigned long, Rational>>& u_data);

enum class CarusoStatus { Pass, Violation, Inapplicable };
struct CarusoResult {
  CarusoStatus status;
  std::string detail;
};
const char* to_string(CarusoStatus s);

/// Checks TI ⊂ [0, b] and Σ(HT) = Σ(TI) when e·b < ℓ − 1.
CarusoResult caruso_validate(const LocalDescriptorU& at_u, unsigned long b);

enum class CongruenceMode { ModLambda, ModEll };

/// a ≡ 0 modulo λ, or modulo ℓO_E, allowing denominators prime to ℓ.
bool divisible_at(const FieldElement& a, const PrimeIdeal& lambda, CongruenceMode mode);

struct NormBoundResult {
  EmbeddingComparison embedding;  // max |ι(a)|² against C0²
  Rational abs_norm;
  Integer ell_power;      // ℓ^f or ℓ^[E:Q]
  Rational c0_power_sq;   // (C0²)^[E:Q]
  bool lower_holds;       // ℓ-power ≤ |N(a)|
  bool upper_holds;       // |N(a)|² ≤ (C0²)^[E:Q]
  bool certified;         // all hypotheses checked and both inequalities hold
  bool conclusion_holds;  // ℓ ≤ C0^{[E:Q]/f} or ℓ ≤ C0
  bool tight;             // equality in the conclusion
  std::string chain;
};

/// Throws ZeroElement, NotIntegral, DivisibilityHypothesisFails.
NormBoundResult norm_bound_lemma(const FieldElement& a, const PrimeIdeal& lambda, const Rational& C0_sq,
                                 CongruenceMode mode);

struct CertStep {
  int number;
  std::string claim;
  std::string rule;
  bool verified;
  std::vector<std::pair<std::string, std::string>> witness;
};

enum class VerdictKind { Concluded, Inapplicable, Contradiction };
const char* to_string(VerdictKind v);

struct Verdict {
  VerdictKind kind;
  int step = 0;  // failing step for Inapplicable / Contradiction
  std::string statement;
};

struct Certificate {
  std::string theorem;
  std::vector<CertStep> steps;
  Verdict verdict;
};

/// Weighted comparison of two Frobenius polynomials modulo λ or ℓ.
Certificate gap_principle(const CharPolyOverE& P, const CharPolyOverE& P2, const PrimeIdeal& lambda,
                          unsigned long w_cap, CongruenceMode mode);

/// Coefficients of a polynomial over the residue field of λ, lowest first.
using ResiduePoly = std::vector<FpPoly>;

ResiduePoly reduce_charpoly_mod_lambda(const CharPolyOverE& P, const PrimeIdeal& lambda);
/// (∏_σ σ(P̄))^{e_λ} over F_ℓ.
FpPoly reduce_charpoly_mod_ell(const ResiduePoly& Pbar, const PrimeIdeal& lambda);

enum class Theorem { T11, T12, T14 };
const char* to_string(Theorem t);
/// t11 | t12 | t14. Throws InvalidArgument.
Theorem parse_theorem(const std::string& s);

/// Replays the hypothesis chain; throws DescriptorMismatch when the pair is not comparable.
Certificate run_theorem(const RepDescriptor& V, const RepDescriptor& V2, const PrimeIdeal& lambda, Theorem which,
                        bool congruence_at_u_holds);

struct VerificationReport {
  bool ok;
  std::vector<std::string> mismatches;
};

/// Re-derives every step through independent routes and compares with the stored certificate.
VerificationReport verify_certificate(const Certificate& cert, const RepDescriptor& V, const RepDescriptor& V2,
                                      const PrimeIdeal& lambda, Theorem which, bool congruence_at_u_holds);

}  // namespace galcong
