#pragma once

// Explicit constants C, C', C̃, C₁, C̃₁ evaluated and compared exactly.

#include <optional>
#include <string>

#include "galcong/arith.hpp"

namespace galcong {

enum class BoundKind { CMain, CPrime, CTilde, C1, C1Tilde };

const char* to_string(BoundKind k);
/// Accepts c, cprime, ctilde, c1, c1tilde. Throws InvalidArgument.
BoundKind parse_bound_kind(const std::string& s);

struct BoundParams {
  std::optional<unsigned long> E_deg;   // [E:Q]
  std::optional<unsigned long> f;       // residue degree f_λ
  std::optional<unsigned long> n;
  std::optional<unsigned long> b;       // Hodge–Tate bound
  std::optional<unsigned long> w;       // weight, for C₁ and C̃₁
  std::optional<unsigned long> e;
  std::optional<Integer> q;
  std::optional<unsigned long> K_deg;   // [K:Q], for C'
  std::optional<unsigned long> Kv_deg;  // [K_v:Q_q], for C'
};

/// max{linear, radicand^(1/root)}; the linear branch e²b + 1 is absent for C₁ and C̃₁.
struct BoundExpr {
  BoundKind kind;
  BoundParams params;
  std::optional<Integer> linear;
  Integer radicand;
  unsigned long root;
};

/// Throws MissingParam, InvalidArgument, NonIntegralExponent.
BoundExpr make_bound(BoundKind kind, const BoundParams& params);

/// ℓ > B, decided on integers.
bool exceeds(const Integer& ell, const BoundExpr& B);

struct Threshold {
  Integer value;  // ⌈B⌉
  bool exact;     // B is an integer
};
Threshold threshold_value(const BoundExpr& B);

/// Human-readable form, e.g. "max{12, 16777216}" or "(64)^(1/2)".
std::string describe(const BoundExpr& B);

}  // namespace galcong
