#pragma once

// Exact real-root counting with Sturm sequences.

#include <variant>

#include "galcong/poly.hpp"

namespace galcong {

struct NegInf {};
struct PosInf {};
/// Interval endpoint: a rational or one of the two infinities.
using Bound = std::variant<NegInf, Rational, PosInf>;

/// Number of distinct real roots of f in (lo, hi]. f must be squarefree.
/// Throws NotSquarefree otherwise, InvalidArgument for the zero polynomial.
std::size_t sturm_real_roots(const RatPoly& f, const Bound& lo, const Bound& hi);

/// Convenience overload for a squarefree polynomial over Z.
std::size_t sturm_real_roots(const IntPoly& f, const Bound& lo, const Bound& hi);

}  // namespace galcong
