#pragma once

// Factorization of integer polynomials over Z.

#include <cstdint>
#include <utility>
#include <vector>

#include "galcong/poly.hpp"

namespace galcong {

struct ZFactorization {
  Integer unit;  // signed content
  std::vector<std::pair<IntPoly, unsigned long>> factors;  // primitive, positive leading coefficient
};

inline constexpr std::size_t kDefaultDegreeCap = 24;

/// f = unit * prod factors^mult, factors irreducible over Q and sorted by
/// (degree, coefficients). Uses a good prime, Hensel lifting and subset
/// recombination. Throws DegreeCapExceeded above `degree_cap`.
ZFactorization factor_over_z(const IntPoly& f, std::size_t degree_cap = kDefaultDegreeCap, std::uint64_t seed = 0);

/// Squarefree decomposition over Q: primitive parts with their multiplicities.
std::vector<std::pair<IntPoly, unsigned long>> squarefree_decomposition(const IntPoly& f);

}  // namespace galcong
