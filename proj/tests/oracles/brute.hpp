#pragma once

// Brute-force oracles used only by tests.

#include <cstdint>
#include <vector>

#include "galcong/poly.hpp"

namespace oracle {

using galcong::Integer;
using galcong::IntPoly;
using galcong::Rational;
using galcong::RatPoly;

/// Roots of f in F_p by exhaustive search (small p).
std::vector<unsigned long> roots_mod_p(const IntPoly& f, unsigned long p);

/// Number of distinct real roots in (lo, hi] of a product of linear factors
/// with the given rational roots, counted by sampling signs between them.
std::size_t sign_change_count(const RatPoly& f, const std::vector<Rational>& candidate_roots, const Rational& lo,
                              const Rational& hi);

/// Coefficients of q·∏(1 − q^n)^24 up to q^prec.
std::vector<Integer> delta_product(std::size_t prec);

/// Classical dimension of level-one cusp forms of weight k.
long cusp_dimension(long k);

/// Bernoulli numbers from the recurrence Σ_{j<=n} C(n+1, j) B_j = 0.
Rational bernoulli_recurrence(unsigned n);

/// Characteristic polynomial of a square matrix over F_p by cofactor expansion (small sizes).
std::vector<std::int64_t> charpoly_mod_p(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p);

/// Characteristic polynomial over F_ℓ of the companion matrix of P acting on
/// (F_ℓ[x]/(φ^e))^n. P is monic; coefficient i is given by integer coordinates
/// in the power basis of the generator, which is sent to x.
std::vector<std::int64_t> companion_charpoly_mod_ell(const std::vector<std::vector<std::int64_t>>& P,
                                                     const std::vector<std::int64_t>& phi, unsigned e,
                                                     std::int64_t ell);

/// Sum of d^e over divisors d of n.
Integer sigma_power(unsigned long n, unsigned long e);

}  // namespace oracle
