#pragma once

// High-precision numeric oracle: all complex roots via Aberth iteration.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <vector>

#include "galcong/poly.hpp"

namespace oracle {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<120>>;
using Dec200 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<200>>;

struct Complex {
  Real re, im;
  Real norm2() const { return re * re + im * im; }
};

Real to_real(const galcong::Rational& q);
Dec200 to_dec(const galcong::Rational& q);

/// All complex roots (with multiplicity) of a nonzero polynomial of degree >= 1.
std::vector<Complex> roots(const galcong::RatPoly& f);
std::vector<Complex> roots(const galcong::IntPoly& f);

struct ComplexDec {
  Dec200 re, im;
  Dec200 norm2() const { return re * re + im * im; }
};

/// Roots of a squarefree polynomial, Newton-polished to 200 digits.
std::vector<ComplexDec> roots_dec(const galcong::RatPoly& f);

/// Value of Σ coords[i]·z^i at a complex point.
ComplexDec eval_dec(const std::vector<galcong::Rational>& coords, const ComplexDec& z);

/// True iff every root z has | |z|² − target | <= tol·target.
bool all_moduli_squared_equal(const galcong::IntPoly& f, const galcong::Rational& target, const Real& tol);

}  // namespace oracle
