#pragma once

// Line-oriented text formats for representation descriptors and eigenforms.
//
// Descriptor: one "key = value" per line, keys
//   field.genpoly, n, b, e_cap, v.q, v.charpoly, u.ell, u.e, u.ht, u.tame,
//   flags.semistable_v, flags.semistable_u.
// Lists are comma-separated; v.charpoly lists field elements (lowest degree
// first) separated by ';', each a comma-separated coordinate vector; u.tame
// lists h:d pairs separated by ';'. Blank lines and '#' comments are skipped.
//
// Eigenform: header keys k, N, eps, field.genpoly, denom, then one line
// "p c_0,c_1,…" per prime in ascending order, where a_p = (Σ c_i α^i)/denom.
// eps lists g:coords pairs separated by ';' giving ε(g) on generators g.

#include <string>

#include "galcong/engine.hpp"
#include "galcong/modforms.hpp"

namespace galcong {

/// Throws ParseError(line, reason).
RepDescriptor parse_descriptor(const std::string& text);
std::string serialize_descriptor(const RepDescriptor& desc);

/// Throws ParseError(line, reason).
Eigenform parse_eigenform(const std::string& text);
std::string serialize_eigenform(const Eigenform& f);

/// Reads a whole file; throws InvalidArgument when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace galcong
