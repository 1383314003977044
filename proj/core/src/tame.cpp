#include "galcong/tame.hpp"

#include <algorithm>

#include "galcong/arith.hpp"

namespace galcong {

TameCharacter::TameCharacter(Integer ell, unsigned long h, const Integer& d) : ell_(std::move(ell)), h_(h) {
  if (ell_ < 2) throw InvalidArgument("tame character needs a prime ell");
  if (h_ == 0) throw InvalidArgument("tame character level must be positive");
  d_ = mod(d, order_modulus());
}

Integer TameCharacter::order_modulus() const { return ipow(ell_, h_) - 1; }

std::vector<Rational> TIMultiset::sorted() const {
  std::vector<Rational> s(entries);
  std::sort(s.begin(), s.end());
  return s;
}

Rational TIMultiset::sum() const {
  Rational s = 0;
  for (const auto& x : entries) s += x;
  return s;
}

bool TIMultiset::same_multiset(const TIMultiset& other) const { return sorted() == other.sorted(); }

std::vector<Integer> digits(const TameCharacter& chi) {
  std::vector<Integer> t;
  Integer d = chi.exponent();
  for (unsigned long i = 0; i < chi.level(); ++i) {
    t.push_back(mod(d, chi.ell()));
    d /= chi.ell();
  }
  return t;
}

TIMultiset ti_multiset(const TameCharacter& chi, unsigned long e) {
  if (e == 0) throw InvalidArgument("ramification index must be positive");
  TIMultiset out;
  out.e = e;
  for (const auto& t : digits(chi)) {
    Rational r(t, Integer(e));
    r.canonicalize();
    out.entries.push_back(r);
  }
  return out;
}

TameCharacter restrict_ramified(const TameCharacter& chi, unsigned long e_prime) {
  if (e_prime == 0) throw InvalidArgument("extension degree must be positive");
  return TameCharacter(chi.ell(), chi.level(), chi.exponent() * e_prime);
}

TIMultiset ti_rep_multiset(const std::vector<TameCharacter>& chars, unsigned long e) {
  TIMultiset out;
  out.e = e;
  for (const auto& chi : chars) {
    if (chi.ell() != chars.front().ell()) throw MixedPrimes("tame characters at different primes");
    const auto ti = ti_multiset(chi, e);
    out.entries.insert(out.entries.end(), ti.entries.begin(), ti.entries.end());
  }
  return out;
}

std::string to_string(const TIMultiset& ti) {
  std::string s = "{";
  for (std::size_t i = 0; i < ti.entries.size(); ++i) {
    if (i) s += ", ";
    s += ti.entries[i].get_str();
  }
  return s + "}";
}

}  // namespace galcong
