#include "galcong/modpoly.hpp"

#include <algorithm>
#include <functional>

#include "galcong/arith.hpp"

namespace galcong {

FpPoly::FpPoly(Integer p, std::vector<Integer> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
  normalize();
}

void FpPoly::normalize() {
  for (auto& v : c_) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::reduce(const IntPoly& f, const Integer& p) { return FpPoly(p, f.coeffs()); }

FpPoly FpPoly::reduce(const RatPoly& f, const Integer& p) {
  std::vector<Integer> c;
  c.reserve(f.size());
  for (const auto& v : f.coeffs()) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), v.get_den_mpz_t(), p.get_mpz_t()) == 0)
      throw DenominatorAtEll("denominator " + v.get_den().get_str() + " is not prime to " + p.get_str());
    c.push_back(v.get_num() * inv);
  }
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::constant(const Integer& p, const Integer& v) { return FpPoly(p, {v}); }
FpPoly FpPoly::x(const Integer& p) { return FpPoly(p, {Integer(0), Integer(1)}); }

IntPoly FpPoly::lift() const { return IntPoly(c_); }

FpPoly FpPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), c_.back().get_mpz_t(), p_.get_mpz_t());
  return inv * *this;
}

Integer FpPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i];
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), p_.get_mpz_t());
  }
  return acc;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  const Integer& p = a.p_ != 0 ? a.p_ : b.p_;
  std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return FpPoly(p, std::move(r));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  const Integer& p = a.p_ != 0 ? a.p_ : b.p_;
  std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return FpPoly(p, std::move(r));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  const Integer& p = a.p_ != 0 ? a.p_ : b.p_;
  if (a.is_zero() || b.is_zero()) return FpPoly(p, {});
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return FpPoly(p, std::move(r));
}

FpPoly operator*(const Integer& s, const FpPoly& a) {
  std::vector<Integer> r(a.c_);
  for (auto& v : r) v *= s;
  return FpPoly(a.p_, std::move(r));
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero mod p");
  const Integer& p = b.modulus();
  if (a.size() < b.size()) return {FpPoly(p, {}), a};
  Integer inv;
  mpz_invert(inv.get_mpz_t(), b.leading().get_mpz_t(), p.get_mpz_t());
  std::vector<Integer> r(a.coeffs());
  std::vector<Integer> q(a.size() - b.size() + 1, Integer(0));
  const auto& bc = b.coeffs();
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer f = r[i + b.size() - 1] * inv;
    mpz_mod(f.get_mpz_t(), f.get_mpz_t(), p.get_mpz_t());
    q[i] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      r[i + j] -= f * bc[j];
      mpz_mod(r[i + j].get_mpz_t(), r[i + j].get_mpz_t(), p.get_mpz_t());
    }
  }
  r.resize(b.size() - 1);
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpXGcd xgcd(const FpPoly& a, const FpPoly& b) {
  const Integer& p = a.modulus() != 0 ? a.modulus() : b.modulus();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1(p, {});
  FpPoly t0(p, {}), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    FpPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Integer inv;
  mpz_invert(inv.get_mpz_t(), r0.leading().get_mpz_t(), p.get_mpz_t());
  return {inv * r0, inv * s0, inv * t0};
}

FpPoly derivative(const FpPoly& a) {
  if (a.size() <= 1) return FpPoly(a.modulus(), {});
  std::vector<Integer> r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a.coeffs()[i] * static_cast<unsigned long>(i);
  return FpPoly(a.modulus(), std::move(r));
}

FpPoly powmod(const FpPoly& base, const Integer& exp, const FpPoly& modulus) {
  const Integer& p = modulus.modulus();
  FpPoly result = divmod(FpPoly::constant(p, 1), modulus).second;
  FpPoly b = divmod(base, modulus).second;
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).second;
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = divmod(result * b, modulus).second;
  }
  return result;
}

namespace {

// g(x) with f(x) = g(x^p), valid when f' = 0 over F_p.
FpPoly pth_root(const FpPoly& f) {
  const Integer& p = f.modulus();
  const unsigned long pp = p.get_ui();
  std::vector<Integer> g;
  for (std::size_t i = 0; i < f.size(); i += pp) g.push_back(f.coeffs()[i]);
  // a^(1/p) = a in F_p
  return FpPoly(p, std::move(g));
}

// Squarefree decomposition of a monic f: pairs (squarefree monic, multiplicity).
void squarefree_decompose(const FpPoly& f, unsigned long mult, std::vector<std::pair<FpPoly, unsigned long>>& out) {
  if (!f.degree() || *f.degree() == 0) return;
  const Integer& p = f.modulus();
  FpPoly df = derivative(f);
  if (df.is_zero()) {
    squarefree_decompose(pth_root(f), mult * p.get_ui(), out);
    return;
  }
  FpPoly c = gcd(f, df);
  FpPoly w = divmod(f, c).first;
  unsigned long i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly z = divmod(w, y).first;
    if (z.degree() && *z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (c.degree() && *c.degree() > 0) squarefree_decompose(pth_root(c), mult * p.get_ui(), out);
}

// Distinct-degree factorization of a squarefree monic f.
std::vector<std::pair<FpPoly, std::size_t>> distinct_degree(const FpPoly& f0) {
  std::vector<std::pair<FpPoly, std::size_t>> out;
  const Integer& p = f0.modulus();
  FpPoly f = f0;
  FpPoly h = FpPoly::x(p);
  std::size_t d = 0;
  while (f.degree() && *f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, p, f);
    FpPoly g = gcd(f, h - FpPoly::x(p));
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
    }
  }
  if (f.degree() && *f.degree() > 0) out.emplace_back(f, *f.degree());
  return out;
}

FpPoly random_poly(const Integer& p, std::size_t max_deg, gmp_randclass& rng) {
  std::vector<Integer> c(max_deg);
  for (auto& v : c) v = rng.get_z_range(p);
  return FpPoly(p, std::move(c));
}

// Cantor-Zassenhaus splitting of a product of irreducibles of degree d.
void equal_degree(const FpPoly& f, std::size_t d, gmp_randclass& rng, std::vector<FpPoly>& out) {
  const std::size_t n = *f.degree();
  if (n == d) {
    out.push_back(f);
    return;
  }
  const Integer& p = f.modulus();
  while (true) {
    FpPoly a = random_poly(p, n, rng);
    if (!a.degree() || *a.degree() == 0) continue;
    FpPoly g = gcd(a, f);
    if (!g.is_one()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
    FpPoly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      FpPoly t = a, acc = a;
      for (std::size_t i = 1; i < d; ++i) {
        t = divmod(t * t, f).second;
        acc = acc + t;
      }
      b = acc;
    } else {
      Integer e = (ipow(p, d) - 1) / 2;
      b = powmod(a, e, f) - FpPoly::constant(p, 1);
    }
    g = gcd(b, f);
    if (!g.is_one() && *g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

std::uint64_t mix_seed(const FpPoly& f, std::uint64_t seed) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ seed;
  auto mix = [&h](const std::string& s) {
    for (char ch : s) h = (h ^ static_cast<unsigned char>(ch)) * 0x100000001b3ULL;
    h ^= h >> 29;
  };
  mix(f.modulus().get_str(16));
  for (const auto& c : f.coeffs()) mix(c.get_str(16));
  return h;
}

}  // namespace

std::vector<FpFactor> factor_mod_p(const FpPoly& f0, std::uint64_t seed) {
  const Integer& p = f0.modulus();
  if (!is_prime(p)) throw NotPrime(p.get_str() + " is not prime");
  if (f0.is_zero()) throw InvalidArgument("polynomial vanishes modulo " + p.get_str());
  FpPoly f = f0.monic();
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(static_cast<unsigned long>(mix_seed(f, seed)));

  std::vector<std::pair<FpPoly, unsigned long>> sqf;
  squarefree_decompose(f, 1, sqf);
  std::vector<FpFactor> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<FpPoly> irr;
      equal_degree(block, d, rng, irr);
      for (auto& g : irr) out.push_back({g.monic(), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.multiplicity < b.multiplicity;
  });
  // merge equal factors (can arise through p-th power branches)
  std::vector<FpFactor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().factor == fac.factor)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

std::vector<FpFactor> factor_mod_p(const IntPoly& f, const Integer& p, std::uint64_t seed) {
  if (!is_prime(p)) throw NotPrime(p.get_str() + " is not prime");
  return factor_mod_p(FpPoly::reduce(f, p), seed);
}

}  // namespace galcong
