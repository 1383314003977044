#include "galcong/zfactor.hpp"

#include <algorithm>

#include "galcong/arith.hpp"
#include "galcong/modpoly.hpp"

namespace galcong {

std::vector<std::pair<IntPoly, unsigned long>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, unsigned long>> out;
  if (!f.degree() || *f.degree() == 0) return out;
  // Yun's algorithm over Q
  const RatPoly a = to_rat(f);
  const RatPoly da = derivative(a);
  RatPoly b = gcd(a, da);
  RatPoly c = divmod(a, b).first;
  RatPoly d = divmod(da, b).first - derivative(c);
  for (unsigned long i = 1; !c.is_constant(); ++i) {
    RatPoly g = gcd(c, d);
    if (!g.is_constant()) out.emplace_back(primitive_part(clear_denominators(g).first), i);
    c = divmod(c, g).first;
    d = divmod(d, g).first - derivative(c);
  }
  return out;
}

namespace {

IntPoly symmetric(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.coeffs());
  const Integer half = m / 2;
  for (auto& v : c) {
    v = mod(v, m);
    if (v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

IntPoly reduce_coeffs(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.coeffs());
  for (auto& v : c) v = mod(v, m);
  return IntPoly(std::move(c));
}

// Given g ≡ A·B (mod p) with A monic and gcd(A, B) = 1 mod p, returns
// lifts with g ≡ A·B (mod p^a).
std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& g, IntPoly A, IntPoly B, const Integer& p, unsigned long a) {
  const FpXGcd st = xgcd(FpPoly::reduce(A, p), FpPoly::reduce(B, p));
  const FpPoly& s = st.s;  // s·A + t·B = 1
  const FpPoly& t = st.t;
  Integer m = p;
  for (unsigned long k = 1; k < a; ++k) {
    IntPoly err = g - A * B;
    std::vector<Integer> ec(err.coeffs());
    for (auto& v : ec) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    const FpPoly e(p, std::move(ec));
    auto [q, dA] = divmod(t * e, FpPoly::reduce(A, p));
    const FpPoly dB = s * e + q * FpPoly::reduce(B, p);
    A = A + m * dA.lift();
    B = B + m * dB.lift();
    m *= p;
    A = reduce_coeffs(A, m);
    B = reduce_coeffs(B, m);
  }
  return {A, B};
}

// Lifts the monic mod-p factors of g (g ≡ lc·∏ factors) to monic factors mod p^a.
void hensel_multi(const IntPoly& g, const std::vector<FpPoly>& facs, const Integer& p, unsigned long a,
                  const Integer& pa, std::vector<IntPoly>& out) {
  if (facs.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), g.leading().get_mpz_t(), pa.get_mpz_t());
    out.push_back(reduce_coeffs(inv * g, pa));
    return;
  }
  const std::size_t half = facs.size() / 2;
  std::vector<FpPoly> left(facs.begin(), facs.begin() + half), right(facs.begin() + half, facs.end());
  FpPoly A = FpPoly::constant(p, 1), B = FpPoly::constant(p, g.leading());
  for (const auto& f : left) A = A * f;
  for (const auto& f : right) B = B * f;
  auto [Al, Bl] = hensel_pair(g, A.lift(), B.lift(), p, a);
  hensel_multi(Al, left, p, a, pa, out);
  hensel_multi(Bl, right, p, a, pa, out);
}

Integer coefficient_bound(const IntPoly& g) {
  Integer mx = 0;
  for (const auto& v : g.coeffs()) mx = std::max(mx, Integer(abs(v)));
  const std::size_t n = *g.degree();
  Integer bound = mx * Integer(n + 1) * ipow(2, n) * abs(g.leading());
  return 2 * bound + 1;
}

std::vector<IntPoly> factor_squarefree(const IntPoly& g0, std::uint64_t seed) {
  IntPoly g = primitive_part(g0);
  const std::size_t n = *g.degree();
  if (n <= 1) return {g};

  // pick the good prime with the fewest modular factors among the first few
  Integer best_p = 0;
  std::vector<FpPoly> best;
  int tried = 0;
  for (Integer p = 3; tried < 5; p = next_prime(p)) {
    if (mpz_divisible_p(g.leading().get_mpz_t(), p.get_mpz_t())) continue;
    const FpPoly gb = FpPoly::reduce(g, p);
    if (!gcd(gb, derivative(gb)).is_one()) continue;
    ++tried;
    std::vector<FpPoly> facs;
    for (const auto& f : factor_mod_p(gb, seed)) facs.push_back(f.factor);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {g};

  const Integer& p = best_p;
  const Integer bound = coefficient_bound(g);
  unsigned long a = 1;
  Integer pa = p;
  while (pa <= bound) {
    pa *= p;
    ++a;
  }
  std::vector<IntPoly> lifted;
  hensel_multi(g, best, p, a, pa, lifted);

  // Zassenhaus recombination
  std::vector<IntPoly> result;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<bool> pick(r, false);
    std::fill(pick.begin(), pick.begin() + s, true);
    do {
      IntPoly cand = IntPoly::constant(g.leading());
      for (std::size_t i = 0; i < r; ++i)
        if (pick[i]) cand = symmetric(cand * lifted[i], pa);
      IntPoly h = primitive_part(cand);
      if (auto q = exact_quotient(g, h)) {
        result.push_back(h);
        g = primitive_part(*q);
        std::vector<IntPoly> rest;
        for (std::size_t i = 0; i < r; ++i)
          if (!pick[i]) rest.push_back(lifted[i]);
        lifted = std::move(rest);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (g.degree() && *g.degree() > 0) result.push_back(g);
  return result;
}

}  // namespace

ZFactorization factor_over_z(const IntPoly& f, std::size_t degree_cap, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  if (*f.degree() > degree_cap)
    throw DegreeCapExceeded("degree " + std::to_string(*f.degree()) + " exceeds cap " + std::to_string(degree_cap));
  ZFactorization out;
  out.unit = content(f);
  if (f.leading() < 0) out.unit = -out.unit;
  for (const auto& [part, mult] : squarefree_decomposition(f))
    for (auto& h : factor_squarefree(part, seed)) out.factors.emplace_back(std::move(h), mult);
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

}  // namespace galcong
