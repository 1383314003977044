#include "galcong/sturm.hpp"

namespace galcong {

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  std::vector<RatPoly> chain{f, derivative(f)};
  while (!chain.back().is_zero()) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_at(const RatPoly& p, const Bound& x) {
  if (p.is_zero()) return 0;
  const int lead = sgn(p.leading());
  const std::size_t d = *p.degree();
  if (std::holds_alternative<PosInf>(x)) return lead;
  if (std::holds_alternative<NegInf>(x)) return d % 2 == 0 ? lead : -lead;
  return sgn(p.eval(std::get<Rational>(x)));
}

std::size_t variations(const std::vector<RatPoly>& chain, const Bound& x) {
  std::size_t v = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int order(const Bound& b) {
  if (std::holds_alternative<NegInf>(b)) return -1;
  if (std::holds_alternative<PosInf>(b)) return 1;
  return 0;
}

}  // namespace

std::size_t sturm_real_roots(const RatPoly& f, const Bound& lo, const Bound& hi) {
  if (f.is_zero()) throw InvalidArgument("sturm count of the zero polynomial");
  if (*f.degree() == 0) return 0;
  if (!is_squarefree(f)) throw NotSquarefree(to_string(f));
  const int olo = order(lo), ohi = order(hi);
  if (olo > ohi) return 0;
  if (olo == 0 && ohi == 0 && std::get<Rational>(lo) >= std::get<Rational>(hi)) return 0;
  if (olo == ohi && olo != 0) return 0;
  const auto chain = sturm_chain(f);
  // V(a) - V(b) counts roots in (a, b] for squarefree f
  const std::size_t va = variations(chain, lo), vb = variations(chain, hi);
  return va - vb;
}

std::size_t sturm_real_roots(const IntPoly& f, const Bound& lo, const Bound& hi) {
  return sturm_real_roots(to_rat(f), lo, hi);
}

}  // namespace galcong
