#include "galcong/weil.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "galcong/arith.hpp"
#include "galcong/sturm.hpp"
#include "galcong/zfactor.hpp"

namespace galcong {

CharPolyOverE::CharPolyOverE(NumberField f, std::vector<FieldElement> c, Integer qv)
    : field(std::move(f)), coeffs(std::move(c)), q(std::move(qv)) {
  if (coeffs.size() < 2) throw InvalidArgument("characteristic polynomial of degree 0");
  for (const auto& x : coeffs)
    if (x.field() != field) throw FieldMismatch("coefficient outside the coefficient field");
  if (coeffs.back() != FieldElement::from_rational(field, 1)) throw NotMonic("characteristic polynomial over E");
}

CharPolyOverE CharPolyOverE::from_rational(const NumberField& field, const RatPoly& p, const Integer& q) {
  std::vector<FieldElement> c;
  for (const auto& v : p.coeffs()) c.push_back(FieldElement::from_rational(field, v));
  return CharPolyOverE(field, std::move(c), q);
}

bool CharPolyOverE::is_E_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const FieldElement& c) { return c.is_integral(); });
}

namespace {

// Res_z(m(z), z² − t z + Q) interpolated in t, normalized to be monic.
RatPoly trace_poly(const RatPoly& m, const Rational& Q) {
  const std::size_t d = *m.degree();
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= d; ++t) {
    const Rational tv(static_cast<unsigned long>(t));
    xs.push_back(tv);
    ys.push_back(resultant(m, RatPoly{Q, -tv, Rational(1)}));
  }
  return make_monic(interpolate(xs, ys));
}

// s(y) = A(y)² − y·B(y)² where r(T) = A(T²) + T·B(T²); its roots are the β².
RatPoly squared_root_poly(const RatPoly& r) {
  std::vector<Rational> a, b;
  for (std::size_t i = 0; i < r.size(); ++i) (i % 2 == 0 ? a : b).push_back(r[i]);
  const RatPoly A(a), B(b);
  return A * A - RatPoly::x() * B * B;
}

}  // namespace

bool is_weil_poly(const RatPoly& m, const Integer& q, unsigned long w) {
  if (!m.is_monic()) throw NotMonic(to_string(m));
  if (m[0] == 0) return false;
  const Rational Q(ipow(q, w));
  // roots closed under z ↦ Q/z
  if (reciprocal_scaled(m, Q) != m[0] * m) return false;
  const RatPoly r = squarefree_part(trace_poly(m, Q));
  if (sturm_real_roots(r, NegInf{}, PosInf{}) != *r.degree()) return false;
  const RatPoly s = squarefree_part(squared_root_poly(r));
  const std::size_t at_zero = s[0] == 0 ? 1 : 0;
  return sturm_real_roots(s, Rational(0), 4 * Q) + at_zero == *s.degree();
}

bool is_weil_integer_poly(const IntPoly& m, const Integer& q, unsigned long w) {
  if (!m.is_monic()) throw NotMonic(to_string(m));
  return is_weil_poly(to_rat(m), q, w);
}

RatPoly norm_poly_rational(const CharPolyOverE& P) {
  // Res_x(g(x), P_x(t)) interpolated at t = 0..n·d
  const RatPoly g = to_rat(P.field.gen_poly());
  const std::size_t D = P.degree() * P.field.degree();
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= D; ++t) {
    const Rational tv(static_cast<unsigned long>(t));
    RatPoly h;
    Rational pw = 1;
    for (const auto& c : P.coeffs) {
      h = h + pw * c.as_poly();
      pw *= tv;
    }
    xs.push_back(tv);
    ys.push_back(resultant(g, h));
  }
  return interpolate(xs, ys);
}

IntPoly norm_poly(const CharPolyOverE& P) {
  const RatPoly r = norm_poly_rational(P);
  try {
    return to_int(r);
  } catch (const NotIntegral&) {
    throw NotIntegral("characteristic polynomial is not E-integral: norm " + to_string(r));
  }
}

Integer WeilWeightMultiset::sum() const {
  Integer s = 0;
  for (auto w : entries) s += w;
  return s;
}

std::optional<std::vector<unsigned long>> WeilWeightMultiset::over_E() const {
  std::map<unsigned long, std::size_t> counts;
  for (auto w : entries) ++counts[w];
  std::vector<unsigned long> out;
  for (const auto& [w, c] : counts) {
    if (c % field_degree != 0) return std::nullopt;
    out.insert(out.end(), c / field_degree, w);
  }
  return out;
}

WeilWeightsResult weil_weights(const RatPoly& P, const Integer& q, std::size_t field_degree) {
  if (!P.is_monic()) throw NotMonic(to_string(P));
  if (P[0] == 0) throw ZeroRoot("characteristic polynomial vanishes at 0");
  const auto fz = factor_over_z(clear_denominators(P).first);
  WeilWeightMultiset out;
  out.field_degree = field_degree;
  for (const auto& [F, mult] : fz.factors) {
    const RatPoly Fm = make_monic(to_rat(F));
    const std::size_t d = *Fm.degree();
    const Rational c0sq = Fm[0] * Fm[0];
    // |F(0)| = q^{wd/2}, i.e. F(0)² = q^{wd}
    std::optional<unsigned long> e;
    if (c0sq.get_den() == 1) e = exact_log(c0sq.get_num(), q);
    if (!e) return NotTypeW{Fm, "constant term is not a power of q up to sign"};
    if (*e % d != 0) return NotTypeW{Fm, "fractional weight"};
    const unsigned long w = *e / d;
    if (!is_weil_poly(Fm, q, w)) return NotTypeW{Fm, "roots do not share the modulus q^{" + std::to_string(w) + "/2}"};
    out.entries.insert(out.entries.end(), d * mult, w);
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

WeilWeightsResult weil_weights(const CharPolyOverE& P) {
  if (P.coeffs.front().is_zero()) throw ZeroRoot("characteristic polynomial vanishes at 0");
  return weil_weights(norm_poly_rational(P), P.q, P.field.degree());
}

bool coefficient_weil_bound_check(const CharPolyOverE& P, unsigned long w_total) {
  const std::size_t n = P.degree();
  const Integer qw = ipow(P.q, w_total);
  for (std::size_t i = 1; i <= n; ++i) {
    const Integer b = binomial(n, i);
    const Rational bound_sq(b * b * qw);
    const auto cmp = max_abs_embedding(P.coeffs[n - i], bound_sq);
    if (cmp == EmbeddingComparison::SomeAbove) return false;
  }
  return true;
}

std::string to_string(const WeilWeightMultiset& w) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < w.entries.size(); ++i) os << (i ? ", " : "") << w.entries[i];
  os << "}";
  return os.str();
}

}  // namespace galcong
