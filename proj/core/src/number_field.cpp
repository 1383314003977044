#include "galcong/number_field.hpp"

#include <sstream>

#include "galcong/arith.hpp"
#include "galcong/sturm.hpp"
#include "galcong/zfactor.hpp"

namespace galcong {

NumberField::NumberField(IntPoly gen_poly) {
  if (!gen_poly.degree() || *gen_poly.degree() == 0)
    throw InvalidArgument("field generator must have degree at least 1");
  if (!gen_poly.is_monic()) throw NotMonic("field generator " + galcong::to_string(gen_poly));
  if (!is_squarefree(to_rat(gen_poly))) throw NotSquarefree("field generator " + galcong::to_string(gen_poly));
  if (*gen_poly.degree() > 1) {
    const auto fz = factor_over_z(gen_poly);
    if (fz.factors.size() != 1)
      throw InvalidArgument("field generator " + galcong::to_string(gen_poly) + " is reducible");
  }
  auto d = std::make_shared<Data>();
  d->degree = *gen_poly.degree();
  d->disc = d->degree == 1 ? Integer(1) : discriminant(gen_poly);
  d->gen_poly = std::move(gen_poly);
  d_ = std::move(d);
}

NumberField NumberField::rationals() {
  static const NumberField q(IntPoly{Integer(0), Integer(1)});
  return q;
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
  const std::size_t d = field_.degree();
  if (coords_.size() > d) {
    // reduce a longer representative modulo g
    RatPoly r = divmod(RatPoly(coords_), to_rat(field_.gen_poly())).second;
    coords_ = r.coeffs();
  }
  coords_.resize(d, Rational(0));
}

FieldElement FieldElement::from_rational(const NumberField& field, const Rational& v) {
  return FieldElement(field, {v});
}

FieldElement FieldElement::generator(const NumberField& field) {
  if (field.degree() == 1) return from_rational(field, -Rational(field.gen_poly()[0]));
  return FieldElement(field, {Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

namespace {

void same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) throw FieldMismatch("elements live in different fields");
}

FieldElement from_poly(const NumberField& E, const RatPoly& p) {
  RatPoly r = divmod(p, to_rat(E.gen_poly())).second;
  return FieldElement(E, r.coeffs());
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  std::vector<Rational> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  std::vector<Rational> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  return from_poly(a.field_, a.as_poly() * b.as_poly());
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coords_);
  for (auto& v : c) v = -v;
  return FieldElement(field_, std::move(c));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ZeroElement("inverse of zero");
  XGcd r = xgcd(as_poly(), to_rat(field_.gen_poly()));
  // r.g is a nonzero constant since g is irreducible
  return from_poly(field_, (1 / r.g[0]) * r.s);
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = from_rational(field_, 1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

RatPoly FieldElement::charpoly() const {
  // Res_x(g(x), t − a(x)) interpolated at t = 0..d
  const std::size_t d = field_.degree();
  const RatPoly g = to_rat(field_.gen_poly());
  const RatPoly a = as_poly();
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= d; ++t) {
    xs.emplace_back(static_cast<unsigned long>(t));
    ys.push_back(resultant(g, RatPoly::constant(xs.back()) - a));
  }
  return interpolate(xs, ys);
}

RatPoly FieldElement::minpoly() const { return squarefree_part(charpoly()); }

bool FieldElement::is_integral() const {
  const RatPoly cp = charpoly();
  for (const auto& c : cp.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

Rational FieldElement::norm() const { return resultant(to_rat(field_.gen_poly()), as_poly()); }

Rational FieldElement::trace() const {
  const RatPoly c = charpoly();
  return -c[field_.degree() - 1];
}

Integer FieldElement::denominator() const {
  Integer l = 1;
  for (const auto& c : coords_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::string FieldElement::to_string(const std::string& var) const {
  return galcong::to_string(as_poly(), var);
}

Rational norm(const FieldElement& a) { return a.norm(); }

bool dedekind_maximal_at(const IntPoly& g, const Integer& ell, std::uint64_t seed) {
  const auto facs = factor_mod_p(g, ell, seed);
  IntPoly G = IntPoly::constant(1), H = IntPoly::constant(1);
  for (const auto& [fac, mult] : facs) {
    const IntPoly lift = fac.lift();
    G = G * lift;
    for (unsigned long i = 1; i < mult; ++i) H = H * lift;
  }
  IntPoly diff = G * H - g;
  std::vector<Integer> c(diff.coeffs());
  for (auto& v : c) {
    if (!mpz_divisible_p(v.get_mpz_t(), ell.get_mpz_t())) throw InvalidArgument("Dedekind lift is inconsistent");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ell.get_mpz_t());
  }
  const FpPoly F(ell, std::move(c));
  FpPoly d = gcd(gcd(F, FpPoly::reduce(G, ell)), FpPoly::reduce(H, ell));
  return d.is_one();
}

std::vector<PrimeIdeal> primes_above(const NumberField& E, const Integer& ell, bool attest_index, std::uint64_t seed) {
  if (!is_prime(ell)) throw NotPrime(ell.get_str() + " is not prime");
  const IntPoly& g = E.gen_poly();
  Integer ell2 = ell * ell;
  const bool small_disc = !mpz_divisible_p(E.disc().get_mpz_t(), ell2.get_mpz_t());
  if (!small_disc && !attest_index && !dedekind_maximal_at(g, ell, seed))
    throw IndexDivisor(ell.get_str() + " divides the index of Z[alpha] for " + to_string(g));
  std::vector<PrimeIdeal> out;
  for (const auto& [fac, mult] : factor_mod_p(g, ell, seed))
    out.push_back(PrimeIdeal{E, ell, *fac.degree(), mult, fac.lift(), out.size()});
  return out;
}

ResidueField::ResidueField(const PrimeIdeal& lambda)
    : ell_(lambda.ell), modulus_(FpPoly::reduce(lambda.local_factor, lambda.ell)) {}

ResidueField::ResidueField(Integer ell, FpPoly modulus) : ell_(std::move(ell)), modulus_(std::move(modulus)) {}

FpPoly ResidueField::reduce(const FpPoly& a) const { return divmod(a, modulus_).second; }

FpPoly ResidueField::element(const std::vector<Integer>& coords) const { return reduce(FpPoly(ell_, coords)); }

FpPoly ResidueField::pow(const FpPoly& a, const Integer& e) const { return powmod(a, e, modulus_); }

FpPoly ResidueField::inverse(const FpPoly& a) const {
  const FpPoly r = reduce(a);
  if (r.is_zero()) throw ZeroElement("inverse of zero in residue field");
  return reduce(xgcd(r, modulus_).s);
}

FpPoly reduce_mod_lambda(const FieldElement& a, const PrimeIdeal& lambda) {
  if (a.field() != lambda.field) throw FieldMismatch("element and prime ideal live in different fields");
  return ResidueField(lambda).reduce(FpPoly::reduce(a.as_poly(), lambda.ell));
}

const char* to_string(EmbeddingComparison c) {
  switch (c) {
    case EmbeddingComparison::AllBelow: return "AllBelow";
    case EmbeddingComparison::SomeAbove: return "SomeAbove";
    case EmbeddingComparison::Equal: return "Equal";
  }
  return "?";
}

RatPoly pairwise_product_poly(const RatPoly& m) {
  // Res_z(m(z), z^D m(y/z)) = ∏_{i,j} (y − z_i z_j), interpolated in y
  const std::size_t D = *m.degree();
  const std::size_t deg = D * D;
  std::vector<Rational> xs, ys;
  for (std::size_t y = 0; y <= deg; ++y) {
    const Rational yv(static_cast<unsigned long>(y));
    std::vector<Rational> c(D + 1);
    Rational pw = 1;
    for (std::size_t k = 0; k <= D; ++k) {
      c[D - k] = m[k] * pw;
      pw *= yv;
    }
    xs.push_back(yv);
    ys.push_back(resultant(m, RatPoly(std::move(c))));
  }
  return interpolate(xs, ys);
}

EmbeddingComparison max_abs_embedding(const FieldElement& a, const Rational& C0_sq) {
  if (C0_sq < 0) throw InvalidArgument("negative squared bound");
  if (a.is_zero()) return C0_sq == 0 ? EmbeddingComparison::Equal : EmbeddingComparison::AllBelow;
  if (a.is_rational()) {
    const Rational sq = a.coords()[0] * a.coords()[0];
    if (sq < C0_sq) return EmbeddingComparison::AllBelow;
    return sq == C0_sq ? EmbeddingComparison::Equal : EmbeddingComparison::SomeAbove;
  }
  // max |ι(a)|² is the largest real root of the pairwise-product polynomial
  const RatPoly R = pairwise_product_poly(a.minpoly());
  const RatPoly Rs = squarefree_part(R);
  if (sturm_real_roots(Rs, Bound{C0_sq}, Bound{PosInf{}}) > 0) return EmbeddingComparison::SomeAbove;
  return R.eval(C0_sq) == 0 ? EmbeddingComparison::Equal : EmbeddingComparison::AllBelow;
}

}  // namespace galcong
