#include "galcong/engine.hpp"

#include <algorithm>
#include <sstream>

#include "galcong/errors.hpp"

namespace galcong {

namespace {

std::string str(const Integer& v) { return v.get_str(); }
std::string str(const Rational& v) { return v.get_str(); }
std::string str(bool v) { return v ? "true" : "false"; }
std::string str(unsigned long v) { return std::to_string(v); }

std::string ti_str(const std::vector<Rational>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i].get_str();
  os << "}";
  return os.str();
}

std::string poly_str(const CharPolyOverE& P) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = P.coeffs.size(); i-- > 0;) {
    if (P.coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = P.coeffs[i].to_string();
    if (i == 0) {
      os << c;
    } else {
      if (!(P.coeffs[i].is_rational() && P.coeffs[i].coords()[0] == 1)) os << "(" << c << ")*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

Rational rpow(const Rational& base, unsigned long e) {
  Rational r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

// ℓ > B read off the rounded threshold instead of the integer comparison.
bool exceeds_via_threshold(const Integer& ell, const BoundExpr& B) {
  const Threshold t = threshold_value(B);
  return t.exact ? ell > t.value : ell >= t.value;
}

FieldElement difference(const CharPolyOverE& P, const CharPolyOverE& P2, std::size_t i) {
  return P.coeffs[i] - P2.coeffs[i];
}

void check_comparable(const CharPolyOverE& P, const CharPolyOverE& P2, const PrimeIdeal& lambda) {
  if (P.field != P2.field || P.field != lambda.field) throw FieldMismatch("polynomials and prime live over different fields");
  if (P.degree() != P2.degree()) throw DimensionMismatch("degrees " + std::to_string(P.degree()) + " and " +
                                                         std::to_string(P2.degree()));
  if (P.q != P2.q) throw DimensionMismatch("Frobenius sizes " + str(P.q) + " and " + str(P2.q));
}

BoundExpr gap_bound(const PrimeIdeal& lambda, std::size_t n, unsigned long w_cap, const Integer& q,
                    CongruenceMode mode) {
  BoundParams p;
  p.n = n;
  p.w = w_cap;
  p.q = q;
  if (mode == CongruenceMode::ModLambda) {
    p.E_deg = lambda.field.degree();
    p.f = lambda.f;
    return make_bound(BoundKind::C1, p);
  }
  return make_bound(BoundKind::C1Tilde, p);
}

// 4·binom(n, ⌊n/2⌋)²·q^w, the square of the coefficient-difference bound.
Rational difference_bound_sq(std::size_t n, unsigned long w_cap, const Integer& q) {
  const Integer b = binomial(n, n / 2);
  return Rational(4 * b * b * ipow(q, w_cap));
}

}  // namespace

std::string to_string(const SemistableFlag& f) {
  switch (f.kind) {
    case SemistableKind::Crystalline: return "crystalline";
    case SemistableKind::Semistable: return "semistable";
    case SemistableKind::AfterExtension: return "after-extension(" + std::to_string(f.e_prime) + ")";
    case SemistableKind::Unknown: return "unknown";
  }
  return "unknown";
}

SemistableFlag parse_semistable_flag(const std::string& s) {
  if (s == "crystalline") return {SemistableKind::Crystalline, 1};
  if (s == "semistable") return {SemistableKind::Semistable, 1};
  if (s == "unknown") return {SemistableKind::Unknown, 1};
  const std::string head = "after-extension(";
  if (s.size() > head.size() + 1 && s.compare(0, head.size(), head) == 0 && s.back() == ')') {
    const std::string num = s.substr(head.size(), s.size() - head.size() - 1);
    if (!num.empty() && std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        num.size() < 10) {
      const unsigned long v = std::stoul(num);
      if (v >= 1) return {SemistableKind::AfterExtension, v};
    }
  }
  throw InvalidArgument("unrecognized semistability flag '" + s + "'");
}

std::optional<unsigned long> LocalDescriptorU::effective_e() const {
  switch (semistable_flag.kind) {
    case SemistableKind::Crystalline:
    case SemistableKind::Semistable: return e_u;
    case SemistableKind::AfterExtension: return e_u * semistable_flag.e_prime;
    case SemistableKind::Unknown: return std::nullopt;
  }
  return std::nullopt;
}

bool operator==(const RepDescriptor& a, const RepDescriptor& b) {
  return a.n == b.n && a.field == b.field && a.b == b.b && a.at_v.charpoly == b.at_v.charpoly &&
         a.at_v.semistable_at_v == b.at_v.semistable_at_v && a.at_u.ell == b.at_u.ell && a.at_u.e_u == b.at_u.e_u &&
         a.at_u.e_cap == b.at_u.e_cap && a.at_u.ht == b.at_u.ht && a.at_u.tame_chars == b.at_u.tame_chars &&
         a.at_u.semistable_flag == b.at_u.semistable_flag;
}

Rational sigma(const std::vector<Rational>& xs) {
  Rational s = 0;
  for (const auto& x : xs) s += x;
  return s;
}

Integer sigma(const std::vector<unsigned long>& xs) {
  Integer s = 0;
  for (auto x : xs) s += x;
  return s;
}

bool is_E_integral(const CharPolyOverE& P) { return P.is_E_integral(); }

TypeGReport is_type_G(const RepDescriptor& desc) {
  TypeGReport r;
  r.sum_HT = sigma(desc.at_u.ht);
  auto w = weil_weights(desc.at_v.charpoly);
  if (auto* bad = std::get_if<NotTypeW>(&w)) {
    r.not_type_w = *bad;
    return r;
  }
  r.weights = std::get<WeilWeightMultiset>(w);
  r.sum_W = r.weights->sum();
  r.holds = r.sum_W == 2 * r.sum_HT;
  if (r.holds) r.total_weight = r.sum_W;
  return r;
}

bool global_weight_identity(const std::vector<std::pair<unsigned long, Rational>>& v_data,
                            const std::vector<std::pair<unsigned long, Rational>>& u_data) {
  Rational lhs = 0, rhs = 0;
  for (const auto& [deg, s] : v_data) {
    if (deg == 0) throw InvalidArgument("local degree must be positive");
    lhs += Rational(deg) * s;
  }
  for (const auto& [deg, s] : u_data) {
    if (deg == 0) throw InvalidArgument("local degree must be positive");
    rhs += Rational(deg) * s;
  }
  return lhs == 2 * rhs;
}

const char* to_string(CarusoStatus s) {
  switch (s) {
    case CarusoStatus::Pass: return "Pass";
    case CarusoStatus::Violation: return "Violation";
    case CarusoStatus::Inapplicable: return "Inapplicable";
  }
  return "?";
}

CarusoResult caruso_validate(const LocalDescriptorU& at_u, unsigned long b) {
  const auto e = at_u.effective_e();
  if (!e) return {CarusoStatus::Inapplicable, "semistability unknown"};
  const Integer eb = Integer(*e) * b;
  if (!(eb < at_u.ell - 1))
    return {CarusoStatus::Inapplicable, "e*b = " + str(eb) + " is not below ell-1 = " + str(Integer(at_u.ell - 1))};
  for (const auto& chi : at_u.tame_chars)
    if (chi.ell() != at_u.ell)
      return {CarusoStatus::Violation, "tame character at " + str(chi.ell()) + " instead of " + str(at_u.ell)};
  const TIMultiset ti = ti_rep_multiset(at_u.tame_chars, *e);
  for (const auto& t : ti.entries)
    if (t < 0 || t > b) return {CarusoStatus::Violation, "(i) tame inertia weight " + str(t) + " outside [0, " + str(b) + "]"};
  const Rational s_ti = ti.sum();
  const Integer s_ht = sigma(at_u.ht);
  if (Rational(s_ht) != s_ti)
    return {CarusoStatus::Violation, "(ii) sum HT = " + str(s_ht) + " but sum TI = " + str(s_ti)};
  return {CarusoStatus::Pass, "TI " + to_string(ti) + " within [0, " + str(b) + "], sums " + str(s_ti)};
}

bool divisible_at(const FieldElement& a, const PrimeIdeal& lambda, CongruenceMode mode) {
  if (a.field() != lambda.field) throw FieldMismatch("element and prime live over different fields");
  if (a.is_zero()) return true;
  if (mode == CongruenceMode::ModLambda) {
    try {
      return reduce_mod_lambda(a, lambda).is_zero();
    } catch (const DenominatorAtEll&) {
      return false;
    }
  }
  // a/ℓ must be integral at every prime above ℓ
  const FieldElement x = a * FieldElement::from_rational(a.field(), Rational(1) / Rational(lambda.ell));
  const RatPoly cp = x.charpoly();
  for (const auto& c : cp.coeffs())
    if (c.get_den() % lambda.ell == 0) return false;
  return true;
}

NormBoundResult norm_bound_lemma(const FieldElement& a, const PrimeIdeal& lambda, const Rational& C0_sq,
                                 CongruenceMode mode) {
  if (a.is_zero()) throw ZeroElement("norm lemma needs a nonzero element");
  if (!a.is_integral()) throw NotIntegral(a.to_string() + " is not an algebraic integer");
  if (!divisible_at(a, lambda, mode))
    throw DivisibilityHypothesisFails(std::string(mode == CongruenceMode::ModLambda ? "lambda" : "ell") +
                                      " does not divide " + a.to_string());
  const unsigned long d = a.field().degree();
  const unsigned long exp = mode == CongruenceMode::ModLambda ? lambda.f : d;
  NormBoundResult r;
  r.embedding = max_abs_embedding(a, C0_sq);
  r.abs_norm = abs(norm(a));
  r.ell_power = ipow(lambda.ell, exp);
  r.c0_power_sq = rpow(C0_sq, d);
  r.lower_holds = Rational(r.ell_power) <= r.abs_norm;
  r.upper_holds = r.abs_norm * r.abs_norm <= r.c0_power_sq;
  r.certified = r.embedding != EmbeddingComparison::SomeAbove && r.lower_holds && r.upper_holds;
  // ℓ^{2·exp} ≤ (C0²)^{[E:Q]}, i.e. ℓ ≤ C0^{[E:Q]/exp}
  const Rational lhs(ipow(lambda.ell, 2 * exp));
  r.conclusion_holds = lhs <= r.c0_power_sq;
  r.tight = lhs == r.c0_power_sq;
  std::ostringstream os;
  os << "ell^" << exp << " = " << r.ell_power.get_str() << (r.lower_holds ? " <= " : " > ") << "|N(a)| = "
     << r.abs_norm.get_str() << "; |N(a)|^2 = " << Rational(r.abs_norm * r.abs_norm).get_str()
     << (r.upper_holds ? " <= " : " > ") << "(C0^2)^" << d << " = " << r.c0_power_sq.get_str() << "; max |iota(a)|^2 vs C0^2: "
     << to_string(r.embedding);
  if (r.certified) os << "; hence ell <= C0^(" << d << "/" << exp << ")" << (r.tight ? ", tight" : "");
  r.chain = os.str();
  return r;
}

const char* to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Concluded: return "Concluded";
    case VerdictKind::Inapplicable: return "Inapplicable";
    case VerdictKind::Contradiction: return "Contradiction";
  }
  return "?";
}

Certificate gap_principle(const CharPolyOverE& P, const CharPolyOverE& P2, const PrimeIdeal& lambda,
                          unsigned long w_cap, CongruenceMode mode) {
  check_comparable(P, P2, lambda);
  const std::size_t n = P.degree();
  const unsigned long d = P.field.degree();
  Certificate cert;
  cert.theorem = mode == CongruenceMode::ModLambda ? "gap principle mod lambda" : "gap principle mod ell";
  auto fail = [&](VerdictKind kind, const std::string& why) {
    cert.verdict = {kind, cert.steps.back().number, why};
    return cert;
  };

  // 1. type (W) with bounded total weight in the E-view
  {
    CertStep s{1, "both polynomials are of type (W) with E-view total weight <= " + str(w_cap), "weil-weights", true, {}};
    const std::pair<const CharPolyOverE*, const char*> sides[] = {{&P, "P"}, {&P2, "P'"}};
    for (const auto& [poly, tag] : sides) {
      const std::string t = tag;
      s.witness.emplace_back(t, poly_str(*poly));
      s.witness.emplace_back(t + ".E_integral", str(poly->is_E_integral()));
      if (poly->coeffs.front().is_zero()) {
        s.verified = false;
        s.witness.emplace_back(t + ".weights", "zero root");
        continue;
      }
      auto w = weil_weights(*poly);
      if (auto* bad = std::get_if<NotTypeW>(&w)) {
        s.verified = false;
        s.witness.emplace_back(t + ".weights", "not type (W): " + bad->reason);
        continue;
      }
      const auto& ws = std::get<WeilWeightMultiset>(w);
      const Rational sum_E = Rational(ws.sum()) / Rational(d);
      s.witness.emplace_back(t + ".weights", to_string(ws));
      s.witness.emplace_back(t + ".sum_E", str(sum_E));
      if (sum_E > w_cap) {
        s.verified = false;
        continue;
      }
      const bool coeff_ok = coefficient_weil_bound_check(*poly, w_cap);
      s.witness.emplace_back(t + ".coefficient_bounds", str(coeff_ok));
      s.verified = s.verified && coeff_ok;
    }
    cert.steps.push_back(std::move(s));
    if (!cert.steps.back().verified) return fail(VerdictKind::Inapplicable, "weight hypothesis fails");
  }

  // 2. ℓ above C₁ or C̃₁
  const BoundExpr B = gap_bound(lambda, n, w_cap, P.q, mode);
  {
    const bool ok = exceeds(lambda.ell, B);
    CertStep s{2, "ell exceeds " + std::string(to_string(B.kind)), "bound-exceeded", ok, {}};
    s.witness.emplace_back("bound", describe(B));
    s.witness.emplace_back("threshold", str(threshold_value(B).value));
    s.witness.emplace_back("ell", str(lambda.ell));
    cert.steps.push_back(std::move(s));
    if (!ok)
      return fail(VerdictKind::Inapplicable,
                  str(lambda.ell) + " <= " + to_string(B.kind) + " = " + describe(B));
  }

  // 3. coefficientwise congruence
  std::optional<std::size_t> first_diff;
  {
    bool ok = true;
    std::size_t offending = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      const FieldElement diff = difference(P, P2, i);
      if (!diff.is_zero() && !first_diff) first_diff = i;
      if (!divisible_at(diff, lambda, mode)) {
        ok = false;
        offending = i;
        break;
      }
    }
    CertStep s{3, std::string("P is congruent to P' modulo ") + (mode == CongruenceMode::ModLambda ? "lambda" : "ell"),
               "coefficient-congruence", ok, {}};
    s.witness.emplace_back("prime", "(" + str(lambda.ell) + ", " + to_string(lambda.local_factor, "x") + ")");
    if (!ok) s.witness.emplace_back("first non-congruent coefficient", "T^" + std::to_string(offending));
    cert.steps.push_back(std::move(s));
    if (!ok) return fail(VerdictKind::Inapplicable, "not congruent at coefficient of T^" + std::to_string(offending));
  }

  // 4. equality
  {
    const bool equal = !first_diff.has_value();
    CertStep s{4, "P = P'", "gap-equality", equal, {}};
    if (!equal) {
      const std::size_t i = *first_diff;
      const FieldElement diff = difference(P, P2, i);
      s.witness.emplace_back("offending coefficient", "T^" + std::to_string(i));
      s.witness.emplace_back("difference", diff.to_string());
      const Rational C0_sq = difference_bound_sq(n, w_cap, P.q);
      s.witness.emplace_back("C0^2", str(C0_sq));
      std::string diagnosis;
      if (!diff.is_integral()) {
        std::string who;
        if (!P.is_E_integral()) who += "P";
        if (!P2.is_E_integral()) who += who.empty() ? "P'" : " and P'";
        diagnosis = "difference is not integral: E-integrality fails for " + (who.empty() ? std::string("P - P'") : who);
      } else {
        const NormBoundResult nb = norm_bound_lemma(diff, lambda, C0_sq, mode);
        s.witness.emplace_back("norm chain", nb.chain);
        if (nb.embedding == EmbeddingComparison::SomeAbove)
          diagnosis = "difference exceeds C0 at some embedding: weight hypothesis fails";
        else if (!nb.upper_holds)
          diagnosis = "|N(a)| exceeds C0^[E:Q]";
        else
          diagnosis = "norm lemma forces ell <= C0^([E:Q]/f), contradicting step 2";
      }
      s.witness.emplace_back("diagnosis", diagnosis);
      cert.steps.push_back(std::move(s));
      return fail(VerdictKind::Contradiction, diagnosis);
    }
    cert.steps.push_back(std::move(s));
  }
  cert.verdict = {VerdictKind::Concluded, 0, "P = P'"};
  return cert;
}

ResiduePoly reduce_charpoly_mod_lambda(const CharPolyOverE& P, const PrimeIdeal& lambda) {
  if (P.field != lambda.field) throw FieldMismatch("polynomial and prime live over different fields");
  ResiduePoly out;
  out.reserve(P.coeffs.size());
  for (const auto& c : P.coeffs) out.push_back(reduce_mod_lambda(c, lambda));
  return out;
}

namespace {

ResiduePoly residue_mul(const ResidueField& K, const ResiduePoly& a, const ResiduePoly& b) {
  if (a.empty() || b.empty()) return {};
  ResiduePoly r(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  return r;
}

}  // namespace

FpPoly reduce_charpoly_mod_ell(const ResiduePoly& Pbar, const PrimeIdeal& lambda) {
  const ResidueField K(lambda);
  ResiduePoly base;
  for (const auto& c : Pbar) base.push_back(K.reduce(c));
  ResiduePoly orbit = base, conj = base;
  for (std::size_t j = 1; j < lambda.f; ++j) {
    for (auto& c : conj) c = K.frobenius(c);
    orbit = residue_mul(K, orbit, conj);
  }
  ResiduePoly total = {K.one()};
  for (std::size_t j = 0; j < lambda.e; ++j) total = residue_mul(K, total, orbit);
  std::vector<Integer> out;
  for (const auto& c : total) {
    if (c.degree().value_or(0) > 0) throw InvalidArgument("Frobenius orbit product is not defined over F_ell");
    out.push_back(c[0]);
  }
  return FpPoly(lambda.ell, out);
}

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::T11: return "t11";
    case Theorem::T12: return "t12";
    case Theorem::T14: return "t14";
  }
  return "?";
}

Theorem parse_theorem(const std::string& s) {
  if (s == "t11") return Theorem::T11;
  if (s == "t12") return Theorem::T12;
  if (s == "t14") return Theorem::T14;
  throw InvalidArgument("unknown theorem '" + s + "' (expected t11, t12 or t14)");
}

namespace {

void check_descriptor_pair(const RepDescriptor& V, const RepDescriptor& V2, const PrimeIdeal& lambda) {
  auto mismatch = [](const std::string& what) { throw DescriptorMismatch(what); };
  if (V.n == 0 || V2.n == 0) mismatch("dimension must be positive");
  if (V.n != V2.n) mismatch("dimensions differ");
  if (V.field != V2.field) mismatch("coefficient fields differ");
  if (V.b != V2.b) mismatch("Hodge-Tate bounds differ");
  if (V.at_u.e_cap != V2.at_u.e_cap) mismatch("ramification caps differ");
  if (V.at_v.charpoly.q != V2.at_v.charpoly.q) mismatch("residue sizes at v differ");
  if (V.at_u.ell != V2.at_u.ell) mismatch("residue characteristics at u differ");
  if (lambda.field != V.field) mismatch("prime lies over a different field");
  if (lambda.ell != V.at_u.ell) mismatch("prime lies above " + str(lambda.ell) + ", descriptors at " + str(V.at_u.ell));
  for (const auto* d : {&V, &V2})
    if (d->at_v.charpoly.degree() != d->n || d->at_v.charpoly.field != d->field)
      mismatch("characteristic polynomial does not match the descriptor dimension or field");
}

BoundExpr main_bound(const RepDescriptor& V, const PrimeIdeal& lambda, Theorem which) {
  BoundParams p;
  p.n = V.n;
  p.b = V.b;
  p.e = V.at_u.e_cap;
  p.q = V.at_v.charpoly.q;
  if (which == Theorem::T14) return make_bound(BoundKind::CTilde, p);
  p.E_deg = V.field.degree();
  p.f = lambda.f;
  return make_bound(BoundKind::CMain, p);
}

std::string concluded_statement(Theorem which) {
  return which == Theorem::T12 ? "W_v(V) = W_v(V')" : "P = P', so V and V' have isomorphic semisimplifications at v";
}

}  // namespace

Certificate run_theorem(const RepDescriptor& V, const RepDescriptor& V2, const PrimeIdeal& lambda, Theorem which,
                        bool congruence_at_u_holds) {
  check_descriptor_pair(V, V2, lambda);
  Certificate cert;
  cert.theorem = to_string(which);
  const Integer& ell = lambda.ell;
  const unsigned long d = V.field.degree();
  auto stop = [&](const std::string& why) {
    cert.verdict = {VerdictKind::Inapplicable, cert.steps.back().number, why};
    return cert;
  };

  // 1
  {
    const BoundExpr B = main_bound(V, lambda, which);
    const bool ok = exceeds(ell, B);
    CertStep s{1, "ell > " + std::string(to_string(B.kind)), "bound-exceeded", ok, {}};
    s.witness.emplace_back("bound", describe(B));
    s.witness.emplace_back("threshold", str(threshold_value(B).value));
    s.witness.emplace_back("ell", str(ell));
    cert.steps.push_back(std::move(s));
    if (!ok) return stop("ell = " + str(ell) + " does not exceed " + describe(B));
  }

  // 2
  {
    const unsigned long e = V.at_u.e_cap;
    const Integer e2b = Integer(e) * e * V.b;
    bool ok = e2b < ell - 1;
    CertStep s{2, "e^2*b < ell-1 and semistable over a field with ramification dividing e", "ramification-gate", ok, {}};
    s.witness.emplace_back("e^2*b", str(e2b));
    s.witness.emplace_back("ell-1", str(Integer(ell - 1)));
    const std::pair<const RepDescriptor*, const char*> sides[] = {{&V, "V"}, {&V2, "V'"}};
    for (const auto& [desc, tag] : sides) {
      const auto ee = desc->at_u.effective_e();
      const std::string t = tag;
      s.witness.emplace_back(t + ".semistability", to_string(desc->at_u.semistable_flag));
      s.witness.emplace_back(t + ".ramification", ee ? str(*ee) : "unknown");
      if (!ee || e % *ee != 0) ok = false;
    }
    s.verified = ok;
    cert.steps.push_back(std::move(s));
    if (!ok) return stop("ramification gate fails");
  }

  // 3
  {
    CertStep s{3, "V and V' agree modulo lambda on inertia at u; TI within [0, b]", "tame-inertia-agreement", true, {}};
    s.witness.emplace_back("congruence at u", congruence_at_u_holds ? "attested" : "not attested");
    bool ok = congruence_at_u_holds;
    std::optional<TIMultiset> ti[2];
    const RepDescriptor* descs[2] = {&V, &V2};
    const char* tags[2] = {"V", "V'"};
    for (int k = 0; k < 2; ++k) {
      const CarusoResult c = caruso_validate(descs[k]->at_u, descs[k]->b);
      s.witness.emplace_back(std::string(tags[k]) + ".caruso", std::string(to_string(c.status)) + ": " + c.detail);
      if (c.status != CarusoStatus::Pass) {
        ok = false;
        continue;
      }
      ti[k] = ti_rep_multiset(descs[k]->at_u.tame_chars, *descs[k]->at_u.effective_e());
      s.witness.emplace_back(std::string(tags[k]) + ".TI", ti_str(ti[k]->sorted()));
    }
    if (ti[0] && ti[1] && !ti[0]->same_multiset(*ti[1])) {
      ok = false;
      s.witness.emplace_back("TI agreement", "false");
    }
    s.verified = ok;
    cert.steps.push_back(std::move(s));
    if (!ok) return stop("tame data at u do not certify the congruence");
  }

  // 4, 5
  TypeGReport g[2] = {is_type_G(V), is_type_G(V2)};
  {
    CertStep s{4, "sum TI = sum HT = sum W / 2 for both", "type-G-balance", true, {}};
    const RepDescriptor* descs[2] = {&V, &V2};
    const char* tags[2] = {"V", "V'"};
    for (int k = 0; k < 2; ++k) {
      const std::string t = tags[k];
      if (g[k].not_type_w) {
        s.verified = false;
        s.witness.emplace_back(t + ".W", "not type (W): " + g[k].not_type_w->reason);
        continue;
      }
      const Rational sti = ti_rep_multiset(descs[k]->at_u.tame_chars, *descs[k]->at_u.effective_e()).sum();
      s.witness.emplace_back(t + ".sum_W", str(g[k].sum_W));
      s.witness.emplace_back(t + ".sum_HT", str(g[k].sum_HT));
      s.witness.emplace_back(t + ".sum_TI", str(sti));
      if (!g[k].holds || sti != Rational(g[k].sum_HT)) s.verified = false;
    }
    const bool ok = s.verified;
    cert.steps.push_back(std::move(s));
    if (!ok) return stop("type (G) balance fails");
  }
  {
    const Integer cap = Integer(d) * 2 * V.n * V.b;
    const bool ok = g[0].sum_W <= cap && g[1].sum_W <= cap;
    CertStep s{5, "sum W <= [E:Q]*2nb for both", "total-weight-cap", ok, {}};
    s.witness.emplace_back("cap", str(cap));
    s.witness.emplace_back("V.sum_W", str(g[0].sum_W));
    s.witness.emplace_back("V'.sum_W", str(g[1].sum_W));
    cert.steps.push_back(std::move(s));
    if (!ok) return stop("total weight exceeds the cap");
  }

  // 6
  {
    CertStep s{6, "", "gap-principle", false, {}};
    const CongruenceMode mode = which == Theorem::T14 ? CongruenceMode::ModEll : CongruenceMode::ModLambda;
    s.claim = std::string("gap principle modulo ") + (mode == CongruenceMode::ModLambda ? "lambda" : "ell") + " at v";
    if (which != Theorem::T12) {
      s.witness.emplace_back("V.semistable_at_v", str(V.at_v.semistable_at_v));
      s.witness.emplace_back("V'.semistable_at_v", str(V2.at_v.semistable_at_v));
      if (!V.at_v.semistable_at_v || !V2.at_v.semistable_at_v) {
        cert.steps.push_back(std::move(s));
        return stop("semisimple unramified behaviour at v is not attested");
      }
    }
    const Certificate gap = gap_principle(V.at_v.charpoly, V2.at_v.charpoly, lambda, 2 * V.n * V.b, mode);
    for (const auto& sub : gap.steps) {
      s.witness.emplace_back("gap." + std::to_string(sub.number), sub.claim + ": " + str(sub.verified));
      for (const auto& [k, v] : sub.witness) s.witness.emplace_back("gap." + std::to_string(sub.number) + "." + k, v);
    }
    s.verified = gap.verdict.kind == VerdictKind::Concluded;
    cert.steps.push_back(std::move(s));
    if (gap.verdict.kind == VerdictKind::Contradiction) {
      cert.verdict = {VerdictKind::Contradiction, 6, gap.verdict.statement};
      return cert;
    }
    if (gap.verdict.kind == VerdictKind::Inapplicable) return stop(gap.verdict.statement);
  }
  cert.verdict = {VerdictKind::Concluded, 0, concluded_statement(which)};
  return cert;
}

VerificationReport verify_certificate(const Certificate& cert, const RepDescriptor& V, const RepDescriptor& V2,
                                      const PrimeIdeal& lambda, Theorem which, bool congruence_at_u_holds) {
  VerificationReport rep{true, {}};
  auto note = [&](const std::string& m) {
    rep.ok = false;
    rep.mismatches.push_back(m);
  };
  if (cert.theorem != to_string(which)) note("certificate is for " + cert.theorem);

  // Recompute every gate by routes distinct from run_theorem.
  std::vector<bool> gates;
  const Integer& ell = lambda.ell;
  const RepDescriptor* descs[2] = {&V, &V2};

  gates.push_back(exceeds_via_threshold(ell, main_bound(V, lambda, which)));

  {
    bool ok = Integer(V.at_u.e_cap) * V.at_u.e_cap * V.b + 1 < ell;
    for (const auto* dsc : descs) {
      const auto& u = dsc->at_u;
      if (u.semistable_flag.kind == SemistableKind::Unknown) ok = false;
      const unsigned long ee =
          u.e_u * (u.semistable_flag.kind == SemistableKind::AfterExtension ? u.semistable_flag.e_prime : 1);
      if (ee == 0 || u.e_cap % ee != 0) ok = false;
    }
    gates.push_back(ok);
  }

  std::vector<Rational> ti_sorted[2];
  bool ti_known = true;
  {
    bool ok = congruence_at_u_holds;
    for (int k = 0; k < 2; ++k) {
      const auto& u = descs[k]->at_u;
      const auto ee = u.effective_e();
      if (!ee || !(Integer(*ee) * descs[k]->b + 1 < u.ell)) {
        ok = false;
        ti_known = false;
        continue;
      }
      Rational s = 0;
      for (const auto& chi : u.tame_chars) {
        if (chi.ell() != u.ell) {
          ok = false;
          continue;
        }
        for (const auto& t : digits(chi)) {
          const Rational x = Rational(t) / Rational(*ee);
          if (x > descs[k]->b) ok = false;
          ti_sorted[k].push_back(x);
          s += x;
        }
      }
      std::sort(ti_sorted[k].begin(), ti_sorted[k].end());
      Integer h = 0;
      for (auto x : u.ht) h += x;
      if (Rational(h) != s) ok = false;
    }
    if (ti_sorted[0] != ti_sorted[1]) ok = false;
    gates.push_back(ok);
  }

  // ΣW read from the constant term of the norm polynomial: ∏|z|² = q^{ΣW}.
  std::optional<Integer> sum_W[2];
  {
    bool ok = ti_known;
    for (int k = 0; k < 2; ++k) {
      const auto& P = descs[k]->at_v.charpoly;
      const RatPoly N = norm_poly_rational(P);
      const Rational c0sq = N[0] * N[0];
      auto w = N[0] == 0 ? WeilWeightsResult(NotTypeW{N, "zero root"}) : weil_weights(N, P.q, P.field.degree());
      std::optional<unsigned long> lg;
      if (c0sq.get_den() == 1 && c0sq > 0) lg = exact_log(c0sq.get_num(), P.q);
      if (!lg || std::holds_alternative<NotTypeW>(w)) {
        ok = false;
        continue;
      }
      sum_W[k] = Integer(*lg);
      if (std::get<WeilWeightMultiset>(w).sum() != *sum_W[k]) note("weight sum disagrees with the constant term");
      Integer h = 0;
      for (auto x : descs[k]->at_u.ht) h += x;
      if (*sum_W[k] != 2 * h || sigma(ti_sorted[k]) != Rational(h)) ok = false;
    }
    gates.push_back(ok);
  }

  gates.push_back(sum_W[0] && sum_W[1] && *sum_W[0] <= Integer(V.field.degree()) * 2 * V.n * V.b &&
                  *sum_W[1] <= Integer(V.field.degree()) * 2 * V.n * V.b);

  // Step 6 through separate reductions of P and P'.
  VerdictKind expected_kind = VerdictKind::Concluded;
  {
    const auto& P = V.at_v.charpoly;
    const auto& P2 = V2.at_v.charpoly;
    bool flags = which == Theorem::T12 || (V.at_v.semistable_at_v && V2.at_v.semistable_at_v);
    bool congruent = true;
    if (which == Theorem::T14) {
      for (std::size_t i = 0; i < P.coeffs.size() && congruent; ++i) {
        const FieldElement x = (P.coeffs[i] - P2.coeffs[i]) *
                               FieldElement::from_rational(P.field, Rational(1) / Rational(ell));
        const RatPoly mp = x.minpoly();
        for (const auto& c : mp.coeffs())
          if (c.get_den() % ell == 0) congruent = false;
      }
    } else {
      try {
        congruent = reduce_charpoly_mod_lambda(P, lambda) == reduce_charpoly_mod_lambda(P2, lambda);
      } catch (const DenominatorAtEll&) {
        congruent = true;
        for (std::size_t i = 0; i < P.coeffs.size(); ++i)
          congruent = congruent && divisible_at(P.coeffs[i] - P2.coeffs[i], lambda, CongruenceMode::ModLambda);
      }
    }
    const bool equal = P.coeffs == P2.coeffs;
    gates.push_back(flags && congruent && equal);
    if (flags && congruent && !equal) expected_kind = VerdictKind::Contradiction;
  }

  std::size_t first_fail = gates.size();
  for (std::size_t i = 0; i < gates.size(); ++i)
    if (!gates[i]) {
      first_fail = i;
      break;
    }
  const std::size_t expected_steps = first_fail == gates.size() ? gates.size() : first_fail + 1;
  if (first_fail != gates.size() && !(first_fail == 5 && expected_kind == VerdictKind::Contradiction))
    expected_kind = VerdictKind::Inapplicable;
  if (first_fail == gates.size()) expected_kind = VerdictKind::Concluded;

  if (cert.steps.size() != expected_steps)
    note("expected " + std::to_string(expected_steps) + " steps, certificate has " + std::to_string(cert.steps.size()));
  for (std::size_t i = 0; i < std::min(expected_steps, cert.steps.size()); ++i) {
    if (cert.steps[i].number != static_cast<int>(i + 1)) note("step " + std::to_string(i + 1) + " is misnumbered");
    if (cert.steps[i].verified != gates[i])
      note("step " + std::to_string(i + 1) + " recorded as " + str(cert.steps[i].verified) + ", recomputed " +
           str(static_cast<bool>(gates[i])));
  }
  if (cert.verdict.kind != expected_kind)
    note(std::string("verdict ") + to_string(cert.verdict.kind) + ", recomputed " + to_string(expected_kind));
  else if (expected_kind != VerdictKind::Concluded && cert.verdict.step != static_cast<int>(first_fail + 1))
    note("verdict names step " + std::to_string(cert.verdict.step) + ", recomputed " + std::to_string(first_fail + 1));
  if (cert.verdict.kind == VerdictKind::Concluded) {
    for (const auto& s : cert.steps)
      if (!s.verified) note("Concluded certificate contains an unverified step");
  }
  return rep;
}

}  // namespace galcong
