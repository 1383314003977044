#include "galcong/modforms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "galcong/errors.hpp"
#include "galcong/zfactor.hpp"

namespace galcong {

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  QExpansion r{std::vector<Rational>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

Rational bernoulli(unsigned long k) {
  if (k % 2 != 0) throw OddWeight("Bernoulli number requested at odd index " + std::to_string(k));
  if (k == 0) return 1;
  // Akiyama–Tanigawa
  std::vector<Rational> a(k + 1);
  for (unsigned long m = 0; m <= k; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned long j = m; j >= 1; --j) {
      a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  return a[0];
}

QExpansion eisenstein(unsigned long k, std::size_t prec) {
  if (k % 2 != 0) throw OddWeight("Eisenstein series of odd weight " + std::to_string(k));
  if (k < 4) throw InvalidArgument("Eisenstein series needs weight at least 4");
  std::vector<Integer> sigma(prec + 1, 0);
  for (std::size_t d = 1; d <= prec; ++d) {
    const Integer dk = ipow(Integer(static_cast<unsigned long>(d)), k - 1);
    for (std::size_t m = d; m <= prec; m += d) sigma[m] += dk;
  }
  Rational c = Rational(-2 * static_cast<long>(k)) / bernoulli(k);
  c.canonicalize();
  QExpansion e{std::vector<Rational>(prec + 1, 0)};
  e.coeffs[0] = 1;
  for (std::size_t n = 1; n <= prec; ++n) e.coeffs[n] = c * Rational(sigma[n]);
  return e;
}

QExpansion delta(std::size_t prec) {
  const QExpansion e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
  QExpansion d = e4 * e4 * e4;
  const QExpansion s = e6 * e6;
  for (std::size_t i = 0; i <= prec; ++i) d.coeffs[i] = (d.coeffs[i] - s.coeffs[i]) / 1728;
  return d;
}

std::size_t cusp_dimension(long k) {
  if (k < 12 || k % 2 != 0) return 0;
  std::size_t d = 0;
  for (long j = 1; 12 * j <= k; ++j)
    if (k - 12 * j != 2) ++d;
  return d;
}

namespace {

QExpansion one(std::size_t prec) {
  QExpansion r{std::vector<Rational>(prec + 1, 0)};
  r.coeffs[0] = 1;
  return r;
}

// E_4^a E_6^b of weight w ∈ {0, 4, 6, 8, …}
QExpansion eisenstein_monomial(unsigned long w, std::size_t prec) {
  QExpansion r = one(prec);
  if (w % 4 == 2) {
    r = eisenstein(6, prec);
    w -= 6;
  }
  const QExpansion e4 = eisenstein(4, prec);
  for (; w > 0; w -= 4) r = r * e4;
  return r;
}

}  // namespace

std::vector<QExpansion> miller_basis(unsigned long k, std::size_t prec) {
  const std::size_t d = cusp_dimension(static_cast<long>(k));
  if (d == 0) return {};
  if (prec < d) throw InsufficientPrecision("precision " + std::to_string(prec) + " below dimension " + std::to_string(d));
  const QExpansion D = delta(prec);
  std::vector<QExpansion> basis;
  QExpansion dpow = D;
  for (std::size_t j = 1; j <= d; ++j) {
    basis.push_back(dpow * eisenstein_monomial(k - 12 * j, prec));
    dpow = dpow * D;
  }
  // basis[j] starts at q^{j+1} with leading coefficient 1; clear the entries above the diagonal
  for (std::size_t j = d; j-- > 0;)
    for (std::size_t i = 0; i < j; ++i) {
      const Rational c = basis[i].coeffs[j + 1];
      if (c == 0) continue;
      for (std::size_t n = 0; n <= prec; ++n) basis[i].coeffs[n] -= c * basis[j].coeffs[n];
    }
  return basis;
}

RatMatrix hecke_matrix(unsigned long k, unsigned long p, const std::vector<QExpansion>& basis) {
  const std::size_t d = basis.size();
  RatMatrix m(d, std::vector<Rational>(d, 0));
  if (d == 0) return m;
  for (const auto& f : basis)
    if (f.prec() < d * p)
      throw InsufficientPrecision("T_" + std::to_string(p) + " needs precision " + std::to_string(d * p));
  const Rational pk(ipow(Integer(p), k - 1));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t n = i + 1;
      Rational v = basis[j].coeffs[n * p];
      if (n % p == 0) v += pk * basis[j].coeffs[n / p];
      m[i][j] = v;
    }
  return m;
}

RatPoly matrix_charpoly(const RatMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  RatMatrix M(n, std::vector<Rational>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M ← A·M + c_{n−k+1}·I
    RatMatrix AM(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) AM[i][j] += a[i][l] * M[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = std::move(AM);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * M[l][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return RatPoly(c);
}

FieldElement Eigenform::eps_at(const Integer& x) const {
  if (gcd(x, N) != 1) throw BadPrime(x.get_str() + " is not prime to the level " + N.get_str());
  const FieldElement unit = FieldElement::from_rational(hecke_field, 1);
  if (eps.empty() || N == 1) return unit;
  const Integer target = mod(x, N);
  // walk the subgroup generated by the listed generators
  std::map<Integer, FieldElement> seen;
  seen.emplace(Integer(1) % N, unit);
  std::vector<Integer> frontier = {Integer(1) % N};
  while (!frontier.empty()) {
    std::vector<Integer> next;
    for (const auto& g : frontier) {
      if (g == target) return seen.at(g);
      for (const auto& e : eps) {
        const Integer h = mod(g * e.generator, N);
        if (seen.count(h)) continue;
        seen.emplace(h, seen.at(g) * e.value);
        next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  if (seen.count(target)) return seen.at(target);
  throw InvalidArgument("character generators do not reach " + target.get_str() + " mod " + N.get_str());
}

namespace {

// One vector spanning the kernel of (M − α), assuming the kernel is a line.
std::vector<FieldElement> kernel_vector(const RatMatrix& M, const FieldElement& alpha) {
  const NumberField& E = alpha.field();
  const std::size_t d = M.size();
  std::vector<std::vector<FieldElement>> a;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<FieldElement> row;
    for (std::size_t j = 0; j < d; ++j) {
      FieldElement v = FieldElement::from_rational(E, M[i][j]);
      if (i == j) v = v - alpha;
      row.push_back(v);
    }
    a.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < d; ++c) {
    std::size_t piv = r;
    while (piv < d && a[piv][c].is_zero()) ++piv;
    if (piv == d) continue;
    std::swap(a[piv], a[r]);
    const FieldElement inv = a[r][c].inverse();
    for (auto& x : a[r]) x = x * inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const FieldElement f = a[i][c];
      for (std::size_t j = 0; j < d; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  if (r + 1 != d) throw NonSeparating("eigenspace is not one-dimensional");
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  std::vector<FieldElement> v(d, FieldElement::from_rational(E, 0));
  v[free_col] = FieldElement::from_rational(E, 1);
  for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = -a[i][free_col];
  return v;
}

}  // namespace

std::vector<Eigenform> eigenforms(unsigned long k, std::size_t prec) {
  const std::size_t d = cusp_dimension(static_cast<long>(k));
  if (d == 0) return {};
  if (prec < 2) throw InsufficientPrecision("eigenforms need precision at least 2");
  static const unsigned long kSeparating[] = {2, 3, 5, 7, 11, 13};
  const std::size_t work = std::max(prec, d * 13);
  const auto basis = miller_basis(k, work);
  for (unsigned long p : kSeparating) {
    const RatMatrix M = hecke_matrix(k, p, basis);
    const RatPoly cp = matrix_charpoly(M);
    if (!is_squarefree(cp)) continue;
    const auto fz = factor_over_z(to_int(cp));
    std::vector<Eigenform> out;
    for (const auto& [F, mult] : fz.factors) {
      const bool linear = *F.degree() == 1;
      const NumberField E = linear ? NumberField::rationals() : NumberField(F);
      const FieldElement alpha = linear ? FieldElement::from_rational(E, Rational(-F[0]) / Rational(F[1]))
                                        : FieldElement::generator(E);
      auto v = kernel_vector(M, alpha);
      const FieldElement inv = v[0].inverse();
      for (auto& x : v) x = x * inv;
      Eigenform f{k, 1, {}, E, {}, {}, prec, p};
      for (std::size_t n = 0; n <= prec; ++n) {
        FieldElement a = FieldElement::from_rational(E, 0);
        for (std::size_t j = 0; j < d; ++j)
          if (basis[j].coeffs[n] != 0) a = a + v[j] * FieldElement::from_rational(E, basis[j].coeffs[n]);
        f.an.push_back(a);
      }
      for (unsigned long q : primes_up_to(prec)) f.ap.emplace(q, f.an[q]);
      out.push_back(std::move(f));
    }
    return out;
  }
  throw NonSeparating("no T_p with p <= 13 separates weight " + std::to_string(k));
}

RepDescriptor frobenius_descriptor(const Eigenform& f, const Integer& q, const PrimeIdeal& lambda) {
  if (!is_prime(q)) throw InvalidArgument(q.get_str() + " is not prime");
  if (f.N % q == 0) throw BadPrime(q.get_str() + " divides the level");
  if (q == lambda.ell) throw BadPrime(q.get_str() + " is the residue characteristic");
  if (lambda.field != f.hecke_field) throw FieldMismatch("prime lies over a different field");
  const auto it = f.ap.find(q.get_ui());
  if (!q.fits_ulong_p() || it == f.ap.end()) throw InsufficientCoefficients("a_" + q.get_str() + " unknown");
  const NumberField& E = f.hecke_field;
  const FieldElement c0 = f.eps_at(q) * FieldElement::from_rational(E, Rational(ipow(q, f.k - 1)));
  CharPolyOverE P(E, {c0, -it->second, FieldElement::from_rational(E, 1)}, q);

  const Integer& ell = lambda.ell;
  LocalDescriptorU u;
  u.ell = ell;
  u.e_u = 1;
  u.e_cap = 1;
  const std::size_t copies = E.degree();
  for (std::size_t c = 0; c < copies; ++c) u.ht.push_back(0);
  for (std::size_t c = 0; c < copies; ++c) u.ht.push_back(f.k - 1);
  for (std::size_t c = 0; c < copies; ++c) {
    u.tame_chars.emplace_back(ell, 1, Integer(0));
    u.tame_chars.emplace_back(ell, 1, Integer(f.k - 1));
  }
  if (f.N % ell != 0)
    u.semistable_flag = {SemistableKind::Crystalline, 1};
  else if (f.N % (ell * ell) != 0)
    u.semistable_flag = {SemistableKind::Semistable, 1};
  else
    u.semistable_flag = {SemistableKind::Unknown, 1};
  return RepDescriptor{2, E, f.k - 1, LocalDescriptorV{std::move(P), true}, std::move(u)};
}

unsigned long sturm_bound(unsigned long k, const Integer& N) {
  // index of Γ_0(N) is N·∏(1 + 1/p)
  Integer index = N;
  for (const auto& [p, e] : factor_integer(N)) index = index / p * (p + 1);
  Integer num = Integer(k) * index;
  Integer s = (num + 11) / 12;
  return s.get_ui();
}

unsigned long default_p_max(unsigned long k, const Integer& N) { return std::max(50ul, 4 * sturm_bound(k, N)); }

namespace {

struct ResidueTable {
  std::vector<unsigned long> primes;
  std::vector<Integer> values;  // a_p mod λ, only when it lies in F_ℓ
  bool all_in_prime_field = true;
};

ResidueTable residues(const Eigenform& f, const PrimeIdeal& lambda, unsigned long p_max) {
  ResidueTable t;
  for (unsigned long p : primes_up_to(p_max)) {
    if (f.N % p == 0 || lambda.ell == p) continue;
    const FpPoly r = reduce_mod_lambda(f.ap.at(p), lambda);
    if (r.degree().value_or(0) > 0) {
      t.all_in_prime_field = false;
      return t;
    }
    t.primes.push_back(p);
    t.values.push_back(r[0]);
  }
  return t;
}

bool pair_matches(const ResidueTable& t, const std::vector<std::vector<Integer>>& powers, long i, long j,
                  const Integer& ell) {
  for (std::size_t s = 0; s < t.primes.size(); ++s)
    if (mod(powers[s][i] + powers[s][j], ell) != t.values[s]) return false;
  return true;
}

void check_coverage(const Eigenform& f, unsigned long p_max) {
  const unsigned long sb = sturm_bound(f.k, f.N);
  if (p_max < sb)
    throw InsufficientCoefficients("p_max " + std::to_string(p_max) + " below the Sturm bound " + std::to_string(sb));
  for (unsigned long p : primes_up_to(p_max))
    if (f.N % p != 0 && !f.ap.count(p)) throw InsufficientCoefficients("a_" + std::to_string(p) + " unknown");
}

}  // namespace

std::vector<CongruenceWitness> detect_congruences(const Eigenform& f, ScanMode mode, unsigned long p_max,
                                                  const Integer& fixed_ell) {
  check_coverage(f, p_max);
  const unsigned long sb = sturm_bound(f.k, f.N);
  const NumberField& E = f.hecke_field;
  std::vector<Integer> candidates;
  if (mode == ScanMode::FixedEll) {
    if (!is_prime(fixed_ell)) throw InvalidArgument(fixed_ell.get_str() + " is not prime");
    candidates.push_back(fixed_ell);
  } else {
    Integer G = 0;
    for (unsigned long p : primes_up_to(p_max)) {
      if (f.N % p == 0) continue;
      const FieldElement x =
          f.ap.at(p) - FieldElement::from_rational(E, Rational(1 + ipow(Integer(p), f.k - 1)));
      const Rational nx = abs(norm(x));
      G = gcd(G, nx.get_num());
    }
    std::set<Integer> cand;
    if (G != 0)
      for (const auto& [ell, e] : factor_integer(G))
        if (ell > f.k) cand.insert(ell);
    // p = ℓ is excluded from the condition, so small ℓ need a direct check
    for (unsigned long ell : primes_up_to(p_max))
      if (ell > f.k) cand.insert(Integer(ell));
    candidates.assign(cand.begin(), cand.end());
  }

  std::vector<CongruenceWitness> out;
  for (const auto& ell : candidates) {
    std::vector<PrimeIdeal> lambdas;
    try {
      lambdas = primes_above(E, ell);
    } catch (const IndexDivisor&) {
      continue;
    }
    for (const auto& lambda : lambdas) {
      ResidueTable t;
      try {
        t = residues(f, lambda, p_max);
      } catch (const DenominatorAtEll&) {
        continue;
      }
      if (!t.all_in_prime_field) continue;
      const unsigned long top = ell.get_ui() - 2;
      std::vector<std::pair<long, long>> pairs;
      if (mode == ScanMode::EisensteinScan) {
        pairs.emplace_back(0, static_cast<long>(f.k - 1));
      } else {
        for (unsigned long i = 0; i <= top; ++i)
          for (unsigned long j = i; j <= top; ++j) pairs.emplace_back(i, j);
      }
      long maxexp = 0;
      for (const auto& [i, j] : pairs) maxexp = std::max(maxexp, j);
      std::vector<std::vector<Integer>> powers(t.primes.size());
      for (std::size_t s = 0; s < t.primes.size(); ++s) {
        Integer pw = 1;
        for (long e = 0; e <= maxexp; ++e) {
          powers[s].push_back(pw);
          pw = mod(pw * t.primes[s], ell);
        }
      }
      for (const auto& [i, j] : pairs)
        if (pair_matches(t, powers, i, j, ell)) out.push_back(CongruenceWitness{i, j, lambda, t.primes, sb, p_max});
    }
  }
  std::sort(out.begin(), out.end(), [](const CongruenceWitness& a, const CongruenceWitness& b) {
    if (a.ell() != b.ell()) return a.ell() < b.ell();
    if (a.lam.index != b.lam.index) return a.lam.index < b.lam.index;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  return out;
}

bool verify_witness(const CongruenceWitness& w, const Eigenform& f) {
  if (w.lam.field != f.hecke_field) return false;
  for (unsigned long p : primes_up_to(w.p_max)) {
    if (f.N % p == 0 || w.ell() == p) continue;
    if (std::find(w.checked_primes.begin(), w.checked_primes.end(), p) == w.checked_primes.end()) return false;
  }
  const NumberField& E = f.hecke_field;
  for (unsigned long p : w.checked_primes) {
    const auto it = f.ap.find(p);
    if (it == f.ap.end()) return false;
    const Integer pi = ipow(Integer(p), static_cast<unsigned long>(w.i));
    const Integer pj = ipow(Integer(p), static_cast<unsigned long>(w.j));
    const FieldElement diff = it->second - FieldElement::from_rational(E, Rational(pi + pj));
    if (!divisible_at(diff, w.lam, CongruenceMode::ModLambda)) return false;
  }
  return true;
}

const char* to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::Consistent: return "Consistent";
    case AuditStatus::Inapplicable: return "Inapplicable";
    case AuditStatus::Contradiction: return "Contradiction";
  }
  return "?";
}

namespace {

// x^m mod ℓ for a possibly negative m
Integer signed_power_mod(const Integer& x, long m, const Integer& ell) {
  Integer r;
  const Integer base = mod(x, ell);
  if (m >= 0) {
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m), ell.get_mpz_t());
  } else {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), ell.get_mpz_t());
    mpz_powm_ui(r.get_mpz_t(), inv.get_mpz_t(), static_cast<unsigned long>(-m), ell.get_mpz_t());
  }
  return r;
}

}  // namespace

AuditReport audit_eisenstein_witness(const CongruenceWitness& w, const Eigenform& f, const Integer& q) {
  AuditReport rep{AuditStatus::Consistent, {}, "", std::nullopt, std::nullopt};
  const Integer& ell = w.ell();
  const Integer& N = f.N;
  auto gate = [&](const std::string& name, bool pass, const std::string& detail) {
    rep.gates.push_back({name, pass, detail});
    return pass;
  };

  const bool verified = gate("witness verified", verify_witness(w, f), "residues rechecked at " +
                                                                        std::to_string(w.checked_primes.size()) +
                                                                        " primes");
  const Integer phi = euler_phi(N);
  gate("q prime and q does not divide N", is_prime(q) && N % q != 0, "q = " + q.get_str() + ", N = " + N.get_str());
  gate("ell does not divide phi(N)", phi % ell != 0, "phi(N) = " + phi.get_str());
  gate("ell^2 does not divide N", N % (ell * ell) != 0, "N = " + N.get_str());
  BoundParams bp;
  bp.n = 2;
  bp.b = f.k - 1;
  bp.e = 1;
  bp.q = q;
  const BoundExpr B = make_bound(BoundKind::CTilde, bp);
  gate("ell > 4q^(2(k-1))", exceeds(ell, B),
       ell.get_str() + (exceeds(ell, B) ? " > " : " <= ") + describe(B));

  // Lemma side conditions: ℓ > 2 and ℓ ∤ φ(N)
  if (verified && ell > 2 && phi % ell != 0) {
    const long m = w.i + w.j - static_cast<long>(f.k) + 1;
    bool ch = true, trivial = true;
    for (const auto& e : f.eps) {
      const FpPoly val = reduce_mod_lambda(e.value, w.lam);
      const Integer expect = signed_power_mod(e.generator, m, ell);
      const FpPoly want = FpPoly::constant(ell, expect);
      if (val != want) ch = false;
      if (val != FpPoly::constant(ell, 1)) trivial = false;
    }
    rep.lemma_character = ch;
    gate("character matches x^(i+j-(k-1)) mod lambda", ch, "exponent " + std::to_string(m));
    if (N % ell != 0) {
      const Integer lm1 = ell - 1;
      const bool ii = mod(Integer(m), lm1) == 0 && trivial;
      rep.lemma_unramified = ii;
      gate("i+j = k-1 mod (ell-1) and trivial character", ii,
           std::to_string(w.i + w.j) + " vs " + std::to_string(f.k - 1) + " mod " + lm1.get_str());
    }
  }

  auto is_lemma_gate = [](const AuditGate& g) {
    return g.name.rfind("character", 0) == 0 || g.name.rfind("i+j", 0) == 0;
  };
  // the lemma has its own hypotheses, already checked above
  for (const auto& g : rep.gates)
    if (is_lemma_gate(g) && !g.pass) {
      rep.status = AuditStatus::Contradiction;
      rep.reason = "verified witness violates: " + g.name;
      return rep;
    }
  for (const auto& g : rep.gates)
    if (!is_lemma_gate(g) && !g.pass) {
      rep.status = AuditStatus::Inapplicable;
      rep.reason = g.name + " fails (" + g.detail + ")";
      return rep;
    }

  // every hypothesis holds
  const bool k_odd = f.k % 2 == 1;
  const bool excluded = f.k == 1 || !k_odd || N % ell != 0;
  if (excluded) {
    rep.status = AuditStatus::Contradiction;
    rep.reason = "congruence exists although k = 1, k even or ell does not divide N";
    return rep;
  }
  const Integer lm1 = ell - 1;
  const Integer half = Integer(f.k - 1) / 2;
  const bool concl = mod(Integer(w.i) - half, lm1) == 0 && mod(Integer(w.j) - half, lm1) == 0;
  if (!concl) {
    rep.status = AuditStatus::Contradiction;
    rep.reason = "i or j is not (k-1)/2 mod (ell-1)";
    return rep;
  }
  rep.reason = "i = j = (k-1)/2 mod (ell-1)";
  return rep;
}

}  // namespace galcong
