#include "brute.hpp"

#include <algorithm>
#include <set>

namespace oracle {

std::vector<unsigned long> roots_mod_p(const IntPoly& f, unsigned long p) {
  std::vector<unsigned long> out;
  for (unsigned long x = 0; x < p; ++x) {
    Integer v = f.eval(Integer(x)) % Integer(p);
    if (v == 0) out.push_back(x);
  }
  return out;
}

std::size_t sign_change_count(const RatPoly& f, const std::vector<Rational>& candidate_roots, const Rational& lo,
                              const Rational& hi) {
  std::set<Rational> rs;
  for (auto r : candidate_roots) {
    r.canonicalize();
    if (f.eval(r) == 0) rs.insert(r);
  }
  std::size_t n = 0;
  for (const auto& r : rs) {
    // a root is confirmed by a sign change between neighbours at distance 1/10^6
    const Rational h(1, 1000000);
    int sl = sgn(f.eval(r - h)), sr = sgn(f.eval(r + h));
    if (sl != sr && r > lo && r <= hi) ++n;
  }
  return n;
}

std::vector<Integer> delta_product(std::size_t prec) {
  // series of ∏(1 − q^n)^24, then shift by one
  std::vector<Integer> s(prec + 1, Integer(0));
  s[0] = 1;
  for (std::size_t n = 1; n <= prec; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t i = prec; i >= n; --i) {
        s[i] -= s[i - n];
        if (i == n) break;
      }
  std::vector<Integer> out(prec + 1, Integer(0));
  for (std::size_t i = 1; i <= prec; ++i) out[i] = s[i - 1];
  return out;
}

long cusp_dimension(long k) {
  if (k < 0 || k % 2 != 0) return 0;
  if (k < 12) return 0;
  if (k % 12 == 2) return k / 12 - 1;
  return k / 12;
}

Rational bernoulli_recurrence(unsigned n) {
  std::vector<Rational> B(n + 1);
  B[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), m + 1, j);
      acc += Rational(c) * B[j];
    }
    B[m] = -acc / Rational(m + 1);
  }
  return B[n];
}

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

// polynomials over F_p as coefficient vectors, low first
Row padd(const Row& a, const Row& b, std::int64_t p) {
  Row r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = md(r[i] + a[i], p);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] + b[i], p);
  return r;
}
Row pmul(const Row& a, const Row& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Row r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = md(r[i + j] + a[i] * b[j], p);
  return r;
}

// determinant of T·I − m by Laplace expansion along the first row
Row det(const std::vector<std::vector<Row>>& a, std::int64_t p) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Row acc;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Row>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Row> r;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) r.push_back(a[i][c]);
      minor.push_back(r);
    }
    Row term = pmul(a[0][j], det(minor, p), p);
    if (j % 2 == 1)
      for (auto& v : term) v = md(-v, p);
    acc = padd(acc, term, p);
  }
  return acc;
}

}  // namespace

std::vector<std::int64_t> charpoly_mod_p(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
  const std::size_t n = m.size();
  std::vector<std::vector<Row>> a(n, std::vector<Row>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = Row{md(-m[i][j], p)};
      if (i == j) a[i][j].push_back(1);
    }
  Row r = det(a, p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Integer sigma_power(unsigned long n, unsigned long e) {
  Integer s = 0;
  for (unsigned long d = 1; d <= n; ++d)
    if (n % d == 0) {
      Integer t;
      mpz_ui_pow_ui(t.get_mpz_t(), d, e);
      s += t;
    }
  return s;
}

namespace {

using Vec = Row;

// remainder modulo a monic m
Vec prem(Vec a, const Vec& m, std::int64_t p) {
  const std::size_t d = m.size() - 1;
  for (auto& x : a) x = md(x, p);
  while (a.size() > d) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] = md(a[shift + i] - lead * m[i], p);
    a.pop_back();
  }
  a.resize(d, 0);
  return a;
}

}  // namespace

std::vector<std::int64_t> companion_charpoly_mod_ell(const std::vector<std::vector<std::int64_t>>& P,
                                                     const std::vector<std::int64_t>& phi, unsigned e,
                                                     std::int64_t ell) {
  Vec m{1};
  for (unsigned i = 0; i < e; ++i) m = pmul(m, phi, ell);
  const std::size_t D = m.size() - 1;
  const std::size_t n = P.size() - 1;
  std::vector<Vec> coeff(n);
  for (std::size_t i = 0; i < n; ++i) coeff[i] = prem(P[i], m, ell);
  // basis x^k·e_j has index j·D + k
  std::vector<std::vector<std::int64_t>> M(n * D, std::vector<std::int64_t>(n * D, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < D; ++k) {
      const std::size_t col = j * D + k;
      if (j + 1 < n) {
        M[(j + 1) * D + k][col] = 1;
        continue;
      }
      Vec xk(k + 1, 0);
      xk[k] = 1;
      for (std::size_t i = 0; i < n; ++i) {
        const Vec img = prem(pmul(xk, coeff[i], ell), m, ell);
        for (std::size_t r = 0; r < D; ++r) M[i * D + r][col] = md(-img[r], ell);
      }
    }
  return charpoly_mod_p(M, ell);
}

}  // namespace oracle
