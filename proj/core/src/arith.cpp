#include "galcong/arith.hpp"

#include <algorithm>
#include <map>

#include "galcong/errors.hpp"

namespace galcong {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer next_prime(const Integer& n) {
  Integer r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<unsigned long> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  for (unsigned long i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

namespace {

// Pollard rho with Brent's cycle detection; returns a nontrivial factor of
// the odd composite n, or n itself if the constant c fails.
Integer brent_factor(const Integer& n, unsigned long c) {
  Integer y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1;
  const unsigned long m = 128;
  auto f = [&](const Integer& v) {
    Integer t = v * v + c;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return t;
  };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    do {
      ys = y;
      const unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        y = f(y);
        Integer d = x - y;
        q = q * abs(d);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      Integer d = x - ys;
      d = abs(d);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split(const Integer& n, std::map<Integer, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer root;
  // perfect powers defeat rho
  for (unsigned long k = 2; mpz_sizeinbase(n.get_mpz_t(), 2) >= k; ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<Integer, unsigned long> sub;
      split(root, sub);
      for (const auto& [p, e] : sub) out[p] += e * k;
      return;
    }
  }
  for (unsigned long c = 1;; ++c) {
    Integer d = brent_factor(n, c);
    if (d != n && d != 1) {
      split(d, out);
      split(n / d, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Integer, unsigned long>> factor_integer(const Integer& n0) {
  if (n0 == 0) throw InvalidArgument("cannot factor zero");
  Integer n = abs(n0);
  std::map<Integer, unsigned long> out;
  for (unsigned long p : primes_up_to(10000)) {
    if (n == 1) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  split(n, out);
  return {out.begin(), out.end()};
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::optional<unsigned long> exact_log(const Integer& value, const Integer& base) {
  if (base < 2 || value < 1) return std::nullopt;
  Integer v = value;
  unsigned long e = 0;
  while (v > 1) {
    if (!mpz_divisible_p(v.get_mpz_t(), base.get_mpz_t())) return std::nullopt;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), base.get_mpz_t());
    ++e;
  }
  return e;
}

std::optional<std::pair<Integer, unsigned long>> prime_power(const Integer& q) {
  if (q < 2) return std::nullopt;
  auto f = factor_integer(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

Integer euler_phi(const Integer& n) {
  if (n < 1) throw InvalidArgument("phi needs n >= 1");
  Integer r = n;
  if (n == 1) return r;
  for (const auto& [p, e] : factor_integer(n)) {
    r /= p;
    r *= p - 1;
  }
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace galcong
