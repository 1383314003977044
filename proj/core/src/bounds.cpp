#include "galcong/bounds.hpp"

#include "galcong/errors.hpp"

namespace galcong {

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::CMain: return "C";
    case BoundKind::CPrime: return "C'";
    case BoundKind::CTilde: return "C~";
    case BoundKind::C1: return "C1";
    case BoundKind::C1Tilde: return "C1~";
  }
  return "?";
}

BoundKind parse_bound_kind(const std::string& s) {
  if (s == "c") return BoundKind::CMain;
  if (s == "cprime") return BoundKind::CPrime;
  if (s == "ctilde") return BoundKind::CTilde;
  if (s == "c1") return BoundKind::C1;
  if (s == "c1tilde") return BoundKind::C1Tilde;
  throw InvalidArgument("unknown bound kind '" + s + "'");
}

namespace {

template <class T>
T need(const std::optional<T>& v, const char* name, BoundKind k) {
  if (!v) throw MissingParam(std::string(name) + " is required for " + to_string(k));
  return *v;
}

Integer central_binomial(unsigned long n) { return binomial(n, n / 2); }

}  // namespace

BoundExpr make_bound(BoundKind kind, const BoundParams& p) {
  BoundExpr B{kind, p, std::nullopt, 0, 1};
  const unsigned long n = need(p.n, "n", kind);
  const Integer q = need(p.q, "q", kind);
  if (n == 0) throw InvalidArgument("n must be positive");
  if (q < 2) throw InvalidArgument("q must be at least 2");
  const Integer two_binom = 2 * central_binomial(n);

  switch (kind) {
    case BoundKind::CMain: {
      const unsigned long E = need(p.E_deg, "E_deg", kind), f = need(p.f, "f", kind);
      const unsigned long b = need(p.b, "b", kind), e = need(p.e, "e", kind);
      if (E == 0 || f == 0 || e == 0) throw InvalidArgument("E_deg, f and e must be positive");
      B.linear = Integer(e) * e * b + 1;
      B.radicand = ipow(two_binom * ipow(q, n * b), E);
      B.root = f;
      break;
    }
    case BoundKind::CPrime: {
      const unsigned long E = need(p.E_deg, "E_deg", kind), f = need(p.f, "f", kind);
      const unsigned long b = need(p.b, "b", kind), e = need(p.e, "e", kind);
      const unsigned long K = need(p.K_deg, "K_deg", kind), Kv = need(p.Kv_deg, "Kv_deg", kind);
      if (E == 0 || f == 0 || e == 0 || K == 0 || Kv == 0)
        throw InvalidArgument("E_deg, f, e, K_deg and Kv_deg must be positive");
      // exponent of q is x = nbK/Kv; raising to 2f needs 2·x·E integral
      const Integer num = Integer(2) * n * b * K * E;
      if (!mpz_divisible_ui_p(num.get_mpz_t(), Kv))
        throw NonIntegralExponent("q-exponent 2*n*b*K_deg*E_deg/Kv_deg = " + num.get_str() + "/" +
                                  std::to_string(Kv) + " is not an integer");
      const unsigned long qexp = Integer(num / Kv).get_ui();
      B.linear = Integer(e) * e * b + 1;
      B.radicand = ipow(two_binom, 2 * E) * ipow(q, qexp);
      B.root = 2 * f;
      break;
    }
    case BoundKind::CTilde: {
      const unsigned long b = need(p.b, "b", kind), e = need(p.e, "e", kind);
      if (e == 0) throw InvalidArgument("e must be positive");
      B.linear = Integer(e) * e * b + 1;
      B.radicand = two_binom * ipow(q, n * b);
      B.root = 1;
      break;
    }
    case BoundKind::C1: {
      const unsigned long E = need(p.E_deg, "E_deg", kind), f = need(p.f, "f", kind);
      const unsigned long w = need(p.w, "w", kind);
      if (E == 0 || f == 0) throw InvalidArgument("E_deg and f must be positive");
      B.radicand = ipow(two_binom * two_binom * ipow(q, w), E);
      B.root = 2 * f;
      break;
    }
    case BoundKind::C1Tilde: {
      const unsigned long w = need(p.w, "w", kind);
      B.radicand = two_binom * two_binom * ipow(q, w);
      B.root = 2;
      break;
    }
  }
  return B;
}

bool exceeds(const Integer& ell, const BoundExpr& B) {
  if (B.linear && ell <= *B.linear) return false;
  if (ell <= 0) return false;
  return ipow(ell, B.root) > B.radicand;
}

Threshold threshold_value(const BoundExpr& B) {
  Integer r;
  const bool exact_root = mpz_root(r.get_mpz_t(), B.radicand.get_mpz_t(), B.root) != 0;
  if (!exact_root) r += 1;
  if (B.linear && *B.linear >= r) {
    // linear branch dominates (ties keep exactness of the integer branch)
    return {*B.linear, true};
  }
  return {r, exact_root};
}

std::string describe(const BoundExpr& B) {
  std::string rad;
  Integer r;
  if (B.root == 1) {
    rad = B.radicand.get_str();
  } else if (mpz_root(r.get_mpz_t(), B.radicand.get_mpz_t(), B.root) != 0) {
    rad = r.get_str();
  } else {
    rad = "(" + B.radicand.get_str() + ")^(1/" + std::to_string(B.root) + ")";
  }
  if (B.linear) return "max{" + B.linear->get_str() + ", " + rad + "}";
  return rad;
}

}  // namespace galcong
