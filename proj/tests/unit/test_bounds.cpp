#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>

#include "galcong/bounds.hpp"
#include "galcong/errors.hpp"
#include "numeric_roots.hpp"

using namespace galcong;
using oracle::Dec200;

namespace {

BoundParams params(std::optional<unsigned long> E, std::optional<unsigned long> f, unsigned long n,
                   std::optional<unsigned long> b, std::optional<unsigned long> w, std::optional<unsigned long> e,
                   long q) {
  BoundParams p;
  p.E_deg = E;
  p.f = f;
  p.n = n;
  p.b = b;
  p.w = w;
  p.e = e;
  p.q = Integer(q);
  return p;
}

Dec200 dec(const Integer& z) { return Dec200(z.get_str()); }

// Independent evaluation of the constant straight from its closed form.
Dec200 oracle_value(BoundKind kind, const BoundParams& p) {
  using boost::multiprecision::pow;
  const Integer binom = binomial(*p.n, *p.n / 2);
  const Dec200 two_binom = 2 * dec(binom);
  Dec200 lin = 0, branch = 0;
  switch (kind) {
    case BoundKind::CMain:
      lin = Dec200(*p.e * *p.e * *p.b + 1);
      branch = pow(two_binom * dec(ipow(*p.q, *p.n * *p.b)), Dec200(*p.E_deg) / Dec200(*p.f));
      break;
    case BoundKind::CTilde:
      lin = Dec200(*p.e * *p.e * *p.b + 1);
      branch = two_binom * dec(ipow(*p.q, *p.n * *p.b));
      break;
    case BoundKind::C1:
      branch = pow(two_binom * sqrt(dec(ipow(*p.q, *p.w))), Dec200(*p.E_deg) / Dec200(*p.f));
      break;
    case BoundKind::C1Tilde:
      branch = two_binom * sqrt(dec(ipow(*p.q, *p.w)));
      break;
    case BoundKind::CPrime: {
      const Dec200 x = Dec200(*p.n * *p.b * *p.K_deg) / Dec200(*p.Kv_deg);
      lin = Dec200(*p.e * *p.e * *p.b + 1);
      branch = pow(two_binom * pow(dec(*p.q), x), Dec200(*p.E_deg) / Dec200(*p.f));
      break;
    }
  }
  return lin > branch ? lin : branch;
}

}  // namespace

TEST(MakeBound, TildeMatchesModularThreshold) {
  const auto B = make_bound(BoundKind::CTilde, params({}, {}, 2, 11, {}, 1, 2));
  ASSERT_TRUE(B.linear.has_value());
  EXPECT_EQ(*B.linear, 12);
  EXPECT_EQ(B.radicand, 4 * ipow(2, 22));
  EXPECT_EQ(B.root, 1u);
}

TEST(MakeBound, C1TildeTrivial) {
  for (long q : {2, 3, 11}) EXPECT_EQ(threshold_value(make_bound(BoundKind::C1Tilde, params({}, {}, 1, {}, 0, {}, q))).value, 2);
}

TEST(MakeBound, MainDirectEvaluation) {
  const auto B = make_bound(BoundKind::CMain, params(2, 1, 2, 1, {}, 2, 3));
  EXPECT_EQ(*B.linear, 5);
  const auto t = threshold_value(B);
  EXPECT_EQ(t.value, 1296);
  EXPECT_TRUE(t.exact);
}

TEST(MakeBound, MissingParameter) {
  EXPECT_THROW(make_bound(BoundKind::CMain, params({}, 1, 2, 1, {}, 2, 3)), MissingParam);
  EXPECT_THROW(make_bound(BoundKind::C1, params(2, 1, 2, {}, {}, {}, 3)), MissingParam);
  EXPECT_THROW(make_bound(BoundKind::CTilde, params({}, {}, 2, 1, {}, {}, 3)), MissingParam);
}

TEST(MakeBound, PrimeNonIntegralExponent) {
  BoundParams p = params(1, 1, 1, 1, {}, 1, 2);
  p.K_deg = 1;
  p.Kv_deg = 3;
  EXPECT_THROW(make_bound(BoundKind::CPrime, p), NonIntegralExponent);
  p.Kv_deg = 2;
  EXPECT_NO_THROW(make_bound(BoundKind::CPrime, p));
}

TEST(MakeBound, PrimeReducesToMainWhenLocalDegreeIsFull) {
  BoundParams p = params(2, 1, 2, 3, {}, 1, 5);
  p.K_deg = 2;
  p.Kv_deg = 2;
  EXPECT_EQ(threshold_value(make_bound(BoundKind::CPrime, p)).value,
            threshold_value(make_bound(BoundKind::CMain, p)).value);
}

TEST(Exceeds, NextPrimeAboveModularBound) {
  const auto B = make_bound(BoundKind::CTilde, params({}, {}, 2, 11, {}, 1, 2));
  EXPECT_TRUE(exceeds(16777259, B));
  EXPECT_FALSE(exceeds(16777216, B));
}

TEST(Exceeds, RamanujanPrimeIsBelow) {
  EXPECT_FALSE(exceeds(691, make_bound(BoundKind::CTilde, params({}, {}, 2, 11, {}, 1, 2))));
}

TEST(Exceeds, C1HalfExponent) {
  const auto B = make_bound(BoundKind::C1, params(2, 1, 2, {}, 2, {}, 2));
  EXPECT_TRUE(exceeds(67, B));
  EXPECT_FALSE(exceeds(64, B));
  EXPECT_TRUE(exceeds(65, B));
  EXPECT_EQ(threshold_value(B).value, 64);
}

TEST(Exceeds, LinearBranchDominates) {
  const auto B = make_bound(BoundKind::CTilde, params({}, {}, 1, 1, {}, 10, 2));
  // max{101, 2·1·2} = 101
  EXPECT_EQ(threshold_value(B).value, 101);
  EXPECT_FALSE(exceeds(101, B));
  EXPECT_TRUE(exceeds(103, B));
}

TEST(Threshold, ModularThreshold) {
  const auto t = threshold_value(make_bound(BoundKind::CTilde, params({}, {}, 2, 11, {}, 1, 2)));
  EXPECT_EQ(t.value, 16777216);
  EXPECT_TRUE(t.exact);
}

TEST(Threshold, IrrationalBranchRoundsUp) {
  // C̃₁(n=2, w=1, q=2) = 4·√2 ≈ 5.657
  const auto B = make_bound(BoundKind::C1Tilde, params({}, {}, 2, {}, 1, {}, 2));
  const auto t = threshold_value(B);
  EXPECT_EQ(t.value, 6);
  EXPECT_FALSE(t.exact);
  EXPECT_TRUE(exceeds(6, B));
  EXPECT_FALSE(exceeds(5, B));
}

TEST(BoundsProperty, AgreesWithDecimalOracle) {
  std::mt19937_64 rng(2026);
  const BoundKind kinds[] = {BoundKind::CMain, BoundKind::CPrime, BoundKind::CTilde, BoundKind::C1, BoundKind::C1Tilde};
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const BoundKind kind = kinds[trial % 5];
    BoundParams p = params(1 + rng() % 4, 1 + rng() % 3, 1 + rng() % 4, rng() % 6, rng() % 7, 1 + rng() % 3,
                           std::vector<long>{2, 3, 4, 5, 7, 9}[rng() % 6]);
    if (kind == BoundKind::CMain || kind == BoundKind::C1 || kind == BoundKind::CPrime) {
      // f divides [E:Q]
      *p.E_deg = *p.f * (1 + rng() % 2);
    }
    p.K_deg = 1 + rng() % 4;
    p.Kv_deg = 1 + rng() % 2;
    BoundExpr B;
    try {
      B = make_bound(kind, p);
    } catch (const NonIntegralExponent&) {
      continue;
    }
    const Dec200 value = oracle_value(kind, p);
    const Threshold t = threshold_value(B);
    for (long delta = -3; delta <= 3; ++delta) {
      const Integer ell = t.value + delta;
      if (ell < 1) continue;
      const Dec200 diff = dec(ell) - value;
      const bool oracle_exceeds = diff > Dec200("1e-120");
      ASSERT_EQ(exceeds(ell, B), oracle_exceeds) << describe(B) << " ell=" << ell;
      // threshold semantics
      if (t.exact)
        EXPECT_EQ(exceeds(ell, B), ell >= t.value + 1);
      else
        EXPECT_EQ(exceeds(ell, B), ell >= t.value);
      ++checked;
    }
    // monotone in ℓ
    EXPECT_TRUE(exceeds(t.value + 1, B));
  }
  EXPECT_GT(checked, 5000);
}

TEST(BoundsProperty, AntitoneInParameters) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    BoundParams p = params(1 + rng() % 3, 1, 1 + rng() % 3, rng() % 4, rng() % 4, 1 + rng() % 3, 2 + rng() % 4);
    const Integer base = threshold_value(make_bound(BoundKind::CMain, p)).value;
    for (int which = 0; which < 5; ++which) {
      BoundParams r = p;
      switch (which) {
        case 0: *r.n += 1; break;
        case 1: *r.b += 1; break;
        case 2: *r.e += 1; break;
        case 3: *r.q += 1; break;
        case 4: *r.E_deg += 1; break;
      }
      EXPECT_GE(threshold_value(make_bound(BoundKind::CMain, r)).value, base);
    }
  }
}

TEST(BoundsProperty, TildeEqualsMainWhenResidueDegreeIsFull) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned long E = 1 + rng() % 4;
    BoundParams p = params(E, E, 1 + rng() % 5, rng() % 8, {}, 1 + rng() % 4, 2 + rng() % 10);
    const auto a = make_bound(BoundKind::CMain, p), b = make_bound(BoundKind::CTilde, p);
    EXPECT_EQ(threshold_value(a).value, threshold_value(b).value);
    for (long ell : {2L, 97L, 65537L, 1000003L}) EXPECT_EQ(exceeds(ell, a), exceeds(ell, b));
  }
}
