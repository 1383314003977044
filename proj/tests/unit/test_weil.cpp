#include <gtest/gtest.h>

#include <random>

#include "galcong/arith.hpp"
#include "galcong/weil.hpp"
#include "numeric_roots.hpp"

using namespace galcong;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

CharPolyOverE over_q(const IntPoly& p, long q) {
  return CharPolyOverE::from_rational(NumberField::rationals(), to_rat(p), Integer(q));
}

FieldElement elt(const NumberField& E, std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return FieldElement(E, std::move(v));
}

WeilWeightMultiset weights(const WeilWeightsResult& r) {
  EXPECT_TRUE(std::holds_alternative<WeilWeightMultiset>(r));
  return std::get<WeilWeightMultiset>(r);
}

}  // namespace

TEST(IsWeilInteger, DeltaAtTwo) { EXPECT_TRUE(is_weil_integer_poly(ip({2048, 24, 1}), 2, 11)); }

TEST(IsWeilInteger, WeightZeroUnit) {
  for (long q : {2, 3, 7, 49}) EXPECT_TRUE(is_weil_integer_poly(ip({-1, 1}), q, 0));
}

TEST(IsWeilInteger, MixedModuli) { EXPECT_FALSE(is_weil_integer_poly(ip({2, -3, 1}), 2, 1)); }

TEST(IsWeilInteger, LinearQ) {
  for (long q : {2, 3, 5, 9}) EXPECT_TRUE(is_weil_integer_poly(ip({-q, 1}), q, 2));
}

TEST(IsWeilInteger, RejectsNonMonicAndZeroRoot) {
  EXPECT_THROW(is_weil_integer_poly(ip({1, 2}), 2, 0), NotMonic);
  EXPECT_FALSE(is_weil_integer_poly(ip({0, 1}), 2, 0));
}

TEST(IsWeilInteger, ReciprocalButOffCircle) {
  // roots 2 and 1/2·4 = 2? use T² − 5T + 4: roots 1, 4 with product 4 = 2^2 but not on the circle
  EXPECT_FALSE(is_weil_integer_poly(ip({4, -5, 1}), 2, 2));
  // x² − 3x + 1 is self-reciprocal with real roots off the unit circle
  EXPECT_FALSE(is_weil_integer_poly(ip({1, -3, 1}), 2, 0));
  // cyclotomic polynomials lie on the unit circle
  EXPECT_TRUE(is_weil_integer_poly(ip({1, 1, 1, 1, 1}), 5, 0));
}

TEST(IsWeilIntegerProperty, QuadraticFamilyAgreesWithNumericOracle) {
  const oracle::Real tol("1e-30");
  std::size_t cases = 0;
  for (long q : {2, 3, 5})
    for (unsigned long w = 0; w <= 4; ++w) {
      const Integer Q = ipow(q, w);
      // |a| ≤ 2 q^{w/2}  ⟺  a² ≤ 4Q
      for (long a = -40; a <= 40; ++a) {
        if (Integer(a * a) > 4 * Q) continue;
        const IntPoly m{Q, Integer(a), Integer(1)};
        const bool exact = is_weil_integer_poly(m, q, w);
        const bool numeric = oracle::all_moduli_squared_equal(m, Rational(Q), tol);
        EXPECT_EQ(exact, numeric) << to_string(m) << " q=" << q << " w=" << w;
        EXPECT_TRUE(exact);
        ++cases;
      }
    }
  EXPECT_GE(cases, 100u);
}

TEST(NormPoly, RationalFieldIsIdentity) {
  EXPECT_EQ(norm_poly(over_q(ip({2048, 24, 1}), 2)), ip({2048, 24, 1}));
}

TEST(NormPoly, GaussianLinear) {
  const NumberField E(ip({1, 0, 1}));
  const CharPolyOverE P(E, {-elt(E, {0, 1}), elt(E, {1})}, 5);
  EXPECT_EQ(norm_poly(P), ip({1, 0, 1}));
}

TEST(NormPoly, RootTwoLinear) {
  const NumberField E(ip({-2, 0, 1}));
  const CharPolyOverE P(E, {-elt(E, {1, 1}), elt(E, {1})}, 5);
  EXPECT_EQ(norm_poly(P), ip({-1, -2, 1}));
}

TEST(NormPoly, NonIntegralThrows) {
  const CharPolyOverE P = CharPolyOverE::from_rational(NumberField::rationals(), RatPoly{Rational(-1, 2), Rational(1)}, 2);
  EXPECT_THROW(norm_poly(P), NotIntegral);
  EXPECT_FALSE(P.is_E_integral());
}

TEST(WeilWeights, Delta) {
  const auto w = weights(weil_weights(over_q(ip({2048, 24, 1}), 2)));
  EXPECT_EQ(w.entries, (std::vector<unsigned long>{11, 11}));
}

TEST(WeilWeights, SplitWeights) {
  const auto w = weights(weil_weights(over_q(ip({-1, 1}) * ip({-4, 1}), 2)));
  EXPECT_EQ(w.entries, (std::vector<unsigned long>{0, 4}));
}

TEST(WeilWeights, PowerOfQ) {
  for (unsigned long i = 0; i < 5; ++i) {
    const auto w = weights(weil_weights(over_q(IntPoly{-ipow(3, i), Integer(1)}, 3)));
    EXPECT_EQ(w.entries, (std::vector<unsigned long>{2 * i}));
  }
}

TEST(WeilWeights, NotTypeW) {
  EXPECT_TRUE(std::holds_alternative<NotTypeW>(weil_weights(over_q(ip({3, -3, 1}), 2))));
  // constant term 2 with degree 2 gives weight 1/2 per root
  EXPECT_TRUE(std::holds_alternative<NotTypeW>(weil_weights(over_q(ip({2, 0, 1}) * ip({2, 0, 1}), 4))));
  EXPECT_THROW(weil_weights(over_q(ip({0, 1}), 2)), ZeroRoot);
}

TEST(WeilWeights, OverEView) {
  const NumberField E(ip({1, 0, 1}));
  // T − 2i has weight 2 at q = 2; norm view duplicates it
  const CharPolyOverE P(E, {-elt(E, {0, 2}), elt(E, {1})}, 2);
  const auto w = weights(weil_weights(P));
  EXPECT_EQ(w.entries, (std::vector<unsigned long>{2, 2}));
  ASSERT_TRUE(w.over_E().has_value());
  EXPECT_EQ(*w.over_E(), (std::vector<unsigned long>{2}));
}

TEST(WeilWeightsProperty, UnionAndSum) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const long q = trial % 2 ? 2 : 3;
    auto random_weil = [&]() {
      const unsigned long w = rng() % 5;
      const Integer Q = ipow(q, w);
      Integer bound;
      mpz_sqrt(bound.get_mpz_t(), Integer(4 * Q).get_mpz_t());
      const long a = static_cast<long>(rng() % (2 * bound.get_ui() + 1)) - static_cast<long>(bound.get_ui());
      return IntPoly{Q, Integer(a), Integer(1)};
    };
    const IntPoly P = random_weil(), P2 = random_weil();
    const auto wp = weights(weil_weights(over_q(P, q)));
    const auto wq = weights(weil_weights(over_q(P2, q)));
    const auto wpq = weights(weil_weights(over_q(P * P2, q)));
    std::vector<unsigned long> u = wp.entries;
    u.insert(u.end(), wq.entries.begin(), wq.entries.end());
    std::sort(u.begin(), u.end());
    EXPECT_EQ(wpq.entries, u);
    // Σ W = 2 log_q |P(0)|
    const auto lg = exact_log(abs(P[0]), Integer(q));
    ASSERT_TRUE(lg.has_value());
    EXPECT_EQ(wp.sum(), 2 * *lg);
  }
}

TEST(CoefficientBound, Delta) { EXPECT_TRUE(coefficient_weil_bound_check(over_q(ip({2048, 24, 1}), 2), 22)); }

TEST(CoefficientBound, Trivial) { EXPECT_TRUE(coefficient_weil_bound_check(over_q(ip({-1, 1}), 7), 0)); }

TEST(CoefficientBound, ConstantTooLarge) {
  EXPECT_FALSE(coefficient_weil_bound_check(over_q(ip({4, -5, 1}), 2), 2));
}
