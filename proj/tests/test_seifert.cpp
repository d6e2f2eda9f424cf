#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "knotsig/error.hpp"
#include "knotsig/seifert.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace knotsig;
using knotsig::testing::matrix;

namespace {

IntPolynomial ip(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

const char* kTrefoil = "[[-1, 1], [0, -1]]";
const char* kFigureEight = "[[1, 1], [0, -1]]";

// Checks Delta against the numeric det(V - t V^T) = +-t^k Delta(t) at t = 3, 5.
void expect_matches_numeric_det(const SeifertMatrix& v, const IntPolynomial& delta) {
  double r3 = knotsig::testing::numeric_alexander_det(v, 3.0) / delta.evaluate(Rational(3)).get_d();
  double r5 = knotsig::testing::numeric_alexander_det(v, 5.0) / delta.evaluate(Rational(5)).get_d();
  double k3 = std::log(std::fabs(r3)) / std::log(3.0);
  double k5 = std::log(std::fabs(r5)) / std::log(5.0);
  EXPECT_NEAR(k3, std::round(k3), 1e-6);
  EXPECT_NEAR(k3, k5, 1e-6);
  EXPECT_EQ(r3 > 0, r5 > 0);
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_NO_THROW(matrix(kTrefoil));
  EXPECT_EQ(SeifertMatrix::validate(Matrix<Integer>()).dimension(), 0u);
  EXPECT_THROW(matrix("[[1]]"), OddDimensionError);
  EXPECT_THROW(matrix("[[1, 0], [0, 1]]"), NotUnimodularError);
  EXPECT_THROW(matrix("[[1, 2], [0, 1]]"), NotUnimodularError);
  EXPECT_THROW(SeifertMatrix::validate(Matrix<Integer>(2, 3)), InputError);
}

TEST(Validate, ErrorsNameTheCheck) {
  try {
    matrix("[[1]]");
    FAIL();
  } catch (const OddDimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("odd"), std::string::npos);
  }
  try {
    matrix("[[1, 0], [0, 1]]");
    FAIL();
  } catch (const NotUnimodularError& e) {
    EXPECT_NE(std::string(e.what()).find("det"), std::string::npos);
  }
}

TEST(Alexander, Examples) {
  EXPECT_EQ(alexander(matrix(kTrefoil)).poly, ip({1, -1, 1}));
  EXPECT_EQ(alexander(SeifertMatrix()).poly, ip({1}));
  EXPECT_EQ(alexander(matrix(kFigureEight)).poly, ip({-1, 3, -1}));
}

TEST(Alexander, MatchesNumericDeterminant) {
  for (const char* text : {kTrefoil, kFigureEight}) {
    SeifertMatrix v = matrix(text);
    expect_matches_numeric_det(v, alexander(v).poly);
  }
  for (const auto& record : knotsig::testing::fixture_knots())
    expect_matches_numeric_det(record.seifert, alexander(record.seifert).poly);
}

TEST(TracePolynomial, Examples) {
  EXPECT_EQ(trace_polynomial({ip({1, -1, 1})}).poly, ip({-1, 1}));
  EXPECT_EQ(trace_polynomial({ip({1})}).poly, ip({1}));
  EXPECT_EQ(trace_polynomial({ip({-1, 3, -1})}).poly, ip({3, -1}));
}

TEST(TracePolynomial, RejectsAsymmetricInput) {
  EXPECT_THROW(trace_polynomial({ip({1, 2, 3})}), InputError);
  EXPECT_THROW(trace_polynomial({ip({1, 1})}), InputError);
}

TEST(CircleRoots, Examples) {
  auto trefoil = circle_roots(matrix(kTrefoil));
  ASSERT_EQ(trefoil.size(), 1u);
  EXPECT_EQ(compare(trefoil[0], Rational(1)), 0);
  EXPECT_TRUE(circle_roots(matrix(kFigureEight)).empty());
  EXPECT_TRUE(circle_roots(SeifertMatrix()).empty());
}

TEST(Calculus, SumAndMirror) {
  SeifertMatrix t = matrix(kTrefoil);
  EXPECT_EQ(connected_sum(t, SeifertMatrix()), t);
  EXPECT_EQ(connected_sum(SeifertMatrix(), t), t);
  SeifertMatrix tt = connected_sum(t, t);
  ASSERT_EQ(tt.dimension(), 4u);
  EXPECT_EQ(tt(0, 1), 1);
  EXPECT_EQ(tt(2, 3), 1);
  EXPECT_EQ(tt(0, 2), 0);
  EXPECT_EQ(tt(3, 2), 0);
  EXPECT_EQ(mirror(mirror(t)), t);
  EXPECT_EQ(mirror(SeifertMatrix()), SeifertMatrix());
  EXPECT_EQ(mirror(t), matrix("[[1, 0], [-1, 1]]"));
  EXPECT_EQ(connected_sum_power(t, 0), SeifertMatrix());
  EXPECT_EQ(connected_sum_power(t, 2), tt);
}

TEST(Parse, Syntaxes) {
  Matrix<Integer> m = parse_integer_matrix(" { {1 ,-2},\n{ 30, 4 } } ");
  ASSERT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(0, 1), -2);
  EXPECT_EQ(m(1, 0), 30);
  EXPECT_EQ(parse_integer_matrix("[[1,-2],[30,4]]"), m);
  for (const char* empty : {"[]", "[[]]", "{}", "{{}}", " [ [ ] ] "})
    EXPECT_EQ(parse_integer_matrix(empty).rows(), 0u) << empty;
  EXPECT_EQ(parse_integer_matrix("[[123456789012345678901234567890]]")(0, 0),
            Integer("123456789012345678901234567890"));
  for (const char* bad : {"", "[[1, 2], [3]]", "[[1, 2], [3, 4]", "[[1, x]]", "[[1, 2]] junk", "[[1 2]]",
                          "[[1, 2], [3, 4]]]", "{[1]}"})
    EXPECT_THROW(parse_integer_matrix(bad), InputError) << bad;
  EXPECT_EQ(format_matrix(m), "[[1, -2], [30, 4]]");
  EXPECT_EQ(parse_integer_matrix(format_matrix(m)), m);
}

// Properties over random block-sum matrices.

TEST(SeifertProperties, AlexanderInvariants) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    SeifertMatrix v = knotsig::testing::random_seifert(rng, 1 + trial % 4);
    IntPolynomial d = alexander(v).poly;
    ASSERT_EQ(d.degree() % 2, 0);
    EXPECT_NE(d.coeff(0), 0);
    for (int k = 0; k <= d.degree(); ++k)
      EXPECT_EQ(d.coeff(static_cast<std::size_t>(k)), d.coeff(static_cast<std::size_t>(d.degree() - k)));
    EXPECT_EQ(d.evaluate(Integer(1)), 1);

    IntPolynomial q = trace_polynomial({d}).poly;
    Integer at2 = q.evaluate(Integer(2));
    EXPECT_TRUE(at2 == 1 || at2 == -1);
    Integer at_minus2 = q.evaluate(Integer(-2));
    EXPECT_TRUE(mpz_odd_p(at_minus2.get_mpz_t()));
  }
}

TEST(SeifertProperties, AlexanderIsMultiplicative) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertMatrix a = knotsig::testing::random_seifert(rng, 1 + trial % 2);
    SeifertMatrix b = knotsig::testing::random_seifert(rng, 1 + trial % 3);
    EXPECT_EQ(alexander(connected_sum(a, b)).poly, alexander(a).poly * alexander(b).poly);
  }
}

TEST(SeifertProperties, CircleRootsOfSumAreMergedSets) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertMatrix a = knotsig::testing::random_seifert(rng, 1 + trial % 2);
    SeifertMatrix b = knotsig::testing::random_seifert(rng, 1 + trial % 3);
    std::vector<RealAlgebraicNumber> expected = circle_roots(a);
    for (const auto& r : circle_roots(b)) {
      bool seen = false;
      for (const auto& e : expected) seen = seen || compare(e, r) == 0;
      if (!seen) expected.push_back(r);
    }
    std::sort(expected.begin(), expected.end(),
              [](const auto& x, const auto& y) { return compare(x, y) < 0; });
    auto merged = circle_roots(connected_sum(a, b));
    ASSERT_EQ(merged.size(), expected.size());
    for (std::size_t i = 0; i < merged.size(); ++i) EXPECT_EQ(compare(merged[i], expected[i]), 0);
  }
}

TEST(SeifertProperties, MirrorAndCongruenceKeepValidity) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertMatrix v = knotsig::testing::random_seifert(rng, 1 + trial % 4);
    EXPECT_NO_THROW(SeifertMatrix::validate(mirror(v).entries()));
    EXPECT_EQ(mirror(mirror(v)), v);
    // Mirror reverses Delta(t) -> Delta(1/t), which is the same symmetric polynomial.
    EXPECT_EQ(alexander(mirror(v)).poly, alexander(v).poly);
  }
}

TEST(Fixtures, AllValidate) {
  const auto& records = knotsig::testing::fixture_knots();
  EXPECT_EQ(records.size(), 23u);
  for (const auto& r : records) EXPECT_EQ(r.seifert.dimension() % 2, 0u) << r.name;
}
