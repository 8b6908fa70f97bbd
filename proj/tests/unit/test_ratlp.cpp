#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "relint/errors.hpp"
#include "relint/lp.hpp"
#include "test_helpers.hpp"

using namespace relint;
using namespace relint::testing;

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("-2/1")), "-2");
  EXPECT_EQ(to_string(parse_rat("0/7")), "0");
  EXPECT_EQ(to_string(parse_rat("+5")), "5");
  EXPECT_THROW(parse_rat("0.5"), InputError);
  EXPECT_THROW(parse_rat("1e3"), InputError);
  EXPECT_THROW(parse_rat("1/0"), InputError);
  EXPECT_THROW(parse_rat(""), InputError);
  EXPECT_THROW(parse_rat("1/-2"), InputError);
}

TEST(Rational, ExtendedArithmetic) {
  const auto inf = ExtendedRat::pos_inf();
  const auto ninf = ExtendedRat::neg_inf();
  EXPECT_EQ(ExtendedRat(R("1/2")) - ninf, inf);
  EXPECT_EQ(inf + ExtendedRat(3), inf);
  EXPECT_THROW(inf + ninf, IndeterminateForm);
  EXPECT_THROW(inf - inf, IndeterminateForm);
  EXPECT_THROW(inf.value(), IndeterminateForm);
  EXPECT_LT(ninf, ExtendedRat(-1000));
  EXPECT_LT(ExtendedRat(1000), inf);
  EXPECT_EQ(inf.to_string(), "+inf");
  EXPECT_EQ(ExtendedRat::parse("-inf"), ninf);
  EXPECT_EQ(ExtendedRat::parse("3/6").value(), R("1/2"));
}

TEST(LP, SingleConstraint) {
  LPProblem p{ivec({1}), imat({{1}}), ivec({1}), {}, {}, {}};
  const auto r = solve_lp(p);
  ASSERT_EQ(r.status, LPStatus::Optimal);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.point, ivec({1}));
}

TEST(LP, BoxMaximum) {
  LPProblem p{ivec({1, 1}), imat({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), ivec({1, 1, 0, 0}), {}, {}, {}};
  const auto r = solve_lp(p);
  ASSERT_EQ(r.status, LPStatus::Optimal);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.point, ivec({1, 1}));
}

TEST(LP, FreeVariableUnbounded) {
  LPProblem p{ivec({1}), {}, {}, {}, {}, {}};
  const auto r = solve_lp(p);
  ASSERT_EQ(r.status, LPStatus::Unbounded);
  EXPECT_EQ(r.ray, ivec({1}));
}

TEST(LP, UnboundedRayIsACertificate) {
  // max x + y on {x - y <= 1, -x <= 0}
  LPProblem p{ivec({1, 1}), imat({{1, -1}, {-1, 0}}), ivec({1, 0}), {}, {}, {}};
  const auto r = solve_lp(p);
  ASSERT_EQ(r.status, LPStatus::Unbounded);
  for (const auto& row : p.ineq_lhs) EXPECT_LE(dot(row, r.ray), 0);
  EXPECT_GT(dot(p.objective, r.ray), 0);
}

TEST(LP, Infeasible) {
  LPProblem p{ivec({0}), imat({{1}, {-1}}), ivec({0, -1}), {}, {}, {}};
  EXPECT_EQ(solve_lp(p).status, LPStatus::Infeasible);
  LPProblem q{ivec({0, 0}), {}, {}, imat({{1, 1}, {2, 2}}), ivec({1, 3}), {}};
  EXPECT_EQ(solve_lp(q).status, LPStatus::Infeasible);
}

TEST(LP, RedundantEqualities) {
  LPProblem p{ivec({1, 0}), imat({{1, 0}}), ivec({5}), imat({{1, 1}, {2, 2}}), ivec({1, 2}), {}};
  const auto r = solve_lp(p);
  ASSERT_EQ(r.status, LPStatus::Optimal);
  EXPECT_EQ(r.value, 5);
  EXPECT_EQ(r.point, ivec({5, -4}));
}

TEST(LP, DimensionMismatchIsInputError) {
  LPProblem p{ivec({1, 1}), imat({{1}}), ivec({1}), {}, {}, {}};
  EXPECT_THROW(solve_lp(p), InputError);
  LPProblem q{ivec({1}), imat({{1}}), ivec({1, 2}), {}, {}, {}};
  EXPECT_THROW(solve_lp(q), InputError);
}

TEST(LP, DeskScaleLimit) {
  LPProblem p;
  p.objective = zeros(kMaxLpVariables + 1);
  EXPECT_THROW(solve_lp(p), DeskScaleLimit);
}

TEST(Nullspace, Examples) {
  EXPECT_TRUE(nullspace(identity(2), 2).empty());
  EXPECT_EQ(nullspace(imat({{0, 0}}), 2).size(), 2u);
  EXPECT_EQ(nullspace({}, 3).size(), 3u);
  const auto ns = nullspace(imat({{1, 1}}), 2);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(dot(ivec({1, 1}), ns[0]), 0);
  EXPECT_FALSE(is_zero(ns[0]));
  EXPECT_EQ(ns[0][0], -ns[0][1]);
}

TEST(ConeIsSubspace, Examples) {
  EXPECT_TRUE(cone_is_subspace({ivec({1, 0}), ivec({-1, 0})}));
  EXPECT_FALSE(cone_is_subspace({ivec({1, 0}), ivec({0, 1})}));
  EXPECT_TRUE(cone_is_subspace({ivec({1, 0}), ivec({-1, 0}), ivec({0, 1}), ivec({0, -1})}));
  EXPECT_TRUE(cone_is_subspace({}));
  EXPECT_TRUE(cone_is_subspace({ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})}));
}

namespace {

Rat random_rat(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return ratio(num(rng), den(rng));
}

// Feasible and bounded by construction: a box of radius 10 around a rational
// point x0, plus random rows that x0 satisfies.
LPProblem random_bounded_lp(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim_dist(1, 6);
  const int n = dim_dist(rng);
  std::uniform_int_distribution<int> extra_dist(0, 12 - 2 * n);
  const int extra = extra_dist(rng);
  LPProblem p;
  Vector x0(n);
  for (auto& v : x0) v = random_rat(rng, 10);
  for (int i = 0; i < n; ++i) {
    p.ineq_lhs.push_back(unit_vector(n, i));
    p.ineq_rhs.push_back(x0[i] + 10);
    p.ineq_lhs.push_back(negate(unit_vector(n, i)));
    p.ineq_rhs.push_back(10 - x0[i]);
  }
  for (int k = 0; k < extra; ++k) {
    Vector a(n);
    for (auto& v : a) v = random_rat(rng, 10);
    p.ineq_lhs.push_back(a);
    p.ineq_rhs.push_back(dot(a, x0) + abs(random_rat(rng, 10)));
  }
  p.objective.resize(n);
  for (auto& v : p.objective) v = random_rat(rng, 10);
  return p;
}

// Dual of max c.x, A x <= b (x free): min b.y subject to A^T y = c, y >= 0.
Rat dual_optimum(const LPProblem& p) {
  const std::size_t m = p.ineq_lhs.size();
  const std::size_t n = p.objective.size();
  LPProblem d;
  d.objective = negate(p.ineq_rhs);
  d.eq_lhs = transpose(p.ineq_lhs, n);
  d.eq_rhs = p.objective;
  d.nonneg.assign(m, true);
  const auto r = solve_lp(d);
  EXPECT_EQ(r.status, LPStatus::Optimal);
  for (const auto& y : r.point) EXPECT_GE(y, 0);
  return -r.value;
}

}  // namespace

TEST(LPProperty, StrongDualityAgainstDualConstruction) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 100; ++trial) {
    const LPProblem p = random_bounded_lp(rng);
    const auto r = solve_lp(p);
    ASSERT_EQ(r.status, LPStatus::Optimal) << "trial " << trial;
    for (std::size_t i = 0; i < p.ineq_lhs.size(); ++i) EXPECT_LE(dot(p.ineq_lhs[i], r.point), p.ineq_rhs[i]);
    EXPECT_EQ(dot(p.objective, r.point), r.value);
    EXPECT_EQ(r.value, dual_optimum(p)) << "trial " << trial;
  }
}

TEST(LPProperty, SignCoherence) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    LPProblem p = random_bounded_lp(rng);
    const auto hi = solve_lp(p);
    p.objective = negate(p.objective);
    const auto lo = solve_lp(p);
    ASSERT_EQ(hi.status, LPStatus::Optimal);
    ASSERT_EQ(lo.status, LPStatus::Optimal);
    EXPECT_GE(hi.value, -lo.value);
    // Both optima are attained over the same set, so the value range is
    // [-lo, hi]; its endpoints are the true extremes of c.x.
    EXPECT_EQ(dot(negate(p.objective), hi.point), hi.value);
    EXPECT_EQ(dot(p.objective, lo.point), lo.value);
  }
}

TEST(LPProperty, Deterministic) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const LPProblem p = random_bounded_lp(rng);
    const auto a = solve_lp(p);
    const auto b = solve_lp(p);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.point, b.point);
  }
}

TEST(ConeIsSubspaceProperty, InvariantUnderScalingAndPermutation) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-2, 2), count(1, 5), pos(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vector> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) gens.push_back(Vector{Rat(coord(rng)), Rat(coord(rng)), Rat(coord(rng))});
    // Sometimes close the list under negation so both answers occur.
    if (trial % 3 == 0) {
      const auto copy = gens;
      for (const auto& g : copy) gens.push_back(negate(g));
    }
    const bool base = cone_is_subspace(gens);
    auto scaled = gens;
    for (auto& g : scaled) g = scale(ratio(pos(rng), pos(rng)), g);
    std::shuffle(scaled.begin(), scaled.end(), rng);
    EXPECT_EQ(cone_is_subspace(scaled), base);
  }
}
