#include <gtest/gtest.h>

#include <chrono>

#include "relint/duality.hpp"
#include "relint/errors.hpp"
#include "relint/generate.hpp"
#include "test_helpers.hpp"

using namespace relint;
using namespace relint::testing;

namespace {

AffinePiece piece(std::initializer_list<long> slope, long offset) { return {ivec(slope), Rat(offset)}; }

const HPolyhedron kLine = HPolyhedron::whole_space(1);

PLConvexFunction abs_fn() { return {1, {piece({1}, 0), piece({-1}, 0)}, kLine}; }
// -|x - 1| = min(x - 1, 1 - x)
PLConcaveFunction neg_abs_shifted() { return {1, {piece({1}, -1), piece({-1}, 1)}, kLine}; }
PLConvexFunction zero_f() { return {1, {piece({0}, 0)}, kLine}; }
PLConcaveFunction zero_g() { return {1, {piece({0}, 0)}, kLine}; }
PLConvexFunction nonpositive_indicator() { return {1, {piece({0}, 0)}, HPolyhedron(1, imat({{1}}), ivec({0}))}; }
PLConcaveFunction identity_g() { return {1, {piece({1}, 0)}, kLine}; }

// 1-D brute force of inf |x| + |x - 1| over the grid i/4.
Rat brute_primal_abs() {
  std::optional<Rat> best;
  for (long i = -40; i <= 40; ++i) {
    const Vector x{ratio(i, 4)};
    const Rat v = (evaluate(abs_fn(), x) - evaluate(neg_abs_shifted(), x)).value();
    if (!best || v < *best) best = v;
  }
  return *best;
}

// sup of mu - lambda over {(x*, lambda, mu): lambda >= f*(x*), mu <= g_*(x*)}
// by vertex enumeration rather than simplex.
ExtendedRat brute_dual(const PLConvexFunction& f, const PLConcaveFunction& g) {
  const std::size_t n = f.dim;
  const HPolyhedron epi = epigraph(convex_form(conjugate(f)));
  const HPolyhedron hypo = hypograph(concave_form(concave_conjugate(g)));
  Matrix A, E;
  Vector b, d;
  auto lift = [&](const Vector& row, std::size_t slot) {
    Vector r = zeros(n + 2);
    for (std::size_t j = 0; j < n; ++j) r[j] = row[j];
    r[slot] = row[n];
    return r;
  };
  for (std::size_t i = 0; i < epi.num_ineq(); ++i) { A.push_back(lift(epi.A()[i], n)); b.push_back(epi.b()[i]); }
  for (std::size_t i = 0; i < epi.num_eq(); ++i) { E.push_back(lift(epi.E()[i], n)); d.push_back(epi.d()[i]); }
  for (std::size_t i = 0; i < hypo.num_ineq(); ++i) { A.push_back(lift(hypo.A()[i], n + 1)); b.push_back(hypo.b()[i]); }
  for (std::size_t i = 0; i < hypo.num_eq(); ++i) { E.push_back(lift(hypo.E()[i], n + 1)); d.push_back(hypo.d()[i]); }
  const HPolyhedron Z(n + 2, A, b, E, d);
  const VPolyhedron& V = Z.vrep();
  if (V.is_empty()) return ExtendedRat::neg_inf();
  Vector c = zeros(n + 2);
  c[n] = -1;
  c[n + 1] = 1;
  for (const auto& r : V.rays) {
    if (sgn(dot(c, r)) > 0) return ExtendedRat::pos_inf();
  }
  Rat best = dot(c, V.points.front());
  for (const auto& p : V.points) best = std::max(best, Rat(dot(c, p)));
  return best;
}

}  // namespace

TEST(SolvePrimal, Examples) {
  EXPECT_EQ(solve_primal(abs_fn(), neg_abs_shifted()), ExtendedRat(1));
  EXPECT_EQ(brute_primal_abs(), 1);
  EXPECT_EQ(solve_primal(zero_f(), zero_g()), ExtendedRat(0));
  EXPECT_EQ(solve_primal(nonpositive_indicator(), identity_g()), ExtendedRat(0));
}

TEST(SolvePrimal, InfiniteValues) {
  const PLConcaveFunction far{1, {piece({0}, 0)}, interval(3, 4)};
  EXPECT_TRUE(solve_primal(PLConvexFunction{1, {piece({0}, 0)}, interval(0, 1)}, far).is_pos_inf());
  EXPECT_TRUE(solve_primal(zero_f(), identity_g()).is_neg_inf());
}

TEST(SolveDual, Examples) {
  auto d = solve_dual(abs_fn(), neg_abs_shifted());
  EXPECT_EQ(d.value, ExtendedRat(1));
  ASSERT_TRUE(d.optimizer);
  EXPECT_EQ(*d.optimizer, ivec({1}));

  d = solve_dual(zero_f(), zero_g());
  EXPECT_EQ(d.value, ExtendedRat(0));
  EXPECT_EQ(*d.optimizer, ivec({0}));

  d = solve_dual(nonpositive_indicator(), identity_g());
  EXPECT_EQ(d.value, ExtendedRat(0));
  EXPECT_EQ(*d.optimizer, ivec({1}));
}

TEST(Qualification, Examples) {
  auto q = qualification_report(abs_fn(), neg_abs_shifted());
  EXPECT_TRUE(q.qri && q.ri);
  for (bool b : q.quasi_regular) EXPECT_TRUE(b);
  for (bool b : q.interior) EXPECT_TRUE(b);

  const PLConvexFunction at0{1, {piece({0}, 0)}, HPolyhedron::singleton(ivec({0}))};
  const PLConcaveFunction at1{1, {piece({0}, 0)}, HPolyhedron::singleton(ivec({1}))};
  EXPECT_FALSE(qualification_report(at0, at1).qri);

  const PLConvexFunction on01{1, {piece({0}, 0)}, interval(0, 1)};
  const PLConcaveFunction on12{1, {piece({0}, 0)}, interval(1, 2)};
  q = qualification_report(on01, on12);
  EXPECT_FALSE(q.qri);
  EXPECT_FALSE(q.ri);
}

TEST(VerifyFenchelRockafellar, Examples) {
  auto r = verify_fenchel_rockafellar(abs_fn(), neg_abs_shifted());
  EXPECT_EQ(r.primal_value, ExtendedRat(1));
  EXPECT_EQ(r.dual_value, ExtendedRat(1));
  ASSERT_TRUE(r.gap);
  EXPECT_EQ(*r.gap, 0);
  EXPECT_EQ(r.certifying_routes,
            (std::vector<std::string>{"qri-qualification", "ri-qualification", "interior-qualification"}));

  r = verify_fenchel_rockafellar(zero_f(), zero_g());
  EXPECT_EQ(r.primal_value, ExtendedRat(0));
  EXPECT_TRUE(r.strong_duality);

  r = verify_fenchel_rockafellar(nonpositive_indicator(), identity_g());
  EXPECT_EQ(r.primal_value, ExtendedRat(0));
  EXPECT_EQ(r.dual_value, ExtendedRat(0));
  EXPECT_TRUE(r.qualification.qri);
  EXPECT_TRUE(r.qualification.ri);
}

TEST(ExtractDualCertificate, Examples) {
  auto c = extract_dual_certificate(abs_fn(), neg_abs_shifted(), Rat(1));
  EXPECT_EQ(c.xstar, ivec({1}));
  EXPECT_GT(c.beta, 0);
  EXPECT_GE(c.dual_objective, ExtendedRat(1));

  c = extract_dual_certificate(zero_f(), zero_g());
  EXPECT_EQ(c.xstar, ivec({0}));
  EXPECT_EQ(c.alpha, 0);

  c = extract_dual_certificate(nonpositive_indicator(), identity_g(), Rat(0));
  EXPECT_EQ(c.xstar, ivec({1}));
}

TEST(ExtractDualCertificate, Failures) {
  EXPECT_THROW(extract_dual_certificate(zero_f(), identity_g()), PreconditionFailed);
  // alpha above the primal value: the sets overlap in their relative interiors.
  EXPECT_THROW(extract_dual_certificate(abs_fn(), neg_abs_shifted(), Rat(2)), QualificationFailure);
}

TEST(ExtractDualCertificate, TouchingDomainsStillCertify) {
  // Polyhedral data needs only overlapping domains; a slanted separator exists.
  const PLConvexFunction on01{1, {piece({0}, 0)}, interval(0, 1)};
  const PLConcaveFunction on12{1, {piece({0}, 0)}, interval(1, 2)};
  const auto c = extract_dual_certificate(on01, on12);
  EXPECT_GT(c.beta, 0);
  EXPECT_GE(c.xstar[0], 0);
  EXPECT_EQ(c.dual_objective, ExtendedRat(0));
}

TEST(DualityProperty, WeakDualityAndDualOracle) {
  InstanceRng rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const auto dim = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto pair = random_pl_pair(rng, dim, OverlapMode::Any);
    const auto primal = solve_primal(pair.f, pair.g);
    const auto dual = solve_dual(pair.f, pair.g);
    EXPECT_GE(primal, dual.value) << "trial " << trial;
    if (trial % 3 == 0) EXPECT_EQ(dual.value, brute_dual(pair.f, pair.g)) << "trial " << trial;
  }
}

TEST(DualityProperty, QualifiedPairsHaveZeroGap) {
  InstanceRng rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    const auto dim = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto pair = random_pl_pair(rng, dim, OverlapMode::Qualified);
    const auto r = verify_fenchel_rockafellar(pair.f, pair.g);
    EXPECT_TRUE(r.qualification.qri);
    EXPECT_TRUE(r.strong_duality);
    if (r.gap) EXPECT_EQ(*r.gap, 0);
    if (r.qualification.ri) EXPECT_TRUE(r.qualification.qri);
    if (r.primal_value.is_finite()) {
      const auto c = extract_dual_certificate(pair.f, pair.g);
      EXPECT_GE(c.dual_objective, ExtendedRat(c.alpha));
    }
  }
}

TEST(DualityProperty, DisjointPairsAreUnqualified) {
  InstanceRng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto dim = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto pair = random_pl_pair(rng, dim, OverlapMode::Disjoint);
    const auto q = qualification_report(pair.f, pair.g);
    EXPECT_FALSE(q.qri);
    EXPECT_FALSE(q.ri);
    EXPECT_GE(solve_primal(pair.f, pair.g), solve_dual(pair.f, pair.g).value);
  }
}
