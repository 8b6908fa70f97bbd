#include <gtest/gtest.h>

#include "relint/errors.hpp"
#include "relint/generate.hpp"
#include "relint/functions.hpp"
#include "relint/interiors.hpp"
#include "relint/lp.hpp"
#include "test_helpers.hpp"

using namespace relint;
using namespace relint::testing;

namespace {

AffinePiece piece(std::initializer_list<long> slope, long offset) { return {ivec(slope), Rat(offset)}; }

PLConvexFunction abs_fn() {
  return {1, {piece({1}, 0), piece({-1}, 0)}, HPolyhedron::whole_space(1)};
}

PLConvexFunction indicator(const HPolyhedron& set) { return {set.dim(), {{zeros(set.dim()), 0}}, set}; }

// sup over the grid x = i/step, |x| <= radius, x in dom f, of x* x - f(x).
std::optional<Rat> brute_conjugate_1d(const PLConvexFunction& f, const Rat& xstar, long radius,
                                      long step = 4) {
  std::optional<Rat> best;
  for (long i = -step * radius; i <= step * radius; ++i) {
    const Vector x{ratio(i, step)};
    const auto fx = evaluate(f, x);
    if (!fx.is_finite()) continue;
    Rat v = xstar * x[0] - fx.value();
    if (!best || v > *best) best = v;
  }
  return best;
}

// inf over the grid of x* x - g(x).
std::optional<Rat> brute_concave_conjugate_1d(const PLConcaveFunction& g, const Rat& xstar, long radius) {
  std::optional<Rat> best;
  for (long i = -4 * radius; i <= 4 * radius; ++i) {
    const Vector x{ratio(i, 4)};
    const auto gx = evaluate(g, x);
    if (!gx.is_finite()) continue;
    Rat v = xstar * x[0] - gx.value();
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(abs_fn(), ivec({-3})), ExtendedRat(3));
  EXPECT_TRUE(evaluate(indicator(interval(0, 1)), ivec({2})).is_pos_inf());
  const PLConvexFunction f{1, {piece({1}, 0), piece({2}, -1)}, HPolyhedron::whole_space(1)};
  EXPECT_EQ(evaluate(f, ivec({1})), ExtendedRat(1));
  const PLConcaveFunction g{1, {piece({1}, 0)}, interval(0, 1)};
  EXPECT_TRUE(evaluate(g, ivec({5})).is_neg_inf());
  EXPECT_THROW(evaluate(abs_fn(), ivec({1, 2})), InputError);
}

TEST(Epigraph, Examples) {
  const auto e = epigraph(abs_fn());
  EXPECT_TRUE(set_equal(e, HPolyhedron(2, imat({{1, -1}, {-1, -1}}), ivec({0, 0}))));
  const auto e2 = epigraph(indicator(interval(0, 1)));
  EXPECT_TRUE(set_equal(e2, HPolyhedron(2, imat({{1, 0}, {-1, 0}, {0, -1}}), ivec({1, 0, 0}))));
  const auto h = hypograph(negated(abs_fn()));
  EXPECT_TRUE(set_equal(h, HPolyhedron(2, imat({{-1, 1}, {1, 1}}), ivec({0, 0}))));
}

TEST(Conjugate, AbsoluteValueIsIndicatorOfUnitInterval) {
  const auto fs = conjugate(abs_fn());
  EXPECT_TRUE(set_equal(fs.rep.domain, interval(-1, 1)));
  for (long i = -8; i <= 8; ++i) {
    const Rat xs = ratio(i, 4);
    const auto v = evaluate(fs, Vector{xs});
    const auto brute = brute_conjugate_1d(abs_fn(), xs, 20);
    if (abs(xs) <= 1) {
      EXPECT_EQ(v, ExtendedRat(0));
      EXPECT_EQ(*brute, 0);
    } else {
      EXPECT_TRUE(v.is_pos_inf());
      EXPECT_GT(*brute, *brute_conjugate_1d(abs_fn(), xs, 10));
    }
  }
}

TEST(Conjugate, AffineFunction) {
  const PLConvexFunction f{2, {{ivec({1, -2}), 3}}, HPolyhedron::whole_space(2)};
  const auto fs = conjugate(f);
  EXPECT_EQ(evaluate(fs, ivec({1, -2})), ExtendedRat(-3));
  EXPECT_TRUE(evaluate(fs, ivec({1, -1})).is_pos_inf());
  EXPECT_TRUE(set_equal(fs.rep.domain, HPolyhedron::singleton(ivec({1, -2}))));
}

TEST(Conjugate, IndicatorOfUnitInterval) {
  const auto f = indicator(interval(0, 1));
  const auto fs = conjugate(f);
  for (long i = -12; i <= 12; ++i) {
    const Rat xs = ratio(i, 4);
    EXPECT_EQ(evaluate(fs, Vector{xs}), ExtendedRat(std::max(Rat(0), xs)));
    EXPECT_EQ(evaluate(fs, Vector{xs}), ExtendedRat(*brute_conjugate_1d(f, xs, 3)));
  }
}

TEST(ConcaveConjugate, Examples) {
  const PLConcaveFunction zero{1, {piece({0}, 0)}, HPolyhedron::whole_space(1)};
  const auto z = concave_conjugate(zero);
  EXPECT_EQ(evaluate(z, ivec({0})), ExtendedRat(0));
  EXPECT_TRUE(evaluate(z, ivec({1})).is_neg_inf());

  const PLConcaveFunction id{1, {piece({1}, 0)}, HPolyhedron::whole_space(1)};
  const auto c = concave_conjugate(id);
  EXPECT_EQ(evaluate(c, ivec({1})), ExtendedRat(0));
  EXPECT_TRUE(evaluate(c, ivec({2})).is_neg_inf());

  // g = -|x - 1| = min(x - 1, 1 - x)
  const PLConcaveFunction g{1, {piece({1}, -1), piece({-1}, 1)}, HPolyhedron::whole_space(1)};
  const auto gs = concave_conjugate(g);
  for (long i = -8; i <= 8; ++i) {
    const Rat xs = ratio(i, 4);
    const auto v = evaluate(gs, Vector{xs});
    if (abs(xs) <= 1) {
      EXPECT_EQ(v, ExtendedRat(xs));
      EXPECT_EQ(v, ExtendedRat(*brute_concave_conjugate_1d(g, xs, 20)));
    } else {
      EXPECT_TRUE(v.is_neg_inf());
    }
  }
}

TEST(ContinuityDiagnostics, Examples) {
  auto r = continuity_diagnostics(abs_fn());
  EXPECT_TRUE(r.int_dom_nonempty && r.int_epi_nonempty && r.bounded_above_on_open_set);
  r = continuity_diagnostics(indicator(HPolyhedron::singleton(ivec({0}))));
  EXPECT_FALSE(r.int_dom_nonempty || r.int_epi_nonempty || r.bounded_above_on_open_set);
  r = continuity_diagnostics(indicator(hull({ivec({0, 0}), ivec({1, 0})})));
  EXPECT_FALSE(r.int_dom_nonempty || r.int_epi_nonempty || r.bounded_above_on_open_set);
}

TEST(Validation, ImproperFunctionsRejected) {
  EXPECT_THROW(conjugate(indicator(HPolyhedron::empty_set(1))), InputError);
  EXPECT_THROW(conjugate(PLConvexFunction{1, {}, HPolyhedron::whole_space(1)}), InputError);
}

class FunctionsProperty : public ::testing::Test {
 protected:
  static PLConvexFunction random_f(InstanceRng& rng) {
    const auto dim = static_cast<std::size_t>(rng.uniform(1, 2));
    return random_convex_function(rng, random_polyhedron(rng, dim));
  }
};

// Random 1-D data has integer coefficients of size at most 4, so every
// breakpoint of f lies on the grid of step 1/12.
TEST_F(FunctionsProperty, ConjugateMatchesGridSupremum1d) {
  InstanceRng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_convex_function(rng, random_polyhedron(rng, 1));
    const auto fs = conjugate(f);
    for (long i = -12; i <= 12; ++i) {
      const Rat xs = ratio(i, 4);
      const auto v = evaluate(fs, Vector{xs});
      const auto near = brute_conjugate_1d(f, xs, 10, 12);
      const auto far = brute_conjugate_1d(f, xs, 40, 12);
      ASSERT_TRUE(near && far);
      if (v.is_finite()) {
        EXPECT_EQ(v.value(), *near) << "trial " << trial << " x* " << xs;
        EXPECT_EQ(v.value(), *far);
      } else {
        EXPECT_GT(*far, *near) << "trial " << trial << " x* " << xs;
      }
    }
  }
}

TEST_F(FunctionsProperty, FenchelYoung) {
  InstanceRng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_f(rng);
    const auto fs = conjugate(f);
    const auto xs_list = sample_points(rng, f.domain, 3);
    const Vector x = xs_list[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(xs_list.size()) - 1))];
    const Vector xstar = rng.int_vector(f.dim, 3);
    const auto lhs = evaluate(f, x) + evaluate(fs, xstar);
    EXPECT_GE(lhs, ExtendedRat(dot(xstar, x)));

    // Equality at a slope of an active piece plus a normal of the domain.
    Rat fx = evaluate(f, x).value();
    for (const auto& p : f.pieces) {
      if (p(x) != fx) continue;
      Vector s = p.slope;
      for (const auto& g : normal_cone(f.domain, x).generators) s = add(s, g);
      EXPECT_EQ(evaluate(f, x) + evaluate(fs, s), ExtendedRat(dot(s, x)));
    }
  }
}

TEST_F(FunctionsProperty, Biconjugation) {
  InstanceRng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_f(rng);
    const auto fss = conjugate(convex_form(conjugate(f)));
    for (const auto& x : sample_points(rng, f.domain, 8)) {
      EXPECT_EQ(evaluate(fss, x), evaluate(f, x)) << "trial " << trial;
    }
    for (const auto& x : exterior_points(rng, f.domain, 2)) {
      EXPECT_TRUE(evaluate(fss, x).is_pos_inf());
    }
  }
}

TEST_F(FunctionsProperty, ConcaveConjugateIdentity) {
  InstanceRng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const auto dim = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto g = random_concave_function(rng, random_polyhedron(rng, dim));
    const auto gs = concave_conjugate(g);
    const auto neg_star = conjugate(negated(g));
    for (int k = 0; k < 5; ++k) {
      Vector xs(dim);
      for (auto& v : xs) v = rng.rational(6, 3);
      EXPECT_EQ(evaluate(gs, xs), -evaluate(neg_star, negate(xs)));
    }
  }
}

TEST_F(FunctionsProperty, EpigraphInteriorShape) {
  InstanceRng rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_f(rng);
    const auto epi = epigraph(f);
    for (const auto& x : sample_points(rng, f.domain, 5)) {
      const Rat fx = evaluate(f, x).value();
      for (const Rat& lift : {Rat(0), Rat(1, 2)}) {
        Vector point = x;
        point.push_back(fx + lift);
        const bool expected = iri_member(f.domain, x) && sgn(lift) > 0;
        EXPECT_EQ(iri_member(epi, point), expected);
        EXPECT_EQ(qri_member(epi, point), expected);
      }
    }
  }
}

TEST_F(FunctionsProperty, ContinuityFlagsAgree) {
  InstanceRng rng(46);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_f(rng);
    const auto r = continuity_diagnostics(f);
    EXPECT_EQ(r.int_dom_nonempty, affine_dimension(f.domain) == f.dim);
  }
}
