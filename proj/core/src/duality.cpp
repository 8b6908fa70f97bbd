#include "relint/duality.hpp"

#include "relint/errors.hpp"
#include "relint/interiors.hpp"
#include "relint/lp.hpp"

namespace relint {

namespace {

void check_pair(const PLConvexFunction& f, const PLConcaveFunction& g) {
  f.validate();
  g.validate();
  if (f.dim != g.dim) throw InputError("f and g have different dimensions");
}

// Rows of S, a set in R^{n+1} over (x, t), placed into R^{n+2} with t at
// column `slot`.
void append_rows(LPProblem& lp, const HPolyhedron& S, std::size_t n, std::size_t slot) {
  auto lift = [&](const Vector& row) {
    Vector r = zeros(n + 2);
    for (std::size_t j = 0; j < n; ++j) r[j] = row[j];
    r[slot] = row[n];
    return r;
  };
  for (std::size_t i = 0; i < S.num_ineq(); ++i) {
    lp.ineq_lhs.push_back(lift(S.A()[i]));
    lp.ineq_rhs.push_back(S.b()[i]);
  }
  for (std::size_t i = 0; i < S.num_eq(); ++i) {
    lp.eq_lhs.push_back(lift(S.E()[i]));
    lp.eq_rhs.push_back(S.d()[i]);
  }
}

bool quasi_regular_set(const HPolyhedron& S) {
  const QuasiRegularity q = is_quasi_regular(S);
  return q.quasi_regular && q.sweep_agrees;
}

}  // namespace

ExtendedRat solve_primal(const PLConvexFunction& f, const PLConcaveFunction& g) {
  check_pair(f, g);
  const std::size_t n = f.dim;
  // Variables (x, lambda, mu): minimize lambda - mu.
  LPProblem lp;
  lp.objective = zeros(n + 2);
  lp.objective[n] = -1;
  lp.objective[n + 1] = 1;
  append_rows(lp, epigraph(f), n, n);
  append_rows(lp, hypograph(g), n, n + 1);
  const LPOutcome r = solve_lp(lp);
  switch (r.status) {
    case LPStatus::Infeasible: return ExtendedRat::pos_inf();
    case LPStatus::Unbounded: return ExtendedRat::neg_inf();
    case LPStatus::Optimal: break;
  }
  return ExtendedRat(-r.value);
}

DualSolution solve_dual(const PLConvexFunction& f, const PLConcaveFunction& g) {
  check_pair(f, g);
  const std::size_t n = f.dim;
  const PLFunctionDual fs = conjugate(f);
  const PLFunctionDual gs = concave_conjugate(g);
  // Variables (x*, lambda*, mu*): maximize mu* - lambda* with
  // lambda* >= f*(x*) and mu* <= g_*(x*).
  LPProblem lp;
  lp.objective = zeros(n + 2);
  lp.objective[n] = -1;
  lp.objective[n + 1] = 1;
  append_rows(lp, epigraph(convex_form(fs)), n, n);
  append_rows(lp, hypograph(concave_form(gs)), n, n + 1);
  const LPOutcome r = solve_lp(lp);
  DualSolution out;
  switch (r.status) {
    case LPStatus::Infeasible: out.value = ExtendedRat::neg_inf(); break;
    case LPStatus::Unbounded: out.value = ExtendedRat::pos_inf(); break;
    case LPStatus::Optimal:
      out.value = ExtendedRat(r.value);
      out.optimizer = Vector(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
      break;
  }
  return out;
}

QualificationReport qualification_report(const PLConvexFunction& f, const PLConcaveFunction& g) {
  check_pair(f, g);
  QualificationReport q;
  const HPolyhedron dom_diff = minkowski_difference(f.domain, g.domain);
  const Vector origin = zeros(f.dim);
  q.qri = dom_diff.contains(origin) && qri_member(dom_diff, origin);

  const auto common = ri_intersection_point(f.domain, g.domain);
  q.ri = common.has_value();
  if (common && !(ri_member(f.domain, *common) && ri_member(g.domain, *common))) {
    throw InternalInconsistency("qualification_report: slack LP point is not in both relative interiors");
  }
  if (q.ri != q.qri) {
    throw InternalInconsistency(
        "qualification_report: ri and qri qualification disagree in finite dimensions");
  }

  const HPolyhedron epi_f = epigraph(f);
  q.quasi_regular = {quasi_regular_set(dom_diff), quasi_regular_set(epi_f),
                     quasi_regular_set(minkowski_difference(epi_f, hypograph(g)))};

  const ContinuityReport cf = continuity_diagnostics(f);
  const ContinuityReport cg = continuity_diagnostics(negated(g));
  q.interior = {cf.int_dom_nonempty && cg.int_dom_nonempty,
                cf.bounded_above_on_open_set && cg.bounded_above_on_open_set,
                cf.int_epi_nonempty && cg.int_epi_nonempty,
                cf.int_dom_nonempty && cg.int_dom_nonempty};
  return q;
}

DualityReport verify_fenchel_rockafellar(const PLConvexFunction& f, const PLConcaveFunction& g) {
  DualityReport r;
  r.primal_value = solve_primal(f, g);
  const DualSolution dual = solve_dual(f, g);
  r.dual_value = dual.value;
  r.dual_optimizer = dual.optimizer;
  if (r.primal_value.is_finite() && r.dual_value.is_finite()) {
    r.gap = r.primal_value.value() - r.dual_value.value();
  }
  r.qualification = qualification_report(f, g);
  const auto& q = r.qualification;

  r.weak_duality = r.primal_value >= r.dual_value;
  if (!r.weak_duality) {
    throw InternalInconsistency("weak duality violated: primal " + r.primal_value.to_string() +
                                " < dual " + r.dual_value.to_string());
  }
  const bool all_quasi_regular = q.quasi_regular[0] && q.quasi_regular[1] && q.quasi_regular[2];
  if (q.qri && all_quasi_regular) r.certifying_routes.push_back("qri-qualification");
  if (q.ri) r.certifying_routes.push_back("ri-qualification");
  if (q.qri && (q.interior[0] || q.interior[1] || q.interior[2] || q.interior[3])) {
    r.certifying_routes.push_back("interior-qualification");
  }
  r.strong_duality = r.primal_value == r.dual_value;
  if (!r.certifying_routes.empty() && !r.strong_duality) {
    throw InternalInconsistency("qualified pair with nonzero duality gap: primal " +
                                r.primal_value.to_string() + ", dual " + r.dual_value.to_string() +
                                ", route " + r.certifying_routes.front());
  }
  return r;
}

DualCertificate extract_dual_certificate(const PLConvexFunction& f, const PLConcaveFunction& g,
                                         std::optional<Rat> alpha) {
  check_pair(f, g);
  const std::size_t n = f.dim;
  if (!alpha) {
    const ExtendedRat primal = solve_primal(f, g);
    if (!primal.is_finite()) {
      throw PreconditionFailed("extract_dual_certificate: primal value " + primal.to_string() +
                               " is not finite");
    }
    alpha = primal.value();
  }
  DualCertificate out;
  out.alpha = *alpha;
  const HPolyhedron omega1 = epigraph(f);
  Vector shift = zeros(n + 1);
  shift[n] = *alpha;
  const HPolyhedron omega2 = translate(hypograph(g), shift);
  const SetSeparation sep = properly_separate_sets(omega1, omega2);
  if (!sep.certificate) {
    throw QualificationFailure(
        "extract_dual_certificate: epi f and hypo g + (0, alpha) have a common relative interior "
        "point, so alpha exceeds the primal value");
  }
  out.separation = *sep.certificate;
  // The certificate bounds epi f from above; flip to the orientation in which
  // epi f lies on the upper side.
  const Vector flipped = negate(out.separation.functional);
  out.u = Vector(flipped.begin(), flipped.begin() + static_cast<std::ptrdiff_t>(n));
  out.beta = flipped[n];
  if (sgn(out.beta) == 0) {
    throw QualificationFailure(
        "extract_dual_certificate: separating functional is horizontal (beta = 0), so the domains "
        "are properly separated and the qri qualification fails");
  }
  if (sgn(out.beta) < 0) {
    throw InternalInconsistency("extract_dual_certificate: beta < 0 contradicts the vertical ray of epi f");
  }
  out.xstar = scale(-1 / out.beta, out.u);
  out.dual_objective = evaluate(concave_conjugate(g), out.xstar) - evaluate(conjugate(f), out.xstar);
  if (out.dual_objective < ExtendedRat(out.alpha)) {
    throw InternalInconsistency("extract_dual_certificate: g_*(x*) - f*(x*) = " +
                                out.dual_objective.to_string() + " is below alpha = " +
                                to_string(out.alpha));
  }
  return out;
}

}  // namespace relint
