#include "relint/separation.hpp"

#include <algorithm>

#include "relint/errors.hpp"
#include "relint/interiors.hpp"
#include "relint/lp.hpp"

namespace relint {

namespace {

Rat sup_of(const HPolyhedron& P, const Vector& c, const char* what) {
  const auto s = support_value(P, c);
  if (!s) throw InternalInconsistency(std::string(what) + ": separating functional unbounded");
  return *s;
}

Rat inf_of(const HPolyhedron& P, const Vector& c, const char* what) {
  return -sup_of(P, negate(c), what);
}

// Side A is searched first: the V-point of smallest value, then points moved
// along a ray that decreases the value; side B mirrors this.
bool attach_witness(SeparationCertificate& cert, const HPolyhedron& A, const HPolyhedron& B) {
  const Vector& f = cert.functional;
  const Rat& gamma = cert.threshold;
  auto search = [&](const VPolyhedron& V, int dir) -> std::optional<Vector> {
    const Vector* best = nullptr;
    Rat best_value;
    for (const auto& p : V.points) {
      const Rat value = dir * dot(f, p);
      if (!best || value < best_value) {
        best = &p;
        best_value = value;
      }
    }
    if (best && best_value < dir * gamma) return *best;
    for (const auto& p : V.points) {
      for (const auto& r : V.rays) {
        if (sgn(dir * dot(f, r)) < 0) return add(p, r);
      }
    }
    return std::nullopt;
  };
  if (auto w = search(A.vrep(), 1)) {
    cert.strict_witness = std::move(*w);
    cert.witness_side = WitnessSide::A;
    return true;
  }
  if (auto w = search(B.vrep(), -1)) {
    cert.strict_witness = std::move(*w);
    cert.witness_side = WitnessSide::B;
    return true;
  }
  return false;
}

SeparationCertificate build_certificate(Vector functional, const HPolyhedron& A,
                                        const HPolyhedron& B, const char* what) {
  SeparationCertificate cert;
  cert.functional = normalize_leading(functional);
  cert.side_a_bound = sup_of(A, cert.functional, what);
  cert.side_b_bound = inf_of(B, cert.functional, what);
  if (cert.side_a_bound > cert.side_b_bound) {
    throw InternalInconsistency(std::string(what) + ": functional does not separate");
  }
  cert.threshold = (cert.side_a_bound + cert.side_b_bound) / 2;
  if (!attach_witness(cert, A, B)) {
    throw InternalInconsistency(std::string(what) + ": separation is not proper");
  }
  return cert;
}

}  // namespace

SeparationCertificate scaled(const SeparationCertificate& cert, const Rat& factor) {
  if (sgn(factor) <= 0) throw InputError("scaled: factor must be positive");
  SeparationCertificate out = cert;
  out.functional = scale(factor, cert.functional);
  out.threshold *= factor;
  out.side_a_bound *= factor;
  out.side_b_bound *= factor;
  return out;
}

std::optional<SeparationCertificate> properly_separate_point(const HPolyhedron& P,
                                                             const Vector& xbar) {
  if (xbar.size() != P.dim()) throw InputError("properly_separate_point: dimension mismatch");
  if (P.is_empty()) throw EmptySetError("properly_separate_point: empty set");
  Vector functional;
  if (!P.contains(xbar)) {
    for (std::size_t i = 0; i < P.num_ineq() && functional.empty(); ++i) {
      if (dot(P.A()[i], xbar) > P.b()[i]) functional = P.A()[i];
    }
    for (std::size_t i = 0; i < P.num_eq() && functional.empty(); ++i) {
      const Rat v = dot(P.E()[i], xbar);
      if (v > P.d()[i]) functional = P.E()[i];
      if (v < P.d()[i]) functional = negate(P.E()[i]);
    }
  } else {
    const PolyCone n = normal_cone(P, xbar);
    functional = zeros(P.dim());
    bool any = false;
    for (const auto& g : n.generators) {
      if (!in_cone(n.generators, negate(g))) {
        functional = add(functional, g);
        any = true;
      }
    }
    if (!any) return std::nullopt;
  }
  return build_certificate(std::move(functional), P, HPolyhedron::singleton(xbar),
                           "properly_separate_point");
}

std::optional<Vector> ri_intersection_point(const HPolyhedron& P, const HPolyhedron& Q) {
  if (P.dim() != Q.dim()) throw InputError("ri_intersection_point: dimension mismatch");
  if (P.is_empty() || Q.is_empty()) throw EmptySetError("ri_intersection_point: empty set");
  const std::size_t n = P.dim();
  LPProblem lp;
  lp.objective = unit_vector(n + 1, n);
  bool has_free_rows = false;
  for (const HPolyhedron* S : {&P, &Q}) {
    const auto& implicit = S->implicit_rows();
    for (std::size_t i = 0; i < S->num_ineq(); ++i) {
      const bool tight = std::binary_search(implicit.begin(), implicit.end(), i);
      Vector row = S->A()[i];
      row.push_back(tight ? 0 : 1);
      has_free_rows = has_free_rows || !tight;
      lp.ineq_lhs.push_back(std::move(row));
      lp.ineq_rhs.push_back(S->b()[i]);
    }
    for (std::size_t i = 0; i < S->num_eq(); ++i) {
      Vector row = S->E()[i];
      row.push_back(0);
      lp.eq_lhs.push_back(std::move(row));
      lp.eq_rhs.push_back(S->d()[i]);
    }
  }
  lp.ineq_lhs.push_back(unit_vector(n + 1, n));
  lp.ineq_rhs.push_back(1);
  const LPOutcome r = solve_lp(lp);
  if (r.status != LPStatus::Optimal) return std::nullopt;
  if (has_free_rows && sgn(r.value) <= 0) return std::nullopt;
  return Vector(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
}

SetSeparation properly_separate_sets(const HPolyhedron& P, const HPolyhedron& Q) {
  if (P.dim() != Q.dim()) throw InputError("properly_separate_sets: dimension mismatch");
  if (P.is_empty() || Q.is_empty()) throw EmptySetError("properly_separate_sets: empty set");
  SetSeparation out;
  const HPolyhedron D = minkowski_difference(P, Q);
  out.hypotheses.qri_a_nonempty = qri_member(P, relative_interior_point(P));
  out.hypotheses.qri_b_nonempty = qri_member(Q, relative_interior_point(Q));
  const QuasiRegularity qr = is_quasi_regular(D);
  out.hypotheses.difference_quasi_regular = qr.quasi_regular && qr.sweep_agrees;

  const auto at_zero = properly_separate_point(D, zeros(P.dim()));
  out.common_ri_point = ri_intersection_point(P, Q);
  if (at_zero.has_value() == out.common_ri_point.has_value()) {
    throw InternalInconsistency(
        "properly_separate_sets: difference-set oracle and slack LP disagree on whether the "
        "relative interiors meet");
  }
  if (at_zero) {
    out.certificate = build_certificate(at_zero->functional, P, Q, "properly_separate_sets");
  }
  return out;
}

CertificateCheck verify_certificate(const SeparationCertificate& cert, const HPolyhedron& A,
                                    const HPolyhedron& B) {
  const Vector& f = cert.functional;
  if (f.size() != A.dim() || f.size() != B.dim() || cert.strict_witness.size() != f.size()) {
    return {false, "dimension mismatch"};
  }
  if (is_zero(f)) return {false, "functional is zero"};
  if (A.is_empty() || B.is_empty()) return {false, "a side is empty"};
  const auto sup_a = support_value(A, f);
  if (!sup_a) return {false, "functional unbounded above on side A"};
  if (*sup_a != cert.side_a_bound) return {false, "side A bound is not the supremum"};
  if (*sup_a > cert.threshold) return {false, "sup over side A exceeds the threshold"};
  const auto sup_neg_b = support_value(B, negate(f));
  if (!sup_neg_b) return {false, "functional unbounded below on side B"};
  if (-*sup_neg_b != cert.side_b_bound) return {false, "side B bound is not the infimum"};
  if (-*sup_neg_b < cert.threshold) return {false, "inf over side B is below the threshold"};
  const Rat w = dot(f, cert.strict_witness);
  if (cert.witness_side == WitnessSide::A) {
    if (!A.contains(cert.strict_witness)) return {false, "witness is not in side A"};
    if (w >= cert.threshold) return {false, "witness value is not strictly below the threshold"};
  } else {
    if (!B.contains(cert.strict_witness)) return {false, "witness is not in side B"};
    if (w <= cert.threshold) return {false, "witness value is not strictly above the threshold"};
  }
  return {true, "verified"};
}

StrictSeparation strict_separate_in_subspace(const AffineFlat& L, const HPolyhedron& P,
                                             const Vector& xbar) {
  const std::size_t n = P.dim();
  if (L.base.size() != n || xbar.size() != n) {
    throw PreconditionFailed("strict_separate_in_subspace: dimension mismatch");
  }
  const std::size_t k = L.basis.size();
  const Matrix G = from_columns(L.basis, n);
  if (rank(transpose(G, k), n) != k) {
    throw PreconditionFailed("strict_separate_in_subspace: basis of L is not independent");
  }
  if (!solve_particular(G, L.base, k)) {
    throw PreconditionFailed("strict_separate_in_subspace: L does not pass through 0");
  }
  if (P.is_empty()) throw PreconditionFailed("strict_separate_in_subspace: P is empty");
  // L = {x : h.x = 0 for h orthogonal to the basis}.
  const Matrix normals = nullspace(L.basis, n);
  const HPolyhedron L_set(n, {}, {}, normals, zeros(normals.size()));
  if (!includes(L_set, P)) throw PreconditionFailed("strict_separate_in_subspace: P is not contained in L");
  const auto zbar = solve_particular(G, xbar, k);
  if (!zbar) throw PreconditionFailed("strict_separate_in_subspace: xbar is not in L");
  if (P.contains(xbar)) throw PreconditionFailed("strict_separate_in_subspace: xbar lies in P");

  // In L-coordinates P is {z : (A G) z <= b, (E G) z = d}. Maximize the
  // violation y.(A G zbar - b) + w.(E G zbar - d) over y, w+, w- >= 0 with
  // total weight at most 1; u_L = (A G)^T y + (E G)^T w then separates.
  Matrix AG, EG;
  for (const auto& row : P.A()) AG.push_back(mat_vec(transpose(G, k), row));
  for (const auto& row : P.E()) EG.push_back(mat_vec(transpose(G, k), row));
  const std::size_t m = AG.size();
  const std::size_t e = EG.size();
  LPProblem lp;
  lp.nonneg.assign(m + 2 * e, true);
  for (std::size_t i = 0; i < m; ++i) lp.objective.push_back(dot(AG[i], *zbar) - P.b()[i]);
  for (std::size_t i = 0; i < e; ++i) lp.objective.push_back(dot(EG[i], *zbar) - P.d()[i]);
  for (std::size_t i = 0; i < e; ++i) lp.objective.push_back(P.d()[i] - dot(EG[i], *zbar));
  lp.ineq_lhs.push_back(Vector(m + 2 * e, Rat(1)));
  lp.ineq_rhs.push_back(1);
  const LPOutcome r = solve_lp(lp);
  if (r.status != LPStatus::Optimal || sgn(r.value) <= 0) {
    throw InternalInconsistency("strict_separate_in_subspace: no separating multipliers");
  }
  Vector uL = zeros(k);
  for (std::size_t i = 0; i < m; ++i) uL = add(uL, scale(r.point[i], AG[i]));
  for (std::size_t i = 0; i < e; ++i) uL = add(uL, scale(r.point[m + i] - r.point[m + e + i], EG[i]));

  // Lift: u = G (G^T G)^{-1} u_L satisfies <u, G z> = <u_L, z>.
  Matrix gram(k, zeros(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(L.basis[i], L.basis[j]);
  }
  const auto coeff = solve_particular(gram, uL, k);
  if (!coeff) throw InternalInconsistency("strict_separate_in_subspace: singular Gram matrix");
  StrictSeparation out;
  out.functional = normalize_leading(mat_vec(G, *coeff));
  const auto sup = support_value(P, out.functional);
  if (!sup) throw InternalInconsistency("strict_separate_in_subspace: functional unbounded on P");
  out.sup_value = *sup;
  out.point_value = dot(out.functional, xbar);
  out.margin = out.point_value - out.sup_value;
  if (sgn(out.margin) <= 0) {
    throw InternalInconsistency("strict_separate_in_subspace: lifted functional does not separate");
  }
  return out;
}

}  // namespace relint
