#include "relint/calculus.hpp"

#include <algorithm>

#include "relint/errors.hpp"
#include "relint/generate.hpp"
#include "relint/lp.hpp"

namespace relint {

namespace {

constexpr std::uint64_t kSampleSeed = 20240601;

std::size_t columns(const Matrix& M, const HPolyhedron& P) {
  for (const auto& row : M) {
    if (row.size() != P.dim()) throw InputError("image check: matrix columns do not match set dimension");
  }
  return P.dim();
}

// Some x in P with M x = u.
std::optional<Vector> point_mapping_to(const Matrix& M, const HPolyhedron& P, const Vector& u) {
  LPProblem lp;
  lp.objective = zeros(P.dim());
  lp.ineq_lhs = P.A();
  lp.ineq_rhs = P.b();
  lp.eq_lhs = P.E();
  lp.eq_rhs = P.d();
  for (std::size_t i = 0; i < M.size(); ++i) {
    lp.eq_lhs.push_back(M[i]);
    lp.eq_rhs.push_back(u[i]);
  }
  const LPOutcome r = solve_lp(lp);
  if (r.status != LPStatus::Optimal) return std::nullopt;
  return r.point;
}

ImageCheck check_image(const Matrix& M, const HPolyhedron& P, const std::vector<Vector>& x_samples,
                       const std::vector<Vector>& y_samples, InteriorKind kind) {
  columns(M, P);
  if (P.is_empty()) throw EmptySetError("image check: empty set");
  const HPolyhedron image = linear_image(M, P);
  ImageCheck r;
  r.kind = kind;
  if (kind == InteriorKind::Qri) {
    const QuasiRegularity q = is_quasi_regular(image);
    r.image_quasi_regular = q.quasi_regular && q.sweep_agrees;
  }
  auto fail = [&](const Vector& s, std::string detail) {
    r.holds = false;
    r.violation = s;
    r.detail = std::move(detail);
    return r;
  };
  for (const auto& x : x_samples) {
    if (!interior_member(P, x, kind)) continue;
    ++r.forward_checked;
    if (!interior_member(image, mat_vec(M, x), kind)) return fail(x, "x in the interior of P but Mx not in the interior of M(P)");
  }
  for (const auto& y : y_samples) {
    if (y.size() != M.size()) throw InputError("image check: y sample has the wrong dimension");
    if (!interior_member(image, y, kind)) continue;
    ++r.backward_checked;
    Preimage pre = construct_preimage(M, P, y, kind);
    if (mat_vec(M, pre.x) != y) return fail(y, "constructed preimage does not map to y");
    if (!interior_member(P, pre.x, kind)) return fail(y, "constructed preimage is not in the interior of P");
    r.preimages.push_back(std::move(pre));
  }
  if (!r.image_quasi_regular) {
    r.holds = false;
    r.detail = "M(P) is not certified quasi-regular";
  }
  return r;
}

}  // namespace

std::vector<Vector> default_calculus_samples(const HPolyhedron& P) {
  std::vector<Vector> out = sweep_points(P);
  const VPolyhedron& V = P.vrep();
  InstanceRng rng(kSampleSeed);
  for (int i = 0; i < 5; ++i) {
    Vector x = rng.convex_combination(V.points);
    for (const auto& ray : V.rays) x = add(x, scale(Rat(rng.uniform(0, 2)), ray));
    out.push_back(std::move(x));
  }
  return out;
}

Preimage construct_preimage(const Matrix& M, const HPolyhedron& P, const Vector& y, InteriorKind kind) {
  columns(M, P);
  const HPolyhedron image = linear_image(M, P);
  if (!interior_member(image, y, kind)) {
    throw PreconditionFailed(std::string("construct_preimage: y is not in ") + to_string(kind) + "(M(P))");
  }
  const Vector anchor = relative_interior_point(P);
  const Vector ybar = mat_vec(M, anchor);
  if (y == ybar) return {y, anchor, Rat(1), anchor};
  // u = (1 - a) ybar + a y with a > 1, so y lies in the open segment (u, ybar).
  const auto reach = absorbing_reach(image, y, ybar);
  const Rat a = reach ? *reach : Rat(2);
  if (a <= 1) throw InternalInconsistency("construct_preimage: interior point of M(P) is not relatively absorbing");
  const Vector u = add(scale(1 - a, ybar), scale(a, y));
  const auto xtilde = point_mapping_to(M, P, u);
  if (!xtilde) throw InternalInconsistency("construct_preimage: point of M(P) has no preimage in P");
  const Rat t = 1 / a;
  return {y, *xtilde, t, add(scale(t, *xtilde), scale(1 - t, anchor))};
}

ImageCheck check_image_iri(const Matrix& M, const HPolyhedron& P, const std::vector<Vector>& x_samples,
                           const std::vector<Vector>& y_samples) {
  return check_image(M, P, x_samples, y_samples, InteriorKind::Iri);
}

ImageCheck check_image_iri(const Matrix& M, const HPolyhedron& P) {
  columns(M, P);
  return check_image_iri(M, P, default_calculus_samples(P), default_calculus_samples(linear_image(M, P)));
}

ImageCheck check_image_qri(const Matrix& M, const HPolyhedron& P, const std::vector<Vector>& x_samples,
                           const std::vector<Vector>& y_samples) {
  return check_image(M, P, x_samples, y_samples, InteriorKind::Qri);
}

ImageCheck check_image_qri(const Matrix& M, const HPolyhedron& P) {
  columns(M, P);
  return check_image_qri(M, P, default_calculus_samples(P), default_calculus_samples(linear_image(M, P)));
}

SampledCheck qri_of_product(const HPolyhedron& P, const HPolyhedron& Q, const std::vector<Vector>& samples) {
  if (P.is_empty() || Q.is_empty()) throw EmptySetError("qri_of_product: empty set");
  const HPolyhedron prod = cartesian_product(P, Q);
  const auto n1 = static_cast<std::ptrdiff_t>(P.dim());
  SampledCheck r;
  for (const auto& s : samples) {
    if (s.size() != prod.dim()) throw InputError("qri_of_product: sample has the wrong dimension");
    ++r.checked;
    const bool lhs = interior_member(prod, s, InteriorKind::Qri);
    const bool rhs = interior_member(P, Vector(s.begin(), s.begin() + n1), InteriorKind::Qri) &&
                     interior_member(Q, Vector(s.begin() + n1, s.end()), InteriorKind::Qri);
    if (lhs != rhs) {
      r.holds = false;
      r.violation = s;
      r.detail = lhs ? "in qri(P x Q) but a factor fails" : "both factors hold but not in qri(P x Q)";
      return r;
    }
  }
  return r;
}

std::optional<Decomposition> qri_decomposition(const HPolyhedron& P, const HPolyhedron& Q, const Vector& x) {
  const std::size_t n = P.dim();
  if (Q.dim() != n || x.size() != n) throw InputError("qri_decomposition: dimension mismatch");
  if (P.is_empty() || Q.is_empty()) throw EmptySetError("qri_decomposition: empty set");
  // variables (p, q, s): maximize s subject to rows of P on p and of Q on q,
  // with s added to every non-implicit row, p - q = x, s <= 1.
  const std::size_t nv = 2 * n + 1;
  LPProblem lp;
  lp.objective = unit_vector(nv, nv - 1);
  bool has_free_rows = false;
  auto add_set = [&](const HPolyhedron& S, std::size_t offset) {
    const auto& implicit = S.implicit_rows();
    for (std::size_t i = 0; i < S.num_ineq(); ++i) {
      const bool tight = std::binary_search(implicit.begin(), implicit.end(), i);
      Vector row = zeros(nv);
      std::copy(S.A()[i].begin(), S.A()[i].end(), row.begin() + static_cast<std::ptrdiff_t>(offset));
      row[nv - 1] = tight ? 0 : 1;
      has_free_rows = has_free_rows || !tight;
      lp.ineq_lhs.push_back(std::move(row));
      lp.ineq_rhs.push_back(S.b()[i]);
    }
    for (std::size_t i = 0; i < S.num_eq(); ++i) {
      Vector row = zeros(nv);
      std::copy(S.E()[i].begin(), S.E()[i].end(), row.begin() + static_cast<std::ptrdiff_t>(offset));
      lp.eq_lhs.push_back(std::move(row));
      lp.eq_rhs.push_back(S.d()[i]);
    }
  };
  add_set(P, 0);
  add_set(Q, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector row = zeros(nv);
    row[j] = 1;
    row[n + j] = -1;
    lp.eq_lhs.push_back(std::move(row));
    lp.eq_rhs.push_back(x[j]);
  }
  lp.ineq_lhs.push_back(unit_vector(nv, nv - 1));
  lp.ineq_rhs.push_back(1);
  const LPOutcome r = solve_lp(lp);
  if (r.status != LPStatus::Optimal) return std::nullopt;
  if (has_free_rows && sign(r.value) <= 0) return std::nullopt;
  const auto mid = r.point.begin() + static_cast<std::ptrdiff_t>(n);
  return Decomposition{x, Vector(r.point.begin(), mid), Vector(mid, mid + static_cast<std::ptrdiff_t>(n))};
}

DifferenceCheck qri_of_difference(const HPolyhedron& P, const HPolyhedron& Q, const std::vector<Vector>& samples) {
  if (P.dim() != Q.dim()) throw InputError("qri_of_difference: dimension mismatch");
  if (P.is_empty() || Q.is_empty()) throw EmptySetError("qri_of_difference: empty set");
  const HPolyhedron D = minkowski_difference(P, Q);
  DifferenceCheck r;
  auto fail = [&](const Vector& s, std::string detail) {
    r.holds = false;
    r.violation = s;
    r.detail = std::move(detail);
    return r;
  };
  for (const auto& x : samples) {
    ++r.checked;
    const bool lhs = interior_member(D, x, InteriorKind::Qri);
    auto dec = qri_decomposition(P, Q, x);
    if (lhs != dec.has_value()) {
      return fail(x, lhs ? "x in qri(P - Q) but no decomposition p - q with p, q in the quasi-relative interiors"
                         : "decomposition found but x not in qri(P - Q)");
    }
    if (!dec) continue;
    if (sub(dec->p, dec->q) != x || !interior_member(P, dec->p, InteriorKind::Qri) ||
        !interior_member(Q, dec->q, InteriorKind::Qri)) {
      return fail(x, "decomposition does not re-verify");
    }
    r.decompositions.push_back(std::move(*dec));
  }
  return r;
}

}  // namespace relint
