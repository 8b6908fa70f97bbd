#include "relint/interiors.hpp"

#include <algorithm>

#include "relint/cone_enum.hpp"
#include "relint/errors.hpp"
#include "relint/lp.hpp"

namespace relint {

namespace {

void require_dim(const HPolyhedron& P, const Vector& x, const char* op) {
  if (x.size() != P.dim()) {
    throw InputError(std::string(op) + ": point has dimension " + std::to_string(x.size()) +
                     ", set has dimension " + std::to_string(P.dim()));
  }
}

void require_member(const HPolyhedron& P, const Vector& x, const char* op) {
  require_dim(P, x, op);
  if (!P.contains(x)) {
    throw NotMemberError(std::string(op) + ": point " + to_string(x) + " is not in the set");
  }
}

void push_unique(std::vector<Vector>& out, Vector v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
}

}  // namespace

bool ri_member(const HPolyhedron& P, const Vector& x) {
  require_dim(P, x, "ri_member");
  if (P.is_empty()) throw EmptySetError("ri_member: empty set");
  if (!P.contains(x)) return false;
  const auto& implicit = P.implicit_rows();
  for (std::size_t i = 0; i < P.num_ineq(); ++i) {
    if (std::binary_search(implicit.begin(), implicit.end(), i)) continue;
    if (dot(P.A()[i], x) >= P.b()[i]) return false;
  }
  return true;
}

std::optional<Rat> absorbing_reach(const HPolyhedron& P, const Vector& x, const Vector& v) {
  // Along v + alpha (x - v): row i allows alpha <= (b_i - a_i v) / (a_i (x - v)).
  const Vector u = sub(x, v);
  std::optional<Rat> best;
  for (std::size_t i = 0; i < P.num_ineq(); ++i) {
    const Rat rate = dot(P.A()[i], u);
    if (sgn(rate) <= 0) continue;
    Rat bound = (P.b()[i] - dot(P.A()[i], v)) / rate;
    if (!best || bound < *best) best = std::move(bound);
  }
  return best;
}

bool relatively_absorbing(const HPolyhedron& P, const Vector& x) {
  require_member(P, x, "relatively_absorbing");
  const VPolyhedron& V = P.vrep();
  for (const auto& v : V.points) {
    if (v == x) continue;
    const auto reach = absorbing_reach(P, x, v);
    if (reach && *reach <= 1) return false;
  }
  if (!V.rays.empty()) {
    const PolyCone cone = difference_cone(P, x);
    for (const auto& r : V.rays) {
      if (!in_cone(cone.generators, negate(r))) return false;
    }
  }
  return true;
}

bool iri_member(const HPolyhedron& P, const Vector& x) {
  require_dim(P, x, "iri_member");
  if (P.is_empty()) throw EmptySetError("iri_member: empty set");
  if (!P.contains(x)) return false;
  return cone_is_subspace(difference_cone(P, x).generators);
}

PolyCone normal_cone(const HPolyhedron& P, const Vector& x) {
  require_member(P, x, "normal_cone");
  PolyCone n{P.dim(), {}};
  for (auto i : active_rows(P, x)) {
    if (!is_zero(P.A()[i])) push_unique(n.generators, primitive(P.A()[i]));
  }
  for (const auto& e : P.E()) {
    if (is_zero(e)) continue;
    push_unique(n.generators, primitive(e));
    push_unique(n.generators, primitive(negate(e)));
  }
  return n;
}

PolyCone polar(const PolyCone& C) {
  for (const auto& g : C.generators) {
    if (g.size() != C.dim) throw InputError("polar: generator dimension mismatch");
  }
  const ConeGenerators gens = enumerate_cone(C.generators, {}, C.dim);
  PolyCone out{C.dim, gens.rays};
  for (const auto& l : gens.lines) {
    out.generators.push_back(l);
    out.generators.push_back(negate(l));
  }
  return out;
}

HPolyhedron polar_set(const HPolyhedron& P) {
  if (P.is_empty()) return HPolyhedron::whole_space(P.dim());
  const VPolyhedron& V = P.vrep();
  Matrix A;
  Vector b;
  for (const auto& p : V.points) {
    A.push_back(p);
    b.push_back(1);
  }
  for (const auto& r : V.rays) {
    A.push_back(r);
    b.push_back(0);
  }
  return HPolyhedron(P.dim(), std::move(A), std::move(b));
}

bool qri_member(const HPolyhedron& P, const Vector& x) {
  return cone_is_subspace(normal_cone(P, x).generators);
}

bool nonsupport_point(const HPolyhedron& P, const Vector& x) {
  const PolyCone n = normal_cone(P, x);
  // Each supporting direction -g (g in N) must be constant on P: min of <g, .>
  // over P equals <g, x>, the maximum.
  for (const auto& g : n.generators) {
    const auto top = support_value(P, negate(g));
    if (!top || -*top != dot(g, x)) return false;
  }
  return true;
}

QuasiRegularity is_quasi_regular(const HPolyhedron& P) {
  if (P.is_empty()) throw EmptySetError("is_quasi_regular: empty set");
  QuasiRegularity q;
  q.quasi_regular = true;
  q.certificate = "finite-dimensional polyhedron: ri nonempty, so ri = iri = qri";
  const std::vector<Vector> all = sweep_points(P);
  if (all.size() <= kQuasiRegularSweepLimit) {
    q.sweep = all;
  } else {
    for (std::size_t k = 0; k < kQuasiRegularSweepLimit - 1; ++k) {
      q.sweep.push_back(all[k * (all.size() - 1) / (kQuasiRegularSweepLimit - 1)]);
    }
    q.sweep.push_back(all.back());
  }
  for (const auto& x : q.sweep) {
    if (iri_member(P, x) != qri_member(P, x)) q.sweep_agrees = false;
  }
  return q;
}

const char* to_string(InteriorKind kind) {
  switch (kind) {
    case InteriorKind::Ri: return "ri";
    case InteriorKind::Iri: return "iri";
    case InteriorKind::Qri: return "qri";
  }
  return "?";
}

bool interior_member(const HPolyhedron& P, const Vector& x, InteriorKind kind) {
  switch (kind) {
    case InteriorKind::Ri: return ri_member(P, x);
    case InteriorKind::Iri: return iri_member(P, x);
    case InteriorKind::Qri:
      require_dim(P, x, "qri_member");
      if (P.is_empty()) throw EmptySetError("qri_member: empty set");
      return P.contains(x) && qri_member(P, x);
  }
  return false;
}

std::vector<Rat> default_segment_samples() {
  return {Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
}

bool segment_check(const HPolyhedron& P, const Vector& xbar, InteriorKind kind,
                   const Vector& xtilde, const std::vector<Rat>& samples) {
  require_dim(P, xbar, "segment_check");
  require_dim(P, xtilde, "segment_check");
  if (!interior_member(P, xbar, kind)) {
    throw PreconditionFailed(std::string("segment_check: xbar is not in ") + to_string(kind) +
                             "(P)");
  }
  if (!P.contains(xtilde)) throw PreconditionFailed("segment_check: xtilde is not in P");
  for (const auto& t : samples) {
    if (sgn(t) <= 0 || t > 1) {
      throw PreconditionFailed("segment_check: sample t = " + to_string(t) + " is outside (0, 1]");
    }
  }
  for (const auto& t : samples) {
    if (!interior_member(P, lerp(xtilde, xbar, t), kind)) return false;
  }
  return true;
}

}  // namespace relint
