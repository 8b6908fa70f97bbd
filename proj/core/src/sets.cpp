#include "relint/sets.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "relint/cone_enum.hpp"
#include "relint/errors.hpp"
#include "relint/lp.hpp"

namespace relint {

struct HPolyhedron::Cache {
  std::mutex empty_mu;
  std::optional<bool> empty;
  std::optional<Vector> witness;

  std::mutex vrep_mu;
  std::optional<VPolyhedron> vrep;

  std::mutex implicit_mu;
  std::optional<std::vector<std::size_t>> implicit;
};

namespace {

void check_width(const Matrix& m, std::size_t dim, const char* what) {
  for (const auto& r : m) {
    if (r.size() != dim) {
      throw InputError(std::string("HPolyhedron: ") + what + " row has " +
                       std::to_string(r.size()) + " columns, expected " +
                       std::to_string(dim));
    }
  }
}

LPProblem feasibility_problem(const HPolyhedron& P, Vector objective) {
  LPProblem lp;
  lp.objective = std::move(objective);
  lp.ineq_lhs = P.A();
  lp.ineq_rhs = P.b();
  lp.eq_lhs = P.E();
  lp.eq_rhs = P.d();
  return lp;
}

void push_unique(std::vector<Vector>& out, Vector v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
}

}  // namespace

HPolyhedron::HPolyhedron(std::size_t dim, Matrix A, Vector b, Matrix E, Vector d)
    : dim_(dim), A_(std::move(A)), b_(std::move(b)), E_(std::move(E)), d_(std::move(d)),
      cache_(std::make_shared<Cache>()) {
  if (A_.size() != b_.size()) throw InputError("HPolyhedron: A and b row counts differ");
  if (E_.size() != d_.size()) throw InputError("HPolyhedron: E and d row counts differ");
  check_width(A_, dim_, "inequality");
  check_width(E_, dim_, "equality");
  if (dim_ > kMaxDimension) {
    throw DeskScaleLimit("desk-scale limit: ambient dimension " + std::to_string(dim_) +
                         " exceeds " + std::to_string(kMaxDimension));
  }
  if (A_.size() + E_.size() > kMaxConstraints) {
    throw DeskScaleLimit("desk-scale limit: " + std::to_string(A_.size() + E_.size()) +
                         " constraints exceed " + std::to_string(kMaxConstraints));
  }
}

HPolyhedron HPolyhedron::whole_space(std::size_t dim) { return HPolyhedron(dim, {}, {}); }

HPolyhedron HPolyhedron::empty_set(std::size_t dim) {
  return HPolyhedron(dim, Matrix{zeros(dim)}, Vector{Rat(-1)});
}

HPolyhedron HPolyhedron::singleton(const Vector& point) {
  return HPolyhedron(point.size(), {}, {}, identity(point.size()), point);
}

HPolyhedron HPolyhedron::box(const Vector& lo, const Vector& hi) {
  if (lo.size() != hi.size()) throw InputError("box: bound dimensions differ");
  const std::size_t n = lo.size();
  Matrix A;
  Vector b;
  for (std::size_t i = 0; i < n; ++i) {
    A.push_back(unit_vector(n, i));
    b.push_back(hi[i]);
    A.push_back(negate(unit_vector(n, i)));
    b.push_back(-lo[i]);
  }
  return HPolyhedron(n, std::move(A), std::move(b));
}

bool HPolyhedron::contains(const Vector& x) const {
  if (x.size() != dim_) throw InputError("contains: point dimension mismatch");
  for (std::size_t i = 0; i < A_.size(); ++i) {
    if (dot(A_[i], x) > b_[i]) return false;
  }
  for (std::size_t i = 0; i < E_.size(); ++i) {
    if (dot(E_[i], x) != d_[i]) return false;
  }
  return true;
}

bool HPolyhedron::is_empty() const {
  std::lock_guard lock(cache_->empty_mu);
  if (!cache_->empty) {
    const LPOutcome r = solve_lp(feasibility_problem(*this, zeros(dim_)));
    cache_->empty = r.status == LPStatus::Infeasible;
    if (!*cache_->empty) cache_->witness = r.point;
  }
  return *cache_->empty;
}

const VPolyhedron& HPolyhedron::vrep() const {
  std::lock_guard lock(cache_->vrep_mu);
  if (cache_->vrep) return *cache_->vrep;

  // Homogenize: (x, t) with A x - b t <= 0, -t <= 0, E x - d t = 0.
  const std::size_t n = dim_;
  Matrix ineq;
  ineq.reserve(A_.size() + 1);
  for (std::size_t i = 0; i < A_.size(); ++i) {
    Vector row = A_[i];
    row.push_back(-b_[i]);
    ineq.push_back(std::move(row));
  }
  Vector t_row = zeros(n + 1);
  t_row[n] = -1;
  ineq.push_back(std::move(t_row));
  Matrix eq;
  for (std::size_t i = 0; i < E_.size(); ++i) {
    Vector row = E_[i];
    row.push_back(-d_[i]);
    eq.push_back(std::move(row));
  }

  const ConeGenerators gens = enumerate_cone(ineq, eq, n + 1);
  VPolyhedron v;
  v.dim = n;
  std::vector<Vector> rays;
  for (const auto& r : gens.rays) {
    Vector head(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    if (sgn(r[n]) > 0) {
      v.points.push_back(scale(Rat(1) / r[n], head));
    } else {
      rays.push_back(std::move(head));
    }
  }
  for (const auto& l : gens.lines) {
    Vector head(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
    rays.push_back(head);
    rays.push_back(negate(head));
  }
  if (!v.points.empty()) v.rays = std::move(rays);
  cache_->vrep = std::move(v);
  return *cache_->vrep;
}

const std::vector<std::size_t>& HPolyhedron::implicit_rows() const {
  if (is_empty()) throw EmptySetError("implicit equalities of an empty set");
  std::lock_guard lock(cache_->implicit_mu);
  if (cache_->implicit) return *cache_->implicit;

  // Rows strictly slack at any known point of P are not implicit; the known
  // points grow with every LP solved.
  std::vector<bool> slack_seen(A_.size(), false);
  auto absorb = [&](const Vector& x) {
    for (std::size_t i = 0; i < A_.size(); ++i) {
      if (!slack_seen[i] && dot(A_[i], x) < b_[i]) slack_seen[i] = true;
    }
  };
  {
    std::lock_guard elock(cache_->empty_mu);
    if (cache_->witness) absorb(*cache_->witness);
  }
  std::vector<std::size_t> implicit;
  for (std::size_t i = 0; i < A_.size(); ++i) {
    if (slack_seen[i]) continue;
    // max slack b_i - a_i x, i.e. maximize -a_i x.
    const LPOutcome r = solve_lp(feasibility_problem(*this, negate(A_[i])));
    if (r.status == LPStatus::Optimal) {
      absorb(r.point);
      if (b_[i] + r.value == 0) implicit.push_back(i);
    } else {
      slack_seen[i] = true;
    }
  }
  cache_->implicit = std::move(implicit);
  return *cache_->implicit;
}

VPolyhedron h_to_v(const HPolyhedron& P) { return P.vrep(); }

HPolyhedron v_to_h(const VPolyhedron& V) {
  const std::size_t n = V.dim;
  if (V.points.empty()) return HPolyhedron::empty_set(n);
  // Valid inequalities a.x <= beta correspond to (a, -beta) in the polar of the
  // homogenized generator cone.
  Matrix gens;
  for (const auto& p : V.points) {
    if (p.size() != n) throw InputError("v_to_h: point dimension mismatch");
    Vector row = p;
    row.push_back(1);
    gens.push_back(std::move(row));
  }
  for (const auto& r : V.rays) {
    if (r.size() != n) throw InputError("v_to_h: ray dimension mismatch");
    Vector row = r;
    row.push_back(0);
    gens.push_back(std::move(row));
  }
  const ConeGenerators polar = enumerate_cone(gens, {}, n + 1);
  Matrix A, E;
  Vector b, d;
  for (const auto& g : polar.rays) {
    Vector a(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
    if (is_zero(a)) continue;
    A.push_back(std::move(a));
    b.push_back(-g[n]);
  }
  for (const auto& g : polar.lines) {
    Vector a(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
    E.push_back(std::move(a));
    d.push_back(-g[n]);
  }
  return HPolyhedron(n, std::move(A), std::move(b), std::move(E), std::move(d));
}

std::optional<Rat> support_value(const HPolyhedron& P, const Vector& c) {
  if (c.size() != P.dim()) throw InputError("support_value: dimension mismatch");
  const LPOutcome r = solve_lp(feasibility_problem(P, c));
  if (r.status == LPStatus::Infeasible) throw EmptySetError("support_value of an empty set");
  if (r.status == LPStatus::Unbounded) return std::nullopt;
  return r.value;
}

std::vector<std::size_t> active_rows(const HPolyhedron& P, const Vector& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < P.num_ineq(); ++i) {
    if (dot(P.A()[i], x) == P.b()[i]) out.push_back(i);
  }
  return out;
}

bool includes(const HPolyhedron& Q, const HPolyhedron& P) {
  if (P.dim() != Q.dim()) throw InputError("includes: dimension mismatch");
  if (P.is_empty()) return true;
  for (std::size_t i = 0; i < Q.num_ineq(); ++i) {
    const auto s = support_value(P, Q.A()[i]);
    if (!s || *s > Q.b()[i]) return false;
  }
  for (std::size_t i = 0; i < Q.num_eq(); ++i) {
    const auto hi = support_value(P, Q.E()[i]);
    const auto lo = support_value(P, negate(Q.E()[i]));
    if (!hi || !lo || *hi != Q.d()[i] || -*lo != Q.d()[i]) return false;
  }
  return true;
}

bool set_equal(const HPolyhedron& P, const HPolyhedron& Q) {
  return includes(Q, P) && includes(P, Q);
}

bool cone_equal(const PolyCone& C, const PolyCone& D) {
  if (C.dim != D.dim) throw InputError("cone_equal: dimension mismatch");
  for (const auto& g : C.generators) {
    if (!in_cone(D.generators, g)) return false;
  }
  for (const auto& g : D.generators) {
    if (!in_cone(C.generators, g)) return false;
  }
  return true;
}

AffineFlat affine_hull(const HPolyhedron& P) {
  if (P.is_empty()) throw EmptySetError("affine_hull of an empty set");
  Matrix rows = P.E();
  Vector rhs = P.d();
  for (auto i : P.implicit_rows()) {
    rows.push_back(P.A()[i]);
    rhs.push_back(P.b()[i]);
  }
  auto base = solve_particular(rows, rhs, P.dim());
  if (!base) throw InternalInconsistency("affine_hull: implicit system inconsistent");
  return AffineFlat{std::move(*base), nullspace(rows, P.dim())};
}

std::size_t affine_dimension(const HPolyhedron& P) {
  Matrix rows = P.E();
  if (P.is_empty()) throw EmptySetError("affine_dimension of an empty set");
  for (auto i : P.implicit_rows()) rows.push_back(P.A()[i]);
  return P.dim() - rank(rows, P.dim());
}

Vector relative_interior_point(const HPolyhedron& P) {
  if (P.is_empty()) throw EmptySetError("relative_interior_point of an empty set");
  const auto& implicit = P.implicit_rows();
  const std::size_t n = P.dim();
  std::vector<bool> is_implicit(P.num_ineq(), false);
  for (auto i : implicit) is_implicit[i] = true;

  // Variables (x, s): maximize s with a_i x + s <= b_i on non-implicit rows.
  LPProblem lp;
  lp.objective = zeros(n + 1);
  lp.objective[n] = 1;
  for (std::size_t i = 0; i < P.num_ineq(); ++i) {
    Vector row = P.A()[i];
    row.push_back(is_implicit[i] ? 0 : 1);
    lp.ineq_lhs.push_back(std::move(row));
    lp.ineq_rhs.push_back(P.b()[i]);
  }
  lp.ineq_lhs.push_back(unit_vector(n + 1, n));
  lp.ineq_rhs.push_back(1);
  for (std::size_t i = 0; i < P.num_eq(); ++i) {
    Vector row = P.E()[i];
    row.push_back(0);
    lp.eq_lhs.push_back(std::move(row));
    lp.eq_rhs.push_back(P.d()[i]);
  }
  const LPOutcome r = solve_lp(lp);
  if (r.status != LPStatus::Optimal) {
    throw InternalInconsistency("relative_interior_point: slack LP not optimal");
  }
  const bool has_free_rows = implicit.size() < P.num_ineq();
  if (has_free_rows && sgn(r.value) <= 0) {
    throw InternalInconsistency("relative_interior_point: no positive slack");
  }
  return Vector(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
}

PolyCone difference_cone(const HPolyhedron& P, const Vector& xbar) {
  if (xbar.size() != P.dim()) throw InputError("difference_cone: dimension mismatch");
  if (!P.contains(xbar)) throw NotMemberError("difference_cone: point " + to_string(xbar) +
                                              " is not in the set");
  const VPolyhedron& V = P.vrep();
  PolyCone c{P.dim(), {}};
  for (const auto& p : V.points) {
    Vector g = sub(p, xbar);
    if (!is_zero(g)) push_unique(c.generators, primitive(g));
  }
  for (const auto& r : V.rays) push_unique(c.generators, r);
  return c;
}

HPolyhedron minkowski_difference(const HPolyhedron& P, const HPolyhedron& Q) {
  if (P.dim() != Q.dim()) throw InputError("minkowski_difference: dimension mismatch");
  if (P.is_empty() || Q.is_empty()) throw EmptySetError("minkowski_difference of an empty set");
  const VPolyhedron& VP = P.vrep();
  const VPolyhedron& VQ = Q.vrep();
  VPolyhedron D;
  D.dim = P.dim();
  for (const auto& p : VP.points) {
    for (const auto& q : VQ.points) push_unique(D.points, sub(p, q));
  }
  for (const auto& r : VP.rays) push_unique(D.rays, r);
  for (const auto& r : VQ.rays) push_unique(D.rays, negate(r));
  return v_to_h(D);
}

HPolyhedron linear_image(const Matrix& M, const HPolyhedron& P) {
  for (const auto& row : M) {
    if (row.size() != P.dim()) throw InputError("linear_image: matrix columns do not match set dimension");
  }
  const std::size_t m = M.size();
  if (P.is_empty()) return HPolyhedron::empty_set(m);
  const VPolyhedron& V = P.vrep();
  VPolyhedron image;
  image.dim = m;
  for (const auto& p : V.points) push_unique(image.points, mat_vec(M, p));
  for (const auto& r : V.rays) {
    Vector mr = mat_vec(M, r);
    if (!is_zero(mr)) push_unique(image.rays, primitive(mr));
  }
  return v_to_h(image);
}

HPolyhedron translate(const HPolyhedron& P, const Vector& q) {
  if (q.size() != P.dim()) throw InputError("translate: dimension mismatch");
  Vector b = P.b();
  for (std::size_t i = 0; i < b.size(); ++i) b[i] += dot(P.A()[i], q);
  Vector d = P.d();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += dot(P.E()[i], q);
  return HPolyhedron(P.dim(), P.A(), std::move(b), P.E(), std::move(d));
}

HPolyhedron cartesian_product(const HPolyhedron& P, const HPolyhedron& Q) {
  const std::size_t n1 = P.dim();
  const std::size_t n = n1 + Q.dim();
  auto lift = [&](const Vector& row, std::size_t offset) {
    Vector r = zeros(n);
    for (std::size_t j = 0; j < row.size(); ++j) r[offset + j] = row[j];
    return r;
  };
  Matrix A, E;
  Vector b, d;
  for (std::size_t i = 0; i < P.num_ineq(); ++i) {
    A.push_back(lift(P.A()[i], 0));
    b.push_back(P.b()[i]);
  }
  for (std::size_t i = 0; i < Q.num_ineq(); ++i) {
    A.push_back(lift(Q.A()[i], n1));
    b.push_back(Q.b()[i]);
  }
  for (std::size_t i = 0; i < P.num_eq(); ++i) {
    E.push_back(lift(P.E()[i], 0));
    d.push_back(P.d()[i]);
  }
  for (std::size_t i = 0; i < Q.num_eq(); ++i) {
    E.push_back(lift(Q.E()[i], n1));
    d.push_back(Q.d()[i]);
  }
  return HPolyhedron(n, std::move(A), std::move(b), std::move(E), std::move(d));
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const HPolyhedron& P) {
  const VPolyhedron& V = P.vrep();
  const std::size_t n = P.dim();
  Matrix all = P.A();
  all.insert(all.end(), P.E().begin(), P.E().end());
  const std::size_t lineality = n - rank(all, n);
  if (n < 1 + lineality) return {};
  const std::size_t target = n - 1 - lineality;

  std::vector<std::vector<std::size_t>> act;
  act.reserve(V.points.size());
  for (const auto& p : V.points) act.push_back(active_rows(P, p));

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < V.points.size(); ++i) {
    for (std::size_t j = i + 1; j < V.points.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(act[i].begin(), act[i].end(), act[j].begin(), act[j].end(),
                            std::back_inserter(common));
      Matrix rows = P.E();
      for (auto k : common) rows.push_back(P.A()[k]);
      if (rank(rows, n) == target) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Vector> sweep_points(const HPolyhedron& P) {
  if (P.is_empty()) throw EmptySetError("sweep_points of an empty set");
  const VPolyhedron& V = P.vrep();
  std::vector<Vector> out;
  for (const auto& p : V.points) push_unique(out, p);
  for (const auto& [i, j] : edges(P)) push_unique(out, lerp(V.points[i], V.points[j], Rat(1, 2)));
  Vector centroid = zeros(P.dim());
  for (const auto& p : V.points) centroid = add(centroid, p);
  centroid = scale(Rat(1, static_cast<long>(V.points.size())), centroid);
  push_unique(out, centroid);
  if (!V.rays.empty()) {
    Vector ray_sum = zeros(P.dim());
    for (const auto& p : V.points) {
      for (const auto& r : V.rays) push_unique(out, add(p, r));
    }
    for (const auto& r : V.rays) ray_sum = add(ray_sum, r);
    push_unique(out, add(centroid, ray_sum));
  }
  return out;
}

}  // namespace relint
