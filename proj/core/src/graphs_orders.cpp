#include "relint/graphs_orders.hpp"


#include "relint/errors.hpp"
#include "relint/generate.hpp"
#include "relint/interiors.hpp"
#include "relint/lp.hpp"

namespace relint {

namespace {

std::pair<Vector, Vector> split(const PolySetValuedMap& F, const Vector& s) {
  if (s.size() != F.x_dim + F.y_dim) throw InputError("graph sample has the wrong dimension");
  return {Vector(s.begin(), s.begin() + static_cast<long>(F.x_dim)),
          Vector(s.begin() + static_cast<long>(F.x_dim), s.end())};
}

GraphCheck fail(GraphCheck r, const Vector& sample, std::string detail) {
  r.holds = false;
  r.violation = sample;
  r.detail = std::move(detail);
  return r;
}

Matrix x_projection(std::size_t x_dim, std::size_t y_dim) {
  Matrix M(x_dim, zeros(x_dim + y_dim));
  for (std::size_t i = 0; i < x_dim; ++i) M[i][i] = 1;
  return M;
}

}  // namespace

void PolySetValuedMap::validate() const {
  if (graph.dim() != x_dim + y_dim) throw InputError("set-valued map: graph dimension is not x_dim + y_dim");
}

HPolyhedron map_domain(const PolySetValuedMap& F) {
  F.validate();
  return linear_image(x_projection(F.x_dim, F.y_dim), F.graph);
}

HPolyhedron map_slice(const PolySetValuedMap& F, const Vector& xbar) {
  F.validate();
  if (xbar.size() != F.x_dim) throw InputError("map_slice: point has the wrong dimension");
  auto pin = [&](const Matrix& rows, const Vector& rhs, Matrix& out_rows, Vector& out_rhs) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Rat r = rhs[i];
      for (std::size_t j = 0; j < F.x_dim; ++j) r -= rows[i][j] * xbar[j];
      out_rows.emplace_back(rows[i].begin() + static_cast<long>(F.x_dim), rows[i].end());
      out_rhs.push_back(r);
    }
  };
  Matrix A, E;
  Vector b, d;
  pin(F.graph.A(), F.graph.b(), A, b);
  pin(F.graph.E(), F.graph.d(), E, d);
  return HPolyhedron(F.y_dim, std::move(A), std::move(b), std::move(E), std::move(d));
}

bool int_member(const HPolyhedron& S, const Vector& y) {
  if (S.is_empty() || !S.contains(y)) return false;
  return affine_dimension(S) == S.dim() && ri_member(S, y);
}

GraphCheck check_graph_qri_inclusion(const PolySetValuedMap& F, const std::vector<Vector>& samples) {
  const HPolyhedron dom = map_domain(F);
  GraphCheck r;
  if (dom.is_empty()) return r;
  for (const auto& s : samples) {
    const auto [x, y] = split(F, s);
    if (!interior_member(dom, x, InteriorKind::Qri)) continue;
    if (!int_member(map_slice(F, x), y)) continue;
    ++r.checked;
    if (!interior_member(F.graph, s, InteriorKind::Qri)) {
      return fail(r, s, "x in qri(dom F) and y in int F(x), but (x, y) not in qri(gph F)");
    }
  }
  return r;
}

GraphCheck check_graph_iri_inclusion(const PolySetValuedMap& F, const std::vector<Vector>& samples) {
  const HPolyhedron dom = map_domain(F);
  GraphCheck r;
  if (dom.is_empty()) return r;
  for (const auto& s : samples) {
    if (!iri_member(F.graph, s)) continue;
    ++r.checked;
    const auto [x, y] = split(F, s);
    if (!iri_member(dom, x)) return fail(r, s, "(x, y) in iri(gph F), but x not in iri(dom F)");
    if (!iri_member(map_slice(F, x), y)) return fail(r, s, "(x, y) in iri(gph F), but y not in iri F(x)");
  }
  return r;
}

GraphCheck check_graph_equality(const PolySetValuedMap& F, const std::vector<Vector>& samples) {
  const HPolyhedron dom = map_domain(F);
  GraphCheck r;
  if (dom.is_empty()) return r;
  for (const auto& s : samples) {
    const auto [x, y] = split(F, s);
    if (!dom.contains(x)) continue;
    const HPolyhedron slice = map_slice(F, x);
    if (affine_dimension(slice) != F.y_dim) {
      throw PreconditionFailed("check_graph_equality: slice F(x) at x = " + to_string(x) + " has empty interior");
    }
  }
  for (const auto& s : samples) {
    const auto [x, y] = split(F, s);
    ++r.checked;
    const bool lhs = interior_member(F.graph, s, InteriorKind::Qri);
    const bool rhs = interior_member(dom, x, InteriorKind::Qri) && int_member(map_slice(F, x), y);
    if (lhs != rhs) {
      return fail(r, s, lhs ? "(x, y) in qri(gph F) but the right-hand side fails"
                            : "right-hand side holds but (x, y) not in qri(gph F)");
    }
  }
  if (!is_quasi_regular(dom).quasi_regular) {
    r.holds = false;
    r.detail = "dom F is not quasi-regular";
  }
  return r;
}

OrderingCone OrderingCone::polyhedral(PolyCone cone) {
  for (const auto& g : cone.generators) {
    if (g.size() != cone.dim) throw InputError("ordering cone: generator has the wrong dimension");
  }
  return OrderingCone(Kind::Polyhedral, std::move(cone));
}

OrderingCone OrderingCone::lexicographic() { return OrderingCone(Kind::Lexicographic2D, PolyCone{2, {}}); }

const PolyCone& OrderingCone::cone() const {
  if (kind_ != Kind::Polyhedral) throw PreconditionFailed("the lexicographic cone has no generator description");
  return cone_;
}

bool OrderingCone::contains(const Vector& v) const {
  if (v.size() != dim()) throw InputError("ordering cone: vector has the wrong dimension");
  if (kind_ == Kind::Lexicographic2D) return sign(v[0]) > 0 || (sign(v[0]) == 0 && sign(v[1]) >= 0);
  return in_cone(cone_.generators, v);
}

OrderClassification classify(const OrderingCone& C) {
  if (C.kind() == OrderingCone::Kind::Lexicographic2D) return {true, false};
  // C u -C is everything exactly when C is the whole space or a halfspace,
  // i.e. when the polar is {0} or a single ray.
  const PolyCone P = polar(C.cone());
  const std::size_t r = rank(P.generators, P.dim);
  const bool total = r == 0 || (r == 1 && !cone_is_subspace(P.generators));
  return {total, true};
}

PLVectorFunction PLVectorFunction::affine(const Matrix& M, const Vector& m) {
  if (M.size() != m.size()) throw InputError("affine vector function: row count mismatch");
  PLVectorFunction f;
  f.y_dim = M.size();
  f.x_dim = M.empty() ? 0 : M.front().size();
  for (std::size_t i = 0; i < M.size(); ++i) f.components.push_back({{AffinePiece{M[i], m[i]}}, VectorComponent::Combine::Max});
  f.validate();
  return f;
}

void PLVectorFunction::validate() const {
  if (components.size() != y_dim) throw InputError("vector function: component count is not y_dim");
  for (const auto& c : components) {
    if (c.pieces.empty()) throw InputError("vector function: component without pieces");
    for (const auto& p : c.pieces) {
      if (p.slope.size() != x_dim) throw InputError("vector function: slope has the wrong dimension");
    }
  }
}

bool PLVectorFunction::is_affine() const {
  for (const auto& c : components) {
    if (c.pieces.size() != 1) return false;
  }
  return true;
}

Vector PLVectorFunction::operator()(const Vector& x) const {
  if (x.size() != x_dim) throw InputError("vector function: point has the wrong dimension");
  Vector y;
  y.reserve(y_dim);
  for (const auto& c : components) {
    Rat v = c.pieces.front()(x);
    for (const auto& p : c.pieces) {
      const Rat w = p(x);
      if (c.combine == VectorComponent::Combine::Max ? w > v : w < v) v = w;
    }
    y.push_back(v);
  }
  return y;
}

Vector c_convexity_defect(const PLVectorFunction& f, const Vector& x1, const Vector& x2, const Rat& lambda) {
  const Rat mu = 1 - lambda;
  const Vector mixed = add(scale(lambda, f(x1)), scale(mu, f(x2)));
  return sub(mixed, f(add(scale(lambda, x1), scale(mu, x2))));
}

CConvexityCheck c_convexity_check(const PLVectorFunction& f, const OrderingCone& C, std::size_t trials,
                                  std::uint64_t seed) {
  f.validate();
  if (C.dim() != f.y_dim) throw InputError("c_convexity_check: cone and codomain dimensions differ");
  CConvexityCheck r;
  if (f.is_affine()) {
    r.structural = true;
    return r;
  }
  const std::vector<Rat> lambdas{ratio(1, 4), ratio(1, 2), ratio(3, 4)};
  auto test = [&](const Vector& x1, const Vector& x2) {
    for (const auto& l : lambdas) {
      if (!C.contains(c_convexity_defect(f, x1, x2, l))) {
        r.holds = false;
        r.x1 = x1;
        r.x2 = x2;
        r.lambda = l;
        return false;
      }
    }
    return true;
  };
  std::vector<Vector> grid{Vector{}};
  for (std::size_t i = 0; i < f.x_dim; ++i) {
    std::vector<Vector> next;
    for (const auto& g : grid) {
      for (long v = -1; v <= 1; ++v) {
        Vector e = g;
        e.push_back(Rat(v));
        next.push_back(std::move(e));
      }
    }
    grid = std::move(next);
  }
  for (const auto& x1 : grid) {
    for (const auto& x2 : grid) {
      if (!test(x1, x2)) return r;
    }
  }
  InstanceRng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    if (!test(rng.int_vector(f.x_dim, 4), rng.int_vector(f.x_dim, 4))) return r;
  }
  return r;
}

CEpigraph c_epigraph(const PLVectorFunction& f, const OrderingCone& C) {
  f.validate();
  if (C.kind() != OrderingCone::Kind::Polyhedral) {
    throw PreconditionFailed("c_epigraph: the lexicographic cone is not closed; use lex_epi_analysis");
  }
  if (!f.is_affine()) throw PreconditionFailed("c_epigraph: f is not affine");
  if (C.dim() != f.y_dim) throw InputError("c_epigraph: cone and codomain dimensions differ");
  if (rank(C.cone().generators, C.dim()) != C.dim()) {
    throw PreconditionFailed("c_epigraph: ordering cone has empty interior");
  }
  // C = {y : <g, y> <= 0 for g generating the polar}; substitute y - Mx - m.
  const PolyCone normals = polar(C.cone());
  const std::size_t n = f.x_dim + f.y_dim;
  Matrix A;
  Vector b;
  for (const auto& g : normals.generators) {
    Vector row = zeros(n);
    Rat rhs = 0;
    for (std::size_t i = 0; i < f.y_dim; ++i) {
      const AffinePiece& p = f.components[i].pieces.front();
      for (std::size_t j = 0; j < f.x_dim; ++j) row[j] -= g[i] * p.slope[j];
      row[f.x_dim + i] = g[i];
      rhs += g[i] * p.offset;
    }
    A.push_back(std::move(row));
    b.push_back(rhs);
  }
  return {HPolyhedron(n, std::move(A), std::move(b)), HPolyhedron::whole_space(f.x_dim)};
}

namespace {

void record(CEpiReport& report, CEpiSample row) {
  if (row.in_iri && !row.in_rhs && report.inclusion_holds) {
    report.inclusion_holds = false;
    report.violation = row.point;
  }
  if (row.in_rhs && !row.in_iri) report.strict_witnesses.push_back(row.point);
  report.rows.push_back(std::move(row));
}

}  // namespace

CEpiReport check_iri_c_epi(const PLVectorFunction& f, const OrderingCone& C, const std::vector<Vector>& samples) {
  const CEpigraph E = c_epigraph(f, C);
  CEpiReport report;
  for (const auto& s : samples) {
    if (s.size() != f.x_dim + f.y_dim) throw InputError("check_iri_c_epi: sample has the wrong dimension");
    const Vector x(s.begin(), s.begin() + static_cast<long>(f.x_dim));
    const Vector y(s.begin() + static_cast<long>(f.x_dim), s.end());
    const Vector gap = sub(y, f(x));
    CEpiSample row{s, E.epi.contains(s), false, false};
    row.in_rhs = iri_member(E.c_domain, x) && !is_zero(gap) && C.contains(gap);
    row.in_iri = iri_member(E.epi, s);
    record(report, std::move(row));
  }
  return report;
}

CEpiReport lex_epi_analysis(const std::vector<Vector>& samples) {
  const OrderingCone C = OrderingCone::lexicographic();
  CEpiReport report;
  for (const auto& s : samples) {
    if (s.size() != 3) throw InputError("lex_epi_analysis: samples live in R^3");
    const Vector y{s[1], s[2]};
    CEpiSample row{s, C.contains(y), false, false};
    row.in_rhs = row.in_epi && !is_zero(y);
    row.in_iri = sign(y[0]) > 0;
    record(report, std::move(row));
  }
  return report;
}

std::vector<Vector> canonical_grid() {
  std::vector<Vector> grid;
  for (long a = -1; a <= 1; ++a) {
    for (long b = -1; b <= 1; ++b) {
      for (long c = -1; c <= 1; ++c) grid.push_back({Rat(a), Rat(b), Rat(c)});
    }
  }
  return grid;
}

}  // namespace relint
