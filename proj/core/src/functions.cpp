#include "relint/functions.hpp"

#include <algorithm>

#include "relint/errors.hpp"

namespace relint {

namespace {

template <typename F>
void validate_pl(const F& f, const char* what) {
  if (f.pieces.empty()) throw InputError(std::string(what) + ": no affine pieces");
  for (const auto& p : f.pieces) {
    if (p.slope.size() != f.dim) throw InputError(std::string(what) + ": piece slope dimension mismatch");
  }
  if (f.domain.dim() != f.dim) throw InputError(std::string(what) + ": domain dimension mismatch");
  if (f.domain.is_empty()) throw InputError(std::string(what) + ": empty domain (function not proper)");
}

void require_dim(std::size_t want, const Vector& x, const char* what) {
  if (x.size() != want) throw InputError(std::string(what) + ": point dimension mismatch");
}

Vector extended(const Vector& v, Rat last) {
  Vector out = v;
  out.push_back(std::move(last));
  return out;
}

// Domain rows lifted to R^{n+1}, plus one row per piece.
HPolyhedron graph_set(std::size_t n, const std::vector<AffinePiece>& pieces,
                      const HPolyhedron& domain, int side) {
  Matrix A, E;
  Vector b, d;
  for (std::size_t i = 0; i < domain.num_ineq(); ++i) {
    A.push_back(extended(domain.A()[i], 0));
    b.push_back(domain.b()[i]);
  }
  for (std::size_t i = 0; i < domain.num_eq(); ++i) {
    E.push_back(extended(domain.E()[i], 0));
    d.push_back(domain.d()[i]);
  }
  // side = +1: <a, x> - t <= -c ; side = -1: -<a, x> + t <= c.
  for (const auto& p : pieces) {
    A.push_back(extended(scale(Rat(side), p.slope), Rat(-side)));
    b.push_back(-side * p.offset);
  }
  return HPolyhedron(n + 1, std::move(A), std::move(b), std::move(E), std::move(d));
}

std::vector<AffinePiece> negate_pieces(const std::vector<AffinePiece>& pieces) {
  std::vector<AffinePiece> out;
  out.reserve(pieces.size());
  for (const auto& p : pieces) out.push_back({negate(p.slope), -p.offset});
  return out;
}

}  // namespace

void PLConvexFunction::validate() const { validate_pl(*this, "PLConvexFunction"); }
void PLConcaveFunction::validate() const { validate_pl(*this, "PLConcaveFunction"); }

ExtendedRat evaluate(const PLConvexFunction& f, const Vector& x) {
  require_dim(f.dim, x, "evaluate");
  if (!f.domain.contains(x)) return ExtendedRat::pos_inf();
  Rat best = f.pieces.front()(x);
  for (const auto& p : f.pieces) best = std::max(best, p(x));
  return best;
}

ExtendedRat evaluate(const PLConcaveFunction& g, const Vector& x) {
  require_dim(g.dim, x, "evaluate");
  if (!g.domain.contains(x)) return ExtendedRat::neg_inf();
  Rat best = g.pieces.front()(x);
  for (const auto& p : g.pieces) best = std::min(best, p(x));
  return best;
}

ExtendedRat evaluate(const PLFunctionDual& h, const Vector& xstar) {
  const ExtendedRat v = evaluate(h.rep, xstar);
  return h.kind == DualKind::ConvexConjugate ? v : -v;
}

HPolyhedron epigraph(const PLConvexFunction& f) { return graph_set(f.dim, f.pieces, f.domain, 1); }
HPolyhedron hypograph(const PLConcaveFunction& g) { return graph_set(g.dim, g.pieces, g.domain, -1); }

PLConvexFunction negated(const PLConcaveFunction& g) {
  return PLConvexFunction{g.dim, negate_pieces(g.pieces), g.domain};
}

PLConcaveFunction negated(const PLConvexFunction& f) {
  return PLConcaveFunction{f.dim, negate_pieces(f.pieces), f.domain};
}

PLFunctionDual conjugate(const PLConvexFunction& f) {
  f.validate();
  const std::size_t n = f.dim;
  const HPolyhedron epi = epigraph(f);
  const VPolyhedron& V = epi.vrep();
  PLConvexFunction star;
  star.dim = n;
  for (const auto& p : V.points) {
    AffinePiece piece{Vector(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n)), -p[n]};
    if (std::find(star.pieces.begin(), star.pieces.end(), piece) == star.pieces.end()) {
      star.pieces.push_back(std::move(piece));
    }
  }
  Matrix A;
  Vector b;
  for (const auto& r : V.rays) {
    Vector dir(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    if (is_zero(dir)) continue;
    A.push_back(std::move(dir));
    b.push_back(r[n]);
  }
  star.domain = HPolyhedron(n, std::move(A), std::move(b));
  return PLFunctionDual{std::move(star), DualKind::ConvexConjugate};
}

PLFunctionDual concave_conjugate(const PLConcaveFunction& g) {
  g.validate();
  const PLConvexFunction c = conjugate(negated(g)).rep;
  // rep(x*) = c(-x*): reflect every piece slope and every domain row.
  PLConvexFunction rep;
  rep.dim = g.dim;
  for (const auto& p : c.pieces) rep.pieces.push_back({negate(p.slope), p.offset});
  Matrix A, E;
  for (const auto& row : c.domain.A()) A.push_back(negate(row));
  for (const auto& row : c.domain.E()) E.push_back(negate(row));
  rep.domain = HPolyhedron(g.dim, std::move(A), c.domain.b(), std::move(E), c.domain.d());
  return PLFunctionDual{std::move(rep), DualKind::NegatedConcaveConjugate};
}

PLConvexFunction convex_form(const PLFunctionDual& h) {
  if (h.kind != DualKind::ConvexConjugate) throw InputError("convex_form: not a convex conjugate");
  return h.rep;
}

PLConcaveFunction concave_form(const PLFunctionDual& h) {
  if (h.kind != DualKind::NegatedConcaveConjugate) {
    throw InputError("concave_form: not a concave conjugate");
  }
  return negated(h.rep);
}

ContinuityReport continuity_diagnostics(const PLConvexFunction& f) {
  f.validate();
  const std::size_t n = f.dim;
  ContinuityReport r;
  r.int_dom_nonempty = affine_dimension(f.domain) == n;
  r.int_epi_nonempty = affine_dimension(epigraph(f)) == n + 1;
  if (r.int_dom_nonempty) {
    // A box of radius rad around an interior point stays in the domain when
    // rad * |a|_1 < slack for every row; f is then bounded by the exact
    // maximum of each piece over the box.
    const Vector x0 = relative_interior_point(f.domain);
    std::optional<Rat> rad;
    for (std::size_t i = 0; i < f.domain.num_ineq(); ++i) {
      Rat norm1 = 0;
      for (const auto& a : f.domain.A()[i]) norm1 += abs(a);
      if (sgn(norm1) == 0) continue;
      Rat cap = (f.domain.b()[i] - dot(f.domain.A()[i], x0)) / (2 * norm1);
      if (!rad || cap < *rad) rad = cap;
    }
    const Rat radius = rad.value_or(Rat(1));
    bool inside = sgn(radius) > 0;
    for (std::size_t i = 0; i < f.domain.num_ineq(); ++i) {
      Rat norm1 = 0;
      for (const auto& a : f.domain.A()[i]) norm1 += abs(a);
      if (dot(f.domain.A()[i], x0) + radius * norm1 > f.domain.b()[i]) inside = false;
    }
    if (inside) {
      Rat bound = f.pieces.front()(x0);
      for (const auto& p : f.pieces) {
        Rat norm1 = 0;
        for (const auto& a : p.slope) norm1 += abs(a);
        bound = std::max(bound, Rat(p(x0) + radius * norm1));
      }
      r.box_radius = radius;
      r.box_upper_bound = bound;
    }
    r.bounded_above_on_open_set = inside;
  }
  if (r.int_dom_nonempty != r.int_epi_nonempty ||
      r.int_dom_nonempty != r.bounded_above_on_open_set) {
    throw InternalInconsistency("continuity_diagnostics: interior flags disagree");
  }
  return r;
}

}  // namespace relint
