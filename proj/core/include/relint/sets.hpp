#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "relint/linalg.hpp"

namespace relint {

/// conv(points) + cone(rays). Empty iff `points` is empty.
struct VPolyhedron {
  std::size_t dim = 0;
  std::vector<Vector> points;
  std::vector<Vector> rays;

  bool is_empty() const { return points.empty(); }
};

/// base + span(basis), basis linearly independent.
struct AffineFlat {
  Vector base;
  std::vector<Vector> basis;

  std::size_t dim() const { return basis.size(); }
};

/// cone(generators), with the empty list meaning {0}. Finitely generated, hence
/// closed.
struct PolyCone {
  std::size_t dim = 0;
  std::vector<Vector> generators;
};

/// {x in R^dim : A x <= b, E x = d}.
///
/// Values are immutable. Emptiness, the generator description and the set of
/// implicit equalities are computed on first use and cached; copies share the
/// cache, and concurrent readers either compute or observe the final value.
class HPolyhedron {
 public:
  HPolyhedron() : HPolyhedron(0, {}, {}) {}
  /// Throws InputError on inconsistent shapes and DeskScaleLimit beyond the
  /// desk-scale caps.
  HPolyhedron(std::size_t dim, Matrix A, Vector b, Matrix E = {}, Vector d = {});

  static HPolyhedron whole_space(std::size_t dim);
  static HPolyhedron empty_set(std::size_t dim);
  static HPolyhedron singleton(const Vector& point);
  /// Axis-aligned box prod [lo_i, hi_i].
  static HPolyhedron box(const Vector& lo, const Vector& hi);

  std::size_t dim() const { return dim_; }
  const Matrix& A() const { return A_; }
  const Vector& b() const { return b_; }
  const Matrix& E() const { return E_; }
  const Vector& d() const { return d_; }
  std::size_t num_ineq() const { return A_.size(); }
  std::size_t num_eq() const { return E_.size(); }

  /// Exact membership test (no LP).
  bool contains(const Vector& x) const;
  /// One feasibility LP, cached.
  bool is_empty() const;
  /// Double-description conversion, cached.
  const VPolyhedron& vrep() const;
  /// Indices of inequality rows tight on all of P (one LP per row), cached.
  /// Throws EmptySetError for an empty set.
  const std::vector<std::size_t>& implicit_rows() const;

 private:
  struct Cache;

  std::size_t dim_;
  Matrix A_;
  Vector b_;
  Matrix E_;
  Vector d_;
  std::shared_ptr<Cache> cache_;
};

VPolyhedron h_to_v(const HPolyhedron& P);
HPolyhedron v_to_h(const VPolyhedron& V);

/// sup of c.x over P: nullopt when unbounded. Throws EmptySetError if empty.
std::optional<Rat> support_value(const HPolyhedron& P, const Vector& c);

/// Indices of inequality rows with a_i . x == b_i.
std::vector<std::size_t> active_rows(const HPolyhedron& P, const Vector& x);

/// P subset of Q, decided by one LP per row of Q.
bool includes(const HPolyhedron& Q, const HPolyhedron& P);
bool set_equal(const HPolyhedron& P, const HPolyhedron& Q);
/// cone(C.generators) == cone(D.generators), by membership LPs both ways.
bool cone_equal(const PolyCone& C, const PolyCone& D);

AffineFlat affine_hull(const HPolyhedron& P);
/// Dimension of the affine hull.
std::size_t affine_dimension(const HPolyhedron& P);

/// A point of ri(P): maximizes the common slack of the non-implicit rows.
Vector relative_interior_point(const HPolyhedron& P);

/// Generators {v - xbar : v in points} u {rays}; cone(P - xbar) exactly.
PolyCone difference_cone(const HPolyhedron& P, const Vector& xbar);

HPolyhedron minkowski_difference(const HPolyhedron& P, const HPolyhedron& Q);
HPolyhedron linear_image(const Matrix& M, const HPolyhedron& P);
HPolyhedron translate(const HPolyhedron& P, const Vector& q);
HPolyhedron cartesian_product(const HPolyhedron& P, const HPolyhedron& Q);

/// Vertex-style sample points of a nonempty P: V-points, midpoints of edges,
/// the centroid of the V-points, each V-point shifted by each ray, and the
/// centroid shifted by the sum of the rays. Duplicates are removed; the order
/// is deterministic.
std::vector<Vector> sweep_points(const HPolyhedron& P);

/// Pairs (i, j), i < j, of V-points joined by an edge of P.
std::vector<std::pair<std::size_t, std::size_t>> edges(const HPolyhedron& P);

}  // namespace relint
