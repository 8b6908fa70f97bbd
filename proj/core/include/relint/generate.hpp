#pragma once

#include <cstdint>
#include <random>

#include "relint/functions.hpp"
#include "relint/graphs_orders.hpp"
#include "relint/seqlab.hpp"
#include "relint/sets.hpp"

namespace relint {

/// Seeded generator whose output depends only on the seed: mt19937_64 is
/// fully specified, and bounded integers use plain rejection sampling instead
/// of the implementation-defined standard distributions.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
  Rat rational(long num_bound, long den_bound);
  Vector int_vector(std::size_t n, long bound);
  /// Nonzero integer vector with entries in [-bound, bound].
  Vector nonzero_int_vector(std::size_t n, long bound);
  /// Random point of conv(points): rational convex weights with denominators
  /// at most 12.
  Vector convex_combination(const std::vector<Vector>& points);

 private:
  std::mt19937_64 engine_;
};

enum class PolyhedronShape {
  Bounded,         ///< full-dimensional polytope
  Unbounded,       ///< cuts without a bounding box
  Flat,            ///< explicit equality rows
  ImplicitFlat,    ///< an equality written as two opposite inequalities
  Point,           ///< a single lattice point
};

/// A nonempty polyhedron of the given shape containing the lattice point
/// `witness`, some of whose rows are tight there.
HPolyhedron random_polyhedron(InstanceRng& rng, std::size_t dim, PolyhedronShape shape,
                              const Vector& witness);
/// Shape and witness drawn at random too.
HPolyhedron random_polyhedron(InstanceRng& rng, std::size_t dim);

/// One to three affine pieces with small integer data on the given domain.
PLConvexFunction random_convex_function(InstanceRng& rng, const HPolyhedron& domain);
PLConcaveFunction random_concave_function(InstanceRng& rng, const HPolyhedron& domain);

enum class OverlapMode {
  Qualified,  ///< dom f and dom g share an interior point
  Disjoint,   ///< ri(dom f) and ri(dom g) do not meet (touching or apart)
  Any,        ///< unconstrained domains, possibly disjoint
};

struct PLPair {
  PLConvexFunction f;
  PLConcaveFunction g;
};

PLPair random_pl_pair(InstanceRng& rng, std::size_t dim, OverlapMode mode);

/// Up to `count` points of a nonempty P: sweep points first, then a relative
/// interior point, then random combinations of V-points plus random multiples
/// of rays.
std::vector<Vector> sample_points(InstanceRng& rng, const HPolyhedron& P, std::size_t count);

/// Points outside a nonempty P, obtained by stepping past a violated
/// facet from a V-point. Empty when P is the whole space.
std::vector<Vector> exterior_points(InstanceRng& rng, const HPolyhedron& P, std::size_t count);

/// A map whose slices F(x) are full-dimensional for every x in its domain:
/// either y - Mx ranges over a solid polyhedron, or each y_j lies above a
/// PL convex function of x. The domain is a random_polyhedron.
PolySetValuedMap random_set_valued_map(InstanceRng& rng, std::size_t x_dim, std::size_t y_dim);

/// Sample points of gph F: sample_points of the graph, then for sampled
/// domain points x a relative interior point and a V-point of F(x), then
/// points outside the graph.
std::vector<Vector> graph_samples(InstanceRng& rng, const PolySetValuedMap& F, std::size_t count);

/// Prefix of up to three entries p/q with |p| <= 3, q <= 6 (nonnegative when
/// `nonneg`; some entries may be zero), and usually a geometric tail with
/// rho in {1/4, 1/3, 1/2, 2/3, 3/4}.
TailSequence random_tail_sequence(InstanceRng& rng, bool nonneg);

}  // namespace relint
