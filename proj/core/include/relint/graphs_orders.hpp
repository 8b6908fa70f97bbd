#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relint/functions.hpp"
#include "relint/sets.hpp"

namespace relint {

/// x -> {y : (x, y) in graph}.
struct PolySetValuedMap {
  std::size_t x_dim = 0;
  std::size_t y_dim = 0;
  HPolyhedron graph;

  /// Throws InputError when graph.dim() != x_dim + y_dim.
  void validate() const;
};

/// Exact projection of the graph onto the x-coordinates.
HPolyhedron map_domain(const PolySetValuedMap& F);
/// F(xbar) as a polyhedron in y-space; empty when xbar is outside the domain.
HPolyhedron map_slice(const PolySetValuedMap& F, const Vector& xbar);

/// y lies in the topological interior of S (S full-dimensional and y in ri S).
bool int_member(const HPolyhedron& S, const Vector& y);

struct GraphCheck {
  bool holds = true;
  /// Samples on which the asserted implication was actually tested.
  std::size_t checked = 0;
  std::optional<Vector> violation;
  std::string detail;
};

/// qri(gph F) contains every (x, y) with x in qri(dom F) and y in int F(x).
/// Samples are points of R^{x_dim + y_dim}; those failing the hypotheses are
/// skipped.
GraphCheck check_graph_qri_inclusion(const PolySetValuedMap& F, const std::vector<Vector>& samples);
/// (x, y) in iri(gph F) implies x in iri(dom F) and y in iri F(x).
GraphCheck check_graph_iri_inclusion(const PolySetValuedMap& F, const std::vector<Vector>& samples);
/// Two-sided: (x, y) in qri(gph F) iff x in qri(dom F) and y in int F(x), plus
/// quasi-regularity of dom F. Throws PreconditionFailed, naming the slice,
/// when a sampled domain point has a slice with empty interior.
GraphCheck check_graph_equality(const PolySetValuedMap& F, const std::vector<Vector>& samples);

/// Either a closed polyhedral cone or the lexicographic cone
/// {(u, v) : u > 0} u {(0, v) : v >= 0} in R^2, which is not closed and is
/// only ever handled symbolically.
class OrderingCone {
 public:
  enum class Kind { Polyhedral, Lexicographic2D };

  static OrderingCone polyhedral(PolyCone cone);
  static OrderingCone lexicographic();

  Kind kind() const { return kind_; }
  std::size_t dim() const { return kind_ == Kind::Polyhedral ? cone_.dim : 2; }
  /// Throws PreconditionFailed for the lexicographic cone.
  const PolyCone& cone() const;
  bool contains(const Vector& v) const;

 private:
  OrderingCone(Kind kind, PolyCone cone) : kind_(kind), cone_(std::move(cone)) {}

  Kind kind_;
  PolyCone cone_;
};

/// Whether y1 <=_C y2 or y2 <=_C y1 always holds, and whether n^-1 y decreases
/// in order to 0 for every y in C. Closed cones are Archimedean; the
/// lexicographic cone is total but not Archimedean.
struct OrderClassification {
  bool total = false;
  bool archimedean = false;
};

OrderClassification classify(const OrderingCone& C);

/// One output coordinate: the max (or min) of its pieces.
struct VectorComponent {
  enum class Combine { Max, Min };
  std::vector<AffinePiece> pieces;
  Combine combine = Combine::Max;
};

/// f : R^x_dim -> R^y_dim, finite everywhere. Affine when every component has
/// exactly one piece; only affine maps have C-epigraphs built here.
struct PLVectorFunction {
  std::size_t x_dim = 0;
  std::size_t y_dim = 0;
  std::vector<VectorComponent> components;

  static PLVectorFunction affine(const Matrix& M, const Vector& m);

  void validate() const;
  bool is_affine() const;
  Vector operator()(const Vector& x) const;
};

struct CConvexityCheck {
  bool holds = true;
  bool structural = false;  ///< decided from affinity alone, no sampling
  std::optional<Vector> x1;
  std::optional<Vector> x2;
  std::optional<Rat> lambda;
};

/// lambda f(x1) + (1 - lambda) f(x2) - f(lambda x1 + (1 - lambda) x2).
Vector c_convexity_defect(const PLVectorFunction& f, const Vector& x1, const Vector& x2,
                          const Rat& lambda);
/// Affine f: true without sampling. Otherwise tests the defect for membership
/// in C over all pairs from {-1, 0, 1}^x_dim, then `trials` random lattice
/// pairs, with lambda in {1/4, 1/2, 3/4}; stops at the first violation.
CConvexityCheck c_convexity_check(const PLVectorFunction& f, const OrderingCone& C,
                                  std::size_t trials, std::uint64_t seed = 1);

struct CEpigraph {
  HPolyhedron epi;       ///< {(x, y) : y - f(x) in C}
  HPolyhedron c_domain;  ///< all of x-space: C has interior and f is total
};

/// Throws PreconditionFailed for a non-affine f, a lexicographic C, or a C
/// with empty interior; InputError on dimension mismatch.
CEpigraph c_epigraph(const PLVectorFunction& f, const OrderingCone& C);

struct CEpiSample {
  Vector point;
  bool in_epi = false;
  bool in_rhs = false;  ///< x in iri(dom_C f) and y - f(x) in C \ {0}
  bool in_iri = false;
};

struct CEpiReport {
  std::vector<CEpiSample> rows;
  /// in_iri implies in_rhs at every sample.
  bool inclusion_holds = true;
  std::optional<Vector> violation;
  /// Samples with in_rhs but not in_iri: the reverse inclusion fails there.
  std::vector<Vector> strict_witnesses;
};

/// Samples (x, y) are classified with the iri oracle on the C-epigraph. The
/// reverse inclusion is not asserted: it needs a total Archimedean order.
CEpiReport check_iri_c_epi(const PLVectorFunction& f, const OrderingCone& C,
                           const std::vector<Vector>& samples);

/// f = 0 : R -> R^2 under the lexicographic order. epi_C f = R x C, and
/// iri(epi_C f) = R x {(u, v) : u > 0} is used in closed form.
CEpiReport lex_epi_analysis(const std::vector<Vector>& samples);

/// {-1, 0, 1}^3 in lexicographic order.
std::vector<Vector> canonical_grid();

}  // namespace relint
