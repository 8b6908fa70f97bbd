#pragma once

#include <vector>

#include "relint/sets.hpp"

namespace relint {

/// x -> <slope, x> + offset
struct AffinePiece {
  Vector slope;
  Rat offset;

  Rat operator()(const Vector& x) const { return dot(slope, x) + offset; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// max of the pieces on `domain`, +inf elsewhere.
struct PLConvexFunction {
  std::size_t dim = 0;
  std::vector<AffinePiece> pieces;
  HPolyhedron domain;

  /// Throws InputError on shape mismatches, no pieces, or an empty domain.
  void validate() const;
};

/// min of the pieces on `domain`, -inf elsewhere.
struct PLConcaveFunction {
  std::size_t dim = 0;
  std::vector<AffinePiece> pieces;
  HPolyhedron domain;

  void validate() const;
};

enum class DualKind {
  ConvexConjugate,          ///< rep is f*
  NegatedConcaveConjugate,  ///< rep is -g_*, i.e. x* -> (-g)*(-x*)
};

/// A conjugate function held as a convex PL function.
struct PLFunctionDual {
  PLConvexFunction rep;
  DualKind kind = DualKind::ConvexConjugate;
};

ExtendedRat evaluate(const PLConvexFunction& f, const Vector& x);
ExtendedRat evaluate(const PLConcaveFunction& g, const Vector& x);
/// Value of the conjugate itself: f*(x*) or g_*(x*).
ExtendedRat evaluate(const PLFunctionDual& h, const Vector& xstar);

/// {(x, t) : x in dom f, t >= piece(x) for every piece} in R^{n+1}.
HPolyhedron epigraph(const PLConvexFunction& f);
/// {(x, t) : x in dom g, t <= piece(x) for every piece} in R^{n+1}.
HPolyhedron hypograph(const PLConcaveFunction& g);

/// -g as a convex function, and back.
PLConvexFunction negated(const PLConcaveFunction& g);
PLConcaveFunction negated(const PLConvexFunction& f);

/// f* from the generators of epi f: one piece x* -> <x*, v> - t per point
/// (v, t), and a domain row <x*, d> <= s per ray (d, s) with d != 0.
PLFunctionDual conjugate(const PLConvexFunction& f);
/// g_* through g_*(x*) = -(-g)*(-x*).
PLFunctionDual concave_conjugate(const PLConcaveFunction& g);

/// f* as a convex function. Throws InputError for a concave conjugate.
PLConvexFunction convex_form(const PLFunctionDual& h);
/// g_* as a concave function. Throws InputError for a convex conjugate.
PLConcaveFunction concave_form(const PLFunctionDual& h);

struct ContinuityReport {
  bool int_dom_nonempty = false;
  bool int_epi_nonempty = false;
  bool bounded_above_on_open_set = false;
  /// The open set used: a box of this radius around a relative interior
  /// point of the domain, on which f stays below the bound.
  std::optional<Rat> box_radius;
  std::optional<Rat> box_upper_bound;
};

/// The three flags coincide for PL convex functions; a disagreement throws
/// InternalInconsistency.
ContinuityReport continuity_diagnostics(const PLConvexFunction& f);

}  // namespace relint
