#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relint/interiors.hpp"
#include "relint/sets.hpp"

namespace relint {

/// y = M x_t with x_t = t xtilde + (1 - t) anchor, where anchor is a fixed
/// interior point of P, M xtilde lies on the ray from M anchor through y, and
/// t is in (0, 1]. For y == M anchor, t = 1 and xtilde = anchor.
struct Preimage {
  Vector y;
  Vector xtilde;
  Rat t;
  Vector x;  ///< x_t
};

struct ImageCheck {
  bool holds = true;
  InteriorKind kind = InteriorKind::Iri;
  bool image_quasi_regular = true;
  std::size_t forward_checked = 0;   ///< x samples in the interior of P
  std::size_t backward_checked = 0;  ///< y samples in the interior of M(P)
  std::vector<Preimage> preimages;
  std::optional<Vector> violation;
  std::string detail;
};

/// Vertices, edge midpoints and centroid (sweep_points) plus five random
/// rational convex combinations of V-points shifted along rays, from a fixed
/// seed.
std::vector<Vector> default_calculus_samples(const HPolyhedron& P);

/// M(iri P) == iri(M(P)) at samples. Forward: x in iri(P) implies Mx in
/// iri(M(P)). Backward: every y in iri(M(P)) gets a preimage in iri(P) from
/// the segment construction, re-verified. Throws EmptySetError for empty P.
ImageCheck check_image_iri(const Matrix& M, const HPolyhedron& P, const std::vector<Vector>& x_samples,
                           const std::vector<Vector>& y_samples);
ImageCheck check_image_iri(const Matrix& M, const HPolyhedron& P);

/// Same with qri on both sides, plus the quasi-regularity certificate of M(P).
ImageCheck check_image_qri(const Matrix& M, const HPolyhedron& P, const std::vector<Vector>& x_samples,
                           const std::vector<Vector>& y_samples);
ImageCheck check_image_qri(const Matrix& M, const HPolyhedron& P);

/// The preimage construction alone: throws PreconditionFailed when y is not
/// in the chosen interior of M(P).
Preimage construct_preimage(const Matrix& M, const HPolyhedron& P, const Vector& y, InteriorKind kind);

struct SampledCheck {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<Vector> violation;
  std::string detail;
};

/// (x, y) in qri(P x Q) iff x in qri(P) and y in qri(Q).
SampledCheck qri_of_product(const HPolyhedron& P, const HPolyhedron& Q, const std::vector<Vector>& samples);

/// x = p - q
struct Decomposition {
  Vector x;
  Vector p;
  Vector q;
};

/// p in ri(P), q in ri(Q) with p - q = x, from the LP maximizing the least
/// slack of the non-implicit rows; nullopt when no such pair exists.
std::optional<Decomposition> qri_decomposition(const HPolyhedron& P, const HPolyhedron& Q, const Vector& x);

struct DifferenceCheck {
  bool holds = true;
  std::size_t checked = 0;
  std::vector<Decomposition> decompositions;
  std::optional<Vector> violation;
  std::string detail;
};

/// qri(P - Q) == qri(P) - qri(Q) at samples: membership in qri of the
/// Minkowski difference must agree with the existence of a decomposition,
/// and every decomposition is re-verified.
DifferenceCheck qri_of_difference(const HPolyhedron& P, const HPolyhedron& Q, const std::vector<Vector>& samples);

}  // namespace relint
