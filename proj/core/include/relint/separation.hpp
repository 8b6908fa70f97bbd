#pragma once

#include <optional>
#include <string>

#include "relint/sets.hpp"

namespace relint {

enum class WitnessSide { A, B };

/// sup <x*, A> <= threshold <= inf <x*, B>, with `strict_witness` a point of
/// A or B whose value differs from the threshold.
struct SeparationCertificate {
  Vector functional;
  Rat threshold;
  Rat side_a_bound;  ///< sup over A
  Rat side_b_bound;  ///< inf over B
  Vector strict_witness;
  WitnessSide witness_side = WitnessSide::A;
};

/// Multiplies the functional, threshold and bounds by a positive rational.
SeparationCertificate scaled(const SeparationCertificate& cert, const Rat& factor);

/// Separates {xbar} (side B) from P (side A) properly. Returns nullopt exactly
/// when xbar lies in qri(P). Outside P the functional is the first violated
/// constraint; on P it is the sum of the normal-cone generators whose
/// negation is not normal. Throws EmptySetError.
std::optional<SeparationCertificate> properly_separate_point(const HPolyhedron& P,
                                                             const Vector& xbar);

struct SeparationHypotheses {
  bool qri_a_nonempty = false;
  bool qri_b_nonempty = false;
  bool difference_quasi_regular = false;
};

struct SetSeparation {
  std::optional<SeparationCertificate> certificate;
  SeparationHypotheses hypotheses;
  /// A common relative interior point found by the independent slack LP.
  std::optional<Vector> common_ri_point;
};

/// Separates P (side A) from Q (side B) through the point 0 and the set P - Q.
/// Throws InternalInconsistency if the result disagrees with the slack LP.
SetSeparation properly_separate_sets(const HPolyhedron& P, const HPolyhedron& Q);

/// A point of ri(P) and ri(Q), maximizing the common slack of both sets'
/// non-implicit rows; nullopt when the relative interiors are disjoint.
std::optional<Vector> ri_intersection_point(const HPolyhedron& P, const HPolyhedron& Q);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Replays a certificate: one LP for sup over A, one for inf over B, then the
/// witness.
CertificateCheck verify_certificate(const SeparationCertificate& cert, const HPolyhedron& A,
                                    const HPolyhedron& B);

struct StrictSeparation {
  Vector functional;  ///< lies in span(L.basis)
  Rat sup_value;      ///< sup <u, P>
  Rat point_value;    ///< <u, xbar>
  Rat margin;         ///< point_value - sup_value > 0
};

/// u in L with sup <u, P> < <u, xbar>. L must pass through 0 and contain P and
/// xbar; xbar must lie outside the nonempty P. Throws PreconditionFailed naming
/// the violated condition.
StrictSeparation strict_separate_in_subspace(const AffineFlat& L, const HPolyhedron& P,
                                             const Vector& xbar);

}  // namespace relint
