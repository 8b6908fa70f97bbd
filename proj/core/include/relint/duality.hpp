#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "relint/functions.hpp"
#include "relint/separation.hpp"

namespace relint {

/// inf over x of f(x) - g(x): +inf when the domains are disjoint, -inf when
/// unbounded below.
ExtendedRat solve_primal(const PLConvexFunction& f, const PLConcaveFunction& g);

struct DualSolution {
  ExtendedRat value;
  std::optional<Vector> optimizer;
};

/// sup over x* of g_*(x*) - f*(x*), solved as one LP over the conjugates'
/// epigraph and hypograph.
DualSolution solve_dual(const PLConvexFunction& f, const PLConcaveFunction& g);

struct QualificationReport {
  /// qri(dom f) and qri(dom g) meet.
  bool qri = false;
  /// dom f - dom g, epi f, epi f - hypo g are quasi-regular.
  std::array<bool, 3> quasi_regular{};
  /// ri(dom f) and ri(dom g) meet.
  bool ri = false;
  /// f and g continuous somewhere; f bounded above and g bounded below on
  /// open sets; epi f and hypo g solid; dom f and dom g solid.
  std::array<bool, 4> interior{};
};

/// qri is decided on the difference of the domains at 0; ri by the common
/// slack LP. The two must agree in finite dimensions; a disagreement throws
/// InternalInconsistency.
QualificationReport qualification_report(const PLConvexFunction& f, const PLConcaveFunction& g);

struct DualityReport {
  ExtendedRat primal_value;
  ExtendedRat dual_value;
  std::optional<Rat> gap;
  QualificationReport qualification;
  std::optional<Vector> dual_optimizer;
  bool weak_duality = false;
  /// Names of the qualification routes that certify a zero gap:
  /// "qri-qualification", "ri-qualification", "interior-qualification".
  std::vector<std::string> certifying_routes;
  bool strong_duality = false;
};

/// Throws InternalInconsistency when weak duality fails or a certifying route
/// holds but the values differ.
DualityReport verify_fenchel_rockafellar(const PLConvexFunction& f, const PLConcaveFunction& g);

struct DualCertificate {
  Rat alpha;
  /// Separating functional (u, beta) oriented so that <u, x> + beta t is at
  /// least the threshold on epi f; beta > 0.
  Vector u;
  Rat beta;
  Vector xstar;  ///< -u / beta
  ExtendedRat dual_objective;  ///< g_*(xstar) - f*(xstar), at least alpha
  SeparationCertificate separation;
};

/// Separates epi f from hypo g + (0, alpha) and reads off a dual point.
/// alpha defaults to the primal value and must be finite (PreconditionFailed).
/// Throws QualificationFailure when the sets cannot be separated or beta = 0.
DualCertificate extract_dual_certificate(const PLConvexFunction& f, const PLConcaveFunction& g,
                                         std::optional<Rat> alpha = std::nullopt);

}  // namespace relint
