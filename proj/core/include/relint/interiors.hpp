#pragma once

#include <string>
#include <vector>

#include "relint/sets.hpp"

namespace relint {

/// x in P, tight on every implicit equality and strict on every other
/// inequality. False for points outside P. Throws EmptySetError for empty P.
bool ri_member(const HPolyhedron& P, const Vector& x);

/// For every V-point v != x some alpha > 1 keeps (1 - alpha) v + alpha x in P,
/// and the negation of every recession ray lies in cone(P - x).
/// Throws NotMemberError when x is outside P.
bool relatively_absorbing(const HPolyhedron& P, const Vector& x);

/// Largest alpha with (1 - alpha) v + alpha x in P (nullopt when unbounded).
/// Requires x, v in P.
std::optional<Rat> absorbing_reach(const HPolyhedron& P, const Vector& x, const Vector& v);

/// cone(P - x) is a linear subspace. False for points outside P.
bool iri_member(const HPolyhedron& P, const Vector& x);

/// Generators of N(x; P): primitive outward normals of the inequalities active
/// at x, and both signs of every equality row. Throws NotMemberError.
PolyCone normal_cone(const HPolyhedron& P, const Vector& x);

/// {y : <y, g> <= 0 for all generators g}, in generator form.
PolyCone polar(const PolyCone& C);
/// {y : <y, x> <= 1 for all x in P}.
HPolyhedron polar_set(const HPolyhedron& P);

/// N(x; P) is a linear subspace. Throws NotMemberError.
bool qri_member(const HPolyhedron& P, const Vector& x);

/// Every y with <y, p - x> >= 0 on P has <y, p - x> = 0 on P. Decided from the
/// definition, one LP per normal-cone generator. Throws NotMemberError.
bool nonsupport_point(const HPolyhedron& P, const Vector& x);

struct QuasiRegularity {
  bool quasi_regular = true;
  std::string certificate;
  std::vector<Vector> sweep;
  /// iri and qri membership agreed at every sweep point.
  bool sweep_agrees = true;
};

/// Always quasi-regular for nonempty polyhedra; additionally compares the iri
/// and qri oracles on sweep_points(P), thinned to an evenly strided subset of
/// at most kQuasiRegularSweepLimit points that always keeps the last one.
/// Throws EmptySetError.
inline constexpr std::size_t kQuasiRegularSweepLimit = 32;
QuasiRegularity is_quasi_regular(const HPolyhedron& P);

enum class InteriorKind { Ri, Iri, Qri };

const char* to_string(InteriorKind kind);
/// Membership test for the given interior; false outside P for every kind.
bool interior_member(const HPolyhedron& P, const Vector& x, InteriorKind kind);

std::vector<Rat> default_segment_samples();

/// Every t * xbar + (1 - t) * xtilde, t in samples, passes the `kind` oracle.
/// Throws PreconditionFailed when xbar fails the oracle, xtilde is outside P,
/// or a sample lies outside (0, 1].
bool segment_check(const HPolyhedron& P, const Vector& xbar, InteriorKind kind,
                   const Vector& xtilde,
                   const std::vector<Rat>& samples = default_segment_samples());

}  // namespace relint
