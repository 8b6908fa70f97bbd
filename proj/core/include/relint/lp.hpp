#pragma once

#include <cstddef>
#include <vector>

#include "relint/linalg.hpp"

namespace relint {

/// Desk-scale limits. Polyhedra and LPs beyond these are rejected with
/// DeskScaleLimit rather than attempted.
inline constexpr std::size_t kMaxDimension = 24;
inline constexpr std::size_t kMaxConstraints = 200;
/// LP variable cap. Larger than kMaxDimension because cone-membership LPs carry
/// one variable per generator.
inline constexpr std::size_t kMaxLpVariables = 400;

/// maximize c.x  subject to  A x <= b,  E x = d.
/// Variables are free unless flagged in `nonneg` (empty means all free).
struct LPProblem {
  Vector objective;
  Matrix ineq_lhs;
  Vector ineq_rhs;
  Matrix eq_lhs;
  Vector eq_rhs;
  std::vector<bool> nonneg;

  std::size_t num_vars() const { return objective.size(); }
};

enum class LPStatus { Optimal, Unbounded, Infeasible };

const char* to_string(LPStatus status);

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  Rat value;     ///< meaningful when Optimal
  Vector point;  ///< optimal point when Optimal
  Vector ray;    ///< improving recession direction when Unbounded
};

/// Exact two-phase primal simplex with Bland's lowest-index rule. Output is a
/// deterministic function of the input. Throws InputError on inconsistent
/// dimensions and DeskScaleLimit beyond the caps.
LPOutcome solve_lp(const LPProblem& problem);

/// Is `v` a nonnegative combination of `generators`? (One LP.)
bool in_cone(const std::vector<Vector>& generators, const Vector& v);

/// True iff the conic hull of the generators is a linear subspace, decided by
/// one cone-membership LP per generator for its negation. The empty list
/// generates {0}, which is a subspace.
bool cone_is_subspace(const std::vector<Vector>& generators);

}  // namespace relint
