#include "relint/lp.hpp"

#include <limits>
#include <string>

#include "relint/errors.hpp"

namespace relint {

const char* to_string(LPStatus status) {
  switch (status) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Unbounded: return "unbounded";
    case LPStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau for: maximize cost.y  s.t.  T y = rhs,  y >= 0.
// `reduced` holds cost_j - cost_B B^{-1} T_j and `value` the current objective.
class Tableau {
 public:
  Tableau(Matrix rows, Vector rhs, std::vector<std::size_t> basis, std::size_t cols)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)),
        cols_(cols), allowed_(cols, true) {}

  void set_objective(const Vector& cost) {
    reduced_ = cost;
    value_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      value_ += cb * rhs_[i];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(rows_[i][j]) != 0) reduced_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Runs Bland's rule to optimality. Returns the entering column of an
  // unbounded direction, or kNone when optimal.
  std::size_t optimize() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed_[j] && sgn(reduced_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return kNone;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rat ratio = rhs_[i] / rows_[i][enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = Rat(1) / rows_[r][c];
    Vector& prow = rows_[r];
    for (auto& x : prow) {
      if (sgn(x) != 0) x *= inv;
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const Rat f = rows_[i][c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(prow[j]) != 0) rows_[i][j] -= f * prow[j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (sgn(reduced_[c]) != 0) {
      const Rat f = reduced_[c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(prow[j]) != 0) reduced_[j] -= f * prow[j];
      }
      value_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  void forbid(std::size_t c) { allowed_[c] = false; }

  const Rat& value() const { return value_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  const Rat& entry(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Rat& rhs(std::size_t r) const { return rhs_[r]; }

  Vector solution() const {
    Vector y = zeros(cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = rhs_[i];
    return y;
  }

  // Direction obtained by raising the nonbasic column `c`.
  Vector direction(std::size_t c) const {
    Vector y = zeros(cols_);
    y[c] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = -rows_[i][c];
    return y;
  }

 private:
  Matrix rows_;
  Vector rhs_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
  std::vector<bool> allowed_;
  Vector reduced_;
  Rat value_;
};

void validate(const LPProblem& p) {
  const std::size_t n = p.num_vars();
  if (p.ineq_lhs.size() != p.ineq_rhs.size())
    throw InputError("solve_lp: inequality row count does not match rhs length");
  if (p.eq_lhs.size() != p.eq_rhs.size())
    throw InputError("solve_lp: equality row count does not match rhs length");
  for (const auto& r : p.ineq_lhs) {
    if (r.size() != n) throw InputError("solve_lp: inequality column count mismatch");
  }
  for (const auto& r : p.eq_lhs) {
    if (r.size() != n) throw InputError("solve_lp: equality column count mismatch");
  }
  if (!p.nonneg.empty() && p.nonneg.size() != n)
    throw InputError("solve_lp: nonneg flag count mismatch");
  if (n > kMaxLpVariables)
    throw DeskScaleLimit("desk-scale limit: LP with " + std::to_string(n) + " variables");
  if (p.ineq_lhs.size() + p.eq_lhs.size() > kMaxConstraints)
    throw DeskScaleLimit("desk-scale limit: LP with more than " +
                         std::to_string(kMaxConstraints) + " constraints");
}

}  // namespace

LPOutcome solve_lp(const LPProblem& p) {
  validate(p);
  const std::size_t n = p.num_vars();
  const std::size_t m_in = p.ineq_lhs.size();
  const std::size_t m_eq = p.eq_lhs.size();
  const std::size_t m = m_in + m_eq;

  // Column layout: for each original variable its positive part, then a
  // negative part for free variables; then one slack per inequality; then
  // artificials.
  std::vector<std::size_t> pos_col(n), neg_col(n, kNone);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    const bool free_var = p.nonneg.empty() || !p.nonneg[j];
    if (free_var) neg_col[j] = cols++;
  }
  const std::size_t slack0 = cols;
  cols += m_in;

  std::vector<bool> needs_art(m, false);
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Rat& r = i < m_in ? p.ineq_rhs[i] : p.eq_rhs[i - m_in];
    needs_art[i] = i >= m_in || sgn(r) < 0;
    if (needs_art[i]) ++n_art;
  }
  const std::size_t art0 = cols;
  cols += n_art;

  Matrix rows(m, zeros(cols));
  Vector rhs(m);
  std::vector<std::size_t> basis(m);
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const Vector& src = i < m_in ? p.ineq_lhs[i] : p.eq_lhs[i - m_in];
    Rat r = i < m_in ? p.ineq_rhs[i] : p.eq_rhs[i - m_in];
    const bool flip = sgn(r) < 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(src[j]) == 0) continue;
      const Rat v = flip ? Rat(-src[j]) : src[j];
      rows[i][pos_col[j]] = v;
      if (neg_col[j] != kNone) rows[i][neg_col[j]] = -v;
    }
    if (i < m_in) rows[i][slack0 + i] = flip ? -1 : 1;
    rhs[i] = flip ? Rat(-r) : r;
    if (needs_art[i]) {
      rows[i][next_art] = 1;
      basis[i] = next_art++;
    } else {
      basis[i] = slack0 + i;
    }
  }

  Tableau t(std::move(rows), std::move(rhs), std::move(basis), cols);

  if (n_art > 0) {
    Vector phase1 = zeros(cols);
    for (std::size_t c = art0; c < cols; ++c) phase1[c] = -1;
    t.set_objective(phase1);
    t.optimize();  // bounded above by zero
    if (sgn(t.value()) < 0) return LPOutcome{LPStatus::Infeasible, 0, {}, {}};
    // Drive remaining zero-level artificials out of the basis; a row with no
    // structural entry left is redundant.
    for (std::size_t r = 0; r < t.num_rows();) {
      if (t.basic(r) < art0) {
        ++r;
        continue;
      }
      std::size_t c = kNone;
      for (std::size_t j = 0; j < art0; ++j) {
        if (sgn(t.entry(r, j)) != 0) {
          c = j;
          break;
        }
      }
      if (c == kNone) {
        t.drop_row(r);
      } else {
        t.pivot(r, c);
        ++r;
      }
    }
    for (std::size_t c = art0; c < cols; ++c) t.forbid(c);
  }

  Vector cost = zeros(cols);
  for (std::size_t j = 0; j < n; ++j) {
    cost[pos_col[j]] = p.objective[j];
    if (neg_col[j] != kNone) cost[neg_col[j]] = -p.objective[j];
  }
  t.set_objective(cost);
  const std::size_t unbounded_col = t.optimize();

  auto to_original = [&](const Vector& y) {
    Vector x = zeros(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = y[pos_col[j]];
      if (neg_col[j] != kNone) x[j] -= y[neg_col[j]];
    }
    return x;
  };

  LPOutcome out;
  if (unbounded_col != kNone) {
    out.status = LPStatus::Unbounded;
    out.ray = to_original(t.direction(unbounded_col));
    return out;
  }
  out.status = LPStatus::Optimal;
  out.point = to_original(t.solution());
  out.value = dot(p.objective, out.point);
  return out;
}

bool in_cone(const std::vector<Vector>& generators, const Vector& v) {
  if (is_zero(v)) return true;
  if (generators.empty()) return false;
  const std::size_t k = generators.size();
  const std::size_t n = v.size();
  LPProblem p;
  p.objective = zeros(k);
  p.eq_lhs.assign(n, zeros(k));
  for (std::size_t j = 0; j < k; ++j) {
    if (generators[j].size() != n) throw InputError("in_cone: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) p.eq_lhs[i][j] = generators[j][i];
  }
  p.eq_rhs = v;
  p.nonneg.assign(k, true);
  return solve_lp(p).status == LPStatus::Optimal;
}

bool cone_is_subspace(const std::vector<Vector>& generators) {
  for (const auto& g : generators) {
    if (!in_cone(generators, negate(g))) return false;
  }
  return true;
}

}  // namespace relint
