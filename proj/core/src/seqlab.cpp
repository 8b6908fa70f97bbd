#include "relint/seqlab.hpp"

#include <algorithm>

#include "relint/errors.hpp"

namespace relint {

namespace {

Rat abs_rat(const Rat& v) { return sign(v) < 0 ? Rat(-v) : v; }

}  // namespace

void TailSequence::validate() const {
  if (tail && (sign(tail->rho) <= 0 || tail->rho >= 1)) {
    throw InputError("tail sequence: rho must satisfy 0 < rho < 1");
  }
}

Rat TailSequence::coordinate(std::size_t k) const {
  if (k == 0) throw InputError("tail sequence: coordinates are 1-based");
  if (k <= prefix.size()) return prefix[k - 1];
  if (!tail) return 0;
  Rat v = tail->c;
  for (std::size_t i = tail_start(); i < k; ++i) v *= tail->rho;
  return v;
}

Rat TailSequence::l1_norm() const {
  validate();
  Rat s = 0;
  for (const auto& p : prefix) s += abs_rat(p);
  if (tail) s += abs_rat(tail->c) / (1 - tail->rho);
  return s;
}

Rat TailSequence::l2_norm_squared() const {
  validate();
  Rat s = 0;
  for (const auto& p : prefix) s += p * p;
  if (tail) s += tail->c * tail->c / (1 - tail->rho * tail->rho);
  return s;
}

Rat TailSequence::linf_norm() const {
  validate();
  Rat m = 0;
  for (const auto& p : prefix) m = std::max(m, abs_rat(p));
  if (tail) m = std::max(m, abs_rat(tail->c));
  return m;
}

TailSequence TailSequence::materialized(std::size_t length) const {
  TailSequence out = *this;
  while (out.prefix.size() < length) {
    if (out.tail) {
      out.prefix.push_back(out.tail->c);
      out.tail->c *= out.tail->rho;
    } else {
      out.prefix.emplace_back(0);
    }
  }
  return out;
}

TailSequence TailSequence::unit(std::size_t k) {
  if (k == 0) throw InputError("tail sequence: coordinates are 1-based");
  TailSequence e;
  e.prefix.assign(k, Rat(0));
  e.prefix[k - 1] = 1;
  return e;
}

Rat inner_product(const TailSequence& x, const TailSequence& z) {
  x.validate();
  z.validate();
  const std::size_t len = std::max(x.prefix.size(), z.prefix.size());
  const TailSequence a = x.materialized(len);
  const TailSequence b = z.materialized(len);
  Rat s = 0;
  for (std::size_t i = 0; i < len; ++i) s += a.prefix[i] * b.prefix[i];
  if (a.tail && b.tail) s += a.tail->c * b.tail->c / (1 - a.tail->rho * b.tail->rho);
  return s;
}

bool ell1ball_member(const TailSequence& x) { return x.l1_norm() <= 1; }

bool ell1ball_iri(const TailSequence& x) { return x.l1_norm() < 1; }

bool ell1ball_qri(const TailSequence& x) {
  const Rat n = x.l1_norm();
  return n < 1 || (n == 1 && !x.finite_support());
}

bool ell1ball_normal_test(const TailSequence& x, const TailSequence& z) {
  if (!ell1ball_member(x)) throw PreconditionFailed("ell1ball_normal_test: x is outside the l1 unit ball");
  return inner_product(x, z) == z.linf_norm();
}

TailSequence sign_vector(const TailSequence& x) {
  if (!x.finite_support()) {
    throw PreconditionFailed("sign_vector: x has infinite support; its sign vector is not in l2");
  }
  TailSequence z;
  for (const auto& p : x.prefix) z.prefix.emplace_back(sign(p));
  return z;
}

bool nonneg_ball_member(const TailSequence& x) {
  if (x.l2_norm_squared() > 1) return false;
  if (std::any_of(x.prefix.begin(), x.prefix.end(), [](const Rat& p) { return sign(p) < 0; })) return false;
  return !x.tail || sign(x.tail->c) >= 0;
}

std::optional<std::size_t> zero_coordinate(const TailSequence& xbar) {
  for (std::size_t i = 0; i < xbar.prefix.size(); ++i) {
    if (sign(xbar.prefix[i]) == 0) return i + 1;
  }
  if (xbar.finite_support()) return xbar.tail_start();
  return std::nullopt;
}

NonnegBallRefutation::NonnegBallRefutation(TailSequence xbar, Rat eps) : xbar_(std::move(xbar)), eps_(std::move(eps)) {
  xbar_.validate();
  if (sign(eps_) <= 0 || eps_ >= 1) throw InputError("refutation: eps must lie in (0, 1)");
  if (!nonneg_ball_member(xbar_)) throw PreconditionFailed("refutation: xbar is outside the set");
  if (xbar_.l2_norm_squared() == 1) {
    throw PreconditionFailed(
        "refutation: xbar has norm one; (1 - alpha) 0 + alpha xbar has norm alpha > 1, so xbar is not relatively absorbing");
  }
  if (const auto k = zero_coordinate(xbar_)) {
    throw PreconditionFailed("refutation: zero coordinate " + std::to_string(*k) + "; v = e_" + std::to_string(*k) +
                             " properly separates xbar from the set");
  }
}

void NonnegBallRefutation::extend(std::size_t n) const {
  // Scan forward from k_{m-1} + 1 for each missing m; tail values are
  // updated incrementally instead of recomputed.
  while (indices_.size() < n) {
    const std::size_t m = indices_.size() + 1;
    Rat bound = eps_;
    for (std::size_t i = 0; i < m; ++i) bound /= 4;
    std::size_t k = indices_.empty() ? 1 : indices_.back() + 1;
    Rat v = xbar_.coordinate(k);
    while (v > bound) {
      ++k;
      v = k <= xbar_.prefix.size() + 1 ? xbar_.coordinate(k) : Rat(v * xbar_.tail->rho);
    }
    indices_.push_back(k);
  }
}

std::size_t NonnegBallRefutation::index(std::size_t n) const {
  if (n == 0) throw InputError("refutation: indices start at n = 1");
  extend(n);
  return indices_[n - 1];
}

Rat NonnegBallRefutation::tilde(std::size_t k) const {
  std::size_t n = 1;
  while (index(n) < k) ++n;
  if (index(n) != k) return 0;
  Rat v = eps_;
  for (std::size_t i = 0; i < n; ++i) v /= 2;
  return v;
}

Rat NonnegBallRefutation::tilde_l2_norm_squared() const { return eps_ * eps_ / 3; }

std::size_t NonnegBallRefutation::witness_n(const Rat& alpha) const {
  if (alpha <= 1) throw InputError("refutation: alpha must exceed 1");
  const Rat threshold = alpha / (alpha - 1);
  std::size_t n = 1;
  Rat p = 2;
  while (p <= threshold) {
    p *= 2;
    ++n;
  }
  return n;
}

Rat NonnegBallRefutation::combination_coordinate(const Rat& alpha, std::size_t k) const {
  return (1 - alpha) * tilde(k) + alpha * xbar_.coordinate(k);
}

bool NonnegBallRefutation::verify(const Rat& alpha) const {
  return sign(combination_coordinate(alpha, index(witness_n(alpha)))) < 0;
}

}  // namespace relint
