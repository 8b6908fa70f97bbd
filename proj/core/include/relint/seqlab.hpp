#pragma once

#include <optional>
#include <vector>

#include "relint/rational.hpp"

namespace relint {

/// A square-summable sequence x_1, x_2, ... given by a finite prefix and an
/// optional geometric tail: with k0 = prefix.size() + 1, x_k = c * rho^(k - k0)
/// for k >= k0, where 0 < rho < 1. Without a tail, x_k = 0 for k >= k0.
struct TailSequence {
  struct Tail {
    Rat c;
    Rat rho;
  };

  std::vector<Rat> prefix;
  std::optional<Tail> tail;

  /// Throws InputError unless 0 < rho < 1.
  void validate() const;
  /// 1-based.
  Rat coordinate(std::size_t k) const;
  std::size_t tail_start() const { return prefix.size() + 1; }
  bool finite_support() const { return !tail || tail->c == 0; }

  Rat l1_norm() const;
  Rat l2_norm_squared() const;
  Rat linf_norm() const;

  /// The same sequence with its prefix extended to `length` coordinates.
  TailSequence materialized(std::size_t length) const;

  /// e_k
  static TailSequence unit(std::size_t k);
};

/// Exact <x, z>; a pair of tails contributes c1 c2 / (1 - rho1 rho2) after
/// both prefixes are materialized to a common length.
Rat inner_product(const TailSequence& x, const TailSequence& z);

/// Omega = {x : ||x||_1 <= 1} inside l^2.
bool ell1ball_member(const TailSequence& x);
/// ||x||_1 < 1
bool ell1ball_iri(const TailSequence& x);
/// ||x||_1 <= 1, except norm-one sequences of finite support.
bool ell1ball_qri(const TailSequence& x);
/// z in N(x; Omega), i.e. <x, z> == ||z||_inf. Throws PreconditionFailed when
/// x is outside Omega.
bool ell1ball_normal_test(const TailSequence& x, const TailSequence& z);

/// z_k = sign(x_k). Throws PreconditionFailed for infinite support, where the
/// sign vector is not square-summable.
TailSequence sign_vector(const TailSequence& x);

/// Omega = {x : ||x||_2 <= 1, x_k >= 0 for all k}.
bool nonneg_ball_member(const TailSequence& x);

/// Constructive proof that a candidate xbar of the nonnegative unit ball is
/// not relatively absorbing. Indices k_1 < k_2 < ... are the smallest with
/// xbar_{k_n} <= eps / 4^n; xtilde puts eps / 2^n at k_n and 0 elsewhere. For
/// alpha > 1 the coordinate k_n of (1 - alpha) xtilde + alpha xbar is negative
/// as soon as 2^n > alpha / (alpha - 1).
class NonnegBallRefutation {
 public:
  /// Admits xbar in the set with ||xbar||_2 < 1 and every coordinate
  /// positive; eps in (0, 1). Rejections throw PreconditionFailed with a
  /// message naming the applicable argument: "outside the set", "norm one"
  /// (alpha xbar leaves the ball for alpha > 1), or "zero coordinate k" (e_k
  /// properly separates xbar from the set).
  NonnegBallRefutation(TailSequence xbar, Rat eps);

  const TailSequence& xbar() const { return xbar_; }
  const Rat& eps() const { return eps_; }

  /// k_n, n >= 1.
  std::size_t index(std::size_t n) const;
  /// Coordinate k of xtilde.
  Rat tilde(std::size_t k) const;
  /// ||xtilde||_2^2 = eps^2 / 3.
  Rat tilde_l2_norm_squared() const;
  /// Smallest n with 2^n > alpha / (alpha - 1). Throws InputError unless alpha > 1.
  std::size_t witness_n(const Rat& alpha) const;
  /// ((1 - alpha) xtilde + alpha xbar)_k
  Rat combination_coordinate(const Rat& alpha, std::size_t k) const;
  /// Coordinate k_{witness_n(alpha)} of the combination is negative.
  bool verify(const Rat& alpha) const;

 private:
  void extend(std::size_t n) const;

  TailSequence xbar_;
  Rat eps_;
  mutable std::vector<std::size_t> indices_;
};

/// Index of the first zero coordinate when xbar has one: e_k then separates
/// xbar from the nonnegative ball, since <e_k, xbar> = 0 = inf and sup = 1.
std::optional<std::size_t> zero_coordinate(const TailSequence& xbar);

}  // namespace relint
