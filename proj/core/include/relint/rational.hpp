#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace relint {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
using Rat = mpq_class;

/// Parses "p/q", "p", or "-p/q". Decimal and exponent notation are rejected so
/// that no floating-point value is ever silently accepted. Throws InputError.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rat& value);

int sign(const Rat& value);

/// p/q in lowest terms. Throws InputError when q is zero.
Rat ratio(long p, long q);

/// A rational extended by the two infinities. Used for function values,
/// optimal values and duality gaps; infinities are tags, never large numbers.
class ExtendedRat {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtendedRat() = default;
  ExtendedRat(Rat value) : value_(std::move(value)) {}  // NOLINT(implicit)
  ExtendedRat(int value) : value_(value) {}             // NOLINT(implicit)

  static ExtendedRat pos_inf() { return ExtendedRat(Kind::PosInf); }
  static ExtendedRat neg_inf() { return ExtendedRat(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Throws IndeterminateForm when the value is infinite.
  const Rat& value() const;

  ExtendedRat operator-() const;
  friend ExtendedRat operator+(const ExtendedRat& a, const ExtendedRat& b);
  friend ExtendedRat operator-(const ExtendedRat& a, const ExtendedRat& b);

  friend bool operator==(const ExtendedRat& a, const ExtendedRat& b);
  friend std::strong_ordering operator<=>(const ExtendedRat& a,
                                          const ExtendedRat& b);

  /// "+inf", "-inf", or the canonical rational string.
  std::string to_string() const;
  static ExtendedRat parse(std::string_view text);

 private:
  explicit ExtendedRat(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rat value_ = 0;
};

}  // namespace relint
