#include "relint/rational.hpp"

#include <cctype>

#include "relint/errors.hpp"

namespace relint {

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

}  // namespace

Rat parse_rat(std::string_view raw) {
  const std::string_view text = trim(raw);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw InputError("not a rational literal: \"" + std::string(raw) + "\"");
  }
  // GMP rejects a leading '+'.
  const std::string num_s(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in \"" + std::string(raw) + "\"");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(); }

Rat ratio(long p, long q) {
  if (q == 0) throw InputError("ratio: zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

int sign(const Rat& value) { return sgn(value); }

const Rat& ExtendedRat::value() const {
  if (!is_finite()) throw IndeterminateForm("value() of an infinite extended rational");
  return value_;
}

ExtendedRat ExtendedRat::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
    case Kind::Finite: break;
  }
  return ExtendedRat(Rat(-value_));
}

ExtendedRat operator+(const ExtendedRat& a, const ExtendedRat& b) {
  if (a.is_finite() && b.is_finite()) return ExtendedRat(Rat(a.value_ + b.value_));
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw IndeterminateForm("indeterminate form: +inf + -inf");
  }
  return a.is_finite() ? b : a;
}

ExtendedRat operator-(const ExtendedRat& a, const ExtendedRat& b) { return a + (-b); }

bool operator==(const ExtendedRat& a, const ExtendedRat& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRat& a, const ExtendedRat& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (!a.is_finite()) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

std::string ExtendedRat::to_string() const {
  switch (kind_) {
    case Kind::PosInf: return "+inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  return relint::to_string(value_);
}

ExtendedRat ExtendedRat::parse(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "+inf" || t == "inf") return pos_inf();
  if (t == "-inf") return neg_inf();
  return ExtendedRat(parse_rat(t));
}

}  // namespace relint
