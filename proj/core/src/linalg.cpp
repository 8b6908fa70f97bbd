#include "relint/linalg.hpp"

#include <cctype>
#include <string>

#include "relint/errors.hpp"

namespace relint {

Vector zeros(std::size_t n) { return Vector(n, Rat(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zeros(n);
  v.at(i) = 1;
  return v;
}

Matrix identity(std::size_t n) {
  Matrix m;
  m.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.push_back(unit_vector(n, i));
  return m;
}

Rat dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("add: dimension mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("sub: dimension mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Rat& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Vector negate(const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Vector lerp(const Vector& a, const Vector& b, const Rat& t) {
  if (a.size() != b.size()) throw InputError("lerp: dimension mismatch");
  Vector r(a.size());
  const Rat s = 1 - t;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i] + t * b[i];
  return r;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
  Vector r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(dot(row, v));
  return r;
}

Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix t(cols, Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != cols) throw InputError("transpose: ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, Vector(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("from_columns: dimension mismatch");
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = columns[j][i];
  }
  return m;
}

Vector primitive(const Vector& v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  mpz_class g = 0;
  std::vector<mpz_class> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] / g);
  return r;
}

Vector normalize_leading(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return scale(Rat(1) / abs(x), v);
  }
  return v;
}

RowEchelon rref(Matrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const Rat inv = Rat(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      const Rat f = m[i][col];
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (sgn(m[row][j]) != 0) m[i][j] -= f * m[row][j];
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m, std::size_t cols) {
  for (const auto& r : m) {
    if (r.size() != cols) throw InputError("nullspace: ragged matrix");
  }
  const RowEchelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zeros(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_particular(const Matrix& m, const Vector& rhs,
                                       std::size_t cols) {
  if (m.size() != rhs.size()) throw InputError("solve_particular: dimension mismatch");
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw InputError("solve_particular: ragged matrix");
    aug[i].push_back(rhs[i]);
  }
  const RowEchelon e = rref(std::move(aug), cols + 1);
  Vector x = zeros(cols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == cols) return std::nullopt;
    x[e.pivots[i]] = e.reduced[i][cols];
  }
  return x;
}

Vector parse_vector(std::string_view text) {
  Vector v;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      v.push_back(parse_rat(token));
      token.clear();
    }
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return v;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace relint
