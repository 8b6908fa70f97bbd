#pragma once

#include <initializer_list>
#include <ostream>
#include <string>

#include "relint/linalg.hpp"
#include "relint/sets.hpp"

namespace relint {

inline void PrintTo(const ExtendedRat& v, std::ostream* os) { *os << v.to_string(); }

}  // namespace relint

namespace relint::testing {

inline Rat R(const char* text) { return parse_rat(text); }

inline Vector vec(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(parse_rat(x));
  return v;
}

inline Vector ivec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

inline Matrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m;
  for (const auto& r : rows) m.push_back(ivec(r));
  return m;
}

inline HPolyhedron unit_square() { return HPolyhedron::box(ivec({0, 0}), ivec({1, 1})); }

inline HPolyhedron interval(long lo, long hi) { return HPolyhedron::box(ivec({lo}), ivec({hi})); }

/// conv(points) as an H-polyhedron.
inline HPolyhedron hull(std::initializer_list<Vector> points) {
  VPolyhedron v;
  v.points.assign(points.begin(), points.end());
  v.dim = v.points.front().size();
  return v_to_h(v);
}

}  // namespace relint::testing
