#include "relint/generate.hpp"

#include <algorithm>
#include <limits>

#include "relint/errors.hpp"

namespace relint {

long InstanceRng::uniform(long lo, long hi) {
  if (hi < lo) throw InputError("InstanceRng::uniform: empty range");
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / range * range;
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return lo + static_cast<long>(v % range);
}

Rat InstanceRng::rational(long num_bound, long den_bound) {
  const long p = uniform(-num_bound, num_bound);
  const long q = uniform(1, den_bound);
  return ratio(p, q);
}

Vector InstanceRng::int_vector(std::size_t n, long bound) {
  Vector v(n);
  for (auto& x : v) x = uniform(-bound, bound);
  return v;
}

Vector InstanceRng::nonzero_int_vector(std::size_t n, long bound) {
  Vector v = int_vector(n, bound);
  while (is_zero(v)) v = int_vector(n, bound);
  return v;
}

Vector InstanceRng::convex_combination(const std::vector<Vector>& points) {
  std::vector<long> w(points.size());
  long total = 0;
  for (auto& x : w) {
    x = uniform(0, 3);
    total += x;
  }
  if (total == 0) {
    w[static_cast<std::size_t>(uniform(0, static_cast<long>(w.size()) - 1))] = 1;
    total = 1;
  }
  Vector out = zeros(points.front().size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (w[i] != 0) out = add(out, scale(ratio(w[i], total), points[i]));
  }
  return out;
}

HPolyhedron random_polyhedron(InstanceRng& rng, std::size_t dim, PolyhedronShape shape,
                              const Vector& witness) {
  const std::size_t n = dim;
  Matrix A, E;
  Vector b, d;
  if (shape == PolyhedronShape::Point) {
    return HPolyhedron::singleton(witness);
  }
  auto add_cut = [&](Vector a, long slack) {
    b.push_back(dot(a, witness) + slack);
    A.push_back(std::move(a));
  };
  const long cuts = rng.uniform(1, static_cast<long>(n) + 2);
  for (long k = 0; k < cuts; ++k) {
    add_cut(rng.nonzero_int_vector(n, 3), rng.uniform(0, 2));
  }
  if (shape != PolyhedronShape::Unbounded) {
    for (std::size_t i = 0; i < n; ++i) {
      add_cut(unit_vector(n, i), rng.uniform(1, 3));
      add_cut(negate(unit_vector(n, i)), rng.uniform(1, 3));
    }
  }
  if (shape == PolyhedronShape::Flat && n > 1) {
    Vector e = rng.nonzero_int_vector(n, 2);
    d.push_back(dot(e, witness));
    E.push_back(std::move(e));
  }
  if (shape == PolyhedronShape::ImplicitFlat && n > 1) {
    Vector a = rng.nonzero_int_vector(n, 2);
    add_cut(a, 0);
    add_cut(negate(a), 0);
  }
  return HPolyhedron(n, std::move(A), std::move(b), std::move(E), std::move(d));
}

HPolyhedron random_polyhedron(InstanceRng& rng, std::size_t dim) {
  static constexpr PolyhedronShape kShapes[] = {
      PolyhedronShape::Bounded, PolyhedronShape::Bounded,      PolyhedronShape::Unbounded,
      PolyhedronShape::Flat,    PolyhedronShape::ImplicitFlat, PolyhedronShape::Point};
  const auto shape = kShapes[rng.uniform(0, 5)];
  const Vector witness = rng.int_vector(dim, 2);
  return random_polyhedron(rng, dim, shape, witness);
}

namespace {

std::vector<AffinePiece> random_pieces(InstanceRng& rng, std::size_t dim) {
  std::vector<AffinePiece> pieces;
  const long k = rng.uniform(1, 3);
  for (long i = 0; i < k; ++i) pieces.push_back({rng.int_vector(dim, 2), Rat(rng.uniform(-2, 2))});
  return pieces;
}

// Full-dimensional polyhedron with `witness` strictly inside every row.
HPolyhedron solid_around(InstanceRng& rng, const Vector& witness, bool bounded) {
  const std::size_t n = witness.size();
  Matrix A;
  Vector b;
  const long cuts = rng.uniform(0, static_cast<long>(n) + 1);
  for (long k = 0; k < cuts; ++k) {
    Vector a = rng.nonzero_int_vector(n, 3);
    b.push_back(dot(a, witness) + rng.uniform(1, 3));
    A.push_back(std::move(a));
  }
  if (bounded) {
    for (std::size_t i = 0; i < n; ++i) {
      A.push_back(unit_vector(n, i));
      b.push_back(witness[i] + rng.uniform(1, 3));
      A.push_back(negate(unit_vector(n, i)));
      b.push_back(rng.uniform(1, 3) - witness[i]);
    }
  }
  return HPolyhedron(n, std::move(A), std::move(b));
}

HPolyhedron with_cut(const HPolyhedron& P, const Vector& a, const Rat& beta) {
  Matrix A = P.A();
  Vector b = P.b();
  A.push_back(a);
  b.push_back(beta);
  return HPolyhedron(P.dim(), std::move(A), std::move(b), P.E(), P.d());
}

}  // namespace

PLConvexFunction random_convex_function(InstanceRng& rng, const HPolyhedron& domain) {
  return PLConvexFunction{domain.dim(), random_pieces(rng, domain.dim()), domain};
}

PLConcaveFunction random_concave_function(InstanceRng& rng, const HPolyhedron& domain) {
  return PLConcaveFunction{domain.dim(), random_pieces(rng, domain.dim()), domain};
}

PLPair random_pl_pair(InstanceRng& rng, std::size_t dim, OverlapMode mode) {
  const Vector w = rng.int_vector(dim, 2);
  HPolyhedron dom_f, dom_g;
  switch (mode) {
    case OverlapMode::Qualified:
      dom_f = solid_around(rng, w, rng.coin());
      dom_g = solid_around(rng, w, rng.coin());
      break;
    case OverlapMode::Disjoint: {
      // dom f below the hyperplane a.x = a.w, dom g above a.x = a.w + gap.
      const Vector a = rng.nonzero_int_vector(dim, 2);
      const long gap = rng.uniform(0, 1);
      const Vector w2 = gap == 0 ? w : add(w, a);
      dom_f = with_cut(solid_around(rng, w, rng.coin()), a, dot(a, w));
      dom_g = with_cut(solid_around(rng, w2, rng.coin()), negate(a), -(dot(a, w) + gap));
      break;
    }
    case OverlapMode::Any:
      dom_f = random_polyhedron(rng, dim);
      dom_g = rng.uniform(0, 3) == 0 ? random_polyhedron(rng, dim)
                                     : random_polyhedron(rng, dim, PolyhedronShape::Bounded, w);
      if (rng.coin()) dom_f = random_polyhedron(rng, dim, PolyhedronShape::Unbounded, w);
      break;
  }
  return PLPair{random_convex_function(rng, dom_f), random_concave_function(rng, dom_g)};
}

std::vector<Vector> sample_points(InstanceRng& rng, const HPolyhedron& P, std::size_t count) {
  std::vector<Vector> out;
  auto push = [&](Vector v) {
    if (out.size() < count && std::find(out.begin(), out.end(), v) == out.end()) {
      out.push_back(std::move(v));
    }
  };
  const std::size_t sweep_share = count > 3 ? count - 3 : count;
  for (auto& v : sweep_points(P)) {
    if (out.size() >= sweep_share) break;
    push(std::move(v));
  }
  push(relative_interior_point(P));
  const VPolyhedron& V = P.vrep();
  for (int attempt = 0; attempt < 8 && out.size() < count; ++attempt) {
    Vector x = rng.convex_combination(V.points);
    for (const auto& r : V.rays) x = add(x, scale(ratio(rng.uniform(0, 2), 2), r));
    push(std::move(x));
  }
  return out;
}

std::vector<Vector> exterior_points(InstanceRng& rng, const HPolyhedron& P, std::size_t count) {
  std::vector<Vector> out;
  const VPolyhedron& V = P.vrep();
  Matrix normals = P.A();
  for (const auto& e : P.E()) {
    normals.push_back(e);
    normals.push_back(negate(e));
  }
  std::vector<Vector> candidates;
  for (const auto& a : normals) {
    if (!is_zero(a)) candidates.push_back(a);
  }
  if (candidates.empty()) return out;
  for (int attempt = 0; attempt < 16 && out.size() < count; ++attempt) {
    const auto& a = candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(candidates.size()) - 1))];
    const auto& v = V.points[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(V.points.size()) - 1))];
    Vector x = add(v, scale(ratio(rng.uniform(1, 4), 2), a));
    if (!P.contains(x) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace relint

namespace relint {

PolySetValuedMap random_set_valued_map(InstanceRng& rng, std::size_t x_dim, std::size_t y_dim) {
  const std::size_t n = x_dim + y_dim;
  const HPolyhedron D = random_polyhedron(rng, x_dim);
  Matrix A, E;
  Vector b, d;
  auto lift_x = [&](const Vector& row) {
    Vector r = zeros(n);
    std::copy(row.begin(), row.end(), r.begin());
    return r;
  };
  for (std::size_t i = 0; i < D.num_ineq(); ++i) {
    A.push_back(lift_x(D.A()[i]));
    b.push_back(D.b()[i]);
  }
  for (std::size_t i = 0; i < D.num_eq(); ++i) {
    E.push_back(lift_x(D.E()[i]));
    d.push_back(D.d()[i]);
  }
  if (rng.coin()) {
    const HPolyhedron Q = solid_around(rng, rng.int_vector(y_dim, 2), rng.coin());
    Matrix M;
    for (std::size_t i = 0; i < y_dim; ++i) M.push_back(rng.int_vector(x_dim, 2));
    // a.(y - Mx) <= beta
    for (std::size_t k = 0; k < Q.num_ineq(); ++k) {
      const Vector& a = Q.A()[k];
      Vector row = zeros(n);
      for (std::size_t i = 0; i < y_dim; ++i) {
        row[x_dim + i] = a[i];
        for (std::size_t j = 0; j < x_dim; ++j) row[j] -= a[i] * M[i][j];
      }
      A.push_back(std::move(row));
      b.push_back(Q.b()[k]);
    }
  } else {
    // y_j >= p(x) for each piece p of component j
    for (std::size_t i = 0; i < y_dim; ++i) {
      for (const auto& p : random_pieces(rng, x_dim)) {
        Vector row = lift_x(p.slope);
        row[x_dim + i] = -1;
        A.push_back(std::move(row));
        b.push_back(-p.offset);
      }
    }
  }
  return {x_dim, y_dim, HPolyhedron(n, std::move(A), std::move(b), std::move(E), std::move(d))};
}

std::vector<Vector> graph_samples(InstanceRng& rng, const PolySetValuedMap& F, std::size_t count) {
  std::vector<Vector> out = sample_points(rng, F.graph, count / 2);
  const HPolyhedron dom = map_domain(F);
  for (const auto& x : sample_points(rng, dom, std::max<std::size_t>(1, count / 6))) {
    const HPolyhedron slice = map_slice(F, x);
    Vector s = x;
    const Vector y = relative_interior_point(slice);
    s.insert(s.end(), y.begin(), y.end());
    out.push_back(std::move(s));
    s = x;
    const Vector& v = slice.vrep().points.front();
    s.insert(s.end(), v.begin(), v.end());
    out.push_back(std::move(s));
  }
  for (auto& p : exterior_points(rng, F.graph, 2)) out.push_back(std::move(p));
  return out;
}

}  // namespace relint

namespace relint {

TailSequence random_tail_sequence(InstanceRng& rng, bool nonneg) {
  static const Rat kRhos[] = {ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(2, 3), ratio(3, 4)};
  auto entry = [&] {
    Rat v = rng.rational(3, 6);
    return nonneg && sign(v) < 0 ? Rat(-v) : v;
  };
  TailSequence x;
  const long len = rng.uniform(0, 3);
  for (long i = 0; i < len; ++i) x.prefix.push_back(entry());
  if (rng.uniform(0, 3) != 0) x.tail = TailSequence::Tail{entry(), kRhos[rng.uniform(0, 4)]};
  return x;
}

}  // namespace relint
