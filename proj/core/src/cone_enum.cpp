#include "relint/cone_enum.hpp"

#include <bit>
#include <cstdint>

#include "relint/errors.hpp"

namespace relint {

namespace {

// Set of constraint indices tight at a ray.
class RowSet {
 public:
  explicit RowSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  RowSet intersect(const RowSet& o) const {
    RowSet r;
    r.words_.resize(words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
    return r;
  }

  bool subset_of(const RowSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    }
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  Vector v;
  RowSet tight;
};

// Extreme rays of {u : h u <= 0} where h has full column rank `dim`.
std::vector<Vector> pointed_cone_rays(const Matrix& h, std::size_t dim) {
  if (dim == 0) return {};
  const std::size_t m = h.size();

  // Greedy choice of `dim` linearly independent rows as the initial simplex cone.
  std::vector<std::size_t> initial;
  Matrix basis_rows;
  for (std::size_t i = 0; i < m && initial.size() < dim; ++i) {
    basis_rows.push_back(h[i]);
    if (rank(basis_rows, dim) == basis_rows.size()) {
      initial.push_back(i);
    } else {
      basis_rows.pop_back();
    }
  }
  if (initial.size() != dim) throw InternalInconsistency("enumerate_cone: rank deficiency");

  // Columns of -B^{-1}: ray j is tight on every initial row except j.
  Matrix aug = basis_rows;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i].push_back(i == j ? Rat(-1) : Rat(0));
  }
  const RowEchelon e = rref(std::move(aug), 2 * dim);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Ray r{zeros(dim), RowSet(m)};
    for (std::size_t i = 0; i < dim; ++i) r.v[i] = e.reduced[i][dim + j];
    r.v = primitive(r.v);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != j) r.tight.insert(initial[i]);
    }
    rays.push_back(std::move(r));
  }

  std::vector<bool> used(m, false);
  for (auto i : initial) used[i] = true;

  for (std::size_t row = 0; row < m; ++row) {
    if (used[row]) continue;
    const Vector& a = h[row];
    std::vector<Rat> val(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = dot(a, rays[k].v);
      const int s = sgn(val[k]);
      (s > 0 ? pos : s < 0 ? neg : zer).push_back(k);
    }
    if (pos.empty()) {
      for (auto k : zer) rays[k].tight.insert(row);
      continue;
    }
    std::vector<Ray> next;
    next.reserve(neg.size() + zer.size());
    for (auto k : neg) next.push_back(rays[k]);
    for (auto k : zer) {
      next.push_back(rays[k]);
      next.back().tight.insert(row);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        RowSet common = rays[p].tight.intersect(rays[q].tight);
        if (dim >= 2 && common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (common.subset_of(rays[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        // val[p] > 0 > val[q]; the combination is tight on `row`.
        Ray r{primitive(sub(scale(val[p], rays[q].v), scale(val[q], rays[p].v))),
              std::move(common)};
        r.tight.insert(row);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  std::vector<Vector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

// Columns of the basis matrix applied to coordinates: sum_k w[k] * basis[k].
Vector combine(const std::vector<Vector>& basis, const Vector& w, std::size_t dim) {
  Vector y = zeros(dim);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(w[k]) == 0) continue;
    for (std::size_t i = 0; i < dim; ++i) y[i] += w[k] * basis[k][i];
  }
  return y;
}

}  // namespace

ConeGenerators enumerate_cone(const Matrix& ineq, const Matrix& eq, std::size_t dim) {
  for (const auto& r : ineq) {
    if (r.size() != dim) throw InputError("enumerate_cone: inequality width mismatch");
  }
  // y = N w parametrizes the equality subspace.
  const std::vector<Vector> eq_basis = eq.empty() ? identity(dim) : nullspace(eq, dim);
  const std::size_t k = eq_basis.size();
  ConeGenerators out;
  if (k == 0) return out;

  Matrix h;
  h.reserve(ineq.size());
  for (const auto& r : ineq) {
    Vector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(r, eq_basis[j]);
    h.push_back(std::move(row));
  }

  // Lineality space in w-coordinates, then restrict to its orthogonal
  // complement so the remaining cone is pointed.
  const std::vector<Vector> lineality = nullspace(h, k);
  for (const auto& l : lineality) out.lines.push_back(primitive(combine(eq_basis, l, dim)));

  const std::vector<Vector> complement =
      lineality.empty() ? identity(k) : nullspace(lineality, k);
  const std::size_t kp = complement.size();
  if (kp == 0) return out;

  Matrix hp;
  hp.reserve(h.size());
  for (const auto& r : h) {
    Vector row(kp);
    for (std::size_t j = 0; j < kp; ++j) row[j] = dot(r, complement[j]);
    hp.push_back(std::move(row));
  }

  for (const auto& u : pointed_cone_rays(hp, kp)) {
    const Vector w = combine(complement, u, k);
    out.rays.push_back(primitive(combine(eq_basis, w, dim)));
  }
  return out;
}

}  // namespace relint
