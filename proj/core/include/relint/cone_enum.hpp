#pragma once

#include <cstddef>
#include <vector>

#include "relint/linalg.hpp"

namespace relint {

/// Generator description of a polyhedral cone: cone(rays) + span(lines).
/// Rays are extreme rays of the pointed part, scaled to primitive integer
/// vectors; lines form a basis of the lineality space.
struct ConeGenerators {
  std::vector<Vector> rays;
  std::vector<Vector> lines;
};

/// Generators of {y in R^dim : ineq y <= 0, eq y = 0} by the double
/// description method (Motzkin) with the combinatorial adjacency test.
ConeGenerators enumerate_cone(const Matrix& ineq, const Matrix& eq, std::size_t dim);

}  // namespace relint
