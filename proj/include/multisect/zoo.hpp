#pragma once

#include "multisect/triangulation.hpp"

namespace multisect {

/// Two n-simplices glued along all faces by the identity.
Triangulation double_simplex(int n);

/// Boundary of the (n+1)-simplex in vertex format (vertices 0..n+1).
Triangulation simplex_boundary(int n);

/// Boundary of the (n+1)-dimensional crosspolytope in vertex format: facet
/// s (a sign vector, bit i = sign of coordinate i) has corner i at vertex
/// 2i + s_i. Corner labels give the coordinate of each corner.
Triangulation cross_sphere(int n);

/// Antipodal quotient of cross_sphere(n): the facets with s_0 = 0, glued by
/// identity corner maps. Corner labels give the coordinate of each corner.
Triangulation cross_projective(int n);

}  // namespace multisect
