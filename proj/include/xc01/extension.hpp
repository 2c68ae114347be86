#ifndef XC01_EXTENSION_HPP
#define XC01_EXTENSION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "xc01/core_types.hpp"
#include "xc01/exact_geometry.hpp"
#include "xc01/rational.hpp"

namespace xc01 {

/// Q = {y : A y <= b, C y = d} together with the affine projection
/// pi(y) = L y + c into the ambient space of the target polytope.
struct Extension {
  RMatrix ineq;
  RVector ineq_rhs;
  RMatrix eq;
  RVector eq_rhs;
  RMatrix proj;
  RVector proj_offset;

  int vars() const { return proj.cols(); }
  int ambient_dim() const { return proj.rows(); }
};

/// conv(V) itself with pi = id: lifted facets plus equations of aff(V).
Extension outer_extension(const VertexSet& v);

/// The standard simplex on |V| coordinates, mapped onto the vertices of V.
Extension simplex_extension(const VertexSet& v);

/// conv(pi'(Q') u {w}) via the homogenization of Q' and of the point w.
Extension union_with_point(const Extension& base, PointIndex w);

/// Adds lambda with 0 <= lambda <= beta - <a, pi'(y)> and
/// pi(y, lambda) = pi'(y) + 2 lambda a / |a|^2. Requires pi'(Q') in <a,x> <= beta.
Extension reflect(const Extension& base, const std::vector<std::int64_t>& a, std::int64_t beta);

/// As reflect, but starts from the outer description of conv(V') without the
/// facet that lies in <a,x> = beta. Returns the description and whether such a
/// facet was found.
bool reflect_facet(const VertexSet& pred, const std::vector<std::int64_t>& a, std::int64_t beta,
                   Extension& out);

/// Adds lambda with 0 <= lambda <= pi'(y)_j and replaces coordinate j of the
/// projection by lambda.
Extension down_monotone(const Extension& base, int j);

/// Post-composes the projection with an affine map.
Extension transform(const Extension& e, const AffineMap& m);

struct ExtensionCheck {
  bool feasible = false;
  bool bounded = false;
  bool zero_one = false;
  bool onto_vertices = false;
  bool bijective = false;
  int dim = -1;
  int n_vertices = 0;
  int n_facets = 0;
  std::string detail;

  bool nice() const { return feasible && bounded && zero_one && onto_vertices && bijective; }
};

/// Exact vertex and facet enumeration of Q followed by the nice 0/1-extension
/// checks against the target vertex set.
ExtensionCheck check_nice_extension(const Extension& e, const VertexSet& target);

}  // namespace xc01

#endif  // XC01_EXTENSION_HPP
