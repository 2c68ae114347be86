#ifndef XC01_EXACT_GEOMETRY_HPP
#define XC01_EXACT_GEOMETRY_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "xc01/core_types.hpp"
#include "xc01/rational.hpp"

namespace xc01 {

/// One inequality <a, x> <= beta (or an equation, depending on context).
struct FacetRow {
  std::vector<std::int64_t> a;
  std::int64_t beta = 0;

  std::int64_t slack(PointIndex p) const;

  friend auto operator<=>(const FacetRow&, const FacetRow&) = default;
};

/// Irredundant facet description of a full-dimensional 0/1-polytope. Rows are
/// primitive (gcd of all entries including beta is 1) and sorted.
struct FacetSystem {
  int ambient_dim = 0;
  std::vector<FacetRow> rows;

  int size() const { return static_cast<int>(rows.size()); }
};

/// S[i][j] = b_i - <A_i, v^j>; columns follow increasing b(v).
class SlackMatrix {
 public:
  SlackMatrix() = default;
  SlackMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(std::size_t(rows) * cols, 0) {}
  static SlackMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int i, int j) { return entries_[std::size_t(i) * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return entries_[std::size_t(i) * cols_ + j]; }

  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend bool operator==(const SlackMatrix&, const SlackMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> entries_;
};

/// dim aff(V), by exact rank of difference vectors.
int affine_dimension(const VertexSet& v);

/// Coordinate projection of V onto the lexicographically smallest coordinate
/// subset that is injective on aff(V).
struct Embedding {
  VertexSet embedded;
  std::vector<int> coords;
};

Embedding embed(const VertexSet& v);

VertexSet full_dim_embed(const VertexSet& v);

/// Requires affine_dimension(V) == ambient_dim >= 1.
FacetSystem facet_enumeration(const VertexSet& v);

SlackMatrix slack_matrix(const FacetSystem& f, const VertexSet& v);

/// For every row of f, the mask of points of V on which it is tight.
std::vector<Mask> facet_vertex_masks(const FacetSystem& f, const VertexSet& v);

/// conv(V) = {x : inequalities, equations} in V's ambient space. Inequalities
/// are the lifted facets of the embedding; equations span aff(V).
struct OuterDescription {
  int ambient_dim = 0;
  std::vector<FacetRow> inequalities;
  std::vector<FacetRow> equations;
};

OuterDescription outer_description(const VertexSet& v);

/// The affine map R^d -> aff(V) that inverts the coordinate projection of embed(V).
struct AffineMap {
  RMatrix linear;
  RVector offset;

  RVector operator()(const RVector& x) const;
  AffineMap then(const AffineMap& outer) const;
};

AffineMap embedding_lift(const VertexSet& v, const Embedding& e);

bool contains_point(const VertexSet& v, std::span<const Rational> p);

/// {p in W : p not in conv(W \ {p})}.
VertexSet extreme_points(const VertexSet& w);

/// (f_0, ..., f_{d-1}) via closure of the facet-vertex incidence under intersection.
std::vector<int> f_vector(const VertexSet& v);

}  // namespace xc01

#endif  // XC01_EXACT_GEOMETRY_HPP
