#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "xc01/core_types.hpp"
#include "xc01/equivalence.hpp"
#include "xc01/exact_geometry.hpp"

using namespace xc01;

namespace {

VertexSet pts(int n, std::vector<PointIndex> p) { return VertexSet::from_points(n, p); }

// Sorted rows and columns; equal for slack matrices that agree up to permutation.
std::vector<std::vector<std::int64_t>> sorted_shape(const SlackMatrix& s) {
  auto rows = s.to_rows();
  for (auto& r : rows) std::sort(r.begin(), r.end());
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Brute force: p in conv(V) for a full-dimensional V iff all facet rows hold.
bool inside_by_facets(const FacetSystem& f, const std::vector<Rational>& p) {
  for (const auto& r : f.rows) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < r.a.size(); ++i) lhs += Rational(static_cast<long>(r.a[i])) * p[i];
    if (lhs > Rational(static_cast<long>(r.beta))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("affine_dimension") {
  CHECK(affine_dimension(pts(3, {5})) == 0);
  CHECK(affine_dimension(VertexSet(4, 65535)) == 4);
  CHECK(affine_dimension(pts(3, {0, 1, 2, 3})) == 2);
  CHECK(affine_dimension(pts(3, {0, 3})) == 1);
  CHECK_THROWS_AS(affine_dimension(VertexSet(3, 0)), InvalidInput);
}

TEST_CASE("full_dim_embed") {
  CHECK(polytope_id(full_dim_embed(pts(4, {9}))) == 1);
  CHECK(full_dim_embed(pts(4, {9})).ambient_dim() == 0);
  VertexSet face = pts(3, {4, 5, 6, 7});
  VertexSet sq = full_dim_embed(face);
  CHECK(sq.ambient_dim() == 2);
  CHECK(polytope_id(sq) == 15);
  VertexSet v(4, 32511);
  CHECK(full_dim_embed(v) == v);
  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    VertexSet w(4, 1 + rng() % 65535);
    VertexSet e = full_dim_embed(w);
    CHECK(e.size() == w.size());
    CHECK(e.ambient_dim() == affine_dimension(w));
    CHECK(affine_dimension(e) == e.ambient_dim());
  }
}

TEST_CASE("facet counts of reference polytopes") {
  CHECK(facet_enumeration(VertexSet(3, 255)).size() == 6);
  CHECK(facet_enumeration(VertexSet(4, 279)).size() == 5);
  CHECK(facet_enumeration(VertexSet(3, 126)).size() == 8);
  CHECK(facet_enumeration(VertexSet(3, 127)).size() == 7);
  CHECK(facet_enumeration(VertexSet(4, 65535)).size() == 8);
  CHECK_THROWS_AS(facet_enumeration(pts(3, {0, 1, 2, 3})), InvalidInput);
}

TEST_CASE("facet rows are valid, tight on a facet and primitive") {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 150) {
    VertexSet v(4, 1 + rng() % 65535);
    if (affine_dimension(v) != 4) continue;
    ++checked;
    FacetSystem f = facet_enumeration(v);
    auto masks = facet_vertex_masks(f, v);
    for (std::size_t k = 0; k < f.rows.size(); ++k) {
      for (PointIndex p : v.points()) CHECK(f.rows[k].slack(p) >= 0);
      CHECK(affine_dimension(VertexSet(4, masks[k])) == 3);
      std::int64_t g = std::abs(f.rows[k].beta);
      for (auto x : f.rows[k].a) g = std::gcd(g, std::abs(x));
      CHECK(g == 1);
    }
    CHECK(std::is_sorted(f.rows.begin(), f.rows.end()));
  }
}

TEST_CASE("slack matrix shapes") {
  // Simplex: one positive entry per row and per column.
  VertexSet simplex(4, 279);
  SlackMatrix s = slack_matrix(facet_enumeration(simplex), simplex);
  REQUIRE(s.rows() == 5);
  REQUIRE(s.cols() == 5);
  for (int i = 0; i < 5; ++i) {
    int row_pos = 0, col_pos = 0;
    for (int j = 0; j < 5; ++j) {
      row_pos += s(i, j) > 0;
      col_pos += s(j, i) > 0;
    }
    CHECK(row_pos == 1);
    CHECK(col_pos == 1);
  }
  VertexSet interval(1, 3);
  SlackMatrix t = slack_matrix(facet_enumeration(interval), interval);
  REQUIRE(t.rows() == 2);
  REQUIRE(t.cols() == 2);
  int zeros_on_diag = 0;
  for (int i = 0; i < 2; ++i) {
    zeros_on_diag += t(i, i) == 0;
    CHECK(t(i, 1 - i) > 0);
  }
  CHECK(zeros_on_diag == 2);
  VertexSet square(2, 15);
  SlackMatrix q = slack_matrix(facet_enumeration(square), square);
  REQUIRE(q.rows() == 4);
  for (int i = 0; i < 4; ++i) {
    int z = 0;
    for (int j = 0; j < 4; ++j) z += q(i, j) == 0;
    CHECK(z == 2);
  }
}

TEST_CASE("slack matrix of a set not contained in the facet system") {
  VertexSet simplex(2, 0b0111);
  FacetSystem f = facet_enumeration(simplex);
  CHECK_THROWS_AS(slack_matrix(f, VertexSet(2, 15)), InternalError);
}

TEST_CASE("duality sanity on every dimension-3 and dimension-4 class") {
  for (int d : {3, 4}) {
    for (const auto& c : enumerate_01_classes(d, d)) {
      VertexSet v(d, c.representative_id);
      SlackMatrix s = slack_matrix(facet_enumeration(v), v);
      for (int i = 0; i < s.rows(); ++i) {
        int z = 0;
        for (int j = 0; j < s.cols(); ++j) z += s(i, j) == 0;
        CHECK(z >= d);
      }
      for (int j = 0; j < s.cols(); ++j) {
        int z = 0;
        for (int i = 0; i < s.rows(); ++i) z += s(i, j) == 0;
        CHECK(z >= d);
      }
    }
  }
}

TEST_CASE("facet systems are covariant under cube symmetries") {
  auto g = enumerate_symmetries(4);
  std::mt19937 rng(23);
  int checked = 0;
  while (checked < 60) {
    VertexSet v(4, 1 + rng() % 65535);
    if (affine_dimension(v) != 4) continue;
    ++checked;
    VertexSet w = apply_symmetry(g[rng() % g.size()], v);
    SlackMatrix a = slack_matrix(facet_enumeration(v), v);
    SlackMatrix b = slack_matrix(facet_enumeration(w), w);
    CHECK(sorted_shape(a) == sorted_shape(b));
  }
}

TEST_CASE("contains_point") {
  VertexSet simplex(4, 279);
  for (PointIndex p : simplex.points()) {
    std::vector<Rational> x;
    for (int c : point_coordinates(p, 4)) x.emplace_back(c);
    CHECK(contains_point(simplex, x));
  }
  std::vector<Rational> ones(4, Rational(1));
  CHECK_FALSE(contains_point(simplex, ones));
  std::vector<Rational> mid{Rational(1, 2), Rational(1, 2)};
  CHECK(contains_point(VertexSet(2, 15), mid));
  // A point off the affine hull of a square face.
  std::vector<Rational> off{Rational(1, 2), Rational(1, 2), Rational(1, 3)};
  CHECK_FALSE(contains_point(pts(3, {0, 1, 2, 3}), off));
  std::vector<Rational> on{Rational(1, 2), Rational(1, 3), Rational(0)};
  CHECK(contains_point(pts(3, {0, 1, 2, 3}), on));
}

TEST_CASE("contains_point agrees with the facet inequalities") {
  std::mt19937 rng(29);
  int checked = 0;
  while (checked < 100) {
    VertexSet v(3, 1 + rng() % 255);
    if (affine_dimension(v) != 3) continue;
    ++checked;
    FacetSystem f = facet_enumeration(v);
    for (int t = 0; t < 10; ++t) {
      std::vector<Rational> x;
      for (int i = 0; i < 3; ++i) x.emplace_back(static_cast<long>(rng() % 5), 4L);
      for (auto& q : x) q.canonicalize();
      CHECK(contains_point(v, x) == inside_by_facets(f, x));
    }
  }
}

TEST_CASE("extreme_points") {
  VertexSet cube(4, 65535);
  CHECK(extreme_points(cube) == cube);
  CHECK(extreme_points(VertexSet(2, 15)) == VertexSet(2, 15));
  std::mt19937 rng(31);
  for (int t = 0; t < 100; ++t) {
    VertexSet w(4, 1 + rng() % 65535);
    CHECK(extreme_points(w) == w);
    CHECK(extreme_points(extreme_points(w)) == extreme_points(w));
  }
}

TEST_CASE("f_vector") {
  CHECK(f_vector(VertexSet(3, 255)) == std::vector<int>{8, 12, 6});
  CHECK(f_vector(VertexSet(4, 279)) == std::vector<int>{5, 10, 10, 5});
  CHECK(f_vector(VertexSet(3, 126)) == std::vector<int>{6, 12, 8});
  CHECK(f_vector(VertexSet(4, 65535)) == std::vector<int>{16, 32, 24, 8});
}

TEST_CASE("f_vector satisfies Euler's relation") {
  for (int d : {3, 4}) {
    for (const auto& c : enumerate_01_classes(d, d)) {
      auto f = c.f_vector;
      REQUIRE(static_cast<int>(f.size()) == d);
      int alt = 0;
      for (int k = 0; k < d; ++k) alt += (k % 2 == 0 ? 1 : -1) * f[k];
      CHECK(alt == (d % 2 == 1 ? 2 : 0));
    }
  }
}
