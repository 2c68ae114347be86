#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "xc01/core_types.hpp"
#include "xc01/exact_geometry.hpp"

using namespace xc01;

TEST_CASE("vertex_index evaluates sum v_i 2^(i-1)") {
  std::vector<int> zero{0, 0, 0, 0}, e1{1, 0, 0, 0}, ones{1, 1, 1, 1};
  CHECK(vertex_index(zero) == 0);
  CHECK(vertex_index(e1) == 1);
  CHECK(vertex_index(ones) == 15);
  std::vector<int> bad{0, 2, 0};
  CHECK_THROWS_AS(vertex_index(bad), InvalidInput);
}

TEST_CASE("vertex_index is a bijection onto [0, 2^n)") {
  for (int n = 0; n <= 4; ++n) {
    std::set<int> seen;
    for (int p = 0; p < cube_size(n); ++p) {
      auto c = point_coordinates(p, n);
      int idx = vertex_index(c);
      CHECK(idx == p);
      seen.insert(idx);
    }
    CHECK(static_cast<int>(seen.size()) == cube_size(n));
  }
}

TEST_CASE("polytope IDs of the reference polytopes") {
  std::vector<PointIndex> origin{0};
  CHECK(polytope_id(VertexSet::from_points(3, origin)) == 1);
  std::vector<PointIndex> square{0, 1, 2, 3};
  CHECK(polytope_id(VertexSet::from_points(2, square)) == 15);
  std::vector<PointIndex> all(16);
  for (int i = 0; i < 16; ++i) all[i] = i;
  CHECK(polytope_id(VertexSet::from_points(4, all)) == 65535);
}

TEST_CASE("id_to_vertex_set round trip") {
  for (int n = 0; n <= 3; ++n)
    for (std::uint64_t id = 1; id < (std::uint64_t{1} << cube_size(n)); ++id)
      CHECK(polytope_id(id_to_vertex_set(id, n)) == id);
  std::mt19937 rng(7);
  for (int t = 0; t < 2000; ++t) {
    std::uint64_t id = 1 + rng() % 65535;
    VertexSet v = id_to_vertex_set(id, 4);
    VertexSet w = VertexSet::from_points(4, v.points());
    CHECK(v == w);
    CHECK(polytope_id(w) == id);
  }
  CHECK_THROWS_AS(id_to_vertex_set(1u << 16, 4), InvalidInput);
  CHECK_THROWS_AS(id_to_vertex_set(3, 5), InvalidInput);
}

TEST_CASE("apply_symmetry on single points") {
  CubeSymmetry id = CubeSymmetry::identity(2);
  VertexSet v(2, 0b1011);
  CHECK(apply_symmetry(id, v) == v);

  VertexSet origin(2, 1);
  VertexSet flipped = apply_symmetry(CubeSymmetry::flip(2, 0), origin);
  CHECK(polytope_id(flipped) == 2);

  std::vector<PointIndex> p10{vertex_index(std::vector<int>{1, 0})};
  std::vector<PointIndex> p01{vertex_index(std::vector<int>{0, 1})};
  CHECK(apply_symmetry(CubeSymmetry::swap(2, 0, 1), VertexSet::from_points(2, p10)) ==
        VertexSet::from_points(2, p01));

  CHECK_THROWS_AS(apply_symmetry(CubeSymmetry::identity(3), v), InvalidInput);
}

TEST_CASE("enumerate_symmetries sizes and distinctness") {
  CHECK(enumerate_symmetries(0).size() == 1);
  CHECK(enumerate_symmetries(1).size() == 2);
  CHECK(enumerate_symmetries(2).size() == 8);
  CHECK(enumerate_symmetries(3).size() == 48);
  auto g = enumerate_symmetries(4);
  REQUIRE(g.size() == 384);
  // Distinct as maps on the cube.
  std::set<std::vector<int>> images;
  for (const auto& s : g) {
    std::vector<int> img(16);
    for (int p = 0; p < 16; ++p) img[p] = s.apply(p);
    images.insert(img);
  }
  CHECK(images.size() == 384);
  CHECK(g.front() == CubeSymmetry::identity(4));
}

TEST_CASE("enumeration order is lexicographic by (perm, flips)") {
  auto g = enumerate_symmetries(3);
  for (std::size_t k = 1; k < g.size(); ++k) {
    auto a = std::make_pair(g[k - 1].perm(), g[k - 1].flips());
    auto b = std::make_pair(g[k].perm(), g[k].flips());
    CHECK(a < b);
  }
}

TEST_CASE("group closure and composition law") {
  auto g = enumerate_symmetries(3);
  auto same_map = [](const CubeSymmetry& a, const CubeSymmetry& b) {
    for (int p = 0; p < cube_size(a.dim()); ++p)
      if (a.apply(p) != b.apply(p)) return false;
    return true;
  };
  for (const auto& s : g)
    for (const auto& t : g) {
      CubeSymmetry st = s.compose(t);
      bool found = std::any_of(g.begin(), g.end(), [&](const CubeSymmetry& u) { return u == st; });
      CHECK(found);
      for (int p = 0; p < 8; ++p) CHECK(st.apply(p) == s.apply(t.apply(p)));
    }
  auto g4 = enumerate_symmetries(4);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& s = g4[rng() % g4.size()];
    const auto& t = g4[rng() % g4.size()];
    VertexSet v(4, 1 + rng() % 65535);
    CHECK(apply_symmetry(s, apply_symmetry(t, v)) == apply_symmetry(s.compose(t), v));
    bool closed = std::any_of(g4.begin(), g4.end(), [&](const CubeSymmetry& u) { return same_map(u, s.compose(t)); });
    CHECK(closed);
  }
}

TEST_CASE("symmetries preserve cardinality and affine dimension") {
  auto g = enumerate_symmetries(4);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    VertexSet v(4, 1 + rng() % 65535);
    const auto& s = g[rng() % g.size()];
    VertexSet w = apply_symmetry(s, v);
    CHECK(w.size() == v.size());
    CHECK(affine_dimension(w) == affine_dimension(v));
  }
}
