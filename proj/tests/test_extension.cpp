#include <doctest.h>

#include <vector>

#include "xc01/constructions.hpp"
#include "xc01/extension.hpp"

using namespace xc01;

TEST_CASE("outer and simplex extensions of the 4-simplex") {
  VertexSet v(4, 279);
  ExtensionCheck a = check_nice_extension(outer_extension(v), v);
  CHECK(a.nice());
  CHECK(a.n_facets == 5);
  CHECK(a.n_vertices == 5);
  ExtensionCheck b = check_nice_extension(simplex_extension(v), v);
  CHECK(b.nice());
  CHECK(b.n_facets == 5);
  CHECK(b.dim == 4);
}

TEST_CASE("simplex extension of the 4-cube") {
  VertexSet v(4, 65535);
  ExtensionCheck c = check_nice_extension(simplex_extension(v), v);
  CHECK(c.nice());
  CHECK(c.n_facets == 16);
  CHECK(c.dim == 15);
}

TEST_CASE("lower-dimensional outer extension") {
  VertexSet face(3, 0b00001111);
  ExtensionCheck c = check_nice_extension(outer_extension(face), face);
  CHECK(c.nice());
  CHECK(c.n_facets == 4);
  CHECK(c.dim == 2);
}

TEST_CASE("sliced cube from the prism and one point") {
  VertexSet prism(3, 63);
  Extension e = union_with_point(outer_extension(prism), 6);
  ExtensionCheck c = check_nice_extension(e, VertexSet(3, 127));
  CAPTURE(c.detail);
  CHECK(c.nice());
  CHECK(c.n_vertices == 7);
  CHECK(c.n_facets <= 6);
}

TEST_CASE("interval reflected at a flip hyperplane") {
  VertexSet interval(2, 0b0011);
  Extension e = reflect(outer_extension(interval), {0, 2}, 1);
  ExtensionCheck c = check_nice_extension(e, VertexSet(2, 15));
  CAPTURE(c.detail);
  CHECK(c.nice());
  CHECK(c.n_facets <= 4);
}

TEST_CASE("facet reflection of a triangle") {
  VertexSet tri(2, 0b1011);
  Extension e;
  REQUIRE(reflect_facet(tri, {-1, 1}, 0, e));
  ExtensionCheck c = check_nice_extension(e, VertexSet(2, 15));
  CAPTURE(c.detail);
  CHECK(c.nice());
  CHECK(c.n_facets <= 4);
  // No facet of the interval lies in a flip hyperplane.
  Extension f;
  CHECK_FALSE(reflect_facet(VertexSet(2, 0b0011), {0, 2}, 1, f));
}

TEST_CASE("down-monotonization of an interval") {
  VertexSet top(2, 0b1100);
  Extension e = down_monotone(outer_extension(top), 1);
  ExtensionCheck c = check_nice_extension(e, VertexSet(2, 15));
  CAPTURE(c.detail);
  CHECK(c.nice());
  CHECK(c.n_facets <= 4);
}

TEST_CASE("checks reject a wrong target") {
  ExtensionCheck c = check_nice_extension(outer_extension(VertexSet(2, 15)), VertexSet(2, 0b0111));
  CHECK_FALSE(c.nice());
  CHECK_FALSE(c.detail.empty());
}

TEST_CASE("the 16383 certificate builds a nice extension") {
  Catalog cat = build_catalog(4);
  FixpointResult fx = fixpoint_upper_bounds(cat);
  const int c = cat.find(4, 16383);
  REQUIRE(c >= 0);
  CHECK(fx.certificates[c].bound == 8);
  ExtensionBuilder builder(cat, fx.certificates);
  VerificationReport r = build_and_verify_nice_extension(builder, cat, fx.certificates, c);
  CAPTURE(r.message);
  CHECK(r.ok);
  CHECK(r.check.n_vertices == 14);
  CHECK(r.check.n_facets <= 8);

  // Reflecting a member of the sliced-cube class at a cube hyperplane.
  const int pred = cat.class_of.at(5461);
  REQUIRE(cat.classes[pred].representative_id == 127);
  REQUIRE(fx.certificates[pred].bound == 6);
  Extension base = builder.extension_for(5461);
  bool found = false;
  for (const auto& h : cube_hyperplanes(4)) {
    VertexSet v(4, 5461);
    bool below = true;
    for (PointIndex p : v.points()) below = below && h.weakly_below(p);
    if (!below) continue;
    VertexSet image = apply_symmetry(h.reflection, v);
    if (VertexSet(4, v.mask() | image.mask()) != VertexSet(4, 16383)) continue;
    found = true;
    ExtensionCheck e = check_nice_extension(reflect(base, h.a, h.beta), VertexSet(4, 16383));
    CAPTURE(e.detail);
    CHECK(e.nice());
    CHECK(e.n_facets <= 8);
  }
  CHECK(found);
}
