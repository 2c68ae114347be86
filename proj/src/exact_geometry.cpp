#include "xc01/exact_geometry.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace xc01 {

namespace {

std::int64_t det_int(std::vector<std::vector<std::int64_t>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::int64_t det = 0;
  for (int c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor(n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != c) minor[i - 1].push_back(m[i][j]);
    std::int64_t sub = det_int(std::move(minor));
    det += (c % 2 == 0 ? 1 : -1) * m[0][c] * sub;
  }
  return det;
}

void make_primitive(FacetRow& r) {
  std::int64_t g = std::abs(r.beta);
  for (auto x : r.a) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : r.a) x /= g;
    r.beta /= g;
  }
}

void orient_equation(FacetRow& r) {
  for (auto x : r.a) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : r.a) y = -y;
      r.beta = -r.beta;
    }
    return;
  }
}

// Next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

std::int64_t FacetRow::slack(PointIndex p) const {
  std::int64_t s = beta;
  for (std::size_t i = 0; i < a.size(); ++i) s -= a[i] * coordinate(p, static_cast<int>(i));
  return s;
}

SlackMatrix SlackMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int k = m ? static_cast<int>(rows.front().size()) : 0;
  SlackMatrix s(m, k);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != k) throw InvalidInput("SlackMatrix: ragged rows");
    for (int j = 0; j < k; ++j) s(i, j) = rows[i][j];
  }
  return s;
}

std::vector<std::vector<std::int64_t>> SlackMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

int affine_dimension(const VertexSet& v) {
  if (v.empty()) throw InvalidInput("affine_dimension: empty vertex set");
  auto pts = v.points();
  std::vector<std::vector<std::int64_t>> diffs;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    std::vector<std::int64_t> row(v.ambient_dim());
    for (int i = 0; i < v.ambient_dim(); ++i) row[i] = coordinate(pts[k], i) - coordinate(pts[0], i);
    diffs.push_back(std::move(row));
  }
  return integer_rank(std::move(diffs));
}

namespace {

PointIndex project(PointIndex p, const std::vector<int>& coords) {
  PointIndex q = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) q |= coordinate(p, coords[k]) << k;
  return q;
}

}  // namespace

Embedding embed(const VertexSet& v) {
  const int d = affine_dimension(v);
  const int n = v.ambient_dim();
  auto pts = v.points();
  std::vector<int> coords(d);
  std::iota(coords.begin(), coords.end(), 0);
  do {
    std::vector<std::vector<std::int64_t>> diffs;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      std::vector<std::int64_t> row(d);
      for (int i = 0; i < d; ++i) row[i] = coordinate(pts[k], coords[i]) - coordinate(pts[0], coords[i]);
      diffs.push_back(std::move(row));
    }
    if (integer_rank(std::move(diffs)) == d) {
      Mask m = 0;
      for (PointIndex p : pts) m |= Mask{1} << project(p, coords);
      return {VertexSet(d, m), coords};
    }
  } while (next_combination(coords, n));
  throw InternalError("embed: no injective coordinate projection");
}

VertexSet full_dim_embed(const VertexSet& v) { return embed(v).embedded; }

FacetSystem facet_enumeration(const VertexSet& v) {
  const int n = v.ambient_dim();
  if (n < 1) throw InvalidInput("facet_enumeration: ambient dimension must be >= 1");
  if (affine_dimension(v) != n)
    throw InvalidInput("facet_enumeration: vertex set is not full-dimensional; embed it first");
  auto pts = v.points();
  const int k = static_cast<int>(pts.size());
  std::set<FacetRow> found;
  std::vector<int> comb(n);
  std::iota(comb.begin(), comb.end(), 0);
  do {
    // Normal of the hyperplane through the chosen n points: signed cofactors
    // of the (n-1) x n matrix of difference vectors.
    std::vector<std::vector<std::int64_t>> diffs;
    for (int r = 1; r < n; ++r) {
      std::vector<std::int64_t> row(n);
      for (int i = 0; i < n; ++i) row[i] = coordinate(pts[comb[r]], i) - coordinate(pts[comb[0]], i);
      diffs.push_back(std::move(row));
    }
    FacetRow row;
    row.a.resize(n);
    bool nonzero = false;
    for (int c = 0; c < n; ++c) {
      std::vector<std::vector<std::int64_t>> minor;
      for (const auto& d : diffs) {
        std::vector<std::int64_t> mr;
        for (int j = 0; j < n; ++j)
          if (j != c) mr.push_back(d[j]);
        minor.push_back(std::move(mr));
      }
      row.a[c] = (c % 2 == 0 ? 1 : -1) * det_int(std::move(minor));
      nonzero |= row.a[c] != 0;
    }
    if (!nonzero) continue;
    row.beta = 0;
    for (int i = 0; i < n; ++i) row.beta += row.a[i] * coordinate(pts[comb[0]], i);
    bool any_pos = false, any_neg = false;
    for (PointIndex p : pts) {
      auto s = row.slack(p);
      any_pos |= s > 0;
      any_neg |= s < 0;
    }
    if (any_pos && any_neg) continue;
    if (any_neg) {
      for (auto& x : row.a) x = -x;
      row.beta = -row.beta;
    }
    make_primitive(row);
    found.insert(std::move(row));
  } while (next_combination(comb, k));
  return {n, std::vector<FacetRow>(found.begin(), found.end())};
}

SlackMatrix slack_matrix(const FacetSystem& f, const VertexSet& v) {
  if (f.ambient_dim != v.ambient_dim()) throw InvalidInput("slack_matrix: dimension mismatch");
  auto pts = v.points();
  SlackMatrix s(f.size(), static_cast<int>(pts.size()));
  for (int i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      auto x = f.rows[i].slack(pts[j]);
      if (x < 0) throw InternalError("slack_matrix: facet system does not contain vertex");
      s(i, static_cast<int>(j)) = x;
    }
  return s;
}

std::vector<Mask> facet_vertex_masks(const FacetSystem& f, const VertexSet& v) {
  std::vector<Mask> out;
  for (const auto& r : f.rows) {
    Mask m = 0;
    for (PointIndex p : v.points())
      if (r.slack(p) == 0) m |= Mask{1} << p;
    out.push_back(m);
  }
  return out;
}

OuterDescription outer_description(const VertexSet& v) {
  const int n = v.ambient_dim();
  Embedding e = embed(v);
  const int d = e.embedded.ambient_dim();
  OuterDescription od;
  od.ambient_dim = n;
  if (d >= 1) {
    for (const auto& r : facet_enumeration(e.embedded).rows) {
      FacetRow lifted;
      lifted.a.assign(n, 0);
      for (int k = 0; k < d; ++k) lifted.a[e.coords[k]] = r.a[k];
      lifted.beta = r.beta;
      od.inequalities.push_back(std::move(lifted));
    }
  }
  if (d < n) {
    // (c, gamma) with <c, v> - gamma = 0 for all v in V.
    auto pts = v.points();
    RMatrix m(static_cast<int>(pts.size()), n + 1);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      for (int i = 0; i < n; ++i) m(static_cast<int>(k), i) = coordinate(pts[k], i);
      m(static_cast<int>(k), n) = -1;
    }
    RMatrix ns = nullspace(m);
    for (int c = 0; c < ns.cols(); ++c) {
      RVector col(n + 1);
      for (int i = 0; i <= n; ++i) col[i] = ns(i, c);
      auto z = primitive_integer(col);
      FacetRow eq;
      eq.a.assign(z.begin(), z.begin() + n);
      eq.beta = z[n];
      orient_equation(eq);
      od.equations.push_back(std::move(eq));
    }
    std::sort(od.equations.begin(), od.equations.end());
  }
  return od;
}

RVector AffineMap::operator()(const RVector& x) const {
  RVector y = linear * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += offset[i];
  return y;
}

AffineMap AffineMap::then(const AffineMap& outer) const {
  AffineMap out;
  out.linear = outer.linear * linear;
  out.offset = outer(offset);
  return out;
}

AffineMap embedding_lift(const VertexSet& v, const Embedding& e) {
  const int n = v.ambient_dim();
  const int d = e.embedded.ambient_dim();
  AffineMap lift{RMatrix(n, d), RVector(n, 0)};
  std::vector<bool> kept(n, false);
  for (int k = 0; k < d; ++k) {
    lift.linear(e.coords[k], k) = 1;
    kept[e.coords[k]] = true;
  }
  if (d == n) return lift;
  // Each dropped coordinate is an affine function of the kept ones on aff(V):
  // solve x_R from C_R x_R = gamma - C_S x_S.
  auto od = outer_description(v);
  std::vector<int> dropped;
  for (int i = 0; i < n; ++i)
    if (!kept[i]) dropped.push_back(i);
  const int r = static_cast<int>(dropped.size());
  RMatrix cr(r, r);
  RMatrix cs(r, d);
  RVector gamma(r);
  if (static_cast<int>(od.equations.size()) != r) throw InternalError("embedding_lift: equation count");
  for (int q = 0; q < r; ++q) {
    for (int k = 0; k < r; ++k) cr(q, k) = od.equations[q].a[dropped[k]];
    for (int k = 0; k < d; ++k) cs(q, k) = od.equations[q].a[e.coords[k]];
    gamma[q] = od.equations[q].beta;
  }
  for (int k = 0; k <= d; ++k) {
    RVector rhs(r);
    for (int q = 0; q < r; ++q) rhs[q] = (k < d) ? Rational(-cs(q, k)) : gamma[q];
    auto sol = solve_unique(cr, rhs);
    if (!sol) throw InternalError("embedding_lift: projection is not injective on the affine hull");
    for (int q = 0; q < r; ++q) {
      if (k < d)
        lift.linear(dropped[q], k) = (*sol)[q];
      else
        lift.offset[dropped[q]] = (*sol)[q];
    }
  }
  return lift;
}

bool contains_point(const VertexSet& v, std::span<const Rational> p) {
  if (static_cast<int>(p.size()) != v.ambient_dim())
    throw InvalidInput("contains_point: point has wrong length");
  if (v.empty()) return false;
  auto od = outer_description(v);
  auto value = [&](const FacetRow& r) {
    Rational s = r.beta;
    for (std::size_t i = 0; i < r.a.size(); ++i) s -= r.a[i] * p[i];
    return s;
  };
  for (const auto& eq : od.equations)
    if (value(eq) != 0) return false;
  for (const auto& ineq : od.inequalities)
    if (value(ineq) < 0) return false;
  return true;
}

VertexSet extreme_points(const VertexSet& w) {
  if (w.empty()) throw InvalidInput("extreme_points: empty point set");
  Mask keep = w.mask();
  for (PointIndex p : w.points()) {
    VertexSet rest(w.ambient_dim(), w.mask() & ~(Mask{1} << p));
    if (rest.empty()) continue;
    RVector x(w.ambient_dim());
    for (int i = 0; i < w.ambient_dim(); ++i) x[i] = coordinate(p, i);
    if (contains_point(rest, x)) keep &= ~(Mask{1} << p);
  }
  return VertexSet(w.ambient_dim(), keep);
}

std::vector<int> f_vector(const VertexSet& v) {
  Embedding e = embed(v);
  const int d = e.embedded.ambient_dim();
  std::vector<int> f(d, 0);
  if (d == 0) return f;
  auto facets = facet_vertex_masks(facet_enumeration(e.embedded), e.embedded);
  std::set<Mask> faces(facets.begin(), facets.end());
  std::vector<Mask> frontier(facets.begin(), facets.end());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask face : frontier)
      for (Mask facet : facets) {
        Mask g = face & facet;
        if (g && faces.insert(g).second) next.push_back(g);
      }
    frontier = std::move(next);
  }
  for (Mask face : faces) {
    int k = affine_dimension(VertexSet(d, face));
    if (k < d) ++f[k];
  }
  return f;
}

}  // namespace xc01
