#include "xc01/extension.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace xc01 {

namespace {

RMatrix widen(const RMatrix& m, int cols) {
  RMatrix out(m.rows(), cols);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

void push_row(RMatrix& m, RVector& rhs, RVector row, Rational value) {
  m.append_row(row);
  rhs.push_back(std::move(value));
}

Extension widened(const Extension& base, int extra) {
  const int n = base.vars() + extra;
  Extension e;
  e.ineq = widen(base.ineq, n);
  e.ineq_rhs = base.ineq_rhs;
  e.eq = widen(base.eq, n);
  e.eq_rhs = base.eq_rhs;
  e.proj = widen(base.proj, n);
  e.proj_offset = base.proj_offset;
  return e;
}

RMatrix from_rows(const std::vector<FacetRow>& rows, int cols, RVector& rhs) {
  RMatrix m(static_cast<int>(rows.size()), cols);
  rhs.clear();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = static_cast<long>(rows[i].a[j]);
    rhs.emplace_back(static_cast<long>(rows[i].beta));
  }
  return m;
}

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  if (k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RMatrix select_rows(const RMatrix& m, const std::vector<int>& rows) {
  RMatrix out(static_cast<int>(rows.size()), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < m.cols(); ++j) out(static_cast<int>(r), j) = m(rows[r], j);
  return out;
}

int affine_rank(const std::vector<RVector>& pts, const std::vector<int>& which) {
  if (which.size() <= 1) return which.empty() ? -1 : 0;
  RMatrix d(static_cast<int>(which.size()) - 1, static_cast<int>(pts[which[0]].size()));
  for (std::size_t r = 1; r < which.size(); ++r)
    for (int j = 0; j < d.cols(); ++j) d(static_cast<int>(r) - 1, j) = pts[which[r]][j] - pts[which[0]][j];
  return rank(d);
}

}  // namespace

Extension outer_extension(const VertexSet& v) {
  const int n = v.ambient_dim();
  OuterDescription od = outer_description(v);
  Extension e;
  e.ineq = from_rows(od.inequalities, n, e.ineq_rhs);
  e.eq = from_rows(od.equations, n, e.eq_rhs);
  e.proj = RMatrix::identity(n);
  e.proj_offset.assign(n, 0);
  return e;
}

Extension simplex_extension(const VertexSet& v) {
  const int n = v.ambient_dim();
  auto pts = v.points();
  const int k = static_cast<int>(pts.size());
  Extension e;
  e.ineq = RMatrix(k, k);
  e.ineq_rhs.assign(k, 0);
  for (int i = 0; i < k; ++i) e.ineq(i, i) = -1;
  e.eq = RMatrix(1, k);
  for (int i = 0; i < k; ++i) e.eq(0, i) = 1;
  e.eq_rhs = {Rational(1)};
  e.proj = RMatrix(n, k);
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < n; ++l) e.proj(l, i) = coordinate(pts[i], l);
  e.proj_offset.assign(n, 0);
  return e;
}

Extension union_with_point(const Extension& base, PointIndex w) {
  const int n0 = base.vars();
  const int l1 = n0, l2 = n0 + 1;
  Extension e;
  e.ineq = RMatrix(0, n0 + 2);
  e.eq = RMatrix(0, n0 + 2);
  // y in lambda_1 Q'
  for (int i = 0; i < base.ineq.rows(); ++i) {
    RVector row(n0 + 2);
    for (int j = 0; j < n0; ++j) row[j] = base.ineq(i, j);
    row[l1] = -base.ineq_rhs[i];
    push_row(e.ineq, e.ineq_rhs, std::move(row), 0);
  }
  for (int i = 0; i < base.eq.rows(); ++i) {
    RVector row(n0 + 2);
    for (int j = 0; j < n0; ++j) row[j] = base.eq(i, j);
    row[l1] = -base.eq_rhs[i];
    push_row(e.eq, e.eq_rhs, std::move(row), 0);
  }
  RVector nonneg(n0 + 2);
  nonneg[l2] = -1;
  push_row(e.ineq, e.ineq_rhs, std::move(nonneg), 0);
  RVector sum(n0 + 2);
  sum[l1] = 1;
  sum[l2] = 1;
  push_row(e.eq, e.eq_rhs, std::move(sum), 1);

  const int amb = base.ambient_dim();
  e.proj = RMatrix(amb, n0 + 2);
  for (int i = 0; i < amb; ++i) {
    for (int j = 0; j < n0; ++j) e.proj(i, j) = base.proj(i, j);
    e.proj(i, l1) = base.proj_offset[i];
    e.proj(i, l2) = coordinate(w, i);
  }
  e.proj_offset.assign(amb, 0);
  return e;
}

Extension reflect(const Extension& base, const std::vector<std::int64_t>& a, std::int64_t beta) {
  const int n0 = base.vars();
  const int amb = base.ambient_dim();
  if (static_cast<int>(a.size()) != amb) throw InvalidInput("reflect: hyperplane dimension mismatch");
  Extension e = widened(base, 1);
  RVector nonneg(n0 + 1);
  nonneg[n0] = -1;
  push_row(e.ineq, e.ineq_rhs, std::move(nonneg), 0);
  // lambda + <a, L y> <= beta - <a, c>
  RVector row(n0 + 1);
  Rational rhs = static_cast<long>(beta);
  long norm2 = 0;
  for (int i = 0; i < amb; ++i) {
    norm2 += static_cast<long>(a[i] * a[i]);
    if (a[i] == 0) continue;
    for (int j = 0; j < n0; ++j) row[j] += static_cast<long>(a[i]) * base.proj(i, j);
    rhs -= static_cast<long>(a[i]) * base.proj_offset[i];
  }
  row[n0] = 1;
  push_row(e.ineq, e.ineq_rhs, std::move(row), rhs);
  for (int i = 0; i < amb; ++i) e.proj(i, n0) = Rational(2 * a[i], norm2);
  for (int i = 0; i < amb; ++i) e.proj(i, n0).canonicalize();
  return e;
}

bool reflect_facet(const VertexSet& pred, const std::vector<std::int64_t>& a, std::int64_t beta,
                   Extension& out) {
  const int n = pred.ambient_dim();
  auto pts = pred.points();
  Mask tight = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) s += a[i] * coordinate(pts[k], i);
    if (s > beta) throw InvalidInput("reflect_facet: predecessor not inside the halfspace");
    if (s == beta) tight |= Mask{1} << k;
  }
  if (tight == 0) return false;
  OuterDescription od = outer_description(pred);
  int drop = -1;
  for (std::size_t r = 0; r < od.inequalities.size(); ++r) {
    Mask m = 0;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (od.inequalities[r].slack(pts[k]) == 0) m |= Mask{1} << k;
    if (m == tight) drop = static_cast<int>(r);
  }
  if (drop < 0) return false;
  od.inequalities.erase(od.inequalities.begin() + drop);
  Extension base;
  base.ineq = from_rows(od.inequalities, n, base.ineq_rhs);
  base.eq = from_rows(od.equations, n, base.eq_rhs);
  base.proj = RMatrix::identity(n);
  base.proj_offset.assign(n, 0);
  out = reflect(base, a, beta);
  return true;
}

Extension down_monotone(const Extension& base, int j) {
  const int n0 = base.vars();
  const int amb = base.ambient_dim();
  if (j < 0 || j >= amb) throw InvalidInput("down_monotone: coordinate out of range");
  Extension e = widened(base, 1);
  RVector nonneg(n0 + 1);
  nonneg[n0] = -1;
  push_row(e.ineq, e.ineq_rhs, std::move(nonneg), 0);
  RVector row(n0 + 1);
  for (int k = 0; k < n0; ++k) row[k] = -base.proj(j, k);
  row[n0] = 1;
  push_row(e.ineq, e.ineq_rhs, std::move(row), base.proj_offset[j]);
  for (int k = 0; k < n0; ++k) e.proj(j, k) = 0;
  e.proj(j, n0) = 1;
  e.proj_offset[j] = 0;
  return e;
}

Extension transform(const Extension& e, const AffineMap& m) {
  Extension out = e;
  out.proj = m.linear * e.proj;
  out.proj_offset = m(e.proj_offset);
  return out;
}

ExtensionCheck check_nice_extension(const Extension& e, const VertexSet& target) {
  ExtensionCheck res;
  const int nv = e.vars();
  RMatrix eq = e.eq.rows() == 0 ? RMatrix(0, nv) : e.eq;
  auto sol = solve_affine(eq, e.eq_rhs);
  if (!sol) {
    res.detail = "equations are inconsistent";
    return res;
  }
  const RMatrix& basis = sol->basis;
  const int k = basis.cols();
  const int m = e.ineq.rows();
  RMatrix g = m ? e.ineq * basis : RMatrix(0, k);
  RVector h(m);
  if (m) {
    RVector ay = e.ineq * sol->particular;
    for (int i = 0; i < m; ++i) h[i] = e.ineq_rhs[i] - ay[i];
  }

  // Vertices in the parametrization y = particular + basis t.
  std::vector<RVector> verts;
  auto satisfies = [&](const RVector& t) {
    for (int i = 0; i < m; ++i) {
      Rational s = 0;
      for (int j = 0; j < k; ++j) s += g(i, j) * t[j];
      if (s > h[i]) return false;
    }
    return true;
  };
  if (k == 0) {
    if (satisfies(RVector{})) verts.emplace_back();
    res.bounded = true;
  } else {
    if (m < k || rank(g) < k) {
      res.detail = "Q contains a line";
      res.feasible = true;
      return res;
    }
    std::set<RVector> seen;
    for_each_subset(m, k, [&](const std::vector<int>& rows) {
      RVector rhs(k);
      for (int r = 0; r < k; ++r) rhs[r] = h[rows[r]];
      auto t = solve_unique(select_rows(g, rows), rhs);
      if (t && satisfies(*t) && seen.insert(*t).second) verts.push_back(*t);
    });
    res.bounded = true;
    for_each_subset(m, k - 1, [&](const std::vector<int>& rows) {
      if (!res.bounded) return;
      RMatrix sub = rows.empty() ? RMatrix(0, k) : select_rows(g, rows);
      RMatrix ns = nullspace(sub);
      if (ns.cols() != 1) return;
      for (int sign : {1, -1}) {
        bool ray = true;
        for (int i = 0; i < m && ray; ++i) {
          Rational s = 0;
          for (int j = 0; j < k; ++j) s += g(i, j) * ns(j, 0);
          if (sign * s > 0) ray = false;
        }
        if (ray) res.bounded = false;
      }
    });
  }
  res.feasible = !verts.empty();
  res.n_vertices = static_cast<int>(verts.size());
  if (!res.feasible) {
    res.detail = "Q is empty";
    return res;
  }
  if (!res.bounded) {
    res.detail = "Q is unbounded";
    return res;
  }
  std::vector<int> all(verts.size());
  std::iota(all.begin(), all.end(), 0);
  res.dim = affine_rank(verts, all);

  std::set<std::vector<int>> facet_sets;
  for (int i = 0; i < m; ++i) {
    std::vector<int> tight;
    for (std::size_t v = 0; v < verts.size(); ++v) {
      Rational s = 0;
      for (int j = 0; j < k; ++j) s += g(i, j) * verts[v][j];
      if (s == h[i]) tight.push_back(static_cast<int>(v));
    }
    if (tight.size() == verts.size()) continue;
    if (affine_rank(verts, tight) == res.dim - 1) facet_sets.insert(tight);
  }
  res.n_facets = static_cast<int>(facet_sets.size());

  res.zero_one = true;
  res.onto_vertices = true;
  std::set<PointIndex> images;
  for (const auto& t : verts) {
    RVector y = sol->particular;
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < k; ++j) y[i] += basis(i, j) * t[j];
    for (const auto& q : y)
      if (q != 0 && q != 1) res.zero_one = false;
    RVector x = e.proj * y;
    PointIndex p = 0;
    bool binary = true;
    for (int i = 0; i < e.ambient_dim(); ++i) {
      x[i] += e.proj_offset[i];
      if (x[i] == 1) p |= 1 << i;
      else if (x[i] != 0) binary = false;
    }
    if (!binary || target.ambient_dim() != e.ambient_dim() || !target.contains(p)) {
      res.onto_vertices = false;
      continue;
    }
    images.insert(p);
  }
  res.bijective = res.onto_vertices && static_cast<int>(images.size()) == target.size() &&
                  static_cast<int>(verts.size()) == target.size();
  if (!res.zero_one) res.detail = "Q has a fractional vertex";
  else if (!res.onto_vertices) res.detail = "a vertex of Q does not project to a target vertex";
  else if (!res.bijective) res.detail = "vertex map is not a bijection";
  return res;
}

}  // namespace xc01
