#include "xc01/equivalence.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

namespace xc01 {

Mask canonical_01_id(const VertexSet& v) {
  Mask best = v.mask();
  for (const auto& sigma : enumerate_symmetries(v.ambient_dim()))
    best = std::min(best, apply_symmetry(sigma, v).mask());
  return best;
}

SymmetryTables::SymmetryTables(int n) : n_(n) {
  auto syms = enumerate_symmetries(n);
  count_ = syms.size();
  const int points = cube_size(n);
  bytes_ = (points + 7) / 8;
  table_.assign(count_ * bytes_ * 256, 0);
  for (std::size_t s = 0; s < count_; ++s)
    for (int b = 0; b < bytes_; ++b)
      for (int value = 0; value < 256; ++value) {
        Mask img = 0;
        for (int bit = 0; bit < 8; ++bit) {
          int p = b * 8 + bit;
          if (p < points && ((value >> bit) & 1)) img |= Mask{1} << syms[s].apply(p);
        }
        table_[(s * bytes_ + b) * 256 + value] = img;
      }
}

Mask SymmetryTables::image(std::size_t s, Mask m) const {
  Mask img = 0;
  const Mask* t = &table_[s * bytes_ * 256];
  for (int b = 0; b < bytes_; ++b) img |= t[b * 256 + ((m >> (8 * b)) & 0xFF)];
  return img;
}

Mask SymmetryTables::canonical(Mask m) const {
  Mask best = m;
  for (std::size_t s = 0; s < count_; ++s) best = std::min(best, image(s, m));
  return best;
}

std::vector<Mask> canonical_ids_serial(int n) {
  auto syms = enumerate_symmetries(n);
  const int points = cube_size(n);
  std::vector<std::vector<PointIndex>> perms;
  for (const auto& s : syms) {
    std::vector<PointIndex> p(points);
    for (int x = 0; x < points; ++x) p[x] = s.apply(x);
    perms.push_back(std::move(p));
  }
  const std::size_t total = std::size_t{1} << points;
  std::vector<Mask> out(total, 0);
  for (std::size_t m = 1; m < total; ++m) {
    Mask best = static_cast<Mask>(m);
    for (const auto& p : perms) {
      Mask img = 0;
      for (int x = 0; x < points; ++x)
        if ((m >> x) & 1) img |= Mask{1} << p[x];
      best = std::min(best, img);
    }
    out[m] = best;
  }
  return out;
}

std::vector<Mask> canonical_ids_parallel(int n) {
  SymmetryTables tables(n);
  const std::int64_t total = std::int64_t{1} << cube_size(n);
  std::vector<Mask> out(total, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t m = 1; m < total; ++m) out[m] = tables.canonical(static_cast<Mask>(m));
  return out;
}

namespace {

std::vector<int> facet_sizes(const std::vector<Mask>& incidence) {
  std::vector<int> s;
  for (Mask m : incidence) s.push_back(std::popcount(m));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> vertex_degrees(const VertexSet& v, const std::vector<Mask>& incidence) {
  std::vector<int> deg;
  for (PointIndex p : v.points()) {
    int c = 0;
    for (Mask m : incidence) c += (m >> p) & 1;
    deg.push_back(c);
  }
  return deg;
}

std::int64_t det_small(const std::vector<std::vector<std::int64_t>>& m) {
  RMatrix r(static_cast<int>(m.size()), static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(int(i), int(j)) = m[i][j];
  // Gaussian elimination keeps the determinant exact over the rationals.
  Rational det = 1;
  const int n = r.rows();
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && r(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(r(p, j), r(c, j));
      det = -det;
    }
    det *= r(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (r(i, c) == 0) continue;
      Rational f = r(i, c) / r(c, c);
      for (int j = c; j < n; ++j) r(i, j) -= f * r(c, j);
    }
  }
  return to_int64(det);
}

// Everything the affine-map search needs about one full-dimensional vertex set.
struct AffineProbe {
  VertexSet set;
  int dim = 0;
  std::vector<PointIndex> pts;
  std::vector<int> degree;
  int n_facets = 0;
  // Lexicographically first affine basis (indices into pts) and the adjugate
  // of its difference matrix.
  std::vector<int> basis;
  std::vector<std::vector<std::int64_t>> adjugate;
  std::int64_t det = 1;

  explicit AffineProbe(const VertexSet& v) : set(v), dim(v.ambient_dim()), pts(v.points()) {
    if (v.empty() || affine_dimension(v) != dim)
      throw InvalidInput("find_affine_map: vertex set is not full-dimensional");
    if (dim == 0) return;
    auto fs = facet_enumeration(v);
    n_facets = fs.size();
    degree = vertex_degrees(v, facet_vertex_masks(fs, v));
    basis.push_back(0);
    std::vector<std::vector<std::int64_t>> diffs;
    for (int k = 1; k < static_cast<int>(pts.size()) && static_cast<int>(basis.size()) <= dim; ++k) {
      diffs.push_back(diff(k));
      if (integer_rank(diffs) == static_cast<int>(diffs.size()))
        basis.push_back(k);
      else
        diffs.pop_back();
    }
    // D has columns pts[basis[k]] - pts[basis[0]].
    std::vector<std::vector<std::int64_t>> d(dim, std::vector<std::int64_t>(dim));
    for (int k = 1; k <= dim; ++k) {
      auto c = diff(basis[k]);
      for (int i = 0; i < dim; ++i) d[i][k - 1] = c[i];
    }
    det = det_small(d);
    adjugate.assign(dim, std::vector<std::int64_t>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        std::vector<std::vector<std::int64_t>> minor;
        for (int r = 0; r < dim; ++r) {
          if (r == j) continue;
          std::vector<std::int64_t> row;
          for (int c = 0; c < dim; ++c)
            if (c != i) row.push_back(d[r][c]);
          minor.push_back(std::move(row));
        }
        adjugate[i][j] = ((i + j) % 2 == 0 ? 1 : -1) * (dim == 1 ? 1 : det_small(minor));
      }
  }

  std::vector<std::int64_t> diff(int k) const {
    std::vector<std::int64_t> out(dim);
    for (int i = 0; i < dim; ++i) out[i] = coordinate(pts[k], i) - coordinate(pts[basis[0]], i);
    return out;
  }
};

std::optional<AffineMap> search_affine_map(const AffineProbe& from, const AffineProbe& to) {
  const int d = from.dim;
  if (to.dim != d || from.pts.size() != to.pts.size()) return std::nullopt;
  if (d == 0) return AffineMap{RMatrix(0, 0), RVector{}};
  if (from.n_facets != to.n_facets) return std::nullopt;
  {
    auto a = from.degree, b = to.degree;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const int nv = static_cast<int>(from.pts.size());
  auto coords = [d](PointIndex p) {
    std::vector<std::int64_t> x(d);
    for (int i = 0; i < d; ++i) x[i] = coordinate(p, i);
    return x;
  };
  std::vector<std::vector<std::int64_t>> vrel(nv);
  for (int k = 0; k < nv; ++k) vrel[k] = from.diff(k);

  std::vector<int> chosen;
  std::vector<bool> used(nv, false);
  std::optional<AffineMap> result;

  auto try_tuple = [&]() -> bool {
    auto c0 = coords(to.pts[chosen[0]]);
    // dc has columns c_k - c_0.
    std::vector<std::vector<std::int64_t>> dc(d, std::vector<std::int64_t>(d));
    for (int k = 1; k <= d; ++k) {
      auto ck = coords(to.pts[chosen[k]]);
      for (int i = 0; i < d; ++i) dc[i][k - 1] = ck[i] - c0[i];
    }
    std::vector<std::vector<std::int64_t>> tnum(d, std::vector<std::int64_t>(d, 0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) tnum[i][j] += dc[i][k] * from.adjugate[k][j];
    Mask hit = 0;
    for (int k = 0; k < nv; ++k) {
      PointIndex image = 0;
      for (int i = 0; i < d; ++i) {
        std::int64_t u = 0;
        for (int j = 0; j < d; ++j) u += tnum[i][j] * vrel[k][j];
        if (u % from.det != 0) return false;
        std::int64_t x = u / from.det + c0[i];
        if (x != 0 && x != 1) return false;
        image |= static_cast<PointIndex>(x) << i;
      }
      if (!to.set.contains(image) || ((hit >> image) & 1)) return false;
      hit |= Mask{1} << image;
    }
    AffineMap map{RMatrix(d, d), RVector(d)};
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        map.linear(i, j) = Rational(mpz_class(static_cast<long>(tnum[i][j])), mpz_class(static_cast<long>(from.det)));
        map.linear(i, j).canonicalize();
      }
    auto b0 = coords(from.pts[from.basis[0]]);
    for (int i = 0; i < d; ++i) {
      Rational s = static_cast<long>(c0[i]);
      for (int j = 0; j < d; ++j) s -= map.linear(i, j) * static_cast<long>(b0[j]);
      map.offset[i] = s;
    }
    result = std::move(map);
    return true;
  };

  auto dfs = [&](auto&& self) -> bool {
    const int depth = static_cast<int>(chosen.size());
    if (depth == d + 1) return try_tuple();
    const int want = from.degree[from.basis[depth]];
    for (int k = 0; k < nv; ++k) {
      if (used[k] || to.degree[k] != want) continue;
      used[k] = true;
      chosen.push_back(k);
      if (self(self)) return true;
      chosen.pop_back();
      used[k] = false;
    }
    return false;
  };
  dfs(dfs);
  return result;
}

// Affine invariants used to bucket classes before any map search.
using InvariantKey = std::tuple<int, int, std::vector<int>, std::vector<int>, std::vector<int>>;

}  // namespace

std::vector<EquivClass> enumerate_01_classes(int n, int d) {
  if (n < 0 || n > kMaxDim || d < 0 || d > n)
    throw InvalidInput("enumerate_01_classes: dimension out of range");
  auto canon = canonical_ids_parallel(n);
  std::vector<std::uint64_t> orbit(canon.size(), 0);
  for (std::size_t m = 1; m < canon.size(); ++m) ++orbit[canon[m]];
  std::vector<Mask> reps;
  for (std::size_t m = 1; m < canon.size(); ++m)
    if (canon[m] == m && affine_dimension(VertexSet(n, static_cast<Mask>(m))) == d)
      reps.push_back(static_cast<Mask>(m));

  std::vector<EquivClass> out(reps.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < reps.size(); ++k) {
    VertexSet v(n, reps[k]);
    EquivClass c;
    c.kind = ClassKind::ZeroOne;
    c.dim = d;
    c.ambient_dim = n;
    c.representative_id = reps[k];
    c.member_ids = {reps[k]};
    c.n_polytopes = orbit[reps[k]];
    c.n_vertices = v.size();
    VertexSet e = full_dim_embed(v);
    c.n_facets = d >= 1 ? facet_enumeration(e).size() : 0;
    c.f_vector = f_vector(v);
    out[k] = std::move(c);
  }
  return out;
}

std::optional<AffineMap> find_affine_map(const VertexSet& v, const VertexSet& w) {
  if (v.ambient_dim() != w.ambient_dim()) throw InvalidInput("find_affine_map: dimension mismatch");
  if (v.size() != w.size()) return std::nullopt;
  return search_affine_map(AffineProbe(v), AffineProbe(w));
}

std::vector<EquivClass> partition_affine_classes(const std::vector<EquivClass>& classes) {
  if (classes.empty()) return {};
  const int dim = classes.front().dim;
  for (const auto& c : classes)
    if (c.kind != ClassKind::ZeroOne || c.dim != dim)
      throw InvalidInput("partition_affine_classes: expects 0/1-classes of one dimension");

  // Representatives live in {0,1}^n with n >= dim; work on their embeddings.
  std::vector<VertexSet> sets;
  for (const auto& c : classes) {
    sets.push_back(full_dim_embed(VertexSet(c.ambient_dim, c.representative_id)));
  }

  std::map<InvariantKey, std::vector<std::size_t>> buckets;
  std::vector<AffineProbe> probes;
  probes.reserve(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    probes.emplace_back(sets[k]);
    std::vector<int> fsizes;
    if (dim >= 1) {
      auto fs = facet_enumeration(sets[k]);
      fsizes = facet_sizes(facet_vertex_masks(fs, sets[k]));
    }
    auto deg = probes.back().degree;
    std::sort(deg.begin(), deg.end());
    InvariantKey key{classes[k].n_vertices, classes[k].n_facets, classes[k].f_vector, deg, fsizes};
    buckets[key].push_back(k);
  }

  std::vector<std::vector<std::size_t>> bucket_list;
  for (auto& [key, members] : buckets) bucket_list.push_back(members);

  // Within a bucket each class is tested against the leaders of the groups
  // found so far; affine equivalence is an equivalence relation, so one test
  // per group suffices.
  std::vector<std::vector<std::vector<std::size_t>>> groups(bucket_list.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t b = 0; b < bucket_list.size(); ++b) {
    auto& gs = groups[b];
    for (std::size_t k : bucket_list[b]) {
      bool placed = false;
      for (auto& g : gs) {
        if (search_affine_map(probes[g.front()], probes[k])) {
          g.push_back(k);
          placed = true;
          break;
        }
      }
      if (!placed) gs.push_back({k});
    }
  }

  std::vector<EquivClass> out;
  for (const auto& gs : groups)
    for (const auto& g : gs) {
      EquivClass a;
      a.kind = ClassKind::Affine;
      a.dim = dim;
      a.ambient_dim = classes[g.front()].ambient_dim;
      for (std::size_t k : g) {
        a.member_ids.push_back(classes[k].representative_id);
        a.n_polytopes += classes[k].n_polytopes;
      }
      std::sort(a.member_ids.begin(), a.member_ids.end());
      a.representative_id = a.member_ids.front();
      a.n_vertices = classes[g.front()].n_vertices;
      a.n_facets = classes[g.front()].n_facets;
      a.f_vector = classes[g.front()].f_vector;
      out.push_back(std::move(a));
    }
  std::sort(out.begin(), out.end(),
            [](const EquivClass& x, const EquivClass& y) { return x.representative_id < y.representative_id; });
  return out;
}

}  // namespace xc01
