#include "xc01/constructions.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

namespace xc01 {

namespace {

struct Move {
  Mask target = 0;
  Operation op = Operation::None;
  int arg = -1;
  // bound = source xcs + add, or source facets + 1 for facet reflections
  int add = 0;
};

int move_bound(const Move& mv, int src_bound, int src_facets) {
  return mv.op == Operation::ReflectFacet ? src_facets + 1 : src_bound + mv.add;
}

Mask image(const CubeSymmetry& s, Mask m) {
  Mask out = 0;
  for (Mask x = m; x; x &= x - 1) out |= Mask{1} << s.apply(std::countr_zero(x));
  return out;
}

// Every operation applicable to the vertex set `mask`; dim_of(T) must return
// the affine dimension of the nonempty vertex set T.
template <class DimOf, class F>
void for_each_move(int n, Mask mask, const std::vector<Hyperplane>& hps, DimOf&& dim_of, F&& emit) {
  const int dim = dim_of(mask);
  const int size = cube_size(n);
  if (dim >= 1)
    for (int w = 0; w < size; ++w)
      if (!((mask >> w) & 1U)) emit(Move{mask | (Mask{1} << w), Operation::UnionPoint, w, 1});
  for (std::size_t h = 0; h < hps.size(); ++h) {
    bool below = true;
    Mask tight = 0;
    for (Mask x = mask; x && below; x &= x - 1) {
      int p = std::countr_zero(x);
      if (!hps[h].weakly_below(p)) below = false;
      else if (hps[h].tight(p)) tight |= Mask{1} << p;
    }
    if (!below) continue;
    Mask target = mask | image(hps[h].reflection, mask);
    if (target == mask) continue;
    emit(Move{target, Operation::Reflect, static_cast<int>(h), 2});
    if (tight && dim_of(tight) == dim - 1) emit(Move{target, Operation::ReflectFacet, static_cast<int>(h), 0});
  }
  for (int j = 0; j < n; ++j) {
    const Mask bit = Mask{1} << j;
    bool injective = true;
    Mask down = 0;
    for (Mask x = mask; x; x &= x - 1) {
      int p = std::countr_zero(x);
      if ((p & bit) && ((mask >> (p ^ bit)) & 1U)) injective = false;
      down |= Mask{1} << (p & ~bit);
    }
    if (!injective || (mask | down) == mask) continue;
    emit(Move{mask | down, Operation::Down, j, 2});
  }
}

Certificate certificate_from(const Move& mv, Mask src, int src_bound, int src_facets) {
  Certificate c;
  c.op = mv.op;
  c.pred_id = src;
  c.bound = move_bound(mv, src_bound, src_facets);
  c.target_id = mv.target;
  c.arg = mv.arg;
  return c;
}

std::vector<Proposal> proposals(const VertexSet& pred, int pred_xcs, int pred_facets,
                                bool (*keep)(Operation)) {
  const int n = pred.ambient_dim();
  auto hps = cube_hyperplanes(n);
  std::vector<Proposal> out;
  auto dim_of = [&](Mask m) { return affine_dimension(VertexSet(n, m)); };
  for_each_move(n, pred.mask(), hps, dim_of, [&](const Move& mv) {
    if (keep(mv.op))
      out.push_back({VertexSet(n, mv.target), certificate_from(mv, pred.mask(), pred_xcs, pred_facets)});
  });
  return out;
}

}  // namespace

std::string_view operation_name(Operation op) {
  switch (op) {
    case Operation::None: return "none";
    case Operation::Simplex: return "simplex";
    case Operation::UnionPoint: return "union_point";
    case Operation::Reflect: return "reflect";
    case Operation::ReflectFacet: return "reflect_facet";
    case Operation::Down: return "down";
  }
  return "?";
}

std::string_view operation_symbol(Operation op) {
  switch (op) {
    case Operation::None: return "-";
    case Operation::Simplex: return "Δ";
    case Operation::UnionPoint: return "∪";
    case Operation::Reflect: return "÷";
    case Operation::ReflectFacet: return "÷*";
    case Operation::Down: return "↓";
  }
  return "?";
}

Operation parse_operation(std::string_view s) {
  for (auto op : {Operation::None, Operation::Simplex, Operation::UnionPoint, Operation::Reflect,
                   Operation::ReflectFacet, Operation::Down})
    if (s == operation_name(op) || s == operation_symbol(op)) return op;
  throw InvalidInput("unknown operation '" + std::string(s) + "'");
}

bool Hyperplane::weakly_below(PointIndex p) const {
  std::int64_t s = 0;
  for (std::size_t l = 0; l < a.size(); ++l) s += a[l] * coordinate(p, static_cast<int>(l));
  return s <= beta;
}

bool Hyperplane::tight(PointIndex p) const {
  std::int64_t s = 0;
  for (std::size_t l = 0; l < a.size(); ++l) s += a[l] * coordinate(p, static_cast<int>(l));
  return s == beta;
}

std::vector<Hyperplane> cube_hyperplanes(int n) {
  std::vector<Hyperplane> out;
  for (int i = 0; i < n; ++i)
    for (int sign : {1, -1}) {
      Hyperplane h;
      h.kind = Hyperplane::Kind::Flip;
      h.i = h.j = i;
      h.a.assign(n, 0);
      h.a[i] = 2 * sign;
      h.beta = sign;
      h.reflection = CubeSymmetry::flip(n, i);
      out.push_back(std::move(h));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int sign : {1, -1}) {
        Hyperplane h;
        h.kind = Hyperplane::Kind::Swap;
        h.i = i;
        h.j = j;
        h.a.assign(n, 0);
        h.a[i] = sign;
        h.a[j] = -sign;
        h.beta = 0;
        h.reflection = CubeSymmetry::swap(n, i, j);
        out.push_back(std::move(h));
      }
  return out;
}

Certificate trivial_bounds(int n_vertices, int n_facets) {
  Certificate c;
  if (n_facets <= n_vertices) {
    c.op = Operation::None;
    c.bound = n_facets;
  } else {
    c.op = Operation::Simplex;
    c.bound = n_vertices;
  }
  return c;
}

std::vector<Proposal> union_point_targets(const VertexSet& pred, int pred_xcs) {
  return proposals(pred, pred_xcs, 0, [](Operation op) { return op == Operation::UnionPoint; });
}

std::vector<Proposal> reflection_targets(const VertexSet& pred, int pred_xcs, int pred_facets) {
  return proposals(pred, pred_xcs, pred_facets,
                   [](Operation op) { return op == Operation::Reflect || op == Operation::ReflectFacet; });
}

std::optional<Proposal> downmono_targets(const VertexSet& pred, int j, int pred_xcs) {
  for (auto& p : proposals(pred, pred_xcs, 0, [](Operation op) { return op == Operation::Down; }))
    if (p.cert.arg == j) return p;
  return std::nullopt;
}

int Catalog::find(int dim, Mask rep) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].dim == dim && classes[c].representative_id == rep) return static_cast<int>(c);
  return -1;
}

Catalog build_catalog(int n) {
  if (n < 0 || n > kMaxDim) throw InvalidInput("build_catalog: dimension out of range");
  Catalog cat;
  cat.ambient_dim = n;
  std::vector<std::map<Mask, int>> index_of_01(n + 1);
  std::vector<std::vector<Mask>> canon(n + 1);
  for (int d = 0; d <= n; ++d) {
    cat.zero_one.push_back(enumerate_01_classes(d, d));
    auto aff = partition_affine_classes(cat.zero_one.back());
    for (auto& c : aff) {
      for (Mask m : c.member_ids) index_of_01[d][m] = static_cast<int>(cat.classes.size());
      cat.classes.push_back(std::move(c));
    }
    canon[d] = canonical_ids_parallel(d);
  }
  const int size = 1 << cube_size(n);
  cat.class_of.assign(size, -1);
  std::vector<int>& class_of = cat.class_of;
#pragma omp parallel for schedule(dynamic, 512)
  for (int m = 1; m < size; ++m) {
    Embedding e = embed(VertexSet(n, static_cast<Mask>(m)));
    const int d = e.embedded.ambient_dim();
    class_of[m] = index_of_01[d].at(canon[d][e.embedded.mask()]);
  }
  for (std::size_t c = 0; c < cat.classes.size(); ++c)
    if (class_of[cat.classes[c].representative_id] != static_cast<int>(c))
      throw InternalError("build_catalog: representative maps to a different class");
  return cat;
}

FixpointResult fixpoint_upper_bounds(const Catalog& cat, bool parallel) {
  const int n = cat.ambient_dim;
  const int size = 1 << cube_size(n);
  const int nclasses = static_cast<int>(cat.classes.size());
  auto hps = cube_hyperplanes(n);
  auto dim_of = [&](Mask m) { return cat.classes[cat.class_of[m]].dim; };

  // Moves do not depend on bounds; generate them once.
  std::vector<std::vector<Move>> moves(size);
#pragma omp parallel for schedule(dynamic, 512) if (parallel)
  for (int m = 1; m < size; ++m)
    for_each_move(n, static_cast<Mask>(m), hps, dim_of, [&](const Move& mv) { moves[m].push_back(mv); });

  std::vector<int> bound(nclasses);
  std::vector<int> facets(nclasses);
  for (int c = 0; c < nclasses; ++c) {
    bound[c] = trivial_bounds(cat.classes[c].n_vertices, cat.classes[c].n_facets).bound;
    facets[c] = cat.classes[c].n_facets;
  }

  FixpointResult res;
  while (true) {
    std::vector<int> next = bound;
#pragma omp parallel if (parallel)
    {
      std::vector<int> local = bound;
#pragma omp for schedule(dynamic, 512) nowait
      for (int m = 1; m < size; ++m) {
        const int src = cat.class_of[m];
        for (const Move& mv : moves[m]) {
          int t = cat.class_of[mv.target];
          local[t] = std::min(local[t], move_bound(mv, bound[src], facets[src]));
        }
      }
#pragma omp critical(xc01_fixpoint_merge)
      for (int c = 0; c < nclasses; ++c) next[c] = std::min(next[c], local[c]);
    }
    ++res.rounds;
    if (next == bound) break;
    bound = std::move(next);
  }

  res.certificates.resize(nclasses);
  using Key = std::tuple<bool, Mask, Operation, int>;
  std::vector<std::optional<Key>> best(nclasses);
  for (int c = 0; c < nclasses; ++c) {
    Certificate t = trivial_bounds(cat.classes[c].n_vertices, cat.classes[c].n_facets);
    t.target_id = cat.classes[c].representative_id;
    res.certificates[c] = t;
    res.certificates[c].bound = bound[c];
  }
  for (int m = 1; m < size; ++m) {
    const int src = cat.class_of[m];
    for (const Move& mv : moves[m]) {
      const int t = cat.class_of[mv.target];
      const int b = move_bound(mv, bound[src], facets[src]);
      if (b != bound[t]) continue;
      if (trivial_bounds(cat.classes[t].n_vertices, cat.classes[t].n_facets).bound == b) continue;
      Key key{mv.target != cat.classes[t].representative_id, static_cast<Mask>(m), mv.op, mv.arg};
      if (best[t] && !(key < *best[t])) continue;
      best[t] = key;
      Certificate cert = certificate_from(mv, static_cast<Mask>(m), bound[src], facets[src]);
      cert.pred_class = cat.classes[src].representative_id;
      res.certificates[t] = cert;
    }
  }
  for (int c = 0; c < nclasses; ++c) {
    const auto& cert = res.certificates[c];
    if (cert.op == Operation::None && cert.bound != cat.classes[c].n_facets)
      throw InternalError("fixpoint: class " + std::to_string(cat.classes[c].representative_id) +
                          " has no certificate for its bound");
    if (cert.op == Operation::Simplex && cert.bound != cat.classes[c].n_vertices)
      throw InternalError("fixpoint: class " + std::to_string(cat.classes[c].representative_id) +
                          " has no certificate for its bound");
  }
  return res;
}

ExtensionBuilder::ExtensionBuilder(const Catalog& catalog, const std::vector<Certificate>& certs)
    : catalog_(catalog),
      certs_(certs),
      hyperplanes_(cube_hyperplanes(catalog.ambient_dim)),
      memo_(catalog.classes.size()),
      busy_(catalog.classes.size(), 0) {
  if (certs.size() != catalog.classes.size()) throw InvalidInput("ExtensionBuilder: certificate count mismatch");
}

const Extension& ExtensionBuilder::class_extension(int c) {
  if (memo_[c]) return *memo_[c];
  if (busy_[c]) throw InternalError("certificate chain is cyclic");
  busy_[c] = 1;
  const int n = catalog_.ambient_dim;
  const Certificate& cert = certs_[c];
  const VertexSet target(n, cert.target_id);
  Extension e;
  switch (cert.op) {
    case Operation::None: e = outer_extension(target); break;
    case Operation::Simplex: e = simplex_extension(target); break;
    case Operation::UnionPoint: e = union_with_point(extension_for(*cert.pred_id), cert.arg); break;
    case Operation::Reflect: {
      const auto& h = hyperplanes_.at(cert.arg);
      e = reflect(extension_for(*cert.pred_id), h.a, h.beta);
      break;
    }
    case Operation::ReflectFacet: {
      const auto& h = hyperplanes_.at(cert.arg);
      if (!reflect_facet(VertexSet(n, *cert.pred_id), h.a, h.beta, e))
        throw InternalError("reflect_facet certificate without a facet in the hyperplane");
      break;
    }
    case Operation::Down: e = down_monotone(extension_for(*cert.pred_id), cert.arg); break;
  }
  busy_[c] = 0;
  memo_[c] = std::move(e);
  return *memo_[c];
}

Extension ExtensionBuilder::extension_for(Mask v) {
  const int n = catalog_.ambient_dim;
  const int c = catalog_.class_of.at(v);
  if (c < 0) throw InvalidInput("extension_for: empty vertex set");
  const Extension& base = class_extension(c);
  const Mask t = certs_[c].target_id;
  if (t == v) return base;
  // Carry the extension of the certified member over to V.
  const VertexSet tv(n, t), vv(n, v);
  Embedding et = embed(tv), ev = embed(vv);
  const int d = et.embedded.ambient_dim();
  AffineMap m;
  if (d == 0) {
    m.linear = RMatrix(n, n);
    m.offset.assign(n, 0);
    PointIndex p = vv.points().front();
    for (int i = 0; i < n; ++i) m.offset[i] = coordinate(p, i);
  } else {
    auto f = find_affine_map(et.embedded, ev.embedded);
    if (!f) throw InternalError("extension_for: class members are not affinely equivalent");
    AffineMap proj{RMatrix(d, n), RVector(d, 0)};
    for (int k = 0; k < d; ++k) proj.linear(k, et.coords[k]) = 1;
    m = proj.then(*f).then(embedding_lift(vv, ev));
  }
  return transform(base, m);
}

VerificationReport build_and_verify_nice_extension(ExtensionBuilder& builder, const Catalog& catalog,
                                                   const std::vector<Certificate>& certs, int class_index) {
  VerificationReport r;
  r.class_index = class_index;
  r.rep = catalog.classes.at(class_index).representative_id;
  r.bound = certs.at(class_index).bound;
  Extension e = builder.extension_for(r.rep);
  r.check = check_nice_extension(e, VertexSet(catalog.ambient_dim, r.rep));
  r.ok = r.check.nice() && r.check.n_facets <= r.bound;
  if (!r.check.nice()) r.message = r.check.detail;
  else if (!r.ok)
    r.message = "extension has " + std::to_string(r.check.n_facets) + " facets, bound is " + std::to_string(r.bound);
  return r;
}

std::vector<VerificationReport> verify_all(const Catalog& catalog, const std::vector<Certificate>& certs) {
  ExtensionBuilder builder(catalog, certs);
  const int nclasses = static_cast<int>(catalog.classes.size());
  std::vector<Extension> exts;
  exts.reserve(nclasses);
  for (int c = 0; c < nclasses; ++c) exts.push_back(builder.extension_for(catalog.classes[c].representative_id));
  std::vector<VerificationReport> out(nclasses);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < nclasses; ++c) {
    VerificationReport& r = out[c];
    r.class_index = c;
    r.rep = catalog.classes[c].representative_id;
    r.bound = certs[c].bound;
    r.check = check_nice_extension(exts[c], VertexSet(catalog.ambient_dim, r.rep));
    r.ok = r.check.nice() && r.check.n_facets <= r.bound;
    if (!r.check.nice()) r.message = r.check.detail;
    else if (!r.ok)
      r.message = "extension has " + std::to_string(r.check.n_facets) + " facets, bound is " + std::to_string(r.bound);
  }
  return out;
}

}  // namespace xc01
