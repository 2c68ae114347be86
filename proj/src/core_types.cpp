#include "xc01/core_types.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace xc01 {

PointIndex vertex_index(std::span<const int> v) {
  if (v.size() > static_cast<std::size_t>(kMaxDim))
    throw InvalidInput("vertex_index: dimension exceeds " + std::to_string(kMaxDim));
  PointIndex b = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && v[i] != 1)
      throw InvalidInput("vertex_index: entry " + std::to_string(i) + " is not 0/1");
    b |= v[i] << i;
  }
  return b;
}

std::vector<int> point_coordinates(PointIndex p, int n) {
  std::vector<int> x(n);
  for (int i = 0; i < n; ++i) x[i] = coordinate(p, i);
  return x;
}

VertexSet::VertexSet(int ambient_dim, Mask mask) : ambient_dim_(ambient_dim), mask_(mask) {
  if (ambient_dim < 0 || ambient_dim > kMaxDim)
    throw InvalidInput("VertexSet: ambient dimension out of range");
  if (cube_size(ambient_dim) < 32 && (mask >> cube_size(ambient_dim)) != 0)
    throw InvalidInput("VertexSet: mask does not fit in 2^n bits");
}

VertexSet VertexSet::from_points(int ambient_dim, std::span<const PointIndex> points) {
  Mask m = 0;
  for (PointIndex p : points) {
    if (p < 0 || p >= cube_size(ambient_dim)) throw InvalidInput("VertexSet: point out of range");
    m |= Mask{1} << p;
  }
  return VertexSet(ambient_dim, m);
}

int VertexSet::size() const { return std::popcount(mask_); }

std::vector<PointIndex> VertexSet::points() const {
  std::vector<PointIndex> out;
  out.reserve(size());
  for (Mask m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

VertexSet id_to_vertex_set(std::uint64_t id, int n) {
  if (n < 0 || n > kMaxDim) throw InvalidInput("id_to_vertex_set: dimension out of range");
  if (id >> cube_size(n)) throw InvalidInput("id_to_vertex_set: ID too large for dimension");
  return VertexSet(n, static_cast<Mask>(id));
}

CubeSymmetry::CubeSymmetry(int n, std::array<int, kMaxDim> perm, unsigned flips)
    : n_(n), perm_(perm), flips_(flips) {
  if (n < 0 || n > kMaxDim) throw InvalidInput("CubeSymmetry: dimension out of range");
  std::array<bool, kMaxDim> seen{};
  for (int l = 0; l < n; ++l) {
    if (perm[l] < 0 || perm[l] >= n || seen[perm[l]])
      throw InvalidInput("CubeSymmetry: not a permutation");
    seen[perm[l]] = true;
  }
  if (flips >> n) throw InvalidInput("CubeSymmetry: flip mask too wide");
}

CubeSymmetry CubeSymmetry::identity(int n) { return CubeSymmetry(n, {0, 1, 2, 3}, 0); }

CubeSymmetry CubeSymmetry::flip(int n, int i) {
  return CubeSymmetry(n, {0, 1, 2, 3}, 1U << i);
}

CubeSymmetry CubeSymmetry::swap(int n, int i, int j) {
  std::array<int, kMaxDim> p{0, 1, 2, 3};
  std::swap(p[i], p[j]);
  return CubeSymmetry(n, p, 0);
}

PointIndex CubeSymmetry::apply(PointIndex p) const {
  PointIndex out = 0;
  for (int l = 0; l < n_; ++l) out |= coordinate(p, perm_[l]) << l;
  return out ^ static_cast<PointIndex>(flips_);
}

CubeSymmetry CubeSymmetry::compose(const CubeSymmetry& other) const {
  if (other.n_ != n_) throw InvalidInput("CubeSymmetry::compose: dimension mismatch");
  std::array<int, kMaxDim> p{0, 1, 2, 3};
  unsigned f = 0;
  for (int l = 0; l < n_; ++l) {
    p[l] = other.perm_[perm_[l]];
    unsigned bit = ((other.flips_ >> perm_[l]) & 1U) ^ ((flips_ >> l) & 1U);
    f |= bit << l;
  }
  return CubeSymmetry(n_, p, f);
}

VertexSet apply_symmetry(const CubeSymmetry& sigma, const VertexSet& v) {
  if (sigma.dim() != v.ambient_dim())
    throw InvalidInput("apply_symmetry: dimension mismatch");
  Mask out = 0;
  for (PointIndex p : v.points()) out |= Mask{1} << sigma.apply(p);
  return VertexSet(v.ambient_dim(), out);
}

std::vector<CubeSymmetry> enumerate_symmetries(int n) {
  if (n < 0 || n > kMaxDim) throw InvalidInput("enumerate_symmetries: dimension out of range");
  std::vector<CubeSymmetry> out;
  std::array<int, kMaxDim> perm{0, 1, 2, 3};
  do {
    for (unsigned f = 0; f < (1U << n); ++f) out.emplace_back(n, perm, f);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return out;
}

std::string to_string(const VertexSet& v) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (PointIndex p : v.points()) {
    if (!first) os << ',';
    first = false;
    for (int i = 0; i < v.ambient_dim(); ++i) os << coordinate(p, i);
  }
  os << '}';
  return os.str();
}

}  // namespace xc01
