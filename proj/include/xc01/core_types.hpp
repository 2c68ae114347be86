#ifndef XC01_CORE_TYPES_HPP
#define XC01_CORE_TYPES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace xc01 {

/// Largest ambient dimension the library is validated for.
inline constexpr int kMaxDim = 4;

using Mask = std::uint32_t;

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A 0/1 point in dimension n <= 4, stored as its index b(v) = sum v_i 2^(i-1).
using PointIndex = int;

inline int coordinate(PointIndex p, int i) { return (p >> i) & 1; }

/// b(v) for a 0/1 vector; throws InvalidInput on non-binary entries.
PointIndex vertex_index(std::span<const int> v);

/// Coordinates of the point with the given index in dimension n.
std::vector<int> point_coordinates(PointIndex p, int n);

/// A set of 0/1 points in {0,1}^n, encoded as the characteristic bitmask over
/// the 2^n cube vertices. The mask value is the polytope ID.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int ambient_dim, Mask mask);

  static VertexSet from_points(int ambient_dim, std::span<const PointIndex> points);

  int ambient_dim() const { return ambient_dim_; }
  Mask mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(PointIndex p) const { return (mask_ >> p) & 1U; }

  /// Member point indices in increasing b(v) order.
  std::vector<PointIndex> points() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int ambient_dim_ = 0;
  Mask mask_ = 0;
};

/// ID(P) = sum over v in V of 2^b(v).
inline std::uint64_t polytope_id(const VertexSet& v) { return v.mask(); }

VertexSet id_to_vertex_set(std::uint64_t id, int n);

/// Number of cube vertices 2^n.
inline int cube_size(int n) { return 1 << n; }

/// An element of the hyperoctahedral group acting on {0,1}^n:
/// sigma(x)_l = x_{perm[l]} xor flip_l.
class CubeSymmetry {
 public:
  CubeSymmetry() = default;
  CubeSymmetry(int n, std::array<int, kMaxDim> perm, unsigned flips);

  static CubeSymmetry identity(int n);
  static CubeSymmetry flip(int n, int i);
  static CubeSymmetry swap(int n, int i, int j);

  int dim() const { return n_; }
  const std::array<int, kMaxDim>& perm() const { return perm_; }
  unsigned flips() const { return flips_; }

  PointIndex apply(PointIndex p) const;

  /// (this o other)(x) = this(other(x)).
  CubeSymmetry compose(const CubeSymmetry& other) const;

  friend bool operator==(const CubeSymmetry&, const CubeSymmetry&) = default;

 private:
  int n_ = 0;
  std::array<int, kMaxDim> perm_{0, 1, 2, 3};
  unsigned flips_ = 0;
};

VertexSet apply_symmetry(const CubeSymmetry& sigma, const VertexSet& v);

/// All 2^n n! symmetries, ordered lexicographically by (perm, flips).
std::vector<CubeSymmetry> enumerate_symmetries(int n);

std::string to_string(const VertexSet& v);

}  // namespace xc01

#endif  // XC01_CORE_TYPES_HPP
