#ifndef XC01_EQUIVALENCE_HPP
#define XC01_EQUIVALENCE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "xc01/core_types.hpp"
#include "xc01/exact_geometry.hpp"

namespace xc01 {

enum class ClassKind { ZeroOne, Affine };

/// A 0/1-equivalence class or an affine equivalence class of full-dimensional
/// 0/1-polytopes in dimension `dim`.
struct EquivClass {
  ClassKind kind = ClassKind::ZeroOne;
  int dim = 0;
  /// Ambient dimension n of the representative's vertex set.
  int ambient_dim = 0;
  Mask representative_id = 0;
  /// Affine classes: representatives of the merged 0/1-classes (sorted).
  /// 0/1-classes: just the representative.
  std::vector<Mask> member_ids;
  /// Number of vertex sets in {0,1}^dim belonging to the class.
  std::uint64_t n_polytopes = 0;
  int n_vertices = 0;
  int n_facets = 0;
  std::vector<int> f_vector;
};

/// min over all cube symmetries of the ID of sigma(V). Reference implementation.
Mask canonical_01_id(const VertexSet& v);

/// Byte-indexed lookup tables for every cube symmetry of {0,1}^n, so that the
/// image of a mask costs one lookup per byte.
class SymmetryTables {
 public:
  explicit SymmetryTables(int n);

  int dim() const { return n_; }
  Mask image(std::size_t symmetry, Mask m) const;
  Mask canonical(Mask m) const;
  std::size_t size() const { return count_; }

 private:
  int n_;
  std::size_t count_ = 0;
  int bytes_ = 1;
  // [symmetry][byte][value] -> image bits
  std::vector<Mask> table_;
};

/// Canonical 0/1-class ID of every mask in {0,1}^n (index = mask, entry 0 for
/// the empty set). Serial reference: applies each symmetry point by point.
std::vector<Mask> canonical_ids_serial(int n);

/// Same result, table-driven and parallelized with OpenMP.
std::vector<Mask> canonical_ids_parallel(int n);

/// All 0/1-classes of d-dimensional polytopes in {0,1}^n, sorted by representative.
std::vector<EquivClass> enumerate_01_classes(int n, int d);

/// An invertible affine map x -> Tx + t sending V bijectively onto W, if any.
/// Both sets must be full-dimensional in the same ambient dimension.
std::optional<AffineMap> find_affine_map(const VertexSet& v, const VertexSet& w);

/// Merges 0/1-classes of one dimension into affine equivalence classes.
std::vector<EquivClass> partition_affine_classes(const std::vector<EquivClass>& classes);

}  // namespace xc01

#endif  // XC01_EQUIVALENCE_HPP
