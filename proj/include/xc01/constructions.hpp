#ifndef XC01_CONSTRUCTIONS_HPP
#define XC01_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xc01/core_types.hpp"
#include "xc01/equivalence.hpp"
#include "xc01/extension.hpp"

namespace xc01 {

// Declaration order is the tie-break order between operations.
enum class Operation { None, Simplex, UnionPoint, Reflect, ReflectFacet, Down };

std::string_view operation_name(Operation op);
/// "-", "Δ", "∪", "÷", "÷*", "↓".
std::string_view operation_symbol(Operation op);
/// Accepts names and symbols; throws InvalidInput otherwise.
Operation parse_operation(std::string_view s);

/// A cube-symmetry hyperplane <a,x> = beta with the orientation <a,x> <= beta.
struct Hyperplane {
  enum class Kind { Flip, Swap };
  Kind kind = Kind::Flip;
  int i = 0;
  int j = 0;
  std::vector<std::int64_t> a;
  std::int64_t beta = 0;
  /// The cube symmetry that reflects at the hyperplane.
  CubeSymmetry reflection;

  bool weakly_below(PointIndex p) const;
  bool tight(PointIndex p) const;
};

/// Both orientations of the n flip hyperplanes x_i = 1/2 and of the C(n,2) swap
/// hyperplanes x_i = x_j, in a fixed order.
std::vector<Hyperplane> cube_hyperplanes(int n);

struct Certificate {
  Operation op = Operation::None;
  std::optional<Mask> pred_id;
  std::optional<Mask> pred_class;
  int bound = 0;
  /// Vertex set produced by the operation; a member of the certified class.
  Mask target_id = 0;
  /// Added point (union), hyperplane index (reflections) or coordinate (down).
  int arg = -1;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// A vertex set reachable from a predecessor by one operation.
struct Proposal {
  VertexSet target;
  Certificate cert;
};

/// The smaller of the facet bound ("none") and the vertex bound ("simplex");
/// "none" on ties.
Certificate trivial_bounds(int n_vertices, int n_facets);

std::vector<Proposal> union_point_targets(const VertexSet& pred, int pred_xcs);

/// Facet reflections are emitted in addition to the plain reflection.
std::vector<Proposal> reflection_targets(const VertexSet& pred, int pred_xcs, int pred_facets);

std::optional<Proposal> downmono_targets(const VertexSet& pred, int j, int pred_xcs);

/// Affine classes of every dimension 0..n and the class of every nonempty
/// vertex set in {0,1}^n.
struct Catalog {
  int ambient_dim = 0;
  /// Sorted by (dim, representative).
  std::vector<EquivClass> classes;
  /// 0/1-classes per dimension.
  std::vector<std::vector<EquivClass>> zero_one;
  /// Index into `classes` for every mask; -1 for the empty set.
  std::vector<int> class_of;

  int find(int dim, Mask rep) const;
  const EquivClass& class_for(Mask m) const { return classes[class_of[m]]; }
};

Catalog build_catalog(int n);

struct FixpointResult {
  /// Indexed like Catalog::classes.
  std::vector<Certificate> certificates;
  int rounds = 0;
};

/// Pushes bounds forward through every operation until nothing improves, then
/// selects one certificate per class: trivial first, then predecessors that
/// produce the representative itself, smallest predecessor ID, operation order.
FixpointResult fixpoint_upper_bounds(const Catalog& catalog, bool parallel = true);

struct VerificationReport {
  int class_index = -1;
  Mask rep = 0;
  int bound = 0;
  ExtensionCheck check;
  bool ok = false;
  std::string message;
};

/// Materializes extensions from certificates, memoized per class.
class ExtensionBuilder {
 public:
  ExtensionBuilder(const Catalog& catalog, const std::vector<Certificate>& certs);

  /// An extension of conv(V) for any nonempty V in {0,1}^n.
  Extension extension_for(Mask v);

 private:
  const Extension& class_extension(int c);

  const Catalog& catalog_;
  const std::vector<Certificate>& certs_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::optional<Extension>> memo_;
  std::vector<char> busy_;
};

/// Builds the extension for the class representative and checks that it is a
/// nice 0/1-extension with at most cert.bound facets.
VerificationReport build_and_verify_nice_extension(ExtensionBuilder& builder, const Catalog& catalog,
                                                   const std::vector<Certificate>& certs, int class_index);

/// All classes; extensions are built serially and checked in parallel.
std::vector<VerificationReport> verify_all(const Catalog& catalog, const std::vector<Certificate>& certs);

}  // namespace xc01

#endif  // XC01_CONSTRUCTIONS_HPP
