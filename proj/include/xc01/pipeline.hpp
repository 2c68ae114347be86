#ifndef XC01_PIPELINE_HPP
#define XC01_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xc01/constructions.hpp"
#include "xc01/lower_bounds.hpp"

namespace xc01 {

/// Missing or unreadable reference data.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One affine equivalence class with its bounds and certificate.
struct ClassRecord {
  Mask rep_id = 0;
  int dim = 0;
  int n_vertices = 0;
  int n_facets = 0;
  int omega = 0;
  int rc = 0;
  int rrc = 0;
  int xcs = 0;
  Certificate certificate;
  std::vector<Mask> further_reps;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

/// One row of the per-vertex-count classification summary.
struct CountRow {
  int vertices = 0;
  std::uint64_t polytopes = 0;
  int zero_one_classes = 0;
  int affine_classes = 0;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct RunOptions {
  int dim_max = 4;
  bool parallel = true;
  bool verify_certificates = true;
};

struct RunResult {
  Catalog catalog;
  FixpointResult fixpoint;
  /// Sorted by (dim, n_vertices, n_facets, rep_id).
  std::vector<ClassRecord> records;
  /// Counts for full-dimensional polytopes in dimension dim_max.
  std::vector<CountRow> counts;
  std::vector<VerificationReport> verification;
};

/// Per-vertex-count numbers of d-dimensional 0/1-polytopes in {0,1}^d.
std::vector<CountRow> classification_counts(const Catalog& catalog, int d);

/// Throws InternalError naming the class if the record breaks a sandwich or
/// size invariant.
void check_record(const ClassRecord& r);

/// Enumeration, classification, slack matrices, lower bounds, construction
/// fixpoint and certificate verification. Throws InternalError on any
/// invariant violation or failed certificate.
RunResult run_full(const RunOptions& options);
std::vector<ClassRecord> run_full(int dim_max);

LowerBounds class_lower_bounds(const EquivClass& c);
SlackMatrix class_slack_matrix(const EquivClass& c);

struct Table3Row {
  std::string name;
  Mask id = 0;
  int dim = 0;
  int vertices = 0;
  int facets = 0;
  int xcs = 0;
};

struct Table4Row {
  Mask id = 0;
  int vertices = 0;
  int facets = 0;
  int omega = 0;
  int rc = 0;
  int rrc = 0;
  int xcs = 0;
  std::string op;
  std::optional<Mask> pred_id;
  std::optional<Mask> pred_class;
  std::vector<Mask> further_reps;
};

struct ReferenceData {
  std::vector<CountRow> table2;
  std::vector<Table3Row> table3;
  std::vector<Table4Row> table4;
};

/// Reads table2.csv, table3.csv and table4.csv from `dir`; throws ConfigError.
ReferenceData load_reference(const std::filesystem::path& dir);

struct DiffReport {
  std::vector<std::string> mismatches;
  std::vector<std::string> warnings;

  bool ok() const { return mismatches.empty(); }
};

/// Compares counts (for dimension 4 runs), dimension <= 3 records and dimension 4
/// records with the reference. Different predecessors or operations with the
/// same bound are warnings.
DiffReport verify_against_reference(const std::vector<ClassRecord>& records, const std::vector<CountRow>& counts,
                                    const ReferenceData& ref);

}  // namespace xc01

#endif  // XC01_PIPELINE_HPP
