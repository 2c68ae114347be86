#include "xc01/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace xc01 {

namespace {

std::string class_name(const ClassRecord& r) {
  return "class " + std::to_string(r.rep_id) + " (dim " + std::to_string(r.dim) + ")";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& p, std::size_t columns) {
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot read reference file " + p.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty reference file " + p.string());
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (cells.size() != columns)
      throw ConfigError(p.string() + ":" + std::to_string(lineno) + ": expected " + std::to_string(columns) +
                        " columns");
    rows.push_back(std::move(cells));
  }
  return rows;
}

long to_long(const std::string& s, const std::filesystem::path& p) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(p.string() + ": bad integer '" + s + "'");
  }
}

std::optional<Mask> optional_id(const std::string& s, const std::filesystem::path& p) {
  if (s.empty()) return std::nullopt;
  return static_cast<Mask>(to_long(s, p));
}

std::vector<Mask> id_list(const std::string& s, const std::filesystem::path& p) {
  std::vector<Mask> out;
  if (s.empty()) return out;
  for (const auto& x : split(s, ';')) out.push_back(static_cast<Mask>(to_long(x, p)));
  return out;
}

std::string ids(const std::optional<Mask>& m) { return m ? std::to_string(*m) : "none"; }

}  // namespace

std::vector<CountRow> classification_counts(const Catalog& catalog, int d) {
  std::map<int, CountRow> rows;
  for (const auto& c : catalog.zero_one.at(d)) {
    CountRow& r = rows[c.n_vertices];
    r.vertices = c.n_vertices;
    r.polytopes += c.n_polytopes;
    ++r.zero_one_classes;
  }
  for (const auto& c : catalog.classes)
    if (c.dim == d) ++rows[c.n_vertices].affine_classes;
  std::vector<CountRow> out;
  for (auto& [k, r] : rows) out.push_back(r);
  return out;
}

void check_record(const ClassRecord& r) {
  auto fail = [&](const std::string& what) { throw InternalError(class_name(r) + ": " + what); };
  if (!(r.omega <= r.rc && r.rc <= r.rrc && r.rrc <= r.xcs))
    fail("bounds out of order: omega " + std::to_string(r.omega) + ", rc " + std::to_string(r.rc) + ", rrc " +
         std::to_string(r.rrc) + ", xcs " + std::to_string(r.xcs));
  if (r.xcs > std::min(r.n_vertices, r.n_facets)) fail("xcs exceeds the trivial upper bounds");
  // A point has the empty extension.
  if (r.dim >= 1 && r.xcs < r.dim + 1) fail("xcs below dim + 1");
  if (r.certificate.bound != r.xcs) fail("certificate bound differs from xcs");
}

SlackMatrix class_slack_matrix(const EquivClass& c) {
  VertexSet v(c.dim, c.representative_id);
  if (c.dim == 0) return SlackMatrix(0, 1);
  return slack_matrix(facet_enumeration(v), v);
}

LowerBounds class_lower_bounds(const EquivClass& c) { return compute_lower_bounds(class_slack_matrix(c)); }

RunResult run_full(const RunOptions& options) {
  if (options.dim_max < 0 || options.dim_max > kMaxDim)
    throw InvalidInput("run_full: dimension must be between 0 and " + std::to_string(kMaxDim));
  RunResult res;
  res.catalog = build_catalog(options.dim_max);
  res.fixpoint = fixpoint_upper_bounds(res.catalog, options.parallel);
  res.counts = classification_counts(res.catalog, options.dim_max);

  const auto& classes = res.catalog.classes;
  const int n = static_cast<int>(classes.size());
  std::vector<LowerBounds> bounds(n);
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel)
  for (int c = 0; c < n; ++c) bounds[c] = class_lower_bounds(classes[c]);

  for (int c = 0; c < n; ++c) {
    const EquivClass& k = classes[c];
    ClassRecord r;
    r.rep_id = k.representative_id;
    r.dim = k.dim;
    r.n_vertices = k.n_vertices;
    r.n_facets = k.n_facets;
    r.omega = bounds[c].omega;
    r.rc = bounds[c].rc;
    r.rrc = bounds[c].rrc;
    r.certificate = res.fixpoint.certificates[c];
    r.xcs = r.certificate.bound;
    for (Mask m : k.member_ids)
      if (m != k.representative_id) r.further_reps.push_back(m);
    check_record(r);
    res.records.push_back(std::move(r));
  }
  if (options.verify_certificates) {
    res.verification = verify_all(res.catalog, res.fixpoint.certificates);
    for (const auto& v : res.verification)
      if (!v.ok)
        throw InternalError("certificate for class " + std::to_string(v.rep) + " failed verification: " + v.message);
  }
  std::sort(res.records.begin(), res.records.end(), [](const ClassRecord& a, const ClassRecord& b) {
    return std::tie(a.dim, a.n_vertices, a.n_facets, a.rep_id) < std::tie(b.dim, b.n_vertices, b.n_facets, b.rep_id);
  });
  return res;
}

std::vector<ClassRecord> run_full(int dim_max) {
  RunOptions o;
  o.dim_max = dim_max;
  return run_full(o).records;
}

ReferenceData load_reference(const std::filesystem::path& dir) {
  ReferenceData ref;
  auto p2 = dir / "table2.csv";
  for (const auto& r : read_csv(p2, 4))
    ref.table2.push_back({static_cast<int>(to_long(r[0], p2)), static_cast<std::uint64_t>(to_long(r[1], p2)),
                          static_cast<int>(to_long(r[2], p2)), static_cast<int>(to_long(r[3], p2))});
  auto p3 = dir / "table3.csv";
  for (const auto& r : read_csv(p3, 6))
    ref.table3.push_back({r[0], static_cast<Mask>(to_long(r[1], p3)), static_cast<int>(to_long(r[2], p3)),
                          static_cast<int>(to_long(r[3], p3)), static_cast<int>(to_long(r[4], p3)),
                          static_cast<int>(to_long(r[5], p3))});
  auto p4 = dir / "table4.csv";
  for (const auto& r : read_csv(p4, 11)) {
    Table4Row t;
    t.id = static_cast<Mask>(to_long(r[0], p4));
    int* cols[] = {&t.vertices, &t.facets, &t.omega, &t.rc, &t.rrc, &t.xcs};
    for (int k = 0; k < 6; ++k) *cols[k] = static_cast<int>(to_long(r[k + 1], p4));
    t.op = r[7];
    t.pred_id = optional_id(r[8], p4);
    t.pred_class = optional_id(r[9], p4);
    t.further_reps = id_list(r[10], p4);
    ref.table4.push_back(std::move(t));
  }
  return ref;
}

DiffReport verify_against_reference(const std::vector<ClassRecord>& records, const std::vector<CountRow>& counts,
                                    const ReferenceData& ref) {
  DiffReport d;
  int dim_max = -1;
  for (const auto& r : records) dim_max = std::max(dim_max, r.dim);

  if (!counts.empty() && dim_max == 4) {
    if (counts.size() != ref.table2.size())
      d.mismatches.push_back("table 2: " + std::to_string(counts.size()) + " vertex-count rows, expected " +
                             std::to_string(ref.table2.size()));
    for (std::size_t i = 0; i < std::min(counts.size(), ref.table2.size()); ++i) {
      const auto& a = counts[i];
      const auto& b = ref.table2[i];
      if (!(a == b))
        d.mismatches.push_back("table 2, " + std::to_string(b.vertices) + " vertices: got " +
                               std::to_string(a.polytopes) + "/" + std::to_string(a.zero_one_classes) + "/" +
                               std::to_string(a.affine_classes) + ", expected " + std::to_string(b.polytopes) + "/" +
                               std::to_string(b.zero_one_classes) + "/" + std::to_string(b.affine_classes));
    }
  }

  std::map<std::pair<int, Mask>, const ClassRecord*> by_key;
  for (const auto& r : records) by_key[{r.dim, r.rep_id}] = &r;

  if (dim_max >= 3) {
    for (const auto& t : ref.table3) {
      auto it = by_key.find({t.dim, t.id});
      if (it == by_key.end()) {
        d.mismatches.push_back("table 3: " + t.name + " (" + std::to_string(t.id) + ") missing");
        continue;
      }
      const ClassRecord& r = *it->second;
      if (r.n_vertices != t.vertices || r.n_facets != t.facets || r.xcs != t.xcs)
        d.mismatches.push_back("table 3: " + t.name + " (" + std::to_string(t.id) + ") got n " +
                               std::to_string(r.n_vertices) + " m " + std::to_string(r.n_facets) + " xcs " +
                               std::to_string(r.xcs) + ", expected " + std::to_string(t.vertices) + " " +
                               std::to_string(t.facets) + " " + std::to_string(t.xcs));
    }
    int low = 0;
    for (const auto& r : records) low += r.dim <= 3;
    if (low != static_cast<int>(ref.table3.size()))
      d.mismatches.push_back("table 3: " + std::to_string(low) + " classes of dimension <= 3, expected " +
                             std::to_string(ref.table3.size()));
  }

  if (dim_max >= 4) {
    int four = 0;
    for (const auto& r : records) four += r.dim == 4;
    if (four != static_cast<int>(ref.table4.size()))
      d.mismatches.push_back("table 4: " + std::to_string(four) + " classes, expected " +
                             std::to_string(ref.table4.size()));
    for (const auto& t : ref.table4) {
      auto it = by_key.find({4, t.id});
      if (it == by_key.end()) {
        d.mismatches.push_back("table 4: class " + std::to_string(t.id) + " missing");
        continue;
      }
      const ClassRecord& r = *it->second;
      const std::string id = "class " + std::to_string(t.id);
      auto col = [&](const char* name, int got, int want) {
        if (got != want)
          d.mismatches.push_back("table 4: " + id + " " + name + " " + std::to_string(got) + ", expected " +
                                 std::to_string(want));
      };
      col("n", r.n_vertices, t.vertices);
      col("m", r.n_facets, t.facets);
      col("omega", r.omega, t.omega);
      col("rc", r.rc, t.rc);
      col("rrc", r.rrc, t.rrc);
      col("xcs", r.xcs, t.xcs);
      if (r.further_reps != t.further_reps) d.mismatches.push_back("table 4: " + id + " further representatives differ");
      std::string op(operation_symbol(r.certificate.op));
      if (op != t.op)
        d.warnings.push_back("table 4: " + id + " operation " + op + ", reference " + t.op);
      else if (r.certificate.pred_id != t.pred_id || r.certificate.pred_class != t.pred_class)
        d.warnings.push_back("table 4: " + id + " predecessor " + ids(r.certificate.pred_id) + " (class " +
                             ids(r.certificate.pred_class) + "), reference " + ids(t.pred_id) + " (class " +
                             ids(t.pred_class) + ")");
    }
  }
  return d;
}

}  // namespace xc01
