// Command line front end: enumerate, classify, slack, bounds, xc, run-all, verify.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "xc01/constructions.hpp"
#include "xc01/equivalence.hpp"
#include "xc01/lower_bounds.hpp"
#include "xc01/pipeline.hpp"
#include "xc01/report.hpp"

namespace {

using namespace xc01;

constexpr int kExitMismatch = 1;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

VertexSet vertex_set_arg(std::uint64_t id, int n) {
  if (n < 0 || n > kMaxDim) throw InvalidInput("--dim must be between 0 and 4");
  return id_to_vertex_set(id, n);
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extension complexities of 0/1-polytopes up to dimension 4"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "Maximum number of threads (1 = serial)")->check(CLI::NonNegativeNumber);

  int dim = 4;
  std::uint64_t id = 0;
  std::string out_path, csv_path, json_path, text_path, counts_path, reference_dir = XC01_REFERENCE_DIR,
                                                                      records_path, slack_path;
  bool with_facets = false, no_verify = false;

  auto* enumerate = app.add_subcommand("enumerate", "0/1-equivalence classes of full-dimensional polytopes");
  enumerate->add_option("--dim", dim, "Dimension")->check(CLI::Range(0, kMaxDim));
  enumerate->add_option("--out", out_path, "Output JSON file (default: stdout)");

  auto* classify = app.add_subcommand("classify", "Affine equivalence classes of full-dimensional polytopes");
  classify->add_option("--dim", dim, "Dimension")->check(CLI::Range(0, kMaxDim));
  classify->add_option("--out", out_path, "Output JSON file (default: stdout)");

  auto* slack = app.add_subcommand("slack", "Slack matrix of conv(V) after full-dimensional embedding");
  slack->add_option("--id", id, "Polytope ID")->required();
  slack->add_option("--dim", dim, "Ambient dimension of the ID")->check(CLI::Range(0, kMaxDim));
  slack->add_flag("--facets", with_facets, "Also print the facet system");
  slack->add_option("--out", out_path, "Output JSON file (default: stdout)");

  auto* bounds = app.add_subcommand("bounds", "Print omega rc rrc");
  auto* bounds_id = bounds->add_option("--id", id, "Polytope ID");
  bounds->add_option("--dim", dim, "Ambient dimension of the ID")->check(CLI::Range(0, kMaxDim));
  auto* bounds_slack = bounds->add_option("--slack", slack_path, "Slack matrix JSON instead of an ID");
  bounds_id->excludes(bounds_slack);

  auto* xc = app.add_subcommand("xc", "Certified xcs upper bound for the class of an ID");
  xc->add_option("--id", id, "Polytope ID")->required();
  xc->add_option("--dim", dim, "Ambient dimension of the ID")->check(CLI::Range(1, kMaxDim));

  auto* run_all = app.add_subcommand("run-all", "Full pipeline and reports");
  run_all->add_option("--dim", dim, "Largest dimension")->check(CLI::Range(0, kMaxDim));
  run_all->add_option("--csv", csv_path, "CSV report");
  run_all->add_option("--json", json_path, "JSON report");
  run_all->add_option("--text", text_path, "Text table");
  run_all->add_option("--counts", counts_path, "Per-vertex-count classification JSON");
  run_all->add_flag("--no-verify", no_verify, "Skip certificate verification");

  auto* verify = app.add_subcommand("verify", "Compare results with the bundled reference tables");
  verify->add_option("--dim", dim, "Largest dimension")->check(CLI::Range(0, kMaxDim));
  verify->add_option("--reference", reference_dir, "Directory with table2.csv, table3.csv, table4.csv");
  verify->add_option("--records", records_path, "Records JSON from run-all instead of a fresh run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (jobs > 0) omp_set_num_threads(jobs);

  try {
    if (enumerate->parsed()) {
      emit(to_json(enumerate_01_classes(dim, dim)).dump(2) + "\n", out_path);
    } else if (classify->parsed()) {
      emit(to_json(partition_affine_classes(enumerate_01_classes(dim, dim))).dump(2) + "\n", out_path);
    } else if (slack->parsed()) {
      VertexSet v = full_dim_embed(vertex_set_arg(id, dim));
      Json j;
      if (v.ambient_dim() == 0) {
        j = to_json(SlackMatrix(0, 1));
        if (with_facets) j = Json{{"facets", Json::array()}, {"slack", j}};
      } else {
        FacetSystem f = facet_enumeration(v);
        j = to_json(slack_matrix(f, v));
        if (with_facets) j = Json{{"facets", to_json(f)}, {"slack", j}};
      }
      emit(j.dump() + "\n", out_path);
    } else if (bounds->parsed()) {
      SlackMatrix s;
      if (!slack_path.empty()) {
        s = slack_from_json(read_json(slack_path));
      } else {
        if (bounds_id->count() == 0) throw InvalidInput("bounds needs --id or --slack");
        VertexSet v = full_dim_embed(vertex_set_arg(id, dim));
        s = v.ambient_dim() == 0 ? SlackMatrix(0, 1) : slack_matrix(facet_enumeration(v), v);
      }
      LowerBounds b = compute_lower_bounds(s);
      std::cout << b.omega << ' ' << b.rc << ' ' << b.rrc << '\n';
    } else if (xc->parsed()) {
      VertexSet v = vertex_set_arg(id, dim);
      if (v.empty()) throw InvalidInput("empty vertex set");
      Catalog cat = build_catalog(dim);
      FixpointResult fx = fixpoint_upper_bounds(cat);
      const int c = cat.class_of.at(v.mask());
      ExtensionBuilder builder(cat, fx.certificates);
      VerificationReport rep = build_and_verify_nice_extension(builder, cat, fx.certificates, c);
      Json j;
      j["id"] = v.mask();
      j["class"] = cat.classes[c].representative_id;
      j["dim"] = cat.classes[c].dim;
      j["xcs"] = fx.certificates[c].bound;
      j["certificate"] = to_json(fx.certificates[c]);
      j["verified"] = rep.ok;
      j["extension_facets"] = rep.check.n_facets;
      std::cout << j.dump() << '\n';
      if (!rep.ok) {
        std::cerr << "certificate failed: " << rep.message << '\n';
        return kExitInternal;
      }
    } else if (run_all->parsed()) {
      RunOptions opt;
      opt.dim_max = dim;
      opt.parallel = jobs != 1;
      opt.verify_certificates = !no_verify;
      RunResult res = run_full(opt);
      if (!csv_path.empty()) write_file(csv_path, render_report(res.records, ReportFormat::Csv));
      if (!json_path.empty()) write_file(json_path, render_report(res.records, ReportFormat::Json));
      if (!text_path.empty()) write_file(text_path, render_report(res.records, ReportFormat::Text));
      if (!counts_path.empty()) write_file(counts_path, to_json(res.counts).dump(2) + "\n");
      if (csv_path.empty() && json_path.empty() && text_path.empty())
        std::cout << render_report(res.records, ReportFormat::Text);
      int verified = 0;
      for (const auto& v : res.verification) verified += v.ok;
      std::cerr << res.records.size() << " classes, " << verified << " certificates verified, fixpoint rounds "
                << res.fixpoint.rounds << '\n';
    } else if (verify->parsed()) {
      ReferenceData ref = load_reference(reference_dir);
      std::vector<ClassRecord> records;
      std::vector<CountRow> counts;
      if (!records_path.empty()) {
        records = records_from_json(read_json(records_path));
      } else {
        RunOptions opt;
        opt.dim_max = dim;
        opt.parallel = jobs != 1;
        RunResult res = run_full(opt);
        records = std::move(res.records);
        counts = std::move(res.counts);
      }
      DiffReport d = verify_against_reference(records, counts, ref);
      for (const auto& w : d.warnings) std::cout << "warning: " << w << '\n';
      for (const auto& m : d.mismatches) std::cout << "mismatch: " << m << '\n';
      std::cout << (d.ok() ? "OK" : "MISMATCH") << ": " << d.mismatches.size() << " mismatches, "
                << d.warnings.size() << " warnings\n";
      return d.ok() ? 0 : kExitMismatch;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
