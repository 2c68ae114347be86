#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

#include "xc01/pipeline.hpp"
#include "xc01/report.hpp"

using namespace xc01;

namespace {

const RunResult& run4() {
  static const RunResult r = run_full(RunOptions{});
  return r;
}

const ReferenceData& reference() {
  static const ReferenceData ref = load_reference(XC01_REFERENCE_DIR);
  return ref;
}

const ClassRecord& record(Mask id) {
  const auto& rs = run4().records;
  auto it = std::find_if(rs.begin(), rs.end(), [&](const ClassRecord& r) { return r.dim == 4 && r.rep_id == id; });
  REQUIRE(it != rs.end());
  return *it;
}

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("xc01_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("dimension <= 3 run matches the small table") {
  RunOptions o;
  o.dim_max = 3;
  RunResult r = run_full(o);
  REQUIRE(r.records.size() == 12);
  DiffReport d = verify_against_reference(r.records, r.counts, reference());
  for (const auto& m : d.mismatches) INFO(m);
  CHECK(d.ok());
  CHECK(r.verification.size() == 12);
}

TEST_CASE("runs are deterministic and independent of parallelism") {
  RunOptions a;
  a.dim_max = 3;
  RunOptions b = a;
  b.parallel = false;
  auto ra = run_full(a).records;
  auto rb = run_full(b).records;
  auto rc = run_full(a).records;
  for (auto f : {ReportFormat::Csv, ReportFormat::Json, ReportFormat::Text}) {
    CHECK(render_report(ra, f) == render_report(rb, f));
    CHECK(render_report(ra, f) == render_report(rc, f));
  }
}

TEST_CASE("full run") {
  const auto& r = run4();
  CHECK(r.records.size() == 214);
  auto first4 = std::find_if(r.records.begin(), r.records.end(), [](const ClassRecord& x) { return x.dim == 4; });
  REQUIRE(first4 != r.records.end());
  CHECK(first4->rep_id == 279);
  CHECK(first4->n_vertices == 5);
  CHECK(first4->n_facets == 5);
  CHECK(LowerBounds{first4->omega, first4->rc, first4->rrc} == LowerBounds{5, 5, 5});
  CHECK(first4->xcs == 5);
  for (const auto& v : r.verification) CHECK(v.ok);
  DiffReport d = verify_against_reference(r.records, r.counts, reference());
  CHECK(d.mismatches.empty());
}

TEST_CASE("CSV rows") {
  CHECK(std::string(kCsvHeader) == "id,dim,vertices,facets,omega,rc,rrc,xcs,op,pred_id,pred_class,further_reps");
  CHECK(csv_row(record(65535)) == "65535,4,16,8,8,8,8,8,-,,,");
  const auto& r = record(27606);
  CHECK(csv_row(r).rfind("27606,4,10,14,8,9,10,10,Δ,", 0) == 0);
  std::string csv = render_report(run4().records, ReportFormat::Csv);
  CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 215);
}

TEST_CASE("reports reject bad input") {
  CHECK_THROWS_AS(render_report({}, ReportFormat::Csv), InvalidInput);
  CHECK_THROWS_AS(parse_report_format("xml"), InvalidInput);
  CHECK(parse_report_format("text") == ReportFormat::Text);
}

TEST_CASE("JSON records round trip") {
  const auto& rs = run4().records;
  Json j = Json::parse(render_report(rs, ReportFormat::Json));
  CHECK(records_from_json(j) == rs);
  CHECK_THROWS_AS(records_from_json(Json::object()), InvalidInput);
}

TEST_CASE("text table uses the operation symbols") {
  std::string t = render_report(run4().records, ReportFormat::Text);
  CHECK(t.find("Δ") != std::string::npos);
  CHECK(t.find("∪") != std::string::npos);
}

TEST_CASE("injected bound error gives a one-line mismatch") {
  auto rs = run4().records;
  auto it = std::find_if(rs.begin(), rs.end(), [](const ClassRecord& r) { return r.dim == 4 && r.rep_id == 5759; });
  REQUIRE(it != rs.end());
  it->rc += 1;
  DiffReport d = verify_against_reference(rs, run4().counts, reference());
  REQUIRE(d.mismatches.size() == 1);
  CHECK(d.mismatches[0].find("5759") != std::string::npos);
  CHECK(d.mismatches[0].find("rc") != std::string::npos);
  CHECK(d.mismatches[0].find('\n') == std::string::npos);
}

TEST_CASE("injected count error is reported") {
  auto counts = run4().counts;
  counts[3].affine_classes += 1;
  DiffReport d = verify_against_reference(run4().records, counts, reference());
  CHECK(d.mismatches.size() == 1);
}

TEST_CASE("a different predecessor is only a warning") {
  auto rs = run4().records;
  // A class whose predecessor agrees with the reference.
  auto agrees = [](const ClassRecord& r) {
    if (r.dim != 4 || !r.certificate.pred_id) return false;
    for (const auto& t : reference().table4)
      if (t.id == r.rep_id) return t.pred_id == r.certificate.pred_id && t.pred_class == r.certificate.pred_class;
    return false;
  };
  auto it = std::find_if(rs.begin(), rs.end(), agrees);
  REQUIRE(it != rs.end());
  DiffReport base = verify_against_reference(rs, run4().counts, reference());
  *it->certificate.pred_id += 1;
  DiffReport d = verify_against_reference(rs, run4().counts, reference());
  CHECK(d.ok());
  CHECK(d.warnings.size() == base.warnings.size() + 1);
}

TEST_CASE("missing or malformed reference data is a configuration error") {
  auto empty = temp_dir("empty");
  CHECK_THROWS_AS(load_reference(empty), ConfigError);
  auto bad = temp_dir("bad");
  for (auto name : {"table2.csv", "table3.csv", "table4.csv"})
    std::filesystem::copy_file(std::filesystem::path(XC01_REFERENCE_DIR) / name, bad / name);
  {
    std::ofstream out(bad / "table2.csv", std::ios::app);
    out << "17,x,1,1\n";
  }
  CHECK_THROWS_AS(load_reference(bad), ConfigError);
  std::filesystem::remove_all(empty);
  std::filesystem::remove_all(bad);
}

TEST_CASE("check_record enforces the invariants") {
  ClassRecord r = record(5759);
  CHECK_NOTHROW(check_record(r));
  ClassRecord a = r;
  a.omega = a.rc + 1;
  CHECK_THROWS_AS(check_record(a), InternalError);
  ClassRecord b = r;
  b.xcs = std::min(b.n_vertices, b.n_facets) + 1;
  b.certificate.bound = b.xcs;
  CHECK_THROWS_AS(check_record(b), InternalError);
  ClassRecord c = r;
  c.certificate.bound += 1;
  CHECK_THROWS_AS(check_record(c), InternalError);
}

TEST_CASE("run_full rejects dimensions out of range") {
  RunOptions o;
  o.dim_max = 5;
  CHECK_THROWS_AS(run_full(o), InvalidInput);
}
