#include "xc01/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace xc01 {

namespace {

std::string join(const std::vector<Mask>& ids, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s) w += (ch & 0xC0) != 0x80;
  return w;
}

std::string pad(const std::string& s, std::size_t width, bool right) {
  std::size_t w = display_width(s);
  std::string fill(width > w ? width - w : 0, ' ');
  return right ? fill + s : s + fill;
}

std::string render_text(const std::vector<ClassRecord>& records) {
  const std::vector<std::string> head = {"ID", "dim", "n", "m", "ω", "rc", "rrc", "xcs", "op", "predecessor",
                                         "further representatives"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : records) {
    const auto& c = r.certificate;
    std::string pred = "-";
    if (c.pred_id) pred = std::to_string(*c.pred_id) + " (≅ " + std::to_string(c.pred_class.value_or(0)) + ")";
    rows.push_back({std::to_string(r.rep_id), std::to_string(r.dim), std::to_string(r.n_vertices),
                    std::to_string(r.n_facets), std::to_string(r.omega), std::to_string(r.rc), std::to_string(r.rrc),
                    std::to_string(r.xcs), std::string(operation_symbol(c.op)), pred,
                    r.further_reps.empty() ? "-" : join(r.further_reps, ", ")});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t k = 0; k < head.size(); ++k) {
    width[k] = display_width(head[k]);
    for (const auto& row : rows) width[k] = std::max(width[k], display_width(row[k]));
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      bool last = k + 1 == cells.size();
      bool numeric = k < 8;
      s += last ? cells[k] : pad(cells[k], width[k], numeric);
      if (!last) s += "  ";
    }
    out << s << '\n';
  };
  line(head);
  std::size_t total = 0;
  for (std::size_t k = 0; k + 1 < width.size(); ++k) total += width[k] + 2;
  out << std::string(total + display_width(head.back()), '-') << '\n';
  for (const auto& row : rows) line(row);
  return out.str();
}

Json optional_json(const std::optional<Mask>& m) { return m ? Json(*m) : Json(nullptr); }

std::optional<Mask> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<Mask>();
}

}  // namespace

ReportFormat parse_report_format(std::string_view s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  if (s == "text") return ReportFormat::Text;
  throw InvalidInput("unknown report format '" + std::string(s) + "' (expected csv, json or text)");
}

std::string csv_row(const ClassRecord& r) {
  const auto& c = r.certificate;
  std::ostringstream os;
  os << r.rep_id << ',' << r.dim << ',' << r.n_vertices << ',' << r.n_facets << ',' << r.omega << ',' << r.rc << ','
     << r.rrc << ',' << r.xcs << ',' << operation_symbol(c.op) << ',';
  if (c.pred_id) os << *c.pred_id;
  os << ',';
  if (c.pred_class) os << *c.pred_class;
  os << ',' << join(r.further_reps, ";");
  return os.str();
}

std::string render_report(const std::vector<ClassRecord>& records, ReportFormat format) {
  if (records.empty()) throw InvalidInput("render_report: no records");
  switch (format) {
    case ReportFormat::Csv: {
      std::string out(kCsvHeader);
      out += '\n';
      for (const auto& r : records) out += csv_row(r) + '\n';
      return out;
    }
    case ReportFormat::Json: {
      Json j = Json::array();
      for (const auto& r : records) j.push_back(to_json(r));
      return j.dump(2) + '\n';
    }
    case ReportFormat::Text: return render_text(records);
  }
  throw InvalidInput("render_report: unknown format");
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << contents;
  if (!out) throw InvalidInput("write failed for " + path.string());
}

Json to_json(const SlackMatrix& s) {
  Json j;
  j["rows"] = s.rows();
  j["cols"] = s.cols();
  j["entries"] = s.to_rows();
  return j;
}

SlackMatrix slack_from_json(const Json& j) {
  try {
    auto rows = j.at("entries").get<std::vector<std::vector<std::int64_t>>>();
    SlackMatrix s = SlackMatrix::from_rows(rows);
    if (j.contains("rows") && j.at("rows").get<int>() != s.rows()) throw InvalidInput("slack JSON: row count mismatch");
    if (j.contains("cols") && j.at("cols").get<int>() != s.cols() && s.rows() > 0)
      throw InvalidInput("slack JSON: column count mismatch");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("slack JSON: ") + e.what());
  }
}

Json to_json(const FacetSystem& f) {
  Json j = Json::array();
  for (const auto& r : f.rows) {
    Json row = r.a;
    row.push_back(r.beta);
    j.push_back(std::move(row));
  }
  return j;
}

Json to_json(const EquivClass& c) {
  Json j;
  j["rep_id"] = c.representative_id;
  j["kind"] = c.kind == ClassKind::Affine ? "affine" : "zero-one";
  j["dim"] = c.dim;
  j["member_ids"] = c.member_ids;
  j["n_polytopes"] = c.n_polytopes;
  j["n_vertices"] = c.n_vertices;
  j["n_facets"] = c.n_facets;
  j["f_vector"] = c.f_vector;
  return j;
}

Json to_json(const std::vector<EquivClass>& classes) {
  Json j = Json::array();
  for (const auto& c : classes) j.push_back(to_json(c));
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["op"] = operation_name(c.op);
  j["pred_id"] = optional_json(c.pred_id);
  j["pred_class"] = optional_json(c.pred_class);
  j["bound"] = c.bound;
  j["target_id"] = c.target_id;
  j["arg"] = c.arg;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.op = parse_operation(j.at("op").get<std::string>());
  c.pred_id = optional_from(j.value("pred_id", Json(nullptr)));
  c.pred_class = optional_from(j.value("pred_class", Json(nullptr)));
  c.bound = j.at("bound").get<int>();
  c.target_id = j.value("target_id", Mask{0});
  c.arg = j.value("arg", -1);
  return c;
}

Json to_json(const ClassRecord& r) {
  Json j;
  j["id"] = r.rep_id;
  j["dim"] = r.dim;
  j["vertices"] = r.n_vertices;
  j["facets"] = r.n_facets;
  j["omega"] = r.omega;
  j["rc"] = r.rc;
  j["rrc"] = r.rrc;
  j["xcs"] = r.xcs;
  j["certificate"] = to_json(r.certificate);
  j["further_reps"] = r.further_reps;
  return j;
}

ClassRecord record_from_json(const Json& j) {
  try {
    ClassRecord r;
    r.rep_id = j.at("id").get<Mask>();
    r.dim = j.at("dim").get<int>();
    r.n_vertices = j.at("vertices").get<int>();
    r.n_facets = j.at("facets").get<int>();
    r.omega = j.at("omega").get<int>();
    r.rc = j.at("rc").get<int>();
    r.rrc = j.at("rrc").get<int>();
    r.xcs = j.at("xcs").get<int>();
    r.certificate = certificate_from_json(j.at("certificate"));
    r.further_reps = j.at("further_reps").get<std::vector<Mask>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("record JSON: ") + e.what());
  }
}

std::vector<ClassRecord> records_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("records JSON: expected an array");
  std::vector<ClassRecord> out;
  for (const auto& r : j) out.push_back(record_from_json(r));
  return out;
}

Json to_json(const std::vector<CountRow>& counts) {
  Json j = Json::array();
  for (const auto& c : counts)
    j.push_back({{"vertices", c.vertices},
                 {"polytopes", c.polytopes},
                 {"zero_one_classes", c.zero_one_classes},
                 {"affine_classes", c.affine_classes}});
  return j;
}

}  // namespace xc01
