#ifndef XC01_REPORT_HPP
#define XC01_REPORT_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "xc01/pipeline.hpp"

namespace xc01 {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Csv, Json, Text };

/// "csv", "json" or "text"; throws InvalidInput otherwise.
ReportFormat parse_report_format(std::string_view s);

inline constexpr std::string_view kCsvHeader = "id,dim,vertices,facets,omega,rc,rrc,xcs,op,pred_id,pred_class,further_reps";

std::string csv_row(const ClassRecord& r);

/// Byte-deterministic rendering of the records.
std::string render_report(const std::vector<ClassRecord>& records, ReportFormat format);

void write_file(const std::filesystem::path& path, const std::string& contents);

Json to_json(const SlackMatrix& s);
SlackMatrix slack_from_json(const Json& j);

/// Rows as [a_1, ..., a_n, beta].
Json to_json(const FacetSystem& f);

Json to_json(const EquivClass& c);
Json to_json(const std::vector<EquivClass>& classes);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const ClassRecord& r);
ClassRecord record_from_json(const Json& j);
std::vector<ClassRecord> records_from_json(const Json& j);

Json to_json(const std::vector<CountRow>& counts);

}  // namespace xc01

#endif  // XC01_REPORT_HPP
