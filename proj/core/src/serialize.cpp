#include "kunzcount/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace kunzcount {

std::string rows_to_json(const std::vector<std::vector<Int>>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : rows) j.push_back(row);
  return j.dump();
}

std::string rows_to_csv(const std::vector<std::vector<Int>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (t > 0) out << ",";
      out << row[t];
    }
    out << "\n";
  }
  return out.str();
}

std::string gap_style(const KunzPolytope& polytope) {
  std::ostringstream out;
  out << "[ ";
  for (std::size_t r = 0; r < polytope.rows.size(); ++r) {
    if (r > 0) out << ", ";
    out << "[ ";
    const auto& row = polytope.rows[r];
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (t > 0) out << ", ";
      out << row[t];
    }
    out << " ]";
  }
  out << " ]";
  return out.str();
}

std::vector<std::vector<Int>> kunz_points_as_rows(const std::vector<KunzCoordinates>& points) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(p.k);
  return rows;
}

std::string to_json(const CountReport& report) {
  nlohmann::ordered_json j;
  j["m"] = report.m;
  j["g"] = report.g;
  j["method"] = to_string(report.method);
  j["value"] = report.value;
  return j.dump();
}

std::string to_json(const WindowMonotonicityResult& result) {
  nlohmann::ordered_json j;
  j["period"] = result.period;
  j["start"] = result.start;
  j["end"] = result.end;
  j["ok"] = result.ok;
  if (result.first_violation) {
    j["first_violation"] = *result.first_violation;
    j["violation_window"] = *result.violation_window();
  } else {
    j["first_violation"] = nullptr;
    j["violation_window"] = nullptr;
  }
  return j.dump();
}

}  // namespace kunzcount
