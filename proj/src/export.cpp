#include "hydromom/export.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hydromom/errors.hpp"

namespace hydromom {

void write_csv(std::ostream& out, const GridSample& sample, const Metadata& meta) {
  for (const auto& [k, v] : meta) out << "# " << k << ": " << v << '\n';
  out << sample.x_label << ',' << sample.y_label << ",re,im,abs2\n";
  for (const auto& r : sample.rows) {
    out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.x, r.y, r.re, r.im, r.abs2);
  }
}

void write_json(std::ostream& out, const GridSample& sample, const Metadata& meta) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta) doc["metadata"][k] = v;
  doc["columns"] = {sample.x_label, sample.y_label, "re", "im", "abs2"};
  auto rows = nlohmann::json::array();
  for (const auto& r : sample.rows) rows.push_back({r.x, r.y, r.re, r.im, r.abs2});
  doc["rows"] = std::move(rows);
  out << doc.dump() << '\n';
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

double to_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw DomainError("bad number '" + s + "' in CSV");
  return v;
}

}  // namespace

Table read_csv(std::istream& in) {
  Table t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!have_header && line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ", 2);
      if (colon == std::string::npos) throw DomainError("bad metadata line '" + line + "'");
      t.metadata.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 5) throw DomainError("expected 5 fields, got '" + line + "'");
    if (!have_header) {
      t.columns = std::move(fields);
      have_header = true;
      continue;
    }
    std::array<double, 5> row{};
    for (int k = 0; k < 5; ++k) row[k] = to_double(fields[k]);
    t.rows.push_back(row);
  }
  if (!have_header) throw DomainError("CSV has no header row");
  return t;
}

Table read_json(std::istream& in) {
  nlohmann::ordered_json doc;
  try {
    in >> doc;
    Table t;
    for (const auto& [k, v] : doc.at("metadata").items()) t.metadata.emplace_back(k, v.get<std::string>());
    for (const auto& c : doc.at("columns")) t.columns.push_back(c.get<std::string>());
    for (const auto& r : doc.at("rows")) {
      std::array<double, 5> row{};
      for (int k = 0; k < 5; ++k) row[k] = r.at(k).get<double>();
      t.rows.push_back(row);
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed JSON table: ") + e.what());
  }
}

}  // namespace hydromom
