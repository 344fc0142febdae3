#include "atomwall/table_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "atomwall/errors.hpp"

namespace atomwall::io {

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw ConfigError("unknown output format '" + name + "' (expected csv or json)");
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const SweepTable& table) {
  for (const auto& c : table.comments()) out << "# " << c << '\n';
  const auto& cols = table.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const SweepTable& table) {
  nlohmann::json j;
  j["comments"] = table.comments();
  j["columns"] = table.columns();
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows()) {
    auto r = nlohmann::json::array();
    // JSON has no inf/nan; emit null there.
    for (double v : row) r.push_back(std::isfinite(v) ? nlohmann::json(v) : nlohmann::json());
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  out << j.dump(1) << '\n';
}

std::string to_string(const SweepTable& table, TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::csv)
    write_csv(os, table);
  else
    write_json(os, table);
  return os.str();
}

void write_file(const std::string& path, const SweepTable& table, TableFormat format) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << to_string(table, format);
  f.close();
  if (!f) throw std::runtime_error("error writing '" + path + "'");
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::runtime_error("malformed number '" + s + "'");
  return v;
}

}  // namespace

SweepTable read_csv(std::istream& in) {
  std::string line;
  std::vector<std::string> comments;
  SweepTable table;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      comments.push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    if (!have_header) {
      table = SweepTable(split(line));
      for (auto& c : comments) table.add_comment(c);
      have_header = true;
      continue;
    }
    std::vector<double> row;
    for (const auto& cell : split(line)) row.push_back(parse_double(cell));
    table.add_row(std::move(row));
  }
  if (!have_header) throw std::runtime_error("CSV input has no header row");
  return table;
}

SweepTable read_json(std::istream& in) {
  const auto j = nlohmann::json::parse(in);
  SweepTable table(j.at("columns").get<std::vector<std::string>>());
  for (const auto& c : j.at("comments")) table.add_comment(c.get<std::string>());
  for (const auto& r : j.at("rows")) {
    std::vector<double> row;
    for (const auto& v : r) row.push_back(v.is_null() ? std::nan("") : v.get<double>());
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace atomwall::io
