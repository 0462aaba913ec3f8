#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <system_error>
#include <variant>
#include <vector>

#include "json.hpp"

namespace gkpft {

using RecordValue = std::variant<double, std::int64_t, std::string>;

/// Shortest decimal form that round-trips to the same double (std::to_chars
/// general format). The 17-significant-digit requirement is an upper bound;
/// shortest-round-trip always satisfies it.
inline std::string format_double(double v) {
  char buf[64];
  const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) throw std::runtime_error("format_double: to_chars failed");
  return std::string(buf, res.ptr);
}

/// One CLI result: the command, its effective parameters, a rectangular table
/// of rows, and metadata. JSON carries the whole record; CSV carries the
/// header and rows only.
struct OutputRecord {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<RecordValue>> rows;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

  void add_row(std::vector<RecordValue> row) {
    if (row.size() != columns.size()) {
      throw std::invalid_argument("OutputRecord: row arity does not match columns");
    }
    rows.push_back(std::move(row));
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["parameters"] = parameters;
    nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < columns.size(); ++i) {
        std::visit([&](const auto& v) { obj[columns[i]] = v; }, row[i]);
      }
      json_rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(json_rows);
    doc["metadata"] = metadata;
    return doc;
  }

  std::string to_json_string() const { return to_json().dump(2) + "\n"; }

  std::string to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_escape(columns[i]);
    }
    out += '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out += ',';
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, double>) {
                out += format_double(v);
              } else if constexpr (std::is_same_v<T, std::int64_t>) {
                out += std::to_string(v);
              } else {
                out += csv_escape(v);
              }
            },
            row[i]);
      }
      out += '\n';
    }
    return out;
  }

 private:
  static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }
};

}  // namespace gkpft
