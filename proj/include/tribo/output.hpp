#pragma once

// Command output records and their three renderings (human, CSV, JSON).
//
// Exact values are always serialized as integer-ratio strings and paired
// with a decimal rendering at the record's precision. Rendering is a pure
// function of the record, so identical records give identical bytes.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tribo/rational.hpp"

namespace tribo {

using Value = std::variant<std::monostate, bool, long, double, Rational, std::string>;

struct Field {
  std::string key;
  Value value;
};

using Row = std::vector<Field>;

struct OutputRecord {
  std::string schema_version = "1";
  std::string command;
  int precision = 12;
  std::vector<Field> params;
  std::vector<Row> rows;
  std::vector<Field> verdicts;
};

enum class Format { Human, Csv, Json };

Format parse_format(std::string_view name);

void write_record(std::ostream& out, const OutputRecord& record, Format format);
std::string render(const OutputRecord& record, Format format);

}  // namespace tribo
