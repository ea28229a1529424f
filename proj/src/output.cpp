#include "tribo/output.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tribo {

namespace {

using ordered_json = nlohmann::ordered_json;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string plain_text(const Value& value, int precision) {
  return std::visit(overloaded{
                        [](std::monostate) { return std::string("none"); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](long v) { return std::to_string(v); },
                        [&](double d) { return to_decimal(d, precision); },
                        [](const Rational& q) { return to_string(q); },
                        [](const std::string& s) { return s; },
                    },
                    value);
}

std::string human_text(const Value& value, int precision) {
  if (const auto* q = std::get_if<Rational>(&value)) {
    if (q->get_den() == 1) return to_string(*q);
    return to_string(*q) + " (~" + to_decimal(*q, precision) + ")";
  }
  return plain_text(value, precision);
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_text(const Value& value, int precision) {
  if (const auto* q = std::get_if<Rational>(&value)) return csv_quote(to_ratio_string(*q));
  if (const auto* s = std::get_if<std::string>(&value)) {
    return s->find_first_of(",\"\n") == std::string::npos ? *s : csv_quote(*s);
  }
  if (std::holds_alternative<std::monostate>(value)) return "";
  return plain_text(value, precision);
}

ordered_json json_value(const Value& value) {
  return std::visit(overloaded{
                        [](std::monostate) { return ordered_json(nullptr); },
                        [](bool b) { return ordered_json(b); },
                        [](long v) { return ordered_json(v); },
                        [](double d) { return ordered_json(d); },
                        [](const Rational& q) { return ordered_json(to_ratio_string(q)); },
                        [](const std::string& s) { return ordered_json(s); },
                    },
                    value);
}

// A Rational field expands into "key" (exact) and "key_decimal".
void put_field(ordered_json& obj, const Field& f, int precision) {
  obj[f.key] = json_value(f.value);
  if (const auto* q = std::get_if<Rational>(&f.value)) {
    obj[f.key + "_decimal"] = to_decimal(*q, precision);
  }
}

void write_json(std::ostream& out, const OutputRecord& record) {
  ordered_json doc;
  doc["schema_version"] = record.schema_version;
  doc["command"] = record.command;
  doc["precision"] = record.precision;
  ordered_json params = ordered_json::object();
  for (const auto& f : record.params) put_field(params, f, record.precision);
  doc["params"] = params;
  ordered_json rows = ordered_json::array();
  for (const auto& row : record.rows) {
    ordered_json obj = ordered_json::object();
    for (const auto& f : row) put_field(obj, f, record.precision);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = rows;
  ordered_json verdicts = ordered_json::array();
  for (const auto& f : record.verdicts) {
    ordered_json v = ordered_json::object();
    v["name"] = f.key;
    v["value"] = json_value(f.value);
    if (const auto* q = std::get_if<Rational>(&f.value)) {
      v["decimal"] = to_decimal(*q, record.precision);
    }
    verdicts.push_back(std::move(v));
  }
  doc["verdicts"] = verdicts;
  out << doc.dump(2) << '\n';
}

void write_csv(std::ostream& out, const OutputRecord& record) {
  std::vector<std::string> columns;
  auto add_column = [&](const std::string& key) {
    for (const auto& c : columns) {
      if (c == key) return;
    }
    columns.push_back(key);
  };
  for (const auto& row : record.rows) {
    for (const auto& f : row) {
      add_column(f.key);
      if (std::holds_alternative<Rational>(f.value)) add_column(f.key + "_decimal");
    }
  }

  auto lookup = [&](const Row& row, const std::string& column) -> std::string {
    for (const auto& f : row) {
      if (f.key == column) return csv_text(f.value, record.precision);
      if (const auto* q = std::get_if<Rational>(&f.value); q && f.key + "_decimal" == column) {
        return to_decimal(*q, record.precision);
      }
    }
    return "";
  };

  if (!columns.empty()) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : record.rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << lookup(row, columns[i]);
      out << '\n';
    }
  }
  if (!record.verdicts.empty()) {
    if (!columns.empty()) out << '\n';
    out << "verdict,value\n";
    for (const auto& f : record.verdicts) {
      out << f.key << ',' << csv_text(f.value, record.precision) << '\n';
    }
  }
}

void write_human(std::ostream& out, const OutputRecord& record) {
  out << "# " << record.command;
  for (const auto& f : record.params) out << ' ' << f.key << '=' << plain_text(f.value, record.precision);
  out << '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "  " : "") << row[i].key << '=' << human_text(row[i].value, record.precision);
    }
    out << '\n';
  }
  for (const auto& f : record.verdicts) {
    out << f.key << ": " << human_text(f.value, record.precision) << '\n';
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "human") return Format::Human;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (human, csv, json)");
}

void write_record(std::ostream& out, const OutputRecord& record, Format format) {
  switch (format) {
    case Format::Human: write_human(out, record); break;
    case Format::Csv: write_csv(out, record); break;
    case Format::Json: write_json(out, record); break;
  }
}

std::string render(const OutputRecord& record, Format format) {
  std::ostringstream os;
  write_record(os, record, format);
  return os.str();
}

}  // namespace tribo
