#include <sstream>

#include "altcat_cli/cli.hpp"
#include "json.hpp"

namespace altcat::cli {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> value_columns(const std::vector<Row>& rows) {
  std::vector<std::string> names;
  for (const auto& row : rows) {
    for (const auto& [name, value] : row.values) {
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
  }
  return names;
}

std::string lookup(const Row& row, const std::string& name) {
  for (const auto& [key, value] : row.values) {
    if (key == name) return value;
  }
  return "";
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_json(const Emission& e) {
  Json doc;
  doc["command"] = e.command;
  if (!e.header.empty()) doc["header"] = e.header;
  doc["rows"] = Json::array();
  for (const auto& row : e.rows) {
    Json r;
    if (row.index) r["index"] = *row.index;
    if (row.g) r["g"] = *row.g;
    r["values"] = Json::object();
    for (const auto& [name, value] : row.values) r["values"][name] = value;
    r["agree"] = row.agree;
    doc["rows"].push_back(std::move(r));
  }
  doc["checks"] = Json::array();
  for (const auto& c : e.checks) {
    doc["checks"].push_back({{"name", c.name}, {"citation", c.citation}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return doc.dump(2) + "\n";
}

std::string render_csv(const Emission& e) {
  std::ostringstream out;
  if (!e.rows.empty()) {
    const auto columns = value_columns(e.rows);
    const bool indexed = e.rows.front().index.has_value();
    out << (indexed ? "index,g" : "g");
    for (const auto& name : columns) out << ',' << csv_field(name);
    out << ",agree\n";
    for (const auto& row : e.rows) {
      if (indexed) out << *row.index << ',';
      if (row.g) out << *row.g;
      for (const auto& name : columns) out << ',' << csv_field(lookup(row, name));
      out << ',' << (row.agree ? "true" : "false") << '\n';
    }
  }
  if (!e.checks.empty()) {
    if (!e.rows.empty()) out << '\n';
    out << "name,citation,pass,detail\n";
    for (const auto& c : e.checks) {
      out << csv_field(c.name) << ',' << csv_field(c.citation) << ',' << (c.pass ? "true" : "false") << ','
          << csv_field(c.detail) << '\n';
    }
  }
  return out.str();
}

std::string render_text(const Emission& e) {
  std::ostringstream out;
  for (const auto& line : e.header) out << "# " << line << '\n';
  for (const auto& row : e.rows) {
    if (row.index) out << "w^" << *row.index;
    if (row.g) out << (row.index ? "  " : "") << "g=" << *row.g;
    for (const auto& [name, value] : row.values) out << "  " << name << '=' << value;
    out << "  agree=" << (row.agree ? "yes" : "NO") << '\n';
  }
  std::size_t passed = 0;
  for (const auto& c : e.checks) {
    passed += c.pass ? 1 : 0;
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  [" << c.citation << "]";
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  if (!e.checks.empty()) out << passed << '/' << e.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace

std::string render(const Emission& emission, Format format) {
  switch (format) {
    case Format::json: return render_json(emission);
    case Format::csv: return render_csv(emission);
    case Format::text: break;
  }
  return render_text(emission);
}

}  // namespace altcat::cli
