#include "sphere_search/curve_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sphere_search {

namespace {

using nlohmann::json;

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<Vector> read_rows(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw FormatError(std::string("missing array field '") + key + "'");
  }
  std::vector<Vector> rows;
  for (const auto& row : doc[key]) {
    if (!row.is_array()) throw FormatError(std::string("'") + key + "' entries must be arrays");
    Vector v;
    v.reserve(row.size());
    for (const auto& x : row) {
      if (!x.is_number()) throw FormatError("coordinates must be numbers");
      v.push_back(x.get<double>());
    }
    rows.push_back(std::move(v));
  }
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned()) throw FormatError("'dim' must be a nonnegative integer");
    const auto dim = doc["dim"].get<std::size_t>();
    for (const auto& v : rows) {
      if (v.size() != dim) throw FormatError("row length does not match 'dim'");
    }
  }
  return rows;
}

json rows_to_json(const std::vector<Vector>& rows) {
  json out = json::array();
  for (const auto& v : rows) out.push_back(v);
  return out;
}

}  // namespace

std::string curve_to_json(const PolylineCurve& curve) {
  json doc;
  doc["dim"] = curve.dim();
  doc["closed"] = curve.closed();
  doc["vertices"] = rows_to_json(curve.vertices());
  return doc.dump(2) + "\n";
}

PolylineCurve curve_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw FormatError("curve file must be a JSON object");
  if (!doc.contains("dim")) throw FormatError("missing field 'dim'");
  if (!doc.contains("closed") || !doc["closed"].is_boolean()) {
    throw FormatError("missing boolean field 'closed'");
  }
  auto vertices = read_rows(doc, "vertices");
  try {
    return PolylineCurve(std::move(vertices), doc["closed"].get<bool>());
  } catch (const GeometryError& e) {
    throw FormatError(std::string("invalid curve: ") + e.what());
  }
}

void write_curve_file(const std::filesystem::path& path, const PolylineCurve& curve) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << curve_to_json(curve);
}

PolylineCurve read_curve_file(const std::filesystem::path& path) {
  return curve_from_json(read_text(path));
}

std::vector<UnitDirection> poles_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw FormatError("pole file must be a JSON object");
  const auto rows = read_rows(doc, "poles");
  if (rows.empty()) throw FormatError("pole file has no poles");
  std::vector<UnitDirection> poles;
  poles.reserve(rows.size());
  for (const auto& v : rows) {
    if (v.size() != rows.front().size() || v.empty()) {
      throw FormatError("poles must share one positive dimension");
    }
    try {
      poles.push_back(UnitDirection::normalize(v));
    } catch (const GeometryError& e) {
      throw FormatError(std::string("invalid pole: ") + e.what());
    }
  }
  return poles;
}

std::string poles_to_json(const std::vector<UnitDirection>& poles) {
  json doc;
  doc["dim"] = poles.empty() ? 0 : poles.front().dim();
  json rows = json::array();
  for (const auto& p : poles) rows.push_back(p.coords());
  doc["poles"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::vector<UnitDirection> read_pole_file(const std::filesystem::path& path) {
  return poles_from_json(read_text(path));
}

}  // namespace sphere_search
