#include "cquiver/io.hpp"

#include "json.hpp"

namespace cquiver {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

int get_int(const json& obj, const char* field) {
  if (!obj.is_object() || !obj.contains(field)) {
    throw FormatError(std::string("missing field \"") + field + "\"");
  }
  const auto& v = obj.at(field);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + field + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

std::string quiver_to_json(const ColouredQuiver& q) {
  json doc;
  doc["m"] = q.m();
  doc["vertices"] = q.vertex_count();
  doc["arrows"] = json::array();
  for (int i = 0; i < q.vertex_count(); ++i)
    for (int j = 0; j < q.vertex_count(); ++j)
      if (const auto& a = q.arrow(i, j))
        doc["arrows"].push_back({{"from", i}, {"to", j}, {"colour", a->colour}, {"mult", a->mult}});
  return doc.dump();
}

ColouredQuiver quiver_from_json(const std::string& text) {
  const json doc = parse(text);
  const int m = get_int(doc, "m");
  const int n = get_int(doc, "vertices");
  if (m < 0) throw FormatError("\"m\" must be non-negative");
  if (n < 1) throw FormatError("\"vertices\" must be positive");
  if (!doc.contains("arrows") || !doc["arrows"].is_array()) throw FormatError("\"arrows\" must be an array");
  ColouredQuiver q(m, n);
  for (const auto& a : doc["arrows"]) {
    const int from = get_int(a, "from");
    const int to = get_int(a, "to");
    if (from < 0 || from >= n || to < 0 || to >= n) {
      throw FormatError("arrow endpoint out of range 0.." + std::to_string(n - 1));
    }
    if (q.arrow(from, to)) {
      throw FormatError("duplicate entry for arrow " + std::to_string(from) + "->" + std::to_string(to));
    }
    q.set_arrow(from, to, get_int(a, "colour"), a.contains("mult") ? get_int(a, "mult") : 1);
  }
  auto report = validate(q);
  if (!report.ok()) throw FormatError("invalid coloured quiver: " + report.to_string());
  return q;
}

std::string angulation_to_json(const Angulation& a) {
  json doc;
  doc["N"] = a.params().N;
  doc["m"] = a.params().m;
  doc["diagonals"] = json::array();
  for (const auto& d : a.diagonals()) doc["diagonals"].push_back({d.i, d.j});
  return doc.dump();
}

Angulation angulation_from_json(const std::string& text) {
  const json doc = parse(text);
  const PolygonParams p(get_int(doc, "N"), get_int(doc, "m"));
  if (!doc.contains("diagonals") || !doc["diagonals"].is_array()) {
    throw FormatError("\"diagonals\" must be an array");
  }
  std::vector<MDiagonal> diagonals;
  for (const auto& d : doc["diagonals"]) {
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer()) {
      throw FormatError("each diagonal must be a pair of integers");
    }
    diagonals.emplace_back(d[0].get<int>(), d[1].get<int>());
  }
  return Angulation(p, std::move(diagonals));
}

}  // namespace cquiver
