#include "pattern_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace weakhash::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& what) {
  throw PatternError(std::string(source) + ": " + what);
}

std::vector<double> coordinates(const json& node, std::string_view source,
                                const std::string& field, std::size_t dimension) {
  if (!node.is_array()) fail(source, field + ": expected an array of numbers");
  if (node.size() != dimension) {
    fail(source, field + ": expected " + std::to_string(dimension) +
                     " coordinates, got " + std::to_string(node.size()));
  }
  std::vector<double> out;
  out.reserve(dimension);
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!node[i].is_number()) fail(source, where + ": expected a number");
    const double x = node[i].get<double>();
    if (!std::isfinite(x)) fail(source, where + ": coordinate is not finite");
    out.push_back(x);
  }
  return out;
}

}  // namespace

CountingMeasure parse_pattern(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    // Syntax errors carry "line L, column C"; number overflow is reported too.
    fail(source, e.what());
  }
  if (!doc.is_object()) fail(source, "top level must be an object");
  for (const char* key : {"dimension", "origin", "atoms"}) {
    if (!doc.contains(key)) fail(source, std::string("missing field '") + key + "'");
  }

  const json& dim = doc["dimension"];
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) {
    fail(source, "dimension: expected an integer >= 1");
  }
  const auto dimension = static_cast<std::size_t>(dim.get<std::int64_t>());
  MetricContext ctx(Point(coordinates(doc["origin"], source, "origin", dimension)));

  const json& atoms = doc["atoms"];
  if (!atoms.is_array()) fail(source, "atoms: expected an array");
  std::vector<Atom> parsed;
  parsed.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string field = "atoms[" + std::to_string(i) + "]";
    const json& a = atoms[i];
    if (!a.is_object()) fail(source, field + ": expected an object");
    if (!a.contains("point")) fail(source, field + ": missing field 'point'");
    if (!a.contains("multiplicity")) {
      fail(source, field + ": missing field 'multiplicity'");
    }
    const json& m = a["multiplicity"];
    if (!m.is_number_integer() || m.get<std::int64_t>() < 1) {
      fail(source, field + ".multiplicity: expected an integer >= 1");
    }
    parsed.push_back({Point(coordinates(a["point"], source, field + ".point", dimension)),
                      m.get<std::int64_t>()});
  }
  return CountingMeasure(std::move(ctx), std::move(parsed));
}

CountingMeasure load_pattern(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PatternError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pattern(buf.str(), path.string());
}

std::string serialize_pattern(const CountingMeasure& mu) {
  json doc;
  doc["dimension"] = mu.context().dimension();
  const auto origin = mu.context().origin().coordinates();
  doc["origin"] = std::vector<double>(origin.begin(), origin.end());
  json atoms = json::array();
  for (const Atom& a : mu.atoms()) {
    const auto c = a.point.coordinates();
    atoms.push_back({{"point", std::vector<double>(c.begin(), c.end())},
                     {"multiplicity", a.multiplicity}});
  }
  doc["atoms"] = std::move(atoms);
  return doc.dump(2) + "\n";
}

void save_pattern(const std::filesystem::path& path, const CountingMeasure& mu) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PatternError(path.string() + ": cannot open for writing");
  out << serialize_pattern(mu);
}

}  // namespace weakhash::cli
