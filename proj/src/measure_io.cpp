#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spirallike/boundary_measure.hpp"
#include "spirallike/errors.hpp"

namespace spirallike {

namespace {

using nlohmann::json;

double number_field(const json& entry, const char* key, const std::string& where,
                    std::vector<std::string>& problems) {
  if (!entry.is_object() || !entry.contains(key) || !entry[key].is_number()) {
    problems.push_back(where + ": missing numeric field \"" + key + "\"");
    return 0.0;
  }
  return entry[key].get<double>();
}

}  // namespace

BoundaryMeasure parse_measure_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("measure spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("measure spec must be a JSON object");
  }

  std::vector<std::string> problems;
  std::vector<Atom> atoms;
  std::vector<DensityKnot> knots;
  for (const auto& [key, value] : doc.items()) {
    if (key != "atoms" && key != "density_knots") {
      problems.push_back("unknown field \"" + key + "\"");
    }
  }
  if (doc.contains("atoms")) {
    if (!doc["atoms"].is_array()) {
      problems.push_back("\"atoms\" must be an array");
    } else {
      std::size_t k = 0;
      for (const auto& entry : doc["atoms"]) {
        const std::string where = "atoms[" + std::to_string(k++) + "]";
        const double t = number_field(entry, "t", where, problems);
        const double jump = number_field(entry, "jump", where, problems);
        atoms.push_back({t, jump});
      }
    }
  }
  if (doc.contains("density_knots")) {
    if (!doc["density_knots"].is_array()) {
      problems.push_back("\"density_knots\" must be an array");
    } else {
      std::size_t k = 0;
      for (const auto& entry : doc["density_knots"]) {
        const std::string where = "density_knots[" + std::to_string(k++) + "]";
        const double t = number_field(entry, "t", where, problems);
        const double value = number_field(entry, "value", where, problems);
        knots.push_back({t, value});
      }
    }
  }
  if (!problems.empty()) {
    std::string msg = "malformed measure spec:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ValidationError(msg);
  }
  BoundaryMeasure m(std::move(atoms), std::move(knots));
  m.require_valid();
  return m;
}

BoundaryMeasure load_measure_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open measure spec " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_measure_json(buf.str());
}

std::string to_json(const BoundaryMeasure& m) {
  json doc;
  doc["atoms"] = json::array();
  doc["density_knots"] = json::array();
  for (const auto& a : m.atoms()) {
    doc["atoms"].push_back({{"t", a.position}, {"jump", a.jump}});
  }
  for (const auto& k : m.knots()) {
    doc["density_knots"].push_back({{"t", k.position}, {"value", k.value}});
  }
  return doc.dump(2);
}

}  // namespace spirallike
