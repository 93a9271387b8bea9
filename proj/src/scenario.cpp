#include "rmd/scenario.hpp"

#include <fstream>
#include <sstream>

namespace rmd {

using nlohmann::json;

namespace {

Scenario terrain_preset(std::string name, std::vector<GaussianPeak> peaks, std::size_t samples) {
  Scenario sc;
  sc.name = std::move(name);
  sc.field = HeightField::peaks(std::move(peaks));
  sc.samples = samples;
  return sc;
}

// exp(-c r^2) with c = 1/(2 sigma^2)
GaussianPeak peak(double amplitude, double x0, double y0, double variance) {
  return GaussianPeak::with_variance(amplitude, {x0, y0}, variance);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  return j.get<double>();
}

std::size_t count(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ConfigError(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Point2 point(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(field, "expected [x1, x2]");
  return {number(j[0], field), number(j[1], field)};
}

HeightField surface_from_json(const json& j) {
  const std::string field = "surface";
  try {
    if (j.is_object() && j.contains("flat")) return HeightField::flat(number(j["flat"], field + ".flat"));
    if (j.is_object() && j.contains("plane")) {
      const Point2 ab = point(j["plane"], field + ".plane");
      return HeightField::plane(ab.x1, ab.x2);
    }
    const json& list = j.is_object() && j.contains("peaks") ? j["peaks"] : j;
    if (!list.is_array()) throw ConfigError(field, "expected a peak list, {\"flat\": c} or {\"plane\": [a, b]}");
    std::vector<GaussianPeak> peaks;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = field + "[" + std::to_string(i) + "]";
      const json& p = list[i];
      if (!p.is_object()) throw ConfigError(at, "expected {amplitude, center, sigma}");
      if (!p.contains("amplitude")) throw ConfigError(at + ".amplitude", "missing");
      if (!p.contains("center")) throw ConfigError(at + ".center", "missing");
      const double amp = number(p["amplitude"], at + ".amplitude");
      const Point2 c = point(p["center"], at + ".center");
      if (p.contains("variance")) {
        peaks.push_back(GaussianPeak::with_variance(amp, c, number(p["variance"], at + ".variance")));
      } else if (p.contains("sigma")) {
        peaks.push_back(GaussianPeak::with_sigma(amp, c, number(p["sigma"], at + ".sigma")));
      } else {
        throw ConfigError(at + ".sigma", "missing");
      }
    }
    return HeightField::peaks(std::move(peaks));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

}  // namespace

void Scenario::validate() const {
  try {
    workspace.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("workspace", e.what());
  }
  if (!is_finite(start) || !workspace.contains(start)) throw ConfigError("start", "must lie inside the workspace");
  if (!is_finite(goal) || !workspace.contains(goal)) throw ConfigError("goal", "must lie inside the workspace");
  if (start == goal) throw ConfigError("goal", "must differ from start");
  if (samples < 2) throw ConfigError("samples", "must be at least 2");
  if (gauss_points < 1) throw ConfigError("gauss_points", "must be at least 1");
  if (knn && *knn < 1) throw ConfigError("knn", "must be at least 1");
  if (algorithms.empty()) throw ConfigError("algorithms", "must name at least one algorithm");
}

std::vector<std::string> preset_names() { return {"one-peak", "three-peaks", "four-peaks", "flat"}; }

std::optional<Scenario> preset(std::string_view name) {
  // x3 = 6 exp(-(1/5) r^2): variance 5/2
  if (name == "one-peak") return terrain_preset("one-peak", {peak(6, 5, 6, 2.5)}, 500);
  // coefficient 1/2: variance 1
  if (name == "three-peaks")
    return terrain_preset("three-peaks", {peak(8, 3, 2, 1), peak(9, 7, 3, 1), peak(8, 6, 8, 1)}, 700);
  if (name == "four-peaks")
    return terrain_preset("four-peaks", {peak(5, 3, 2, 1), peak(5, 7, 3, 1), peak(5, 3, 7, 1), peak(5, 7, 7, 1)},
                          700);
  if (name == "flat") {
    Scenario sc;
    sc.name = "flat";
    sc.field = HeightField::flat(0.0);
    return sc;
  }
  return std::nullopt;
}

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");
  Scenario sc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ConfigError("name", "expected a string");
    sc.name = j["name"].get<std::string>();
  }
  if (!j.contains("surface")) throw ConfigError("surface", "missing");
  sc.field = surface_from_json(j["surface"]);
  if (j.contains("workspace")) {
    const json& w = j["workspace"];
    if (!w.is_object() || !w.contains("x1") || !w.contains("x2"))
      throw ConfigError("workspace", "expected {\"x1\": [min, max], \"x2\": [min, max]}");
    const Point2 a = point(w["x1"], "workspace.x1");
    const Point2 b = point(w["x2"], "workspace.x2");
    sc.workspace = {a.x1, a.x2, b.x1, b.x2};
  }
  if (!j.contains("start")) throw ConfigError("start", "missing");
  sc.start = point(j["start"], "start");
  if (!j.contains("goal")) throw ConfigError("goal", "missing");
  sc.goal = point(j["goal"], "goal");
  if (j.contains("samples")) sc.samples = count(j["samples"], "samples");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ConfigError("seed", "expected a non-negative integer");
    sc.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("gauss_points")) sc.gauss_points = count(j["gauss_points"], "gauss_points");
  if (j.contains("knn") && !j["knn"].is_null()) sc.knn = count(j["knn"], "knn");
  if (j.contains("algorithms")) {
    const json& a = j["algorithms"];
    if (a.is_string() && a.get<std::string>() == "all") {
      // default already lists all three
    } else if (a.is_array()) {
      sc.algorithms.clear();
      for (const auto& item : a) {
        if (!item.is_string()) throw ConfigError("algorithms", "expected algorithm names");
        const auto algo = parse_algorithm(item.get<std::string>());
        if (!algo) throw ConfigError("algorithms", "unknown algorithm '" + item.get<std::string>() + "'");
        sc.algorithms.push_back(*algo);
      }
    } else {
      throw ConfigError("algorithms", "expected a list of names or \"all\"");
    }
  }
  sc.validate();
  return sc;
}

json surface_to_json(const HeightField& field) {
  if (const auto* f = std::get_if<Flat>(&field.shape())) return {{"flat", f->level}};
  if (const auto* p = std::get_if<Plane>(&field.shape())) return {{"plane", {p->a, p->b}}};
  json list = json::array();
  for (const auto& pk : std::get<PeakSum>(field.shape()).peaks) {
    list.push_back({{"amplitude", pk.amplitude()},
                    {"center", {pk.center().x1, pk.center().x2}},
                    {"sigma", pk.sigma()},
                    {"variance", pk.variance()}});
  }
  return list;
}

json to_json(const Scenario& sc) {
  json algos = json::array();
  for (auto a : sc.algorithms) algos.push_back(std::string(to_string(a)));
  json j = {
      {"name", sc.name},
      {"surface", surface_to_json(sc.field)},
      {"workspace", {{"x1", {sc.workspace.min1, sc.workspace.max1}}, {"x2", {sc.workspace.min2, sc.workspace.max2}}}},
      {"start", {sc.start.x1, sc.start.x2}},
      {"goal", {sc.goal.x1, sc.goal.x2}},
      {"samples", sc.samples},
      {"seed", sc.seed},
      {"gauss_points", sc.gauss_points},
      {"knn", nullptr},
      {"algorithms", algos},
  };
  if (sc.knn) j["knn"] = *sc.knn;
  return j;
}

Scenario parse_scenario(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

Scenario load_scenario(const std::string& source) {
  if (auto sc = preset(source)) return *sc;
  std::ifstream in(source);
  if (!in) {
    std::string names;
    for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
    throw ConfigError("scenario", "'" + source + "' is neither a preset (" + names + ") nor a readable file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace rmd
