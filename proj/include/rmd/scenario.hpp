#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rmd/planner.hpp"
#include "rmd/roadmap.hpp"
#include "rmd/surface.hpp"

namespace rmd {

// A malformed or invalid scenario; field() names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("scenario field '" + field + "': " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Scenario {
  std::string name = "custom";
  HeightField field = HeightField::flat(0.0);
  Workspace workspace{};
  Point2 start{0.0, 0.0};
  Point2 goal{10.0, 10.0};
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  std::size_t gauss_points = default_gauss_points;
  std::optional<std::size_t> knn;
  std::vector<Algorithm> algorithms{Algorithm::rm_dijkstra, Algorithm::euclid_dijkstra, Algorithm::euclid_astar};

  // Throws ConfigError on a violated invariant.
  void validate() const;
};

std::vector<std::string> preset_names();
std::optional<Scenario> preset(std::string_view name);

// JSON config schema:
//   name          string (optional)
//   surface       [{amplitude, center: [x0, y0], sigma | variance}, ...]
//                 | {"flat": c} | {"plane": [a, b]}              (required)
//   workspace     {"x1": [min, max], "x2": [min, max]}            (default [-1,11]^2)
//   start, goal   [x1, x2]                                        (required)
//   samples, seed, gauss_points, knn                              (optional)
//   algorithms    ["rm-dijkstra" | "dijkstra-euclid" | "astar-euclid", ...] | "all"
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Scenario& sc);
nlohmann::json surface_to_json(const HeightField& field);

Scenario parse_scenario(std::string_view text);

// A preset name, or else a path to a JSON config file.
Scenario load_scenario(const std::string& source);

}  // namespace rmd
