#include "weakmult/multiplier_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace weakmult {

namespace {

using nlohmann::json;

std::array<double, 3> coordinates(const json& j, const char* key) {
  std::array<double, 3> out{};
  if (!j.contains(key)) return out;
  const json& arr = j.at(key);
  if (!arr.is_array() || arr.size() > 3) {
    throw std::invalid_argument(std::string("'") + key + "' must be an array of at most 3 numbers");
  }
  for (std::size_t i = 0; i < arr.size(); ++i) out[i] = arr[i].get<double>();
  return out;
}

FunctionDescriptor parse_descriptor(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "gaussian") {
    return gaussian(j.at("a").get<double>(), j.value("c", 1.0), coordinates(j, "center"));
  }
  if (type == "truncated_power") return truncated_power();
  if (type == "indicator") {
    return FunctionDescriptor(Indicator{coordinates(j, "lo"), coordinates(j, "hi")});
  }
  if (type == "product") {
    Product p;
    for (const json& f : j.at("factors")) p.factors.push_back(parse_descriptor(f));
    return FunctionDescriptor(std::move(p));
  }
  if (type == "sum") {
    LinearCombination lc;
    for (const json& t : j.at("terms")) {
      lc.terms.emplace_back(t.at("weight").get<double>(), parse_descriptor(t.at("f")));
    }
    return FunctionDescriptor(std::move(lc));
  }
  throw std::invalid_argument("unknown descriptor type '" + type + "'");
}

FactorSource parse_factor(const json& j) {
  if (j.at("type").get<std::string>() == "spectral") return SpectralFactor{parse_descriptor(j.at("of"))};
  return parse_descriptor(j);
}

}  // namespace

UniformGrid default_reference_grid(int dimension) {
  if (dimension == 1) return UniformGrid(1, 64.0, 4096);
  if (dimension == 2) return UniformGrid(2, 32.0, 512);
  throw std::invalid_argument("no reference grid in dimension " + std::to_string(dimension));
}

ClassAMultiplier parse_multiplier_spec(std::string_view text) {
  try {
    const json spec = json::parse(text);
    const int d = spec.at("dimension").get<int>();
    const double q = spec.at("q").get<double>();
    std::optional<UniformGrid> grid;
    if (d <= 2) {
      grid = default_reference_grid(d);
      if (spec.contains("reference_grid")) {
        const json& g = spec.at("reference_grid");
        grid = UniformGrid(d, g.at("extent").get<double>(), g.at("points").get<std::size_t>());
      }
    }
    std::vector<ClassASummand> summands;
    for (const json& s : spec.at("summands")) {
      FactorSource f = parse_factor(s.at("f"));
      FactorSource g = parse_factor(s.at("g"));
      if (grid) {
        summands.emplace_back(std::move(f), std::move(g), q, *grid);
      } else {
        summands.emplace_back(std::move(f), std::move(g), q, d);
      }
    }
    return ClassAMultiplier(d, q, std::move(summands));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed multiplier spec: ") + e.what());
  }
}

ClassAMultiplier load_multiplier_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read multiplier spec '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_multiplier_spec(buf.str());
}

}  // namespace weakmult
