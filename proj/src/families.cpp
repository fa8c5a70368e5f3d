#include "weakmult/families.hpp"

#include <cmath>
#include <stdexcept>

#include "weakmult/rng.hpp"

namespace weakmult {

const std::vector<std::string>& known_families() {
  static const std::vector<std::string> names{"gaussians", "indicators", "bumps"};
  return names;
}

std::vector<FamilyMember> make_family(const std::string& name, std::span<const double> n_values,
                                      std::uint64_t seed) {
  if (n_values.empty()) throw std::invalid_argument("input family needs at least one n value");
  std::vector<FamilyMember> out;
  Rng rng(seed);
  if (name == "gaussians") {
    for (double n : n_values) out.push_back({gaussian_family(n), n});
    return out;
  }
  if (name == "indicators") {
    const double offset = rng.uniform(-0.25, 0.25);
    for (double n : n_values) {
      const double s = 4.0 * std::sqrt(n);
      out.push_back({indicator((offset - 0.5) * s, (offset + 0.5) * s), n});
    }
    return out;
  }
  if (name == "bumps") {
    struct Atom {
      double weight;
      double center;
      double width;
    };
    std::vector<Atom> atoms(static_cast<std::size_t>(rng.integer(1, 3)));
    for (Atom& a : atoms) {
      a.weight = rng.uniform(0.5, 1.5);
      a.center = rng.uniform(-1.0, 1.0);
      a.width = rng.uniform(0.5, 1.5);
    }
    for (double n : n_values) {
      const double s = std::sqrt(n);
      std::vector<std::pair<double, FunctionDescriptor>> terms;
      for (const Atom& a : atoms) {
        const double w = a.width * s;
        terms.emplace_back(a.weight, gaussian(1.0 / (w * w), 1.0, {a.center * s, 0.0, 0.0}));
      }
      out.push_back({combination(std::move(terms)), n});
    }
    return out;
  }
  std::string known;
  for (const auto& k : known_families()) known += (known.empty() ? "" : ", ") + k;
  throw std::invalid_argument("unknown family '" + name + "' (known families: " + known + ")");
}

ClassAMultiplier random_gaussian_multiplier(int dimension, double q, std::uint64_t seed,
                                            const UniformGrid& reference_grid) {
  Rng rng(seed);
  auto factor = [&]() {
    const double a = rng.uniform(2.0, 8.0);
    const double c = rng.uniform(0.5, 2.0);
    std::array<double, 3> center{};
    for (int i = 0; i < dimension; ++i) center[static_cast<std::size_t>(i)] = rng.uniform(-0.5, 0.5);
    return gaussian(a, c, center);
  };
  const int count = rng.integer(1, 3);
  std::vector<ClassASummand> summands;
  for (int i = 0; i < count; ++i) {
    FunctionDescriptor f = factor();
    FunctionDescriptor g = factor();
    summands.emplace_back(std::move(f), std::move(g), q, reference_grid);
  }
  return ClassAMultiplier(dimension, q, std::move(summands));
}

}  // namespace weakmult
