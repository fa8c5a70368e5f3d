#include "weakmult/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "weakmult/norms.hpp"
#include "weakmult/restriction.hpp"

namespace weakmult {

bool ChainReport::passed() const {
  if (steps.empty()) return false;
  for (const auto& s : steps) {
    if (!s.pass) return false;
  }
  for (const auto& h : hausdorff_young) {
    if (!h.pass) return false;
  }
  return true;
}

int ChainReport::first_failure() const {
  for (const auto& s : steps) {
    if (!s.pass) return s.step;
  }
  return 0;
}

namespace {

struct SummandData {
  SampledFunction f_spatial;
  std::vector<Complex> f_nodes;
  std::vector<Complex> g_nodes;
  double f_sup = 0.0;
  double f_l1 = 0.0;
  double g_lq = 0.0;
  double g_sphere_l2 = 0.0;
};

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

ChainStep make_step(int step, std::string name, double lhs, double rhs, double constant) {
  const bool pass = std::isfinite(lhs) && std::isfinite(rhs) &&
                    lhs <= constant * rhs * (1.0 + kChainRelativeSlack);
  return {step, std::move(name), lhs, rhs, constant, pass};
}

}  // namespace

ChainReport proof_chain_check(const ClassAMultiplier& m, const SphereQuadrature& quad,
                              const UniformGrid& grid, double probe_constant) {
  if (m.summands().empty()) throw std::invalid_argument("proof_chain_check: multiplier has no summands");
  if (m.dimension() != grid.dimension() || quad.ambient_dimension() != grid.dimension()) {
    throw std::invalid_argument("proof_chain_check: multiplier, grid and sphere dimensions differ");
  }
  const UniformGrid freq = grid.dual();
  const std::size_t count = m.summands().size();
  const std::size_t nodes = quad.size();

  std::vector<SummandData> data;
  data.reserve(count);
  for (const auto& s : m.summands()) {
    const SampledFunction f = realize(s.f(), freq);
    const SampledFunction g = realize(s.g(), freq);
    SampledFunction f_spatial = inverse_ft(f, grid);
    const SampledFunction g_spatial = inverse_ft(g, grid);
    SummandData d{f_spatial, values_on_sphere(f_spatial, quad), values_on_sphere(g_spatial, quad)};
    d.f_sup = std::max(lp_norm(f_spatial, kInfinity), max_abs(d.f_nodes));
    d.f_l1 = lp_norm(f, 1.0);
    d.g_lq = lp_norm(g, m.q());
    std::vector<double> sq(nodes);
    for (std::size_t k = 0; k < nodes; ++k) sq[k] = std::norm(d.g_nodes[k]);
    d.g_sphere_l2 = std::sqrt(quad.integrate(sq));
    data.push_back(std::move(d));
  }

  ChainReport report;
  report.restriction_constant = probe_constant;
  for (const auto& d : data) {
    const double ratio = d.g_lq > 0.0 ? d.g_sphere_l2 / d.g_lq : 0.0;
    report.summand_ratios.push_back(ratio);
    report.restriction_constant = std::max(report.restriction_constant, ratio);
  }

  // Kernel at the nodes and per-node integrands.
  std::vector<double> k_abs(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    Complex sum{};
    for (const auto& d : data) sum += d.f_nodes[k] * d.g_nodes[k];
    k_abs[k] = std::abs(sum);
  }

  auto integrate = [&](auto&& integrand) {
    std::vector<double> v(nodes);
    for (std::size_t k = 0; k < nodes; ++k) v[k] = integrand(k);
    return quad.integrate(v);
  };

  const double q0 = integrate([&](std::size_t k) { return k_abs[k] * std::log1p(k_abs[k]); });

  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
  for (const auto& d : data) {
    q1 += integrate([&](std::size_t k) { return std::abs(d.f_nodes[k] * d.g_nodes[k]) * std::log1p(k_abs[k]); });
    q2 += d.f_sup * integrate([&](std::size_t k) { return std::abs(d.g_nodes[k]) * std::log1p(k_abs[k]); });
    q3 += d.f_sup * integrate([&](std::size_t k) { return std::abs(d.g_nodes[k]) * k_abs[k]; });
  }

  double q4 = 0.0;
  double q5 = 0.0;
  double q6 = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const SummandData& a = data[i];
      const SummandData& b = data[j];
      double sup_product = lp_norm(a.f_spatial * b.f_spatial, kInfinity);
      for (std::size_t k = 0; k < nodes; ++k) {
        sup_product = std::max(sup_product, std::abs(a.f_nodes[k] * b.f_nodes[k]));
      }
      q4 += sup_product * integrate([&](std::size_t k) { return std::abs(a.g_nodes[k]) * std::abs(b.g_nodes[k]); });
      q5 += sup_product * a.g_sphere_l2 * b.g_sphere_l2;
      q6 += a.f_l1 * b.f_l1 * a.g_lq * b.g_lq;
    }
  }

  const double c2 = report.restriction_constant * report.restriction_constant;
  report.steps = {
      make_step(1, "triangle inequality, term by term", q0, q1, 1.0),
      make_step(2, "factor out sup |f_i^v|", q1, q2, 1.0),
      make_step(3, "log(1+x) <= x", q2, q3, 1.0),
      make_step(4, "expand |K| into the double sum", q3, q4, 1.0),
      make_step(5, "Holder on the sphere", q4, q5, 1.0),
      make_step(6, "restriction and Hausdorff-Young", q5, q6, c2),
  };
  for (std::size_t i = 0; i < count; ++i) {
    const double sup = lp_norm(data[i].f_spatial, kInfinity);
    report.hausdorff_young.push_back(
        {i, sup, data[i].f_l1, sup <= data[i].f_l1 * (1.0 + kChainRelativeSlack)});
  }
  return report;
}

}  // namespace weakmult
