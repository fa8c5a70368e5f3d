#include "weakmult/descriptor.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace weakmult {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double FunctionDescriptor::operator()(std::span<const double> x) const {
  return std::visit(
      Overloaded{
          [&](const Gaussian& g) {
            double r2 = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
              const double d = x[i] - g.center[i];
              r2 += d * d;
            }
            return g.c * std::exp(-g.a * r2);
          },
          [&](const TruncatedPower&) {
            const double y = x[0];
            return y > 1.0 ? 1.0 / (y * y) : 0.0;
          },
          [&](const Indicator& box) {
            for (std::size_t i = 0; i < x.size(); ++i) {
              if (x[i] < box.lo[i] || x[i] >= box.hi[i]) return 0.0;
            }
            return 1.0;
          },
          [&](const Product& p) {
            double v = 1.0;
            for (const auto& f : p.factors) v *= f(x);
            return v;
          },
          [&](const LinearCombination& lc) {
            double v = 0.0;
            for (const auto& [w, f] : lc.terms) v += w * f(x);
            return v;
          },
      },
      form_);
}

bool FunctionDescriptor::is_gaussian_mixture() const {
  return std::visit(Overloaded{
                        [](const Gaussian&) { return true; },
                        [](const LinearCombination& lc) {
                          for (const auto& term : lc.terms) {
                            if (!term.second.is_gaussian_mixture()) return false;
                          }
                          return true;
                        },
                        [](const auto&) { return false; },
                    },
                    form_);
}

Complex FunctionDescriptor::inverse_transform_at(std::span<const double> x) const {
  using std::numbers::pi;
  return std::visit(
      Overloaded{
          [&](const Gaussian& g) {
            const double d = static_cast<double>(x.size());
            double r2 = 0.0;
            double phase = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
              r2 += x[i] * x[i];
              phase += x[i] * g.center[i];
            }
            const double amp = g.c * std::pow(pi / g.a, 0.5 * d) * std::exp(-pi * pi * r2 / g.a);
            return amp * std::polar(1.0, 2.0 * pi * phase);
          },
          [&](const LinearCombination& lc) {
            Complex v{};
            for (const auto& [w, f] : lc.terms) v += w * f.inverse_transform_at(x);
            return v;
          },
          [](const auto&) -> Complex {
            throw std::invalid_argument("closed-form transform needs a Gaussian mixture");
          },
      },
      form_);
}

std::string FunctionDescriptor::describe() const {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const Gaussian& g) { out << "gaussian(a=" << g.a << ",c=" << g.c << ")"; },
                 [&](const TruncatedPower&) { out << "truncated_power"; },
                 [&](const Indicator& b) { out << "indicator[" << b.lo[0] << "," << b.hi[0] << ")"; },
                 [&](const Product& p) {
                   out << "product(";
                   for (std::size_t i = 0; i < p.factors.size(); ++i) {
                     out << (i ? "," : "") << p.factors[i].describe();
                   }
                   out << ")";
                 },
                 [&](const LinearCombination& lc) {
                   out << "sum(";
                   for (std::size_t i = 0; i < lc.terms.size(); ++i) {
                     out << (i ? "," : "") << lc.terms[i].first << "*" << lc.terms[i].second.describe();
                   }
                   out << ")";
                 },
             },
             form_);
  return out.str();
}

FunctionDescriptor gaussian(double a, double c, std::array<double, 3> center) {
  if (!(a > 0.0)) throw std::invalid_argument("gaussian: a must be positive");
  return FunctionDescriptor(Gaussian{a, c, center});
}

FunctionDescriptor truncated_power() { return FunctionDescriptor(TruncatedPower{}); }

FunctionDescriptor indicator(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("indicator: need lo < hi");
  return FunctionDescriptor(Indicator{{lo, 0.0, 0.0}, {hi, 0.0, 0.0}});
}

FunctionDescriptor box(std::array<double, 2> lo, std::array<double, 2> hi) {
  if (!(lo[0] < hi[0]) || !(lo[1] < hi[1])) throw std::invalid_argument("box: need lo < hi");
  return FunctionDescriptor(Indicator{{lo[0], lo[1], 0.0}, {hi[0], hi[1], 0.0}});
}

FunctionDescriptor product(FunctionDescriptor f, FunctionDescriptor g) {
  return FunctionDescriptor(Product{{std::move(f), std::move(g)}});
}

FunctionDescriptor combination(std::vector<std::pair<double, FunctionDescriptor>> terms) {
  return FunctionDescriptor(LinearCombination{std::move(terms)});
}

FunctionDescriptor gaussian_family(double n) {
  if (!(n > 0.0)) throw std::invalid_argument("gaussian_family: n must be positive");
  return gaussian(1.0 / n, 1.0 / std::sqrt(n));
}

SampledFunction sample(const FunctionDescriptor& f, const UniformGrid& grid) {
  const int d = grid.dimension();
  std::vector<Complex> values(grid.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto p = grid.point(i);
    const double v = f(std::span<const double>(p.data(), static_cast<std::size_t>(d)));
    if (!std::isfinite(v)) {
      throw std::domain_error("sample: non-finite value of " + f.describe());
    }
    values[i] = v;
  }
  return SampledFunction(grid, std::move(values));
}

}  // namespace weakmult
