#include "weakmult/grid.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "weakmult/format.hpp"

namespace weakmult {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

UniformGrid::UniformGrid(int dimension, double extent, std::size_t points)
    : dimension_(dimension), extent_(extent), points_(points) {
  if (dimension != 1 && dimension != 2) {
    throw std::invalid_argument("grid dimension must be 1 or 2, got " + std::to_string(dimension));
  }
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw std::invalid_argument("grid extent must be positive and finite");
  }
  if (points < 4 || !is_power_of_two(points)) {
    throw std::invalid_argument("grid point count must be a power of two >= 4, got " +
                                std::to_string(points));
  }
}

double UniformGrid::cell_measure() const {
  const double h = spacing();
  return dimension_ == 1 ? h : h * h;
}

std::size_t UniformGrid::size() const { return dimension_ == 1 ? points_ : points_ * points_; }

std::array<double, 2> UniformGrid::point(std::size_t flat) const {
  if (dimension_ == 1) return {coordinate(flat), 0.0};
  return {coordinate(flat / points_), coordinate(flat % points_)};
}

UniformGrid UniformGrid::dual() const {
  return UniformGrid(dimension_, static_cast<double>(points_) / extent_, points_);
}

UniformGrid make_grid(int dimension, double extent, std::size_t points) {
  return UniformGrid(dimension, extent, points);
}

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 4;
  while (p < n) p <<= 1;
  return p;
}

SampledFunction::SampledFunction(UniformGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("sample count " + std::to_string(values_.size()) +
                                " does not match grid size " + std::to_string(grid_.size()));
  }
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::domain_error("sampled function contains a non-finite value");
    }
  }
}

SampledFunction SampledFunction::zeros(const UniformGrid& grid) {
  return SampledFunction(grid, std::vector<Complex>(grid.size()));
}

double SampledFunction::support_measure() const {
  std::size_t count = 0;
  for (const Complex& v : values_) count += (v != Complex{}) ? 1 : 0;
  return grid_.cell_measure() * static_cast<double>(count);
}

SampledFunction SampledFunction::scaled(Complex factor) const {
  std::vector<Complex> out(values_);
  for (Complex& v : out) v *= factor;
  return SampledFunction(grid_, std::move(out));
}

void require_same_grid(const SampledFunction& a, const SampledFunction& b, const char* where) {
  if (!(a.grid() == b.grid())) {
    throw std::invalid_argument(std::string(where) + ": operands live on different grids");
  }
}

namespace {

template <typename Op>
SampledFunction pointwise(const SampledFunction& a, const SampledFunction& b, Op op,
                          const char* where) {
  require_same_grid(a, b, where);
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return SampledFunction(a.grid(), std::move(out));
}

}  // namespace

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b) {
  return pointwise(a, b, std::plus<>{}, "operator+");
}

SampledFunction operator-(const SampledFunction& a, const SampledFunction& b) {
  return pointwise(a, b, std::minus<>{}, "operator-");
}

SampledFunction operator*(const SampledFunction& a, const SampledFunction& b) {
  return pointwise(a, b, std::multiplies<>{}, "operator*");
}

void write_csv(std::ostream& out, const SampledFunction& f) {
  const UniformGrid& g = f.grid();
  out << (g.dimension() == 1 ? "index,x,re,im\n" : "index,x,y,re,im\n");
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto p = g.point(i);
    out << i << ',' << format_double(p[0]) << ',';
    if (g.dimension() == 2) out << format_double(p[1]) << ',';
    out << format_double(f[i].real()) << ',' << format_double(f[i].imag()) << '\n';
  }
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace weakmult
