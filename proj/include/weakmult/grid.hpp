#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace weakmult {

using Complex = std::complex<double>;

/// Centered uniform grid on [-L/2, L/2)^d, d in {1, 2}, with N points per axis.
/// Points are x_j = -L/2 + j * (L / N).
class UniformGrid {
 public:
  UniformGrid(int dimension, double extent, std::size_t points);

  int dimension() const { return dimension_; }
  double extent() const { return extent_; }
  std::size_t points_per_axis() const { return points_; }
  double spacing() const { return extent_ / static_cast<double>(points_); }
  double cell_measure() const;
  std::size_t size() const;

  double coordinate(std::size_t j) const {
    return -0.5 * extent_ + static_cast<double>(j) * spacing();
  }
  /// Coordinates of flat (row-major) index `flat`; unused trailing entries are zero.
  std::array<double, 2> point(std::size_t flat) const;

  /// Frequency grid paired with this one by the discrete transform:
  /// same point count, extent N/L, spacing 1/L.
  UniformGrid dual() const;

  bool operator==(const UniformGrid& other) const = default;

 private:
  int dimension_;
  double extent_;
  std::size_t points_;
};

UniformGrid make_grid(int dimension, double extent, std::size_t points);

/// Smallest power of two >= n (and >= 4).
std::size_t next_power_of_two(std::size_t n);

/// Complex samples on a UniformGrid, row-major over axes. Values are finite.
class SampledFunction {
 public:
  SampledFunction(UniformGrid grid, std::vector<Complex> values);
  static SampledFunction zeros(const UniformGrid& grid);

  const UniformGrid& grid() const { return grid_; }
  std::span<const Complex> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Complex& operator[](std::size_t i) const { return values_[i]; }

  /// Measure of the set of nonzero cells.
  double support_measure() const;

  SampledFunction scaled(Complex factor) const;

  /// Pointwise operations; both operands must share a grid.
  friend SampledFunction operator+(const SampledFunction& a, const SampledFunction& b);
  friend SampledFunction operator-(const SampledFunction& a, const SampledFunction& b);
  friend SampledFunction operator*(const SampledFunction& a, const SampledFunction& b);

 private:
  UniformGrid grid_;
  std::vector<Complex> values_;
};

void require_same_grid(const SampledFunction& a, const SampledFunction& b, const char* where);

/// Debug export: one row per sample, columns index, x[, y], re, im.
void write_csv(std::ostream& out, const SampledFunction& f);

}  // namespace weakmult
