#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace kinlb {

using Position = std::array<double, 2>;

struct Box {
  Position lo{0.0, 0.0};
  Position hi{1.0, 1.0};

  bool operator==(const Box&) const = default;
};

/// Uniform structured lattice in 1 or 2 dimensions.
///
/// Cells are stored with x1 running fastest. Along a periodic axis the
/// upper endpoint is identified with the lower one, so the spacing is
/// L/n; along a bounded axis both endpoints are lattice points and the
/// spacing is L/(n-1). The spacing must agree across axes.
class Grid {
 public:
  Grid() = default;
  Grid(int dim, std::array<int, 2> extent, Box domain, std::array<bool, 2> periodic);

  int dim() const { return dim_; }
  int extent(int axis) const { return extent_[axis]; }
  std::array<int, 2> extents() const { return extent_; }
  bool periodic(int axis) const { return periodic_[axis]; }
  double dx() const { return dx_; }
  const Box& domain() const { return domain_; }
  std::size_t size() const;

  std::size_t index(int i, int j = 0) const {
    return static_cast<std::size_t>(j) * extent_[0] + i;
  }
  std::array<int, 2> coords(std::size_t cell) const {
    return {static_cast<int>(cell % extent_[0]), static_cast<int>(cell / extent_[0])};
  }
  Position position(int i, int j = 0) const {
    return {domain_.lo[0] + i * dx_, dim_ > 1 ? domain_.lo[1] + j * dx_ : 0.0};
  }
  Position position(std::size_t cell) const {
    auto c = coords(cell);
    return position(c[0], c[1]);
  }

  /// Cell volume dx^D.
  double cell_volume() const;

  bool operator==(const Grid&) const = default;

 private:
  int dim_ = 1;
  std::array<int, 2> extent_{3, 1};
  Box domain_{};
  std::array<bool, 2> periodic_{false, false};
  double dx_ = 0.5;
};

/// Lattice-sampled conserved variable.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(Grid grid, double fill = 0.0)
      : grid_(std::move(grid)), values_(grid_.size(), fill) {}

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  double& operator[](std::size_t c) { return values_[c]; }
  double operator[](std::size_t c) const { return values_[c]; }
  double& at(int i, int j = 0) { return values_[grid_.index(i, j)]; }
  double at(int i, int j = 0) const { return values_[grid_.index(i, j)]; }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  bool all_finite() const;

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// N population planes over one grid, plane-major storage.
class DistributionField {
 public:
  DistributionField() = default;
  DistributionField(Grid grid, int populations)
      : grid_(std::move(grid)), n_(populations), data_(grid_.size() * populations, 0.0) {}

  const Grid& grid() const { return grid_; }
  int populations() const { return n_; }
  std::size_t cells() const { return grid_.size(); }

  std::span<double> plane(int n) { return {data_.data() + n * cells(), cells()}; }
  std::span<const double> plane(int n) const { return {data_.data() + n * cells(), cells()}; }
  double& operator()(int n, std::size_t cell) { return data_[n * cells() + cell]; }
  double operator()(int n, std::size_t cell) const { return data_[n * cells() + cell]; }

  std::span<const double> raw() const { return data_; }

 private:
  Grid grid_;
  int n_ = 0;
  std::vector<double> data_;
};

}  // namespace kinlb
