#ifndef BGK_GRID_HPP_
#define BGK_GRID_HPP_

#include <vector>

#include "bgk/lattice.hpp"
#include "bgk/types.hpp"

namespace bgk {

// Vertex-centered structured grid: node (i,j) sits at (i*dx, j*dy); nodes with
// i in {0, nx-1} or j in {0, ny-1} lie exactly on the physical boundary.
struct GridSpec {
  int nx = 3;
  int ny = 3;
  double dx = 1.0;
  double dy = 1.0;

  static GridSpec from_extents(double length, double height, int nx, int ny) {
    if (nx < 3 || ny < 3) {
      throw InvalidInputError("GridSpec: need at least 3 nodes per direction");
    }
    return {nx, ny, length / (nx - 1), height / (ny - 1)};
  }

  int size() const { return nx * ny; }
  int idx(int x, int y) const { return y * nx + x; }
  double x_of(int x) const { return x * dx; }
  double y_of(int y) const { return y * dy; }
};

struct ScalarField {
  ScalarField() = default;
  ScalarField(int nx_, int ny_, double fill = 0.0) : nx(nx_), ny(ny_), data(nx_ * ny_, fill) {}

  int nx = 0;
  int ny = 0;
  std::vector<double> data;

  double& operator()(int x, int y) { return data[y * nx + x]; }
  double operator()(int x, int y) const { return data[y * nx + x]; }
};

/// Nine population planes over the grid, plane-major (SoA) for stencil sweeps.
struct PopulationField {
  PopulationField() = default;
  PopulationField(int nx_, int ny_) : nx(nx_), ny(ny_), plane_stride(nx_ * ny_),
                                      data(9 * nx_ * ny_, 0.0) {}

  int nx = 0;
  int ny = 0;
  int plane_stride = 0;
  std::vector<double> data;

  double* plane(int q) { return data.data() + q * plane_stride; }
  const double* plane(int q) const { return data.data() + q * plane_stride; }
  double& at(int q, int x, int y) { return data[q * plane_stride + y * nx + x]; }
  double at(int q, int x, int y) const { return data[q * plane_stride + y * nx + x]; }

  Population node(int x, int y) const {
    Population p;
    for (int q = 0; q < 9; ++q) p[q] = at(q, x, y);
    return p;
  }
  void set_node(int x, int y, const Population& p) {
    for (int q = 0; q < 9; ++q) at(q, x, y) = p[q];
  }
};

struct MacroField {
  MacroField() = default;
  MacroField(int nx_, int ny_) : rho(nx_, ny_, 1.0), ux(nx_, ny_), uy(nx_, ny_) {}

  ScalarField rho;
  ScalarField ux;
  ScalarField uy;

  MacroState at(int x, int y) const { return {rho(x, y), {ux(x, y), uy(x, y)}}; }
};

}  // namespace bgk

#endif  // BGK_GRID_HPP_
