#ifndef BGK_NUMERICS_HPP_
#define BGK_NUMERICS_HPP_

#include <array>

#include "bgk/grid.hpp"
#include "bgk/lattice.hpp"

namespace bgk {

/// [f(x+d) - f(x-d)] / (2d).
inline double central_diff(double f_minus, double f_plus, double delta) {
  return (f_plus - f_minus) / (2.0 * delta);
}

/// Second-order upwind derivative. f0,f1,f2 are the samples at x, x-+d, x-+2d
/// on the upwind side selected by the sign of e_component: the backward
/// branch for e >= 0, the mirrored forward branch for e < 0.
inline double upwind2_diff(double f0, double f1, double f2, double delta, double e_component) {
  const double core = (3.0 * f0 - 4.0 * f1 + f2) / (2.0 * delta);
  return e_component >= 0.0 ? core : -core;
}

/// zeta * central + (1 - zeta) * upwind.
inline double mixed_diff(double central_val, double upwind_val, double zeta) {
  return zeta * central_val + (1.0 - zeta) * upwind_val;
}

/// One-sided second-order derivative at a boundary node. feq0,feq1,feq2 sit at
/// the node and the next two nodes stepping into the domain; inward_sign is
/// the axis direction (+1/-1) pointing into the domain. The result is the
/// derivative along the +axis direction for either wall.
inline double boundary_space_diff(double feq0, double feq1, double feq2, double delta,
                                  int inward_sign) {
  return -inward_sign * (3.0 * feq0 - 4.0 * feq1 + feq2) / (2.0 * delta);
}

/// Difference quotient of boundary equilibria across one step.
inline double boundary_time_diff(double feq_new, double feq_old, double dt) {
  return (feq_new - feq_old) / dt;
}

enum class Axis { x, y };

/// Grid plus edge periodicity. On a periodic axis node 0 and node N-1 are the
/// same physical point; both are stored and the image is synchronized after
/// each step, so stencils may index modulo N-1.
struct DomainLayout {
  GridSpec grid;
  bool periodic_x = false;
  bool periodic_y = false;

  int unique_nx() const { return periodic_x ? grid.nx - 1 : grid.nx; }
  int unique_ny() const { return periodic_y ? grid.ny - 1 : grid.ny; }

  bool is_image(int x, int y) const {
    return (periodic_x && x == grid.nx - 1) || (periodic_y && y == grid.ny - 1);
  }
  bool is_wall(int x, int y) const {
    if (is_image(x, y)) return false;
    return (!periodic_x && (x == 0 || x == grid.nx - 1)) ||
           (!periodic_y && (y == 0 || y == grid.ny - 1));
  }
  bool is_bulk(int x, int y) const {
    const bool bx = periodic_x ? x <= grid.nx - 2 : (x >= 1 && x <= grid.nx - 2);
    const bool by = periodic_y ? y <= grid.ny - 2 : (y >= 1 && y <= grid.ny - 2);
    return bx && by;
  }

  int wrap_x(int x) const {
    const int p = grid.nx - 1;
    x %= p;
    return x < 0 ? x + p : x;
  }
  int wrap_y(int y) const {
    const int p = grid.ny - 1;
    y %= p;
    return y < 0 ? y + p : y;
  }
};

/// Samples of one population plane along one axis at offsets -2..+2 around a
/// node, with availability flags for offsets that leave a wall-bounded domain.
struct StencilSample {
  std::array<double, 5> v{};
  std::array<bool, 5> ok{};
  double delta = 1.0;

  double at(int offset) const { return v[offset + 2]; }
  bool has(int offset) const { return ok[offset + 2]; }
};

StencilSample sample_axis(const double* plane, const DomainLayout& dom, int x, int y, Axis axis);

/// Mixed derivative from a sample: zeta-blend of central and second-order
/// upwind; falls back to pure central where the second upwind sample would
/// leave the domain.
double mixed_sample_diff(const StencilSample& s, double e_component, double zeta);

/// (df_q/dx, df_q/dy) at a bulk node via the mixed scheme per axis.
Vec2 gradient_at_interior(const PopulationField& f, int x, int y, int q,
                          const SchemeParams& params, const DomainLayout& dom,
                          const LatticeModel& model = d2q9());

}  // namespace bgk

#endif  // BGK_NUMERICS_HPP_
