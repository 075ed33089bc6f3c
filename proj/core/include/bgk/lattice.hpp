#ifndef BGK_LATTICE_HPP_
#define BGK_LATTICE_HPP_

#include <array>
#include <cmath>
#include <numbers>

#include "bgk/types.hpp"

namespace bgk {

// D2Q9: index 0 rest, 1-4 axis velocities, 5-8 diagonals.
//
// index:   0   1   2   3   4   5   6   7   8
//   e_x:   0   1   0  -1   0   1  -1  -1   1
//   e_y:   0   0   1   0  -1   1   1  -1  -1
struct LatticeModel {
  static constexpr int kQ = 9;
  std::array<double, kQ> ex{0, 1, 0, -1, 0, 1, -1, -1, 1};
  std::array<double, kQ> ey{0, 0, 1, 0, -1, 1, 1, -1, -1};
  std::array<double, kQ> w{4.0 / 9.0, 1.0 / 9.0,  1.0 / 9.0,  1.0 / 9.0,  1.0 / 9.0,
                           1.0 / 36.0, 1.0 / 36.0, 1.0 / 36.0, 1.0 / 36.0};
  double sound_speed = 1.0 / std::numbers::sqrt3_v<double>;

  // cs^2 kept as the exact rational 1/3; 3, 4.5, 1.5 below are its exact
  // binary reciprocal combinations, so the equilibrium never squares sqrt(3).
  static constexpr double cs2 = 1.0 / 3.0;

  constexpr Vec2 e(int i) const { return {ex[i], ey[i]}; }
};

inline const LatticeModel& d2q9() {
  static const LatticeModel model{};
  return model;
}

struct SchemeParams {
  double tau = 1.0;       // relaxation time
  double tau_star = 1.0;  // boundary relaxation time (= tau unless configured)
  double theta = 0.5;     // degree of implicitness of the collision term
  double zeta = 0.9;      // central / second-order-upwind blend weight
  double dt = 1.0;
  double dx = 1.0;
  double dy = 1.0;

  double pi_ratio() const { return dt / tau; }
};

/// Kinematic viscosity -> relaxation time, nu = tau * cs^2.
double tau_from_viscosity(double nu);

/// Low-Mach quadratic equilibrium. Computed as rho * (w_i * bracket(u)), so it
/// is exactly homogeneous of degree 1 in rho.
Population equilibrium(const MacroState& state, const LatticeModel& model);

/// rho = sum_i f_i, u = sum_i e_i f_i / rho. Throws DegenerateDensityError on
/// rho <= 0.
MacroState moments(const Population& f, const LatticeModel& model);

/// g_i = f_i + pi*theta*(f_i - feq_i)  (auxiliary distribution removing the
/// implicit collision term).
Population g_from_f(const Population& f, const Population& feq, const SchemeParams& params);

/// f_i = (g_i + pi*theta*feq_i) / (1 + pi*theta); exact inverse of g_from_f.
Population f_from_g(const Population& g, const Population& feq, const SchemeParams& params);

namespace detail {

// Unchecked single-value equilibrium, shared by the checked front end and the
// stepper hot loop.
inline double equilibrium_value(double rho, double ux, double uy, double ex, double ey,
                                double w) {
  const double eu = ex * ux + ey * uy;
  const double uu = ux * ux + uy * uy;
  return rho * (w * (1.0 + 3.0 * eu + 4.5 * eu * eu - 1.5 * uu));
}

inline void equilibrium_all(double rho, double ux, double uy, const LatticeModel& m,
                            double* out) {
  for (int i = 0; i < LatticeModel::kQ; ++i) {
    out[i] = equilibrium_value(rho, ux, uy, m.ex[i], m.ey[i], m.w[i]);
  }
}

}  // namespace detail

}  // namespace bgk

#endif  // BGK_LATTICE_HPP_
