#include "bgk/lattice.hpp"

#include <cmath>

namespace bgk {

double tau_from_viscosity(double nu) {
  if (!std::isfinite(nu) || nu <= 0.0) {
    throw InvalidInputError("tau_from_viscosity: nu must be finite and > 0, got " +
                            std::to_string(nu));
  }
  return nu / LatticeModel::cs2;
}

Population equilibrium(const MacroState& state, const LatticeModel& model) {
  if (!std::isfinite(state.rho) || !std::isfinite(state.u.x) || !std::isfinite(state.u.y)) {
    throw InvalidInputError("equilibrium: non-finite macroscopic state");
  }
  if (state.rho <= 0.0) {
    throw InvalidInputError("equilibrium: rho must be > 0, got " + std::to_string(state.rho));
  }
  Population out;
  detail::equilibrium_all(state.rho, state.u.x, state.u.y, model, out.data());
  return out;
}

MacroState moments(const Population& f, const LatticeModel& model) {
  double rho = 0.0;
  double mx = 0.0;
  double my = 0.0;
  for (int i = 0; i < LatticeModel::kQ; ++i) {
    rho += f[i];
    mx += model.ex[i] * f[i];
    my += model.ey[i] * f[i];
  }
  if (!(rho > 0.0)) {
    throw DegenerateDensityError(rho);
  }
  return {rho, {mx / rho, my / rho}};
}

Population g_from_f(const Population& f, const Population& feq, const SchemeParams& params) {
  const double c = params.pi_ratio() * params.theta;
  Population g;
  for (int i = 0; i < LatticeModel::kQ; ++i) {
    g[i] = f[i] + c * (f[i] - feq[i]);
  }
  return g;
}

Population f_from_g(const Population& g, const Population& feq, const SchemeParams& params) {
  const double c = params.pi_ratio() * params.theta;
  const double inv = 1.0 / (1.0 + c);
  Population f;
  for (int i = 0; i < LatticeModel::kQ; ++i) {
    f[i] = (g[i] + c * feq[i]) * inv;
  }
  return f;
}

}  // namespace bgk
