#include "bgk/numerics.hpp"

namespace bgk {

StencilSample sample_axis(const double* plane, const DomainLayout& dom, int x, int y,
                          Axis axis) {
  const int nx = dom.grid.nx;
  const int ny = dom.grid.ny;
  StencilSample s;
  s.delta = axis == Axis::x ? dom.grid.dx : dom.grid.dy;
  const bool periodic = axis == Axis::x ? dom.periodic_x : dom.periodic_y;
  const int n = axis == Axis::x ? nx : ny;
  const int pos = axis == Axis::x ? x : y;
  for (int k = -2; k <= 2; ++k) {
    int p = pos + k;
    if (periodic) {
      p = axis == Axis::x ? dom.wrap_x(p) : dom.wrap_y(p);
    } else if (p < 0 || p > n - 1) {
      continue;
    }
    const int xi = axis == Axis::x ? p : x;
    const int yi = axis == Axis::x ? y : p;
    s.v[k + 2] = plane[yi * nx + xi];
    s.ok[k + 2] = true;
  }
  return s;
}

double mixed_sample_diff(const StencilSample& s, double e_component, double zeta) {
  if (!s.has(-1) || !s.has(+1)) {
    throw InvalidInputError("mixed_sample_diff: node too close to a wall for the central pair");
  }
  const double central = central_diff(s.at(-1), s.at(+1), s.delta);
  const bool backward = e_component >= 0.0;
  const int far = backward ? -2 : +2;
  if (!s.has(far)) {
    return central;  // near-wall fallback keeps second order with existing nodes
  }
  const double upwind = backward
                            ? upwind2_diff(s.at(0), s.at(-1), s.at(-2), s.delta, e_component)
                            : upwind2_diff(s.at(0), s.at(+1), s.at(+2), s.delta, e_component);
  return mixed_diff(central, upwind, zeta);
}

Vec2 gradient_at_interior(const PopulationField& f, int x, int y, int q,
                          const SchemeParams& params, const DomainLayout& dom,
                          const LatticeModel& model) {
  if (!dom.is_bulk(x, y)) {
    throw InvalidInputError("gradient_at_interior: node (" + std::to_string(x) + "," +
                            std::to_string(y) + ") is not a bulk node");
  }
  const double* plane = f.plane(q);
  const StencilSample sx = sample_axis(plane, dom, x, y, Axis::x);
  const StencilSample sy = sample_axis(plane, dom, x, y, Axis::y);
  return {mixed_sample_diff(sx, model.ex[q], params.zeta),
          mixed_sample_diff(sy, model.ey[q], params.zeta)};
}

}  // namespace bgk
