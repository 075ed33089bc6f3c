#include "bgk/boundary.hpp"

#include <cmath>

namespace bgk {

void BoundarySpec::validate() const {
  const bool lx = left.kind == EdgeKind::periodic;
  const bool rx = right.kind == EdgeKind::periodic;
  const bool by = bottom.kind == EdgeKind::periodic;
  const bool ty = top.kind == EdgeKind::periodic;
  if (lx != rx) {
    throw InvalidInputError("BoundarySpec: left/right must both be periodic or both walls");
  }
  if (by != ty) {
    throw InvalidInputError("BoundarySpec: bottom/top must both be periodic or both walls");
  }
}

BoundarySpec BoundarySpec::couette(double u0, Closure closure) {
  BoundarySpec spec;
  spec.left.kind = EdgeKind::periodic;
  spec.right.kind = EdgeKind::periodic;
  spec.bottom = {EdgeKind::wall, {0.0, 0.0}};
  spec.top = {EdgeKind::wall, {u0, 0.0}};
  spec.closure = closure;
  return spec;
}

BoundarySpec BoundarySpec::cavity(Vec2 u_lid, Closure closure) {
  BoundarySpec spec;
  spec.bottom = {EdgeKind::wall, {0.0, 0.0}};
  spec.top = {EdgeKind::wall, u_lid};
  spec.left = {EdgeKind::wall, {0.0, 0.0}};
  spec.right = {EdgeKind::wall, {0.0, 0.0}};
  spec.closure = closure;
  return spec;
}

BoundarySpec BoundarySpec::all_periodic() {
  BoundarySpec spec;
  spec.bottom.kind = EdgeKind::periodic;
  spec.top.kind = EdgeKind::periodic;
  spec.left.kind = EdgeKind::periodic;
  spec.right.kind = EdgeKind::periodic;
  return spec;
}

Population wall_equilibrium(double rho_flow, Vec2 u_wall, const LatticeModel& model) {
  return equilibrium({rho_flow, u_wall}, model);
}

Population f1_correction(const WallNodeContext& ctx, const SchemeParams& params,
                         const LatticeModel& model) {
  Population out;
  for (int i = 0; i < LatticeModel::kQ; ++i) {
    out[i] = -params.tau_star * (ctx.dfeq_dt[i] + model.ex[i] * ctx.dfeq_dx[i] +
                                 model.ey[i] * ctx.dfeq_dy[i]);
  }
  return out;
}

Population close_proposed(const WallNodeContext& ctx, const SchemeParams& params,
                          const LatticeModel& model) {
  const Population corr = f1_correction(ctx, params, model);
  Population out;
  for (int i = 0; i < LatticeModel::kQ; ++i) {
    out[i] = ctx.feq_wall[i] + corr[i];
  }
  return out;
}

Population close_guo(const WallNodeContext& ctx, const LatticeModel&) {
  Population out;
  for (int i = 0; i < LatticeModel::kQ; ++i) {
    out[i] = ctx.feq_wall[i] + (ctx.f_flow[i] - ctx.feq_flow[i]);
  }
  return out;
}

Population close_higher_order(const WallNodeContext& ctx, const SchemeParams& params,
                              const LatticeModel& model) {
  const Population corr = f1_correction(ctx, params, model);
  Population out;
  for (int i = 0; i < LatticeModel::kQ; ++i) {
    const double flow_corr =
        params.tau_star * (ctx.dfeq_flow_dt[i] + model.ex[i] * ctx.dfeq_flow_dx[i] +
                           model.ey[i] * ctx.dfeq_flow_dy[i]);
    // grouped so tau_star = 0 reproduces close_guo bit for bit
    out[i] = (ctx.feq_wall[i] + corr[i]) + ((ctx.f_flow[i] - ctx.feq_flow[i]) + flow_corr);
  }
  return out;
}

namespace {

Vec2 corner_velocity(const Edge& a, const Edge& b) {
  // the slower wall wins at a corner (regularizes the lid discontinuity)
  return norm(a.u_wall) <= norm(b.u_wall) ? a.u_wall : b.u_wall;
}

}  // namespace

std::vector<WallNode> enumerate_wall_nodes(const DomainLayout& dom, const BoundarySpec& spec) {
  std::vector<WallNode> nodes;
  const int nx = dom.grid.nx;
  const int ny = dom.grid.ny;
  const bool walls_x = !dom.periodic_x;  // left/right are walls
  const bool walls_y = !dom.periodic_y;  // bottom/top are walls

  auto is_corner_x = [&](int x) { return walls_x && (x == 0 || x == nx - 1); };

  if (walls_y) {
    for (int x = 0; x < dom.unique_nx(); ++x) {
      const int sx = x == 0 ? 1 : -1;  // inward x offset if this is a corner
      if (is_corner_x(x)) {
        nodes.push_back({x, 0, sx, 1, x + sx, 1, corner_velocity(spec.bottom, x == 0 ? spec.left : spec.right), true});
        nodes.push_back({x, ny - 1, sx, -1, x + sx, ny - 2,
                         corner_velocity(spec.top, x == 0 ? spec.left : spec.right), true});
      } else {
        nodes.push_back({x, 0, 0, 1, x, 1, spec.bottom.u_wall, false});
        nodes.push_back({x, ny - 1, 0, -1, x, ny - 2, spec.top.u_wall, false});
      }
    }
  }
  if (walls_x) {
    const int y_lo = walls_y ? 1 : 0;
    const int y_hi = walls_y ? ny - 2 : dom.unique_ny() - 1;
    for (int y = y_lo; y <= y_hi; ++y) {
      nodes.push_back({0, y, 1, 0, 1, y, spec.left.u_wall, false});
      nodes.push_back({nx - 1, y, -1, 0, nx - 2, y, spec.right.u_wall, false});
    }
  }
  return nodes;
}

namespace {

// One-sided (Eq.-29 style) derivative of every population of an equilibrium
// field at a wall node, along one axis, stepping into the domain.
void one_sided_axis(const PopulationField& feq, int x, int y, int sgn, Axis axis, double delta,
                    Population& out) {
  for (int q = 0; q < LatticeModel::kQ; ++q) {
    const double f0 = feq.at(q, x, y);
    const double f1 = axis == Axis::x ? feq.at(q, x + sgn, y) : feq.at(q, x, y + sgn);
    const double f2 = axis == Axis::x ? feq.at(q, x + 2 * sgn, y) : feq.at(q, x, y + 2 * sgn);
    out[q] = boundary_space_diff(f0, f1, f2, delta, sgn);
  }
}

// Central derivative along the wall tangent, wrapping on periodic tangents.
void tangential_axis(const PopulationField& feq, const DomainLayout& dom, int x, int y,
                     Axis axis, double delta, Population& out) {
  int xm = x, xp = x, ym = y, yp = y;
  if (axis == Axis::x) {
    xm = dom.periodic_x ? dom.wrap_x(x - 1) : x - 1;
    xp = dom.periodic_x ? dom.wrap_x(x + 1) : x + 1;
  } else {
    ym = dom.periodic_y ? dom.wrap_y(y - 1) : y - 1;
    yp = dom.periodic_y ? dom.wrap_y(y + 1) : y + 1;
  }
  for (int q = 0; q < LatticeModel::kQ; ++q) {
    const double fm = axis == Axis::x ? feq.at(q, xm, y) : feq.at(q, x, ym);
    const double fp = axis == Axis::x ? feq.at(q, xp, y) : feq.at(q, x, yp);
    out[q] = central_diff(fm, fp, delta);
  }
}

void mixed_interior_axis(const PopulationField& feq, const DomainLayout& dom, int x, int y,
                         Axis axis, double zeta, const LatticeModel& model, Population& out) {
  for (int q = 0; q < LatticeModel::kQ; ++q) {
    const StencilSample s = sample_axis(feq.plane(q), dom, x, y, axis);
    const double e = axis == Axis::x ? model.ex[q] : model.ey[q];
    out[q] = mixed_sample_diff(s, e, zeta);
  }
}

}  // namespace

WallNodeContext build_wall_context(const WallNode& node, const PopulationField& feq_now,
                                   const PopulationField& feq_prev, const PopulationField& g_now,
                                   const DomainLayout& dom, const SchemeParams& params,
                                   const LatticeModel& model, bool has_history) {
  WallNodeContext ctx;
  ctx.feq_wall = feq_now.node(node.x, node.y);

  if (has_history) {
    for (int q = 0; q < LatticeModel::kQ; ++q) {
      ctx.dfeq_dt[q] =
          boundary_time_diff(ctx.feq_wall[q], feq_prev.at(q, node.x, node.y), params.dt);
    }
  }

  if (node.nrm_x != 0) {
    one_sided_axis(feq_now, node.x, node.y, node.nrm_x, Axis::x, params.dx, ctx.dfeq_dx);
  } else {
    tangential_axis(feq_now, dom, node.x, node.y, Axis::x, params.dx, ctx.dfeq_dx);
  }
  if (node.nrm_y != 0) {
    one_sided_axis(feq_now, node.x, node.y, node.nrm_y, Axis::y, params.dy, ctx.dfeq_dy);
  } else {
    tangential_axis(feq_now, dom, node.x, node.y, Axis::y, params.dy, ctx.dfeq_dy);
  }

  ctx.feq_flow = feq_now.node(node.flow_x, node.flow_y);
  ctx.f_flow = f_from_g(g_now.node(node.flow_x, node.flow_y), ctx.feq_flow, params);
  if (has_history) {
    for (int q = 0; q < LatticeModel::kQ; ++q) {
      ctx.dfeq_flow_dt[q] = boundary_time_diff(
          ctx.feq_flow[q], feq_prev.at(q, node.flow_x, node.flow_y), params.dt);
    }
  }
  mixed_interior_axis(feq_now, dom, node.flow_x, node.flow_y, Axis::x, params.zeta, model,
                      ctx.dfeq_flow_dx);
  mixed_interior_axis(feq_now, dom, node.flow_x, node.flow_y, Axis::y, params.zeta, model,
                      ctx.dfeq_flow_dy);
  return ctx;
}

void sync_periodic_images(PopulationField& field, const DomainLayout& dom) {
  const int nx = field.nx;
  const int ny = field.ny;
  for (int q = 0; q < LatticeModel::kQ; ++q) {
    double* p = field.plane(q);
    if (dom.periodic_x) {
      for (int y = 0; y < ny; ++y) p[y * nx + (nx - 1)] = p[y * nx];
    }
    if (dom.periodic_y) {
      for (int x = 0; x < nx; ++x) p[(ny - 1) * nx + x] = p[x];
    }
  }
}

void sync_periodic_images(MacroField& macro, const DomainLayout& dom) {
  for (ScalarField* s : {&macro.rho, &macro.ux, &macro.uy}) {
    const int nx = s->nx;
    const int ny = s->ny;
    if (dom.periodic_x) {
      for (int y = 0; y < ny; ++y) s->data[y * nx + (nx - 1)] = s->data[y * nx];
    }
    if (dom.periodic_y) {
      for (int x = 0; x < nx; ++x) s->data[(ny - 1) * nx + x] = s->data[x];
    }
  }
}

void apply_boundaries(const BoundaryFields& fields, const DomainLayout& dom,
                      const BoundarySpec& spec, const SchemeParams& params,
                      const LatticeModel& model, bool has_history) {
  const std::vector<WallNode> nodes = enumerate_wall_nodes(dom, spec);

  // wall-equilibrium ring first: closures sample neighbours' ring values
  for (const WallNode& n : nodes) {
    const double rho_flow = fields.macro->rho(n.flow_x, n.flow_y);
    fields.feq_now->set_node(n.x, n.y, wall_equilibrium(rho_flow, n.u_wall, model));
  }

  for (const WallNode& n : nodes) {
    const WallNodeContext ctx = build_wall_context(n, *fields.feq_now, *fields.feq_prev,
                                                   *fields.g, dom, params, model, has_history);
    Population fw;
    switch (spec.closure) {
      case Closure::proposed: fw = close_proposed(ctx, params, model); break;
      case Closure::higher_order: fw = close_higher_order(ctx, params, model); break;
      case Closure::guo: fw = close_guo(ctx, model); break;
    }
    fields.f->set_node(n.x, n.y, fw);
    const Population gw = g_from_f(fw, ctx.feq_wall, params);
    fields.g->set_node(n.x, n.y, gw);
    const MacroState m = moments(gw, model);
    fields.macro->rho(n.x, n.y) = m.rho;
    fields.macro->ux(n.x, n.y) = m.u.x;
    fields.macro->uy(n.x, n.y) = m.u.y;
  }

  sync_periodic_images(*fields.f, dom);
  sync_periodic_images(*fields.g, dom);
  sync_periodic_images(*fields.feq_now, dom);
  sync_periodic_images(*fields.macro, dom);
}

}  // namespace bgk
