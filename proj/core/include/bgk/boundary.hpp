#ifndef BGK_BOUNDARY_HPP_
#define BGK_BOUNDARY_HPP_

#include <vector>

#include "bgk/grid.hpp"
#include "bgk/lattice.hpp"
#include "bgk/numerics.hpp"

namespace bgk {

enum class Closure { proposed, higher_order, guo };

enum class EdgeKind { periodic, wall };

struct Edge {
  EdgeKind kind = EdgeKind::wall;
  Vec2 u_wall{};
};

struct BoundarySpec {
  Edge bottom;
  Edge top;
  Edge left;
  Edge right;
  Closure closure = Closure::proposed;

  bool periodic_x() const { return left.kind == EdgeKind::periodic; }
  bool periodic_y() const { return bottom.kind == EdgeKind::periodic; }

  /// Periodic edges must come in opposing pairs.
  void validate() const;

  static BoundarySpec couette(double u0, Closure closure = Closure::proposed);
  static BoundarySpec cavity(Vec2 u_lid, Closure closure = Closure::proposed);
  static BoundarySpec all_periodic();
};

/// Equilibrium at a wall node: adjacent flow node's density with the
/// prescribed wall velocity.
Population wall_equilibrium(double rho_flow, Vec2 u_wall, const LatticeModel& model);

/// Everything a closure needs at one wall node, with the discrete time and
/// space derivatives of the equilibrium field already evaluated by the
/// boundary difference operators (one-sided along inward normals, central
/// along wall tangents, mixed interior stencils at the flow node).
struct WallNodeContext {
  Population feq_wall{};      // feq(t, x_p)
  Population dfeq_dt{};       // boundary time derivative at x_p (zero without history)
  Population dfeq_dx{};       // boundary space derivatives at x_p
  Population dfeq_dy{};
  Population f_flow{};        // f(t, x_f)
  Population feq_flow{};      // feq(t, x_f)
  Population dfeq_flow_dt{};  // same derivative family evaluated at x_f
  Population dfeq_flow_dx{};
  Population dfeq_flow_dy{};
};

/// tau_star * f^(1) = -tau_star * (d/dt + e.grad) feq at the wall node.
Population f1_correction(const WallNodeContext& ctx, const SchemeParams& params,
                         const LatticeModel& model);

/// f(x_p) = feq(x_p) + tau_star * f^(1)(x_p); truncation is second order in
/// tau_star.
Population close_proposed(const WallNodeContext& ctx, const SchemeParams& params,
                          const LatticeModel& model);

/// Non-equilibrium extrapolation baseline:
/// f(x_p) = feq(x_p) + [f(x_f) - feq(x_f)].
Population close_guo(const WallNodeContext& ctx, const LatticeModel& model);

/// Mixed scheme: the proposed wall terms plus the flow node's residual
/// f(x_f) + tau_star*(d/dt + e.grad)feq(x_f) - feq(x_f). With tau_star = 0 it
/// is bit-identical to close_guo.
Population close_higher_order(const WallNodeContext& ctx, const SchemeParams& params,
                              const LatticeModel& model);

/// Geometry of one wall node: inward normal offsets (both axes nonzero only
/// at corners) and the fixed wall-normal flow neighbor (diagonal at corners).
struct WallNode {
  int x = 0;
  int y = 0;
  int nrm_x = 0;
  int nrm_y = 0;
  int flow_x = 0;
  int flow_y = 0;
  Vec2 u_wall{};
  bool corner = false;
};

std::vector<WallNode> enumerate_wall_nodes(const DomainLayout& dom, const BoundarySpec& spec);

/// Builds the context for one wall node from the current-step equilibrium
/// field (interior entries plus the already-filled wall ring), the previous
/// step's equilibria, and the freshly updated g.
WallNodeContext build_wall_context(const WallNode& node, const PopulationField& feq_now,
                                   const PopulationField& feq_prev, const PopulationField& g_now,
                                   const DomainLayout& dom, const SchemeParams& params,
                                   const LatticeModel& model, bool has_history);

struct BoundaryFields {
  PopulationField* f = nullptr;        // wall entries overwritten with closure output
  PopulationField* g = nullptr;        // current-step g; wall entries recomputed via Eq. 14
  PopulationField* feq_now = nullptr;  // interior filled by caller; wall ring written here
  const PopulationField* feq_prev = nullptr;
  MacroField* macro = nullptr;         // interior updated by caller; wall entries written
};

/// Runs the selected closure over every wall node, then synchronizes periodic
/// images of all fields. Corner nodes take the slower adjoining wall's
/// velocity and the diagonal interior neighbor's density.
void apply_boundaries(const BoundaryFields& fields, const DomainLayout& dom,
                      const BoundarySpec& spec, const SchemeParams& params,
                      const LatticeModel& model, bool has_history);

/// Copies unique-node values onto their periodic images (column nx-1 and/or
/// row ny-1) for one population field.
void sync_periodic_images(PopulationField& field, const DomainLayout& dom);
void sync_periodic_images(MacroField& macro, const DomainLayout& dom);

}  // namespace bgk

#endif  // BGK_BOUNDARY_HPP_
