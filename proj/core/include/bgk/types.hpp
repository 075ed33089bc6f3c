#ifndef BGK_TYPES_HPP_
#define BGK_TYPES_HPP_

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bgk {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm(Vec2 v) { return std::sqrt(v.x * v.x + v.y * v.y); }
inline constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// One node's distribution function values, indexed by discrete velocity.
using Population = std::array<double, 9>;

struct MacroState {
  double rho = 1.0;
  Vec2 u;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite or out-of-range argument to a kernel-level operation.
struct InvalidInputError : Error {
  using Error::Error;
};

/// Moments produced rho <= 0; the run should abort with diagnostics.
struct DegenerateDensityError : Error {
  explicit DegenerateDensityError(double rho_)
      : Error("moments produced non-positive density rho=" + std::to_string(rho_)), rho(rho_) {}
  double rho;
};

/// Numerical blow-up detected during time stepping.
struct BlowupError : Error {
  BlowupError(int x_, int y_, long step_, double rho_)
      : Error("numerical blow-up at node (" + std::to_string(x_) + "," + std::to_string(y_) +
              ") step " + std::to_string(step_) + " rho=" + std::to_string(rho_)),
        x(x_), y(y_), step(step_), rho(rho_) {}
  int x;
  int y;
  long step;
  double rho;
};

/// Invalid run configuration; carries the offending key.
struct ConfigError : Error {
  ConfigError(std::string key_, const std::string& what_)
      : Error("config key '" + key_ + "': " + what_), key(std::move(key_)) {}
  std::string key;
};

/// Error metric had no counted nodes.
struct MetricUndefinedError : Error {
  using Error::Error;
};

struct IoError : Error {
  IoError(std::string path_, const std::string& what_)
      : Error("io failure on '" + path_ + "': " + what_), path(std::move(path_)) {}
  std::string path;
};

}  // namespace bgk

#endif  // BGK_TYPES_HPP_
