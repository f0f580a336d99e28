#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "q1dh/types.hpp"

// Adaptive Gauss-Kronrod integration on finite, half-line and full-line
// domains. Every entry point pre-splits the domain at caller-supplied
// singular points and then refines globally: the panel with the largest
// error estimate is bisected until the summed estimate drops below abs_tol.

namespace q1dh::quadrature {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

using Integrand = std::function<double(double)>;

struct Finite {
  double a;
  double b;
};
/// [origin, inf)
struct HalfLine {
  double origin = 0.0;
};
struct FullLine {};

using Domain = std::variant<Finite, HalfLine, FullLine>;

inline constexpr long default_max_evaluations = 1'000'000;

struct IntegrationRequest {
  Integrand integrand;
  Domain domain = HalfLine{};
  double scale = 1.0;  // length scale of the t/(1-t) map for infinite pieces
  double abs_tol = 1e-10;
  std::vector<double> singular_points;
  long max_evaluations = default_max_evaluations;
};

/// Throws NonConvergence when max_evaluations is exhausted, when the
/// integrand returns a non-finite value, or when panels shrink to rounding
/// level without meeting abs_tol.
QuadratureResult integrate(const IntegrationRequest& req);

struct MappedPoint {
  double x;
  double jacobian;
};

/// x = scale * t / (1 - t), dx/dt = scale / (1 - t)^2. Requires 0 <= t < 1.
MappedPoint map_half_line(double t, double scale);

/// Integral over p of f(p) through p = tan(u) / rate. The u-domain is
/// [0, pi/2) for the half line or (-pi/2, pi/2) for the full line; `nodes`
/// are p-values where the domain is pre-split.
QuadratureResult integrate_arctan(const Integrand& f_of_p, double rate, bool full_line,
                                  const std::vector<double>& nodes, double abs_tol,
                                  long max_evaluations = default_max_evaluations);

/// Integral of integrand(u) over [0, pi/2], pre-split at u = k pi / (4n),
/// k = 1..2n-1, which contains every zero of sin(2nu).
QuadratureResult integrate_momentum_compact(QuantumNumber n, const Integrand& integrand_in_u,
                                            double abs_tol,
                                            long max_evaluations = default_max_evaluations);

enum class Oscillator { sine, cosine };

/// Integral over [0, inf) of f(x) sin(px) or f(x) cos(px) for p >= 0 and f
/// decaying roughly like exp(-x / decay_scale). Panels are one half-period
/// pi/p wide; the upper cut-off X is the first doubling of decay_scale at
/// which the estimated tail integral of |f| over [X, inf) is below abs_tol/4.
QuadratureResult integrate_oscillatory(const Integrand& f, Oscillator kind, double p,
                                       double decay_scale, double abs_tol,
                                       long max_evaluations = default_max_evaluations);

} // namespace q1dh::quadrature
