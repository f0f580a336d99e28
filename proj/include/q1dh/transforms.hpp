#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "q1dh/quadrature.hpp"
#include "q1dh/types.hpp"

// Quadrature-based integral transforms of position-space eigenfunctions.
// Conventions are unitary: the full-line kernel is e^{-ipx}/sqrt(2 pi), the
// half-line sine and cosine transforms carry sqrt(2/pi).

namespace q1dh::transforms {

using RealFunction = std::function<double(double)>;

enum class TransformKind { sine, cosine, halfline_exponential, fullline_by_parity };

std::string to_string(TransformKind kind);

/// sqrt(2/pi) int_0^inf sin(px) f(x) dx. Odd in p.
double sine_transform(const RealFunction& f, QuantumNumber n_scale, double p, double abs_tol);

/// sqrt(2/pi) int_0^inf cos(px) f(x) dx. Even in p.
double cosine_transform(const RealFunction& f, QuantumNumber n_scale, double p, double abs_tol);

/// (2 pi)^{-1/2} int_0^inf e^{-ipx} f(x) dx: the full-line transform of f
/// extended by zero to x < 0. Equals (cosine - i sine) / 2.
std::complex<double> halfline_ft(const RealFunction& f, double p, double abs_tol,
                                 double decay_scale = 1.0);

/// Full-line transform of the 1D-atom eigenfunction of given parity,
/// computed from its x >= 0 restriction: even -> cosine, odd -> -i sine.
std::complex<double> fullline_ft_by_parity(QuantumNumber n, Parity parity, double p,
                                           double abs_tol);

enum class Verdict { match, match_up_to_constant, mismatch };

std::string to_string(Verdict v);

struct CorrespondenceReport {
  std::string candidate;  // Eq5, Eq6, Eq7, Eq8b, Eq11, Eq10+, Eq10-, ...
  std::string source;     // the transformed position-space function
  TransformKind transform = TransformKind::sine;
  int n = 1;
  std::vector<double> grid;
  double max_abs_deviation = 0.0;      // max |candidate - transform|
  std::complex<double> fitted_global_factor{1.0, 0.0};
  double fitted_deviation = 0.0;       // max |candidate - c * transform|
  Verdict verdict = Verdict::mismatch;
};

struct AdjudicationOptions {
  double abs_tol = 1e-11;    // quadrature tolerance per transform value
  double match_tol = 1e-8;   // deviation allowed for a match verdict
};

/// Geometric grid of `count` points in [0.05, 4] / n.
std::vector<double> default_grid(QuantumNumber n, int count = 25);

/// Least-squares factor c minimizing sum |candidate - c * transform|^2, and
/// the resulting report fields.
CorrespondenceReport compare(std::string candidate, std::string source, TransformKind kind,
                             QuantumNumber n, std::span<const double> grid,
                             std::span<const std::complex<double>> candidate_values,
                             std::span<const std::complex<double>> transform_values,
                             double match_tol);

/// Compares every candidate momentum function against the transforms of the
/// position-space states. Grid points are evaluated in parallel (OpenMP).
std::vector<CorrespondenceReport> adjudicate(QuantumNumber n, std::span<const double> p_grid,
                                             const AdjudicationOptions& opts = {});

/// Sequential reference for adjudicate.
std::vector<CorrespondenceReport> adjudicate_serial(QuantumNumber n,
                                                    std::span<const double> p_grid,
                                                    const AdjudicationOptions& opts = {});

} // namespace q1dh::transforms
