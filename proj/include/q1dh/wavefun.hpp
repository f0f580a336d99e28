#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "q1dh/types.hpp"

// Closed-form bound states of the quasi-one-dimensional (half-line, x >= 0)
// and one-dimensional (full-line) hydrogen atoms in Hartree atomic units,
// together with the candidate momentum-space amplitudes and the position and
// momentum probability densities built from them.

namespace q1dh::wavefun {

/// E_n = -1 / (2 n^2) hartree.
double energy(QuantumNumber n);

enum class WaveForm { hypergeometric, laguerre };

/// Half-line eigenfunction psi_n(x) = (2x / n^{3/2}) e^{-x/n} 1F1(1-n; 2; 2x/n),
/// equivalently (2x / n^{5/2}) e^{-x/n} L_{n-1}^{(1)}(2x/n).
/// Throws std::domain_error for x < 0.
double psi_q1d(QuantumNumber n, double x, WaveForm form = WaveForm::laguerre);

/// d psi_n / dx in closed form. Throws std::domain_error for x < 0.
double psi_q1d_derivative(QuantumNumber n, double x);

/// Full-line eigenfunctions: even states carry |x|, odd states x, in front of
/// sqrt(2/n^5) e^{-|x|/n} L_{n-1}^{(1)}(2|x|/n).
double psi_1d(QuantumNumber n, Parity parity, double x);

/// Chebyshev-form momentum amplitude on p >= 0:
/// 2^{5/2} n^{3/2} pi^{-1/2} p (1+n^2p^2)^{-2} U_{n-1}((1-n^2p^2)/(1+n^2p^2)).
/// Throws std::domain_error for p < 0.
double phi_q1d_cheb(QuantumNumber n, double p);

/// (-1)^{n+1} sqrt(2n/pi) (1 - inp)^{n-1} / (1 + inp)^{n+1}, evaluated in
/// polar form: modulus sqrt(2n/pi)/(1+n^2p^2), phase -2n arctan(np).
std::complex<double> phi_olendski(QuantumNumber n, double p);

/// Imaginary part of phi_olendski: (-1)^n sqrt(2n/pi) sin(2n arctan(np)) / (1+n^2p^2).
double phi_olendski_imag(QuantumNumber n, double p);

enum class Branch { plus, minus };

/// How the phase of the full-line momentum amplitude depends on n.
/// `scaled` reads the exponent as +-2in arctan(np), `literal` as +-2i arctan(np).
enum class ExponentReading { scaled, literal };

/// sqrt(2n/pi) e^{+-2iA} / (1+n^2p^2), A = n arctan(np) or arctan(np).
std::complex<double> phi_1d(QuantumNumber n, double p, Branch branch,
                            ExponentReading reading = ExponentReading::scaled);

enum class DensityDomain { half_line, full_line };

/// An analytic probability density with the data quadrature needs: domain,
/// natural extent, and the interior zeros where rho ln rho is non-smooth.
struct DensitySpec {
  std::string label;
  DensityDomain domain = DensityDomain::half_line;
  double scale = 1.0;
  std::vector<double> nodes;
  std::function<double(double)> evaluate;
  /// Closed-form derivative; empty when none is available.
  std::function<double(double)> derivative;
  /// When set, integrals over this density run through p = tan(u) / rate.
  std::optional<double> arctan_rate;
};

/// 4x^2/n^5 e^{-2x/n} (L_{n-1}^{(1)}(2x/n))^2 on [0, inf).
DensitySpec rho_q1d(QuantumNumber n);
/// (2n/pi) (1+n^2p^2)^{-2} on the full line.
DensitySpec gamma_lorentz(QuantumNumber n);
/// 2x^2/n^5 e^{-2|x|/n} (L_{n-1}^{(1)}(2|x|/n))^2 on the full line.
DensitySpec rho_1d(QuantumNumber n);
/// (8n/pi) sin^2(2n arctan(np)) (1+n^2p^2)^{-2} on [0, inf).
DensitySpec gamma_q1d(QuantumNumber n);

/// The n-1 positive zeros of psi_n, ascending, refined by bisection.
std::vector<double> nodes_psi(QuantumNumber n);

/// d_lambda(x) = lambda d(lambda x); a normalized density stays normalized.
DensitySpec rescale_density(const DensitySpec& d, double lambda);

/// Evaluates a density on a grid; OpenMP-parallel over points.
std::vector<double> sample_density(const DensitySpec& d, std::span<const double> grid);
/// Sequential reference for sample_density.
std::vector<double> sample_density_serial(const DensitySpec& d, std::span<const double> grid);

} // namespace q1dh::wavefun
