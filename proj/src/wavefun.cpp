#include "q1dh/wavefun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "q1dh/specfun.hpp"

namespace q1dh::wavefun {

namespace {

constexpr double pi = std::numbers::pi;

double sign_pow(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

// sqrt(2/n^5) e^{-x/n} L_{n-1}^{(1)}(2x/n) without the x prefactor.
double radial_core(int n, double x) {
  const double nd = n;
  return std::sqrt(2.0 / std::pow(nd, 5)) * std::exp(-x / nd) *
         specfun::laguerre(n - 1, 1, 2.0 * x / nd);
}

// d/dx [x * radial_core(n, x)] for x >= 0. Uses dL_m^{(1)}/dz = -L_{m-1}^{(2)}.
double radial_derivative(int n, double x) {
  const double nd = n;
  const double z = 2.0 * x / nd;
  const double lag = specfun::laguerre(n - 1, 1, z);
  const double dlag = n >= 2 ? -specfun::laguerre(n - 2, 2, z) : 0.0;
  return std::sqrt(2.0 / std::pow(nd, 5)) * std::exp(-x / nd) *
         (lag * (1.0 - x / nd) + x * (2.0 / nd) * dlag);
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    const double fm = f(mid);
    if (fm == 0.0)
      return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Zeros of L_m^{(1)}(z), found degree by degree: the zeros of consecutive
// degrees interlace, so those of degree k-1 bracket the zeros of degree k.
std::vector<double> laguerre_zeros(int m) {
  std::vector<double> zeros;
  for (int k = 1; k <= m; ++k) {
    const auto f = [k](double z) { return specfun::laguerre(k, 1, z); };
    std::vector<double> edges;
    edges.push_back(0.0);
    edges.insert(edges.end(), zeros.begin(), zeros.end());
    // all zeros of L_k^{(1)} lie below 4k + 4
    edges.push_back(4.0 * k + 4.0);
    std::vector<double> next;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
      next.push_back(bisect(f, edges[i], edges[i + 1]));
    zeros = std::move(next);
  }
  return zeros;
}

} // namespace

double energy(QuantumNumber n) { return -0.5 / (n.as_double() * n.as_double()); }

double psi_q1d(QuantumNumber n, double x, WaveForm form) {
  if (x < 0.0)
    throw std::domain_error("psi_q1d: x must be >= 0 on the half line");
  const double nd = n.as_double();
  if (form == WaveForm::hypergeometric)
    return 2.0 * x / std::pow(nd, 1.5) * std::exp(-x / nd) *
           specfun::hyp1f1_terminating(1 - n.value(), 2, 2.0 * x / nd);
  return 2.0 * x / std::pow(nd, 2.5) * std::exp(-x / nd) *
         specfun::laguerre(n.value() - 1, 1, 2.0 * x / nd);
}

double psi_q1d_derivative(QuantumNumber n, double x) {
  if (x < 0.0)
    throw std::domain_error("psi_q1d_derivative: x must be >= 0 on the half line");
  return std::sqrt(2.0) * radial_derivative(n.value(), x);
}

double psi_1d(QuantumNumber n, Parity parity, double x) {
  const double r = std::fabs(x);
  const double prefactor = parity == Parity::even ? r : x;
  return prefactor * radial_core(n.value(), r);
}

double phi_q1d_cheb(QuantumNumber n, double p) {
  if (p < 0.0)
    throw std::domain_error("phi_q1d_cheb: p must be >= 0 on the half line");
  const double nd = n.as_double();
  const double q2 = nd * nd * p * p;
  const double w = 1.0 + q2;
  return std::pow(2.0, 2.5) * std::pow(nd, 1.5) / std::sqrt(pi) * p / (w * w) *
         specfun::chebyshev_u(n.value() - 1, (1.0 - q2) / w);
}

std::complex<double> phi_olendski(QuantumNumber n, double p) {
  const double nd = n.as_double();
  const double modulus = std::sqrt(2.0 * nd / pi) / (1.0 + nd * nd * p * p);
  const double phase = -2.0 * nd * std::atan(nd * p);
  return sign_pow(n.value() + 1) * std::polar(modulus, phase);
}

double phi_olendski_imag(QuantumNumber n, double p) {
  const double nd = n.as_double();
  return sign_pow(n.value()) * std::sqrt(2.0 * nd / pi) * std::sin(2.0 * nd * std::atan(nd * p)) /
         (1.0 + nd * nd * p * p);
}

std::complex<double> phi_1d(QuantumNumber n, double p, Branch branch, ExponentReading reading) {
  const double nd = n.as_double();
  const double angle = (reading == ExponentReading::scaled ? nd : 1.0) * std::atan(nd * p);
  const double phase = (branch == Branch::plus ? 2.0 : -2.0) * angle;
  return std::polar(std::sqrt(2.0 * nd / pi) / (1.0 + nd * nd * p * p), phase);
}

std::vector<double> nodes_psi(QuantumNumber n) {
  auto zeros = laguerre_zeros(n.value() - 1);
  for (auto& z : zeros)
    z *= 0.5 * n.as_double();
  return zeros;
}

DensitySpec rho_q1d(QuantumNumber n) {
  const int m = n.value();
  DensitySpec d;
  d.label = "rho_q1d(n=" + std::to_string(m) + ")";
  d.domain = DensityDomain::half_line;
  d.scale = n.as_double() * n.as_double();
  d.nodes = nodes_psi(n);
  d.evaluate = [m](double x) {
    if (x < 0.0)
      return 0.0;
    const double a = std::sqrt(2.0) * x * radial_core(m, x);
    return a * a;
  };
  d.derivative = [m](double x) {
    if (x < 0.0)
      return 0.0;
    return 4.0 * x * radial_core(m, x) * radial_derivative(m, x);
  };
  return d;
}

DensitySpec gamma_lorentz(QuantumNumber n) {
  const double nd = n.as_double();
  DensitySpec d;
  d.label = "gamma_lorentz(n=" + std::to_string(n.value()) + ")";
  d.domain = DensityDomain::full_line;
  d.scale = 1.0 / nd;
  d.evaluate = [nd](double p) {
    const double w = 1.0 + nd * nd * p * p;
    return 2.0 * nd / pi / (w * w);
  };
  d.derivative = [nd](double p) {
    const double w = 1.0 + nd * nd * p * p;
    return -8.0 * nd * nd * nd * p / (pi * w * w * w);
  };
  d.arctan_rate = nd;
  return d;
}

DensitySpec rho_1d(QuantumNumber n) {
  const int m = n.value();
  DensitySpec d;
  d.label = "rho_1d(n=" + std::to_string(m) + ")";
  d.domain = DensityDomain::full_line;
  d.scale = n.as_double() * n.as_double();
  const auto positive = nodes_psi(n);
  for (auto it = positive.rbegin(); it != positive.rend(); ++it)
    d.nodes.push_back(-*it);
  d.nodes.push_back(0.0);
  d.nodes.insert(d.nodes.end(), positive.begin(), positive.end());
  d.evaluate = [m](double x) {
    const double a = x * radial_core(m, std::fabs(x));
    return a * a;
  };
  // odd amplitude x * core(|x|) has an even derivative
  d.derivative = [m](double x) {
    const double r = std::fabs(x);
    return 2.0 * x * radial_core(m, r) * radial_derivative(m, r);
  };
  return d;
}

DensitySpec gamma_q1d(QuantumNumber n) {
  const double nd = n.as_double();
  DensitySpec d;
  d.label = "gamma_q1d(n=" + std::to_string(n.value()) + ")";
  d.domain = DensityDomain::half_line;
  d.scale = 1.0 / nd;
  for (int k = 1; k < n.value(); ++k)
    d.nodes.push_back(std::tan(k * pi / (2.0 * nd)) / nd);
  const double amp = std::sqrt(8.0 * nd / pi);
  d.evaluate = [nd, amp](double p) {
    if (p < 0.0)
      return 0.0;
    const double a = amp * std::sin(2.0 * nd * std::atan(nd * p)) / (1.0 + nd * nd * p * p);
    return a * a;
  };
  d.derivative = [nd, amp](double p) {
    if (p < 0.0)
      return 0.0;
    const double w = 1.0 + nd * nd * p * p;
    const double theta = 2.0 * nd * std::atan(nd * p);
    const double a = amp * std::sin(theta) / w;
    const double da = amp * (2.0 * nd * nd * std::cos(theta) / (w * w) -
                             2.0 * nd * nd * p * std::sin(theta) / (w * w));
    return 2.0 * a * da;
  };
  d.arctan_rate = nd;
  return d;
}

DensitySpec rescale_density(const DensitySpec& d, double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("rescale_density: lambda must be positive");
  DensitySpec out = d;
  out.label = d.label + "[x" + std::to_string(lambda) + "]";
  out.scale = d.scale / lambda;
  for (auto& x : out.nodes)
    x /= lambda;
  out.evaluate = [f = d.evaluate, lambda](double x) { return lambda * f(lambda * x); };
  if (d.derivative)
    out.derivative = [g = d.derivative, lambda](double x) { return lambda * lambda * g(lambda * x); };
  if (d.arctan_rate)
    out.arctan_rate = *d.arctan_rate * lambda;
  return out;
}

std::vector<double> sample_density(const DensitySpec& d, std::span<const double> grid) {
  std::vector<double> out(grid.size());
  const auto count = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = d.evaluate(grid[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<double> sample_density_serial(const DensitySpec& d, std::span<const double> grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid)
    out.push_back(d.evaluate(x));
  return out;
}

} // namespace q1dh::wavefun
