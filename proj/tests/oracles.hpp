#pragma once

// Independent reference values for the tests. Nothing here calls the library:
// polynomials come from explicit monomial sums in long double, transforms from
// closed forms obtained by integrating e^{-ax} x^k analytically.

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

inline long double factorial(int k) {
  long double f = 1.0L;
  for (int i = 2; i <= k; ++i)
    f *= i;
  return f;
}

inline long double binomial(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

struct Sum {
  long double value;
  long double magnitude;  // sum of |terms|, the natural scale for rounding
};

// L_m^{(a)}(x) = sum_k (-1)^k C(m+a, m-k) x^k / k!
inline Sum laguerre(int m, int a, long double x) {
  Sum s{0.0L, 0.0L};
  for (int k = 0; k <= m; ++k) {
    const long double t = ((k % 2) ? -1.0L : 1.0L) * binomial(m + a, m - k) *
                          std::pow(x, static_cast<long double>(k)) / factorial(k);
    s.value += t;
    s.magnitude += std::fabs(t);
  }
  return s;
}

// U_m(t) = sum_k (-1)^k C(m-k, k) (2t)^{m-2k}
inline Sum chebyshev_u(int m, long double t) {
  Sum s{0.0L, 0.0L};
  for (int k = 0; 2 * k <= m; ++k) {
    const long double term = ((k % 2) ? -1.0L : 1.0L) * binomial(m - k, k) *
                             std::pow(2.0L * t, static_cast<long double>(m - 2 * k));
    s.value += term;
    s.magnitude += std::fabs(term);
  }
  return s;
}

// 1F1(a; b; z) for integer a <= 0: sum_k (a)_k / (b)_k z^k / k!
inline Sum hyp1f1(int a, int b, long double z) {
  Sum s{0.0L, 0.0L};
  for (int k = 0; k <= -a; ++k) {
    long double num = 1.0L, den = 1.0L;
    for (int j = 0; j < k; ++j) {
      num *= a + j;
      den *= b + j;
    }
    const long double t = num / den * std::pow(z, static_cast<long double>(k)) / factorial(k);
    s.value += t;
    s.magnitude += std::fabs(t);
  }
  return s;
}

// Relative error that stays meaningful next to a root of the polynomial.
inline double scaled_error(double got, const Sum& want) {
  const long double scale = std::fmax(std::fabs(want.value), 1e-6L * want.magnitude);
  return static_cast<double>(std::fabs(static_cast<long double>(got) - want.value) /
                             (scale > 0 ? scale : 1.0L));
}

// psi_n(x) = (2x/n^{5/2}) e^{-x/n} L_{n-1}^{(1)}(2x/n) through the monomial sum.
inline double psi_q1d(int n, double x) {
  const long double nn = n;
  return static_cast<double>(2.0L * x / std::pow(nn, 2.5L) * std::exp(-x / nn) *
                             laguerre(n - 1, 1, 2.0L * x / nn).value);
}

// psi_n = sum_k c_k x^{k+1} e^{-x/n}; the coefficients of that expansion.
inline long double psi_coefficient(int n, int k) {
  const long double nn = n;
  return 2.0L / std::pow(nn, 2.5L) * ((k % 2) ? -1.0L : 1.0L) * binomial(n, n - 1 - k) *
         std::pow(2.0L / nn, static_cast<long double>(k)) / factorial(k);
}

// int_0^inf e^{-ipx} psi_n(x) dx / sqrt(2 pi), term by term:
// int_0^inf x^{k+1} e^{-(1/n + ip)x} dx = (k+1)! / (1/n + ip)^{k+2}.
inline std::complex<double> halfline_ft_psi(int n, double p) {
  const std::complex<long double> s(1.0L / n, p);
  std::complex<long double> acc = 0.0L;
  for (int k = 0; k <= n - 1; ++k)
    acc += psi_coefficient(n, k) * factorial(k + 1) / std::pow(s, k + 2);
  acc /= std::sqrt(2.0L * std::numbers::pi_v<long double>);
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

// sqrt(2/pi) int_0^inf sin(px) psi_n(x) dx = -2 Im(halfline_ft_psi).
inline double sine_transform_psi(int n, double p) { return -2.0 * halfline_ft_psi(n, p).imag(); }

inline double cosine_transform_psi(int n, double p) { return 2.0 * halfline_ft_psi(n, p).real(); }

// 2 gamma_Euler: -int 4x^2 e^{-2x} ln(4x^2 e^{-2x}) dx with <ln x> = 3/2 - gamma - ln 2
// and <x> = 3/2 under the density 4x^2 e^{-2x}.
inline double entropy_rho_ground() {
  const double mean_log = 1.5 - std::numbers::egamma - std::numbers::ln2;
  return -(std::log(4.0) + 2.0 * mean_log - 2.0 * 1.5);
}

// int_0^inf 4x^2 e^{-2x} (2/x - 2)^2 dx = 16 G(0) - 32 G(1) + 16 G(2), G(k) = int x^k e^{-2x} = k!/2^{k+1}.
inline double fisher_rho_ground() { return 16.0 * 0.5 - 32.0 * 0.25 + 16.0 * 0.25; }

// Gamma-integral entropy of the full-line Lorentzian (2n/pi)(1+n^2p^2)^{-2}:
// S = ln(pi/(2n)) + 2 <ln(1+u^2)> with <ln(1+u^2)> = 2 ln 2 - 1 under (2/pi)(1+u^2)^{-2}.
inline double entropy_lorentz(int n) {
  return std::log(std::numbers::pi / (2.0 * n)) + 2.0 * (2.0 * std::numbers::ln2 - 1.0);
}

} // namespace oracle
