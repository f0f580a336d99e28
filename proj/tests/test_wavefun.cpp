#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "q1dh/wavefun.hpp"

using namespace q1dh;
using namespace q1dh::wavefun;
using std::numbers::pi;

namespace {
QuantumNumber N(int n) { return QuantumNumber(n); }
}

TEST_CASE("quantum number rejects n < 1") {
  CHECK_THROWS_AS(QuantumNumber(0), std::invalid_argument);
  CHECK_THROWS_AS(QuantumNumber(-3), std::invalid_argument);
  CHECK(QuantumNumber(4).value() == 4);
}

TEST_CASE("energy levels") {
  CHECK(energy(N(1)) == -0.5);
  CHECK(energy(N(2)) == -0.125);
  CHECK(energy(N(10)) == doctest::Approx(-0.005));
}

TEST_CASE("psi_q1d: values, zeros and domain") {
  CHECK(psi_q1d(N(1), 1.0) == doctest::Approx(2.0 / std::exp(1.0)).epsilon(1e-15));
  CHECK(std::fabs(psi_q1d(N(2), 2.0)) < 1e-16);
  CHECK(psi_q1d(N(2), 1.0) == doctest::Approx(std::exp(-0.5) / std::sqrt(2.0) * 0.5).epsilon(1e-14));
  CHECK_THROWS_AS(psi_q1d(N(1), -0.1), std::domain_error);
  CHECK_THROWS_AS(psi_q1d_derivative(N(1), -0.1), std::domain_error);
}

TEST_CASE("psi_q1d: both forms agree with the monomial oracle") {
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n)
    for (double x = 0.0; x <= 60.0; x += 0.173) {
      const double want = oracle::psi_q1d(n, x);
      worst = std::fmax(worst, std::fabs(psi_q1d(N(n), x) - want));
      worst = std::fmax(worst, std::fabs(psi_q1d(N(n), x, WaveForm::hypergeometric) - want));
    }
  CHECK(worst < 1e-12);
}

TEST_CASE("psi_q1d_derivative matches a central difference") {
  for (int n = 1; n <= 6; ++n)
    for (double x = 0.1; x < 8.0 * n; x += 0.37 * n) {
      const double h = 1e-5;
      const double fd = (psi_q1d(N(n), x + h) - psi_q1d(N(n), x - h)) / (2 * h);
      CHECK(psi_q1d_derivative(N(n), x) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("psi_1d: parity and values") {
  const double v = std::sqrt(2.0) / std::exp(1.0);
  CHECK(psi_1d(N(1), Parity::even, -1.0) == doctest::Approx(v));
  CHECK(psi_1d(N(1), Parity::odd, -1.0) == doctest::Approx(-v));
  CHECK(psi_1d(N(1), Parity::odd, 0.0) == 0.0);
  for (int n = 1; n <= 5; ++n)
    for (double x = 0.2; x < 20; x += 1.3) {
      CHECK(psi_1d(N(n), Parity::even, -x) == psi_1d(N(n), Parity::even, x));
      CHECK(psi_1d(N(n), Parity::odd, -x) == -psi_1d(N(n), Parity::odd, x));
      // restriction to x > 0 is psi_q1d / sqrt 2
      CHECK(psi_1d(N(n), Parity::odd, x) == doctest::Approx(psi_q1d(N(n), x) / std::sqrt(2.0)));
    }
}

TEST_CASE("phi_q1d_cheb") {
  CHECK(phi_q1d_cheb(N(1), 0.0) == 0.0);
  CHECK(phi_q1d_cheb(N(1), 1.0) == doctest::Approx(std::pow(2.0, 2.5) / (4.0 * std::sqrt(pi))));
  CHECK(std::fabs(phi_q1d_cheb(N(2), 0.5)) < 1e-15);
  CHECK_THROWS_AS(phi_q1d_cheb(N(1), -1.0), std::domain_error);
}

TEST_CASE("phi_olendski and its imaginary part") {
  const double r2pi = std::sqrt(2.0 / pi);
  const auto a = phi_olendski(N(1), 0.0);
  CHECK(a.real() == doctest::Approx(r2pi));
  CHECK(a.imag() == doctest::Approx(0.0));
  const auto b = phi_olendski(N(1), 1.0);
  CHECK(std::fabs(b.real()) < 1e-15);
  CHECK(b.imag() == doctest::Approx(-r2pi / 2));
  CHECK(phi_olendski(N(2), 0.0).real() == doctest::Approx(-std::sqrt(4.0 / pi)));

  CHECK(phi_olendski_imag(N(1), 1.0) == doctest::Approx(-r2pi / 2));
  CHECK(phi_olendski_imag(N(1), 0.0) == 0.0);
  CHECK(std::fabs(phi_olendski_imag(N(2), 0.5)) < 1e-15);
}

TEST_CASE("phi_olendski polar form equals the rational form") {
  for (int n = 1; n <= 10; ++n)
    for (double p = -5.0; p <= 5.0; p += 0.123) {
      const std::complex<double> z(1.0, n * p);
      const auto rational = (n % 2 ? 1.0 : -1.0) * std::sqrt(2.0 * n / pi) *
                            std::pow(std::conj(z), n - 1) / std::pow(z, n + 1);
      CHECK(std::abs(phi_olendski(N(n), p) - rational) < 1e-13);
    }
}

TEST_CASE("phi_1d: branches and readings") {
  const double r2pi = std::sqrt(2.0 / pi);
  CHECK(phi_1d(N(1), 0.0, Branch::plus).real() == doctest::Approx(r2pi));
  const auto v = phi_1d(N(1), 1.0, Branch::plus);
  CHECK(std::fabs(v.real()) < 1e-15);
  CHECK(v.imag() == doctest::Approx(r2pi / 2));
  CHECK(std::abs(phi_1d(N(1), 1e8, Branch::plus)) < 1e-15);
  // the two readings coincide at n = 1 and differ beyond
  CHECK(std::abs(phi_1d(N(1), 0.7, Branch::minus, ExponentReading::literal) -
                 phi_1d(N(1), 0.7, Branch::minus, ExponentReading::scaled)) < 1e-15);
  CHECK(std::abs(phi_1d(N(2), 0.7, Branch::minus, ExponentReading::literal) -
                 phi_1d(N(2), 0.7, Branch::minus, ExponentReading::scaled)) > 1e-3);
  // |phi_1d|^2 is the Lorentzian
  for (double p : {0.0, 0.3, 2.0})
    CHECK(std::norm(phi_1d(N(3), p, Branch::minus)) == doctest::Approx(gamma_lorentz(N(3)).evaluate(p)));
}

TEST_CASE("density specs") {
  CHECK(rho_q1d(N(1)).evaluate(1.0) == doctest::Approx(4.0 * std::exp(-2.0)));
  CHECK(gamma_lorentz(N(1)).evaluate(0.0) == doctest::Approx(2.0 / pi));
  const auto g2 = gamma_q1d(N(2));
  REQUIRE(g2.nodes.size() == 1);
  CHECK(g2.nodes[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(gamma_lorentz(N(2)).domain == DensityDomain::full_line);
  CHECK(rho_q1d(N(2)).domain == DensityDomain::half_line);
  // rho_1d nodes are mirrored
  const auto r3 = rho_1d(N(3));
  for (double x : r3.nodes)
    CHECK(std::find_if(r3.nodes.begin(), r3.nodes.end(), [x](double y) { return std::fabs(x + y) < 1e-12; }) !=
          r3.nodes.end());
}

TEST_CASE("density derivatives match central differences") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& d : {rho_q1d(N(n)), gamma_lorentz(N(n)), rho_1d(N(n)), gamma_q1d(N(n))}) {
      REQUIRE(d.derivative);
      for (double x = 0.13; x < 3.0; x += 0.29) {
        const double h = 1e-6;
        const double fd = (d.evaluate(x + h) - d.evaluate(x - h)) / (2 * h);
        CAPTURE(d.label);
        CHECK(std::fabs(d.derivative(x) - fd) < 1e-6);
      }
    }
}

TEST_CASE("nodes_psi") {
  CHECK(nodes_psi(N(1)).empty());
  const auto two = nodes_psi(N(2));
  REQUIRE(two.size() == 1);
  CHECK(std::fabs(two[0] - 2.0) < 1e-10);
  // n = 3: 1F1(-2;2;z) = 1 - z + z^2/6 = 0 at z = 3 -+ sqrt 3, x = 3z/2
  const auto three = nodes_psi(N(3));
  REQUIRE(three.size() == 2);
  CHECK(three[0] == doctest::Approx(1.5 * (3.0 - std::sqrt(3.0))).epsilon(1e-12));
  CHECK(three[1] == doctest::Approx(1.5 * (3.0 + std::sqrt(3.0))).epsilon(1e-12));
  for (int n = 1; n <= 12; ++n) {
    const auto z = nodes_psi(N(n));
    CHECK(z.size() == static_cast<std::size_t>(n - 1));
    CHECK(std::is_sorted(z.begin(), z.end()));
    for (double x : z)
      CHECK(std::fabs(psi_q1d(N(n), x)) < 1e-12);
  }
}

TEST_CASE("rescale_density") {
  const auto d = rescale_density(rho_q1d(N(2)), 3.0);
  CHECK(d.evaluate(0.4) == doctest::Approx(3.0 * rho_q1d(N(2)).evaluate(1.2)));
  REQUIRE(d.nodes.size() == 1);
  CHECK(d.nodes[0] == doctest::Approx(2.0 / 3.0));
}
