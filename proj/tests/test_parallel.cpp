#include "doctest.h"

#include <cstring>
#include <vector>

#include <omp.h>

#include "q1dh/information.hpp"
#include "q1dh/transforms.hpp"
#include "q1dh/wavefun.hpp"

// The OpenMP kernels must reproduce their sequential references bit for bit:
// every cell or grid point is an independent computation.

using namespace q1dh;

namespace {
bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }
}

TEST_CASE("runs with more than one thread") {
  int threads = 0;
#pragma omp parallel
  {
#pragma omp single
    threads = omp_get_num_threads();
  }
  MESSAGE("OpenMP threads: " << threads);
  CHECK(threads >= 1);
}

TEST_CASE("entropy_table matches entropy_table_serial") {
  const auto par = information::entropy_table(8, 1e-8);
  const auto ser = information::entropy_table_serial(8, 1e-8);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(same_bits(par[i].s_rho, ser[i].s_rho));
    CHECK(same_bits(par[i].s_gamma_o, ser[i].s_gamma_o));
    CHECK(same_bits(par[i].s_gamma_s, ser[i].s_gamma_s));
  }
}

TEST_CASE("adjudicate matches adjudicate_serial") {
  for (int n = 1; n <= 3; ++n) {
    const QuantumNumber q(n);
    const auto grid = transforms::default_grid(q);
    const auto par = transforms::adjudicate(q, grid);
    const auto ser = transforms::adjudicate_serial(q, grid);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].candidate == ser[i].candidate);
      CHECK(par[i].verdict == ser[i].verdict);
      CHECK(same_bits(par[i].max_abs_deviation, ser[i].max_abs_deviation));
      CHECK(same_bits(par[i].fitted_deviation, ser[i].fitted_deviation));
    }
  }
}

TEST_CASE("sample_density matches sample_density_serial") {
  std::vector<double> grid;
  for (int i = -3000; i <= 3000; ++i)
    grid.push_back(i * 0.005);
  for (const auto& d : {wavefun::rho_1d(QuantumNumber(4)), wavefun::gamma_lorentz(QuantumNumber(2))}) {
    const auto par = wavefun::sample_density(d, grid);
    const auto ser = wavefun::sample_density_serial(d, grid);
    REQUIRE(par.size() == ser.size());
    bool all = true;
    for (std::size_t i = 0; i < par.size(); ++i)
      all = all && same_bits(par[i], ser[i]);
    CHECK(all);
  }
}

TEST_CASE("errors inside parallel regions propagate") {
  const std::vector<double> bad{0.5, 7.0};
  CHECK_THROWS(transforms::adjudicate(QuantumNumber(1), bad));
}
