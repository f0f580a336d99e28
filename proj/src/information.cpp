#include "q1dh/information.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>

#include "q1dh/quadrature.hpp"

namespace q1dh::information {

namespace {

using wavefun::DensityDomain;
using wavefun::DensitySpec;

constexpr double vanishing = 1e-300;

// Integral of g(x) over d's domain with d's splitting and map conventions.
double integrate_over(const DensitySpec& d, const quadrature::Integrand& g, double abs_tol) {
  const bool full = d.domain == DensityDomain::full_line;
  if (d.arctan_rate)
    return quadrature::integrate_arctan(g, *d.arctan_rate, full, d.nodes, abs_tol).value;
  quadrature::IntegrationRequest req;
  req.integrand = g;
  if (full)
    req.domain = quadrature::FullLine{};
  else
    req.domain = quadrature::HalfLine{};
  req.scale = d.scale;
  req.abs_tol = abs_tol;
  req.singular_points = d.nodes;
  return quadrature::integrate(req).value;
}

double compute_cell(int n, TableColumn column, double abs_tol) {
  try {
    return table_cell(QuantumNumber(n), column, abs_tol);
  } catch (const CellNonConvergence&) {
    throw;
  } catch (const NonConvergence& e) {
    throw CellNonConvergence(n, column, e.what());
  }
}

std::vector<EntropyRow> assemble(int n_max, const std::vector<double>& cells) {
  std::vector<EntropyRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const auto base = static_cast<std::size_t>(3 * (n - 1));
    EntropyRow r;
    r.n = n;
    r.s_rho = cells[base];
    r.s_gamma_o = cells[base + 1];
    r.s_gamma_s = cells[base + 2];
    r.sum_o = r.s_rho + r.s_gamma_o;
    r.sum_s = r.s_rho + r.s_gamma_s;
    rows.push_back(r);
  }
  return rows;
}

void check_n_max(int n_max) {
  if (n_max < 1 || n_max > 32)
    throw std::invalid_argument("entropy_table: n_max must be in [1, 32]");
}

constexpr TableColumn columns[] = {TableColumn::s_rho, TableColumn::s_gamma_o,
                                   TableColumn::s_gamma_s};

} // namespace

double bbm_bound() { return 1.0 + std::log(std::numbers::pi); }

double shannon_entropy(const DensitySpec& d, double abs_tol) {
  const auto& f = d.evaluate;
  return integrate_over(
      d,
      [&f](double x) {
        const double v = f(x);
        return v < vanishing ? 0.0 : -v * std::log(v);
      },
      abs_tol);
}

double normalization(const DensitySpec& d, double abs_tol) {
  return integrate_over(d, d.evaluate, abs_tol);
}

std::string to_string(TableColumn c) {
  switch (c) {
  case TableColumn::s_rho:
    return "S_rho";
  case TableColumn::s_gamma_o:
    return "S_gamma_o";
  case TableColumn::s_gamma_s:
    return "S_gamma_s";
  }
  return "unknown";
}

CellNonConvergence::CellNonConvergence(int n, TableColumn column, const std::string& why)
    : NonConvergence("cell (n=" + std::to_string(n) + ", " + to_string(column) + "): " + why),
      n_(n), column_(column) {}

double table_cell(QuantumNumber n, TableColumn column, double abs_tol) {
  switch (column) {
  case TableColumn::s_rho:
    return shannon_entropy(wavefun::rho_q1d(n), abs_tol);
  case TableColumn::s_gamma_o:
    return shannon_entropy(wavefun::gamma_lorentz(n), abs_tol);
  case TableColumn::s_gamma_s:
    return shannon_entropy(wavefun::gamma_q1d(n), abs_tol);
  }
  throw std::logic_error("unknown table column");
}

std::vector<EntropyRow> entropy_table(int n_max, double abs_tol) {
  check_n_max(n_max);
  const long cell_count = 3L * n_max;
  std::vector<double> cells(static_cast<std::size_t>(cell_count));
  std::vector<std::exception_ptr> errors(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < cell_count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      cells[k] = compute_cell(static_cast<int>(i / 3) + 1, columns[i % 3], abs_tol);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return assemble(n_max, cells);
}

std::vector<EntropyRow> entropy_table_serial(int n_max, double abs_tol) {
  check_n_max(n_max);
  std::vector<double> cells;
  for (int n = 1; n <= n_max; ++n)
    for (auto c : columns)
      cells.push_back(compute_cell(n, c, abs_tol));
  return assemble(n_max, cells);
}

BbmVerdict bbm_check(double s_rho, double s_gamma) {
  BbmVerdict v;
  v.entropy_sum = s_rho + s_gamma;
  v.bound = bbm_bound();
  v.satisfied = v.entropy_sum >= v.bound;
  return v;
}

double fisher_information(const DensitySpec& d, double abs_tol) {
  if (!d.derivative)
    throw std::invalid_argument("fisher_information: " + d.label + " has no closed-form derivative");
  const auto& f = d.evaluate;
  const auto& df = d.derivative;
  return integrate_over(
      d,
      [&f, &df](double x) {
        const double v = f(x);
        if (v < vanishing)
          return 0.0;
        const double dv = df(x);
        return dv * dv / v;
      },
      abs_tol);
}

FisherPair fisher_pair(QuantumNumber n, MomentumDensity choice, double abs_tol) {
  FisherPair fp;
  fp.i_rho = fisher_information(wavefun::rho_q1d(n), abs_tol);
  fp.i_gamma = fisher_information(
      choice == MomentumDensity::eq8b ? wavefun::gamma_lorentz(n) : wavefun::gamma_q1d(n), abs_tol);
  fp.product = fp.i_rho * fp.i_gamma;
  fp.sum = fp.i_rho + fp.i_gamma;
  return fp;
}

double orthonormality_check(QuantumNumber n, QuantumNumber n_prime, OverlapFamily family,
                            double abs_tol) {
  const double big = std::max(n.as_double(), n_prime.as_double());
  switch (family) {
  case OverlapFamily::q1d_position: {
    auto nodes = wavefun::nodes_psi(n);
    const auto more = wavefun::nodes_psi(n_prime);
    nodes.insert(nodes.end(), more.begin(), more.end());
    quadrature::IntegrationRequest req;
    req.integrand = [n, n_prime](double x) {
      return wavefun::psi_q1d(n, x) * wavefun::psi_q1d(n_prime, x);
    };
    req.domain = quadrature::HalfLine{};
    req.scale = big * big;
    req.abs_tol = abs_tol;
    req.singular_points = std::move(nodes);
    return quadrature::integrate(req).value;
  }
  case OverlapFamily::olendski_momentum:
    return quadrature::integrate_arctan(
               [n, n_prime](double p) {
                 return (std::conj(wavefun::phi_olendski(n, p)) * wavefun::phi_olendski(n_prime, p))
                     .real();
               },
               big, true, {}, abs_tol)
        .value;
  case OverlapFamily::q1d_momentum_eq5:
    return quadrature::integrate_arctan(
               [n, n_prime](double p) {
                 return wavefun::phi_q1d_cheb(n, p) * wavefun::phi_q1d_cheb(n_prime, p);
               },
               big, false, {}, abs_tol)
        .value;
  }
  throw std::logic_error("unknown overlap family");
}

} // namespace q1dh::information
