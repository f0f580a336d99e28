#pragma once

#include <string>
#include <vector>

#include "q1dh/types.hpp"
#include "q1dh/wavefun.hpp"

// Information functionals of the bound-state densities: Shannon entropies and
// the entropic (BBM) bound, Fisher information and its product bound, and
// overlap integrals of the eigenfunction families.

namespace q1dh::information {

/// One row of the entropy table. Entropies in nats.
struct EntropyRow {
  int n = 1;
  double s_rho = 0.0;      // Q1D position density
  double s_gamma_o = 0.0;  // Lorentzian momentum density (full line)
  double s_gamma_s = 0.0;  // sin^2 momentum density (half line)
  double sum_o = 0.0;
  double sum_s = 0.0;
};

struct BbmVerdict {
  double entropy_sum = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

struct FisherPair {
  double i_rho = 0.0;
  double i_gamma = 0.0;
  double product = 0.0;
  double sum = 0.0;
};

/// 1 + ln(pi).
double bbm_bound();

/// -int d ln d over the density's domain, split at d.nodes. Values of d
/// below 1e-300 contribute zero.
double shannon_entropy(const wavefun::DensitySpec& d, double abs_tol = 1e-6);

/// int d over its domain.
double normalization(const wavefun::DensitySpec& d, double abs_tol = 1e-10);

enum class TableColumn { s_rho, s_gamma_o, s_gamma_s };

std::string to_string(TableColumn c);

/// Raised when one table cell fails to converge; names the cell.
class CellNonConvergence : public NonConvergence {
public:
  CellNonConvergence(int n, TableColumn column, const std::string& why);
  int n() const noexcept { return n_; }
  TableColumn column() const noexcept { return column_; }

private:
  int n_;
  TableColumn column_;
};

double table_cell(QuantumNumber n, TableColumn column, double abs_tol);

/// Rows n = 1..n_max (n_max <= 32). Cells are computed independently and in
/// parallel (OpenMP); the first failing cell in row-major order is rethrown.
std::vector<EntropyRow> entropy_table(int n_max, double abs_tol = 1e-6);

/// Sequential reference for entropy_table.
std::vector<EntropyRow> entropy_table_serial(int n_max, double abs_tol = 1e-6);

BbmVerdict bbm_check(double s_rho, double s_gamma);

/// int (d')^2 / d over the domain using the closed-form derivative. Throws
/// std::invalid_argument when the density has none.
double fisher_information(const wavefun::DensitySpec& d, double abs_tol = 1e-8);

enum class MomentumDensity { eq8b, eq11 };

FisherPair fisher_pair(QuantumNumber n, MomentumDensity choice, double abs_tol = 1e-8);

enum class OverlapFamily { q1d_position, olendski_momentum, q1d_momentum_eq5 };

/// Overlap integral of two eigenfunctions of one family:
/// q1d_position      int_0^inf psi_n psi_n' dx,
/// olendski_momentum Re int_{-inf}^{inf} conj(phi_n) phi_n' dp (the imaginary
///                   part vanishes by symmetry),
/// q1d_momentum_eq5  int_0^inf phi_n phi_n' dp for the Chebyshev form.
double orthonormality_check(QuantumNumber n, QuantumNumber n_prime, OverlapFamily family,
                            double abs_tol = 1e-10);

} // namespace q1dh::information
