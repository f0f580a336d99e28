#pragma once

// Polynomial special functions behind the Coulomb bound states.

namespace q1dh::specfun {

/// Generalized Laguerre polynomial L_m^{(alpha)}(x), three-term recurrence.
double laguerre(int m, int alpha, double x);

/// Chebyshev polynomial of the second kind U_m(t). Defined for all real t.
double chebyshev_u(int m, double t);

/// Terminating Kummer series 1F1(a; b; z) for integer a <= 0 and b >= 1.
/// Throws std::domain_error for a > 0 or b < 1.
double hyp1f1_terminating(int a, int b, double z);

} // namespace q1dh::specfun
