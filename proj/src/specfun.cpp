#include "q1dh/specfun.hpp"

#include <stdexcept>
#include <string>

namespace q1dh::specfun {

double laguerre(int m, int alpha, double x) {
  if (m < 0 || alpha < 0)
    throw std::domain_error("laguerre: degree and alpha must be nonnegative");
  if (m == 0)
    return 1.0;
  const double a = alpha;
  double prev = 1.0;
  double curr = 1.0 + a - x;
  for (int k = 1; k < m; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * curr - (k + a) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double chebyshev_u(int m, double t) {
  if (m < 0)
    throw std::domain_error("chebyshev_u: degree must be nonnegative");
  if (m == 0)
    return 1.0;
  double prev = 1.0;
  double curr = 2.0 * t;
  for (int k = 1; k < m; ++k) {
    const double next = 2.0 * t * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double hyp1f1_terminating(int a, int b, double z) {
  if (a > 0)
    throw std::domain_error("hyp1f1_terminating: a = " + std::to_string(a) + " does not terminate");
  if (b < 1)
    throw std::domain_error("hyp1f1_terminating: b must be a positive integer");
  // term_{k+1} = term_k * (a + k) z / ((b + k)(k + 1)); vanishes after k = -a.
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < -a; ++k) {
    term *= (a + k) * z / ((b + k) * (k + 1.0));
    sum += term;
  }
  return sum;
}

} // namespace q1dh::specfun
