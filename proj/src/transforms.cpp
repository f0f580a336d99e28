#include "q1dh/transforms.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>

#include "q1dh/wavefun.hpp"

namespace q1dh::transforms {

namespace {

const double sqrt_2_over_pi = std::sqrt(2.0 / std::numbers::pi);

double half_line_transform(const RealFunction& f, quadrature::Oscillator kind, double p,
                           double decay_scale, double abs_tol) {
  const double freq = std::fabs(p);
  const auto r =
      quadrature::integrate_oscillatory(f, kind, freq, decay_scale, abs_tol / sqrt_2_over_pi);
  const double v = sqrt_2_over_pi * r.value;
  return (kind == quadrature::Oscillator::sine && p < 0.0) ? -v : v;
}

// All transform values needed at one momentum p.
struct PointTransforms {
  double sine = 0.0;                  // sine transform of psi_q1d
  std::complex<double> halfline;      // zero-extended transform of psi_q1d
  std::complex<double> halfline_sqrt2;
  std::complex<double> even;          // full-line transform of the even 1D state
  std::complex<double> odd;           // ... and of the odd one
};

PointTransforms transforms_at(QuantumNumber n, double p, double abs_tol) {
  const RealFunction psi = [n](double x) { return wavefun::psi_q1d(n, x); };
  const RealFunction psi_sqrt2 = [n](double x) { return std::sqrt(2.0) * wavefun::psi_q1d(n, x); };
  PointTransforms t;
  t.sine = sine_transform(psi, n, p, abs_tol);
  t.halfline = halfline_ft(psi, p, abs_tol, n.as_double());
  t.halfline_sqrt2 = halfline_ft(psi_sqrt2, p, abs_tol, n.as_double());
  t.even = fullline_ft_by_parity(n, Parity::even, p, abs_tol);
  t.odd = fullline_ft_by_parity(n, Parity::odd, p, abs_tol);
  return t;
}

std::vector<CorrespondenceReport> build_reports(QuantumNumber n, std::span<const double> grid,
                                                const std::vector<PointTransforms>& t,
                                                double match_tol) {
  using C = std::complex<double>;
  const std::size_t m = grid.size();
  std::vector<CorrespondenceReport> reports;

  auto column = [&](auto&& fn) {
    std::vector<C> v(m);
    for (std::size_t i = 0; i < m; ++i)
      v[i] = fn(i);
    return v;
  };
  auto add = [&](std::string cand, std::string src, TransformKind kind, const std::vector<C>& c,
                 const std::vector<C>& tr) {
    reports.push_back(compare(std::move(cand), std::move(src), kind, n, grid, c, tr, match_tol));
  };

  const auto sine = column([&](std::size_t i) { return C(t[i].sine); });
  const auto sine_sq = column([&](std::size_t i) { return C(t[i].sine * t[i].sine); });
  const auto half = column([&](std::size_t i) { return t[i].halfline; });
  const auto half_im = column([&](std::size_t i) { return C(t[i].halfline.imag()); });
  const auto half_sq = column([&](std::size_t i) { return C(std::norm(t[i].halfline)); });
  const auto half_sqrt2 = column([&](std::size_t i) { return t[i].halfline_sqrt2; });
  // (psi_e + psi_o)/sqrt2 is the Q1D state extended by zero; (psi_e - psi_o)/sqrt2 its mirror.
  const auto right = column([&](std::size_t i) { return (t[i].even + t[i].odd) / std::sqrt(2.0); });
  const auto left = column([&](std::size_t i) { return (t[i].even - t[i].odd) / std::sqrt(2.0); });
  const auto right_sq = column([&](std::size_t i) { return C(std::norm(right[i])); });

  const auto eq5 = column([&](std::size_t i) { return C(wavefun::phi_q1d_cheb(n, grid[i])); });
  const auto eq6 = column([&](std::size_t i) { return wavefun::phi_olendski(n, grid[i]); });
  const auto eq7 = column([&](std::size_t i) { return C(wavefun::phi_olendski_imag(n, grid[i])); });
  const auto eq8b = column([&](std::size_t i) { return C(wavefun::gamma_lorentz(n).evaluate(grid[i])); });
  const auto eq11 = column([&](std::size_t i) { return C(wavefun::gamma_q1d(n).evaluate(grid[i])); });
  auto eq10 = [&](wavefun::Branch b, wavefun::ExponentReading r) {
    return column([&](std::size_t i) { return wavefun::phi_1d(n, grid[i], b, r); });
  };
  using wavefun::Branch;
  using wavefun::ExponentReading;

  add("Eq5", "psi_q1d", TransformKind::sine, eq5, sine);
  add("Eq7", "psi_q1d", TransformKind::sine, eq7, sine);
  add("Eq11", "psi_q1d", TransformKind::sine, eq11, sine_sq);
  add("Eq6", "psi_q1d zero-extended", TransformKind::halfline_exponential, eq6, half);
  add("Eq6", "sqrt2*psi_q1d zero-extended", TransformKind::halfline_exponential, eq6, half_sqrt2);
  add("Eq7", "psi_q1d zero-extended (imaginary part)", TransformKind::halfline_exponential, eq7,
      half_im);
  add("Eq8b", "psi_q1d zero-extended", TransformKind::halfline_exponential, eq8b, half_sq);
  add("Eq10-", "(psi_e+psi_o)/sqrt2", TransformKind::fullline_by_parity,
      eq10(Branch::minus, ExponentReading::scaled), right);
  add("Eq10+", "(psi_e-psi_o)/sqrt2", TransformKind::fullline_by_parity,
      eq10(Branch::plus, ExponentReading::scaled), left);
  add("Eq10-[literal]", "(psi_e+psi_o)/sqrt2", TransformKind::fullline_by_parity,
      eq10(Branch::minus, ExponentReading::literal), right);
  add("Eq10+[literal]", "(psi_e-psi_o)/sqrt2", TransformKind::fullline_by_parity,
      eq10(Branch::plus, ExponentReading::literal), left);
  add("Eq8b", "(psi_e+psi_o)/sqrt2", TransformKind::fullline_by_parity, eq8b, right_sq);
  return reports;
}

void check_grid(std::span<const double> grid) {
  if (grid.empty())
    throw std::invalid_argument("adjudicate: empty momentum grid");
  for (double p : grid)
    if (!(p > 0.0 && p <= 5.0))
      throw std::invalid_argument("adjudicate: grid values must lie in (0, 5]");
}

} // namespace

std::string to_string(TransformKind kind) {
  switch (kind) {
  case TransformKind::sine:
    return "sine";
  case TransformKind::cosine:
    return "cosine";
  case TransformKind::halfline_exponential:
    return "halfline_exponential";
  case TransformKind::fullline_by_parity:
    return "fullline_by_parity";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::match:
    return "match";
  case Verdict::match_up_to_constant:
    return "match-up-to-constant";
  case Verdict::mismatch:
    return "mismatch";
  }
  return "unknown";
}

double sine_transform(const RealFunction& f, QuantumNumber n_scale, double p, double abs_tol) {
  return half_line_transform(f, quadrature::Oscillator::sine, p, n_scale.as_double(), abs_tol);
}

double cosine_transform(const RealFunction& f, QuantumNumber n_scale, double p, double abs_tol) {
  return half_line_transform(f, quadrature::Oscillator::cosine, p, n_scale.as_double(), abs_tol);
}

std::complex<double> halfline_ft(const RealFunction& f, double p, double abs_tol,
                                 double decay_scale) {
  const double c = half_line_transform(f, quadrature::Oscillator::cosine, p, decay_scale, abs_tol);
  const double s = half_line_transform(f, quadrature::Oscillator::sine, p, decay_scale, abs_tol);
  return {0.5 * c, -0.5 * s};
}

std::complex<double> fullline_ft_by_parity(QuantumNumber n, Parity parity, double p,
                                           double abs_tol) {
  const RealFunction half = [n, parity](double x) { return wavefun::psi_1d(n, parity, x); };
  if (parity == Parity::even)
    return {cosine_transform(half, n, p, abs_tol), 0.0};
  return {0.0, -sine_transform(half, n, p, abs_tol)};
}

std::vector<double> default_grid(QuantumNumber n, int count) {
  if (count < 2)
    throw std::invalid_argument("default_grid: need at least two points");
  const double lo = 0.05 / n.as_double();
  const double hi = 4.0 / n.as_double();
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return grid;
}

CorrespondenceReport compare(std::string candidate, std::string source, TransformKind kind,
                             QuantumNumber n, std::span<const double> grid,
                             std::span<const std::complex<double>> candidate_values,
                             std::span<const std::complex<double>> transform_values,
                             double match_tol) {
  if (candidate_values.size() != grid.size() || transform_values.size() != grid.size())
    throw std::invalid_argument("compare: value arrays must match the grid");
  CorrespondenceReport r;
  r.candidate = std::move(candidate);
  r.source = std::move(source);
  r.transform = kind;
  r.n = n.value();
  r.grid.assign(grid.begin(), grid.end());

  std::complex<double> cross{0.0, 0.0};
  double power = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    cross += std::conj(transform_values[i]) * candidate_values[i];
    power += std::norm(transform_values[i]);
    r.max_abs_deviation =
        std::max(r.max_abs_deviation, std::abs(candidate_values[i] - transform_values[i]));
  }
  r.fitted_global_factor = power > 0.0 ? cross / power : std::complex<double>{0.0, 0.0};
  for (std::size_t i = 0; i < grid.size(); ++i)
    r.fitted_deviation =
        std::max(r.fitted_deviation,
                 std::abs(candidate_values[i] - r.fitted_global_factor * transform_values[i]));

  if (r.max_abs_deviation <= match_tol && std::abs(r.fitted_global_factor - 1.0) <= 1e-6)
    r.verdict = Verdict::match;
  else if (r.fitted_deviation <= match_tol)
    r.verdict = Verdict::match_up_to_constant;
  else
    r.verdict = Verdict::mismatch;
  return r;
}

std::vector<CorrespondenceReport> adjudicate(QuantumNumber n, std::span<const double> p_grid,
                                             const AdjudicationOptions& opts) {
  check_grid(p_grid);
  const auto count = static_cast<long>(p_grid.size());
  std::vector<PointTransforms> values(p_grid.size());
  std::vector<std::exception_ptr> errors(p_grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      values[k] = transforms_at(n, p_grid[k], opts.abs_tol);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return build_reports(n, p_grid, values, opts.match_tol);
}

std::vector<CorrespondenceReport> adjudicate_serial(QuantumNumber n,
                                                    std::span<const double> p_grid,
                                                    const AdjudicationOptions& opts) {
  check_grid(p_grid);
  std::vector<PointTransforms> values;
  values.reserve(p_grid.size());
  for (double p : p_grid)
    values.push_back(transforms_at(n, p, opts.abs_tol));
  return build_reports(n, p_grid, values, opts.match_tol);
}

} // namespace q1dh::transforms
