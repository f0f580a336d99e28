#include "q1dh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "q1dh/specfun.hpp"
#include "q1dh/wavefun.hpp"

namespace q1dh::verify {

namespace {

using information::EntropyRow;

VerificationReport check(std::string name, double deviation, double tol, std::string detail = {}) {
  return {std::move(name), deviation, tol, deviation <= tol ? Status::pass : Status::fail,
          std::move(detail)};
}

double scaled_diff(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

std::vector<VerificationReport> identities(double tol) {
  std::vector<VerificationReport> out;

  double dev = 0.0;
  for (int m = 0; m <= 12; ++m)
    for (int i = 0; i < 50; ++i) {
      const double x = 40.0 * i / 49.0;
      dev = std::max(dev, scaled_diff((m + 1) * specfun::hyp1f1_terminating(-m, 2, x),
                                      specfun::laguerre(m, 1, x)));
    }
  out.push_back(check("kummer_laguerre_link", dev, tol, "m<=12, x in [0,40]"));

  dev = 0.0;
  for (int m = 0; m <= 12; ++m)
    for (int i = 1; i <= 100; ++i) {
      const double theta = std::numbers::pi * i / 101.0;
      dev = std::max(dev, std::fabs(specfun::chebyshev_u(m, std::cos(theta)) * std::sin(theta) -
                                    std::sin((m + 1) * theta)));
    }
  out.push_back(check("chebyshev_trig_identity", dev, tol, "m<=12, theta in (0,pi)"));

  dev = 0.0;
  for (int n = 1; n <= 10; ++n)
    for (int i = 0; i < 200; ++i) {
      const double x = 60.0 * i / 199.0;
      const QuantumNumber q(n);
      dev = std::max(dev, std::fabs(wavefun::psi_q1d(q, x, wavefun::WaveForm::hypergeometric) -
                                    wavefun::psi_q1d(q, x, wavefun::WaveForm::laguerre)));
    }
  out.push_back(check("eq1_equals_eq3", dev, tol, "n<=10, x in [0,60]"));

  double dev_imag = 0.0;
  double dev_mod = 0.0;
  double dev_two = 0.0;
  double ratio_lo = 1e300;
  double ratio_hi = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const QuantumNumber q(n);
    const auto lorentz = wavefun::gamma_lorentz(q);
    for (int i = 0; i <= 400; ++i) {
      const double p = -5.0 + 10.0 * i / 400.0;
      const auto a = wavefun::phi_olendski(q, p);
      const double b = wavefun::phi_olendski_imag(q, p);
      dev_imag = std::max(dev_imag, std::fabs(a.imag() - b));
      dev_mod = std::max(dev_mod, std::fabs(std::norm(a) - lorentz.evaluate(p)));
      if (p > 0.0) {
        const double c5 = std::fabs(wavefun::phi_q1d_cheb(q, p));
        dev_two = std::max(dev_two, std::fabs(c5 - 2.0 * std::fabs(b)));
        if (std::fabs(b) > 1e-3) {
          ratio_lo = std::min(ratio_lo, c5 / std::fabs(b));
          ratio_hi = std::max(ratio_hi, c5 / std::fabs(b));
        }
      }
    }
  }
  out.push_back(check("imag_eq6_equals_eq7", dev_imag, tol, "n<=10, p in [-5,5]"));
  out.push_back(check("modulus_eq6_equals_eq8b", dev_mod, tol, "n<=10, p in [-5,5]"));
  out.push_back(check("eq5_equals_twice_eq7", dev_two, tol, "|Eq5| = 2|Eq7|, n<=10, p in (0,5]"));
  out.push_back({"eq5_over_eq7_ratio", 0.0, 0.0, Status::info,
                 fmt::format("measured |Eq5|/|Eq7| in [{:.12f}, {:.12f}]", ratio_lo, ratio_hi)});
  return out;
}

int sign_changes(const std::vector<double>& v) {
  int count = 0;
  double last = 0.0;
  for (double x : v) {
    if (x == 0.0)
      continue;
    if (last != 0.0 && (x < 0.0) != (last < 0.0))
      ++count;
    last = x;
  }
  return count;
}

std::vector<VerificationReport> normalization(double tol) {
  std::vector<VerificationReport> out;
  const double qtol = tol / 100.0;
  struct Family {
    const char* name;
    wavefun::DensitySpec (*make)(QuantumNumber);
  };
  const Family families[] = {{"rho_q1d", wavefun::rho_q1d},
                             {"gamma_lorentz", wavefun::gamma_lorentz},
                             {"rho_1d", wavefun::rho_1d},
                             {"gamma_q1d", wavefun::gamma_q1d}};
  for (const auto& f : families) {
    double dev = 0.0;
    for (int n = 1; n <= 10; ++n)
      dev = std::max(dev, std::fabs(information::normalization(f.make(QuantumNumber(n)), qtol) - 1.0));
    out.push_back(check(fmt::format("normalization_{}", f.name), dev, tol, "n<=10"));
  }

  double dev = 0.0;
  for (int n = 1; n <= 10; ++n) {
    const QuantumNumber q(n);
    const auto r = quadrature::integrate_arctan(
        [q](double p) {
          const double v = wavefun::phi_olendski_imag(q, p);
          return v * v;
        },
        q.as_double(), false, {}, qtol);
    dev = std::max(dev, std::fabs(r.value - 0.25));
  }
  out.push_back(check("quarter_norm_eq7", dev, tol, "int_0^inf Eq7^2 dp = 1/4, n<=10"));

  const std::pair<int, int> pairs[] = {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {1, 3}, {2, 3}};
  const std::pair<const char*, information::OverlapFamily> overlaps[] = {
      {"q1d_position", information::OverlapFamily::q1d_position},
      {"olendski_momentum", information::OverlapFamily::olendski_momentum},
      {"q1d_momentum_eq5", information::OverlapFamily::q1d_momentum_eq5}};
  for (const auto& [name, family] : overlaps) {
    double worst = 0.0;
    for (const auto& [a, b] : pairs) {
      const double delta = a == b ? 1.0 : 0.0;
      worst = std::max(worst, std::fabs(information::orthonormality_check(
                                            QuantumNumber(a), QuantumNumber(b), family, qtol) -
                                        delta));
    }
    out.push_back(check(fmt::format("orthonormality_{}", name), worst, tol,
                        "(n,n') in {(1,1),(2,2),(3,3),(1,2),(1,3),(2,3)}"));
  }

  int worst_rho = 0;
  int worst_gamma = 0;
  for (int n = 1; n <= 10; ++n) {
    const QuantumNumber q(n);
    const double nd = n;
    std::vector<double> amp;
    for (int i = 1; i <= 20000; ++i)
      amp.push_back(wavefun::psi_q1d(q, 8.0 * nd * nd * i / 20000.0));
    const int listed = static_cast<int>(wavefun::rho_q1d(q).nodes.size());
    worst_rho = std::max({worst_rho, std::abs(sign_changes(amp) - (n - 1)), std::abs(listed - (n - 1))});
    amp.clear();
    for (int i = 1; i <= 20000; ++i)
      amp.push_back(wavefun::phi_olendski_imag(q, 50.0 / nd * i / 20000.0));
    const int listed_p = static_cast<int>(wavefun::gamma_q1d(q).nodes.size());
    worst_gamma =
        std::max({worst_gamma, std::abs(sign_changes(amp) - (n - 1)), std::abs(listed_p - (n - 1))});
  }
  out.push_back(check("node_count_rho_q1d", worst_rho, 0.0, "n-1 interior zeros, n<=10"));
  out.push_back(check("node_count_gamma_q1d", worst_gamma, 0.0, "n-1 zeros in (0,inf), n<=10"));
  return out;
}

std::vector<VerificationReport> transform_checks(
    std::vector<transforms::CorrespondenceReport>& all) {
  std::vector<VerificationReport> out;
  constexpr double match_tol = 1e-8;
  for (int n = 1; n <= 3; ++n) {
    const QuantumNumber q(n);
    const auto grid = transforms::default_grid(q);
    auto reports = transforms::adjudicate(q, grid, {1e-11, match_tol});
    const double phase = n % 2 == 1 ? 1.0 : -1.0;

    auto find = [&](const std::string& cand, const std::string& src) -> const auto& {
      for (const auto& r : reports)
        if (r.candidate == cand && r.source == src)
          return r;
      throw std::logic_error("missing correspondence " + cand + " / " + src);
    };
    // candidate = s * transform with s = +-1 allowed
    auto up_to_sign = [&](const char* name, const transforms::CorrespondenceReport& r,
                          std::initializer_list<double> allowed) {
      bool sign_ok = false;
      for (double s : allowed)
        sign_ok = sign_ok || std::abs(r.fitted_global_factor - s) <= 1e-6;
      const double dev = sign_ok ? r.fitted_deviation : std::max(r.max_abs_deviation, 1.0);
      out.push_back(check(fmt::format("{} n={}", name, n), dev, match_tol,
                          fmt::format("fitted factor {:.9f}{:+.9f}i, verdict {}",
                                      r.fitted_global_factor.real(), r.fitted_global_factor.imag(),
                                      transforms::to_string(r.verdict))));
    };
    up_to_sign("sine_transform_matches_eq5_up_to_sign", find("Eq5", "psi_q1d"), {1.0, phase});
    up_to_sign("zero_extended_transform_matches_eq6_up_to_sign", find("Eq6", "psi_q1d zero-extended"),
               {1.0, phase});
    up_to_sign("modulus_squared_equals_eq8b", find("Eq8b", "psi_q1d zero-extended"), {1.0});
    up_to_sign("sine_squared_equals_eq11", find("Eq11", "psi_q1d"), {1.0});
    up_to_sign("parity_combination_matches_eq10-_up_to_sign", find("Eq10-", "(psi_e+psi_o)/sqrt2"),
               {1.0, phase});
    up_to_sign("parity_combination_matches_eq10+_up_to_sign", find("Eq10+", "(psi_e-psi_o)/sqrt2"),
               {1.0, phase});
    all.insert(all.end(), reports.begin(), reports.end());
  }
  return out;
}

std::vector<VerificationReport> fisher_checks() {
  std::vector<VerificationReport> out;
  const double qtol = 1e-10;
  const auto rho1 = wavefun::rho_q1d(QuantumNumber(1));
  const double i_rho = information::fisher_information(rho1, qtol);
  out.push_back(check("fisher_rho_q1d_n=1", std::fabs(i_rho - 4.0), 1e-8,
                      fmt::format("I_rho = {:.12f}, closed form 4", i_rho)));
  const double i_lor = information::fisher_information(wavefun::gamma_lorentz(QuantumNumber(1)), qtol);
  out.push_back(check("fisher_gamma_lorentz_n=1", std::fabs(i_lor - 2.0), 1e-8,
                      fmt::format("I_gamma = {:.12f}, closed form 2", i_lor)));

  double dev = 0.0;
  for (double lambda : {0.5, 2.0})
    dev = std::max(dev, std::fabs(information::fisher_information(
                                      wavefun::rescale_density(rho1, lambda), qtol) -
                                  lambda * lambda * i_rho));
  out.push_back(check("fisher_scaling", dev, 1e-8, "I[lambda d(lambda x)] = lambda^2 I[d]"));

  // closed-form derivatives against central differences
  std::mt19937 rng(20170326);
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const QuantumNumber q(n);
    for (const auto& d : {wavefun::rho_q1d(q), wavefun::gamma_lorentz(q), wavefun::rho_1d(q),
                          wavefun::gamma_q1d(q)}) {
      const bool momentum = d.arctan_rate.has_value();
      std::uniform_real_distribution<double> pick(momentum ? 0.01 : 0.05,
                                                  momentum ? 3.0 / n : 4.0 * n * n);
      for (int k = 0; k < 20; ++k) {
        const double x = pick(rng);
        const double h = 1e-6;
        const double fd = (d.evaluate(x + h) - d.evaluate(x - h)) / (2.0 * h);
        const double exact = d.derivative(x);
        const double scale = std::max(std::fabs(exact), 1e-3 * std::fabs(d.evaluate(x)) + 1e-6);
        worst = std::max(worst, std::fabs(fd - exact) / scale);
      }
    }
  }
  out.push_back(check("fisher_derivative_finite_difference", worst, 1e-4,
                      "20 random points per family, n<=4, step 1e-6"));

  for (int n = 1; n <= 2; ++n)
    for (auto choice : {information::MomentumDensity::eq8b, information::MomentumDensity::eq11}) {
      const auto fp = information::fisher_pair(QuantumNumber(n), choice, 1e-9);
      out.push_back({fmt::format("fisher_product n={} {}", n,
                                 choice == information::MomentumDensity::eq8b ? "eq8b" : "eq11"),
                     0.0, 0.0, Status::info,
                     fmt::format("I_rho={:.8f} I_gamma={:.8f} product={:.8f} (bound 4: {}) sum={:.8f}",
                                 fp.i_rho, fp.i_gamma, fp.product,
                                 fp.product >= 4.0 ? "satisfied" : "violated", fp.sum)});
    }
  return out;
}

} // namespace

std::string to_string(Status s) {
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::warn:
    return "warn";
  case Status::info:
    return "info";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "identities")
    return Suite::identities;
  if (name == "normalization")
    return Suite::normalization;
  if (name == "table")
    return Suite::table;
  if (name == "bbm")
    return Suite::bbm;
  if (name == "transforms")
    return Suite::transforms;
  if (name == "fisher")
    return Suite::fisher;
  if (name == "all")
    return Suite::all;
  return std::nullopt;
}

std::vector<VerificationReport> compare_table(const std::vector<EntropyRow>& rows) {
  static const char* names[] = {"S_rho", "S_gamma_o", "S_gamma_s", "sum_o", "sum_s"};
  std::vector<VerificationReport> out;
  for (const auto& row : rows) {
    if (row.n < 1 || row.n > static_cast<int>(published_entropies.size()))
      continue;
    const auto& ref = published_entropies[static_cast<std::size_t>(row.n - 1)];
    const double computed[] = {row.s_rho, row.s_gamma_o, row.s_gamma_s, row.sum_o, row.sum_s};
    for (int c = 0; c < 5; ++c) {
      const auto name = fmt::format("table n={} {}", row.n, names[c]);
      const auto flagged = std::find_if(flagged_cells.begin(), flagged_cells.end(),
                                        [&](const FlaggedCell& f) { return f.n == row.n && f.column == c; });
      if (flagged != flagged_cells.end()) {
        const double dev = std::fabs(computed[c] - flagged->row_sum);
        VerificationReport r = check(name, dev, table_tolerance);
        if (r.status == Status::pass)
          r.status = Status::warn;
        r.detail = fmt::format("computed {:.4f}; printed {:.4f} contradicts its row sum {:.4f}",
                               computed[c], flagged->printed, flagged->row_sum);
        out.push_back(r);
        continue;
      }
      out.push_back(check(name, std::fabs(computed[c] - ref[static_cast<std::size_t>(c)]),
                          table_tolerance,
                          fmt::format("computed {:.4f}, published {:.4f}", computed[c],
                                      ref[static_cast<std::size_t>(c)])));
    }
  }
  return out;
}

std::vector<VerificationReport> bbm_reports(const std::vector<EntropyRow>& rows) {
  std::vector<VerificationReport> out;
  for (const auto& row : rows) {
    const auto v = information::bbm_check(row.s_rho, row.s_gamma_s);
    const bool expect_satisfied = row.n >= 3;
    VerificationReport r;
    r.name = fmt::format("n={}", row.n);
    r.max_abs_deviation = std::fabs(v.entropy_sum - v.bound);  // distance from the bound
    r.tolerance = 0.0;
    r.status = v.satisfied == expect_satisfied ? Status::pass : Status::fail;
    r.detail = fmt::format("{}: sum_s={:.4f} {} bound={:.4f} (expected {})",
                           v.satisfied ? "satisfied" : "violated", v.entropy_sum,
                           v.satisfied ? ">=" : "<", v.bound,
                           expect_satisfied ? "satisfied" : "violated");
    out.push_back(r);
  }
  return out;
}

SuiteOutput run_suite(Suite suite, double tol) {
  SuiteOutput out;
  auto append = [&](std::vector<VerificationReport> v) {
    out.checks.insert(out.checks.end(), v.begin(), v.end());
  };
  const bool all = suite == Suite::all;
  if (all || suite == Suite::identities)
    append(identities(tol));
  if (all || suite == Suite::normalization)
    append(normalization(tol));
  if (all || suite == Suite::table || suite == Suite::bbm) {
    const auto rows = information::entropy_table(10, 1e-7);
    if (all || suite == Suite::table)
      append(compare_table(rows));
    if (all || suite == Suite::bbm)
      append(bbm_reports(rows));
  }
  if (all || suite == Suite::transforms)
    append(transform_checks(out.correspondences));
  if (all || suite == Suite::fisher)
    append(fisher_checks());
  return out;
}

} // namespace q1dh::verify
