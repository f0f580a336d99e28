#include "q1dh/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "q1dh/information.hpp"
#include "q1dh/transforms.hpp"
#include "q1dh/verify.hpp"
#include "q1dh/wavefun.hpp"

namespace q1dh::cli {

namespace {

using nlohmann::json;

long long to_ten_thousandths(double v) { return std::llround(v * 1e4); }

// ---- table -----------------------------------------------------------------

struct TableArgs {
  int n_max = 10;
  std::string format = "csv";
  double tol = 1e-6;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const auto rows = information::entropy_table(a.n_max, a.tol);
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n},
                     {"s_rho", r.s_rho},
                     {"s_gamma_o", r.s_gamma_o},
                     {"s_gamma_s", r.s_gamma_s},
                     {"sum_o", r.sum_o},
                     {"sum_s", r.sum_s}});
    out << arr.dump(2) << '\n';
    return exit_code::ok;
  }
  out << "n,S_rho,S_gamma_o,S_gamma_s,sum_o,sum_s\n";
  for (const auto& r : rows) {
    // sums of the printed columns, so the printed row is self-consistent
    const long long s_rho = to_ten_thousandths(r.s_rho);
    const long long s_o = to_ten_thousandths(r.s_gamma_o);
    const long long s_s = to_ten_thousandths(r.s_gamma_s);
    out << r.n << ',' << format_fixed4(s_rho) << ',' << format_fixed4(s_o) << ','
        << format_fixed4(s_s) << ',' << format_fixed4(s_rho + s_o) << ','
        << format_fixed4(s_rho + s_s) << '\n';
  }
  return exit_code::ok;
}

// ---- figure ----------------------------------------------------------------

struct FigureArgs {
  int id = 1;
  std::vector<int> n_list{1, 2};
  std::string grid;
  std::string format = "csv";
};

wavefun::DensitySpec figure_density(int id, QuantumNumber n) {
  switch (id) {
  case 1:
    return wavefun::rho_q1d(n);
  case 2:
    return wavefun::gamma_lorentz(n);
  case 3:
    return wavefun::rho_1d(n);
  default:
    return wavefun::gamma_q1d(n);
  }
}

GridSpec default_figure_grid(int id) {
  switch (id) {
  case 1:
    return {0.0, 15.0, 0.01};
  case 2:
    return {-3.0, 3.0, 0.002};
  case 3:
    return {-15.0, 15.0, 0.01};
  default:
    return {0.0, 3.0, 0.002};
  }
}

int cmd_figure(const FigureArgs& a, std::ostream& out, std::ostream& err) {
  GridSpec spec = default_figure_grid(a.id);
  if (!a.grid.empty()) {
    const auto parsed = parse_grid(a.grid);
    if (!parsed) {
      err << "error: malformed grid '" << a.grid << "', expected start:stop:step with step > 0\n";
      return exit_code::usage;
    }
    spec = *parsed;
  }
  const auto grid = spec.points();
  std::vector<std::vector<double>> series;
  for (int n : a.n_list)
    series.push_back(wavefun::sample_density(figure_density(a.id, QuantumNumber(n)), grid));

  if (a.format == "json") {
    json doc;
    doc["figure"] = a.id;
    doc["coordinate"] = grid;
    doc["series"] = json::array();
    for (std::size_t k = 0; k < a.n_list.size(); ++k)
      doc["series"].push_back({{"n", a.n_list[k]}, {"values", series[k]}});
    out << doc.dump() << '\n';
    return exit_code::ok;
  }
  out << "coordinate";
  for (int n : a.n_list)
    out << ",value_n=" << n;
  out << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << fmt::format("{:.10g}", grid[i]);
    for (const auto& s : series)
      out << fmt::format(",{:.12g}", s[i]);
    out << '\n';
  }
  return exit_code::ok;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  double tol = 1e-8;
  std::string format = "csv";
};

json to_json(const verify::VerificationReport& r) {
  return {{"name", r.name},
          {"max_abs_deviation", r.max_abs_deviation},
          {"tolerance", r.tolerance},
          {"status", verify::to_string(r.status)},
          {"passed", r.passed()},
          {"detail", r.detail}};
}

json to_json(const transforms::CorrespondenceReport& r) {
  return {{"candidate", r.candidate},
          {"source", r.source},
          {"transform", transforms::to_string(r.transform)},
          {"n", r.n},
          {"grid", r.grid},
          {"max_abs_deviation", r.max_abs_deviation},
          {"fitted_global_factor", {r.fitted_global_factor.real(), r.fitted_global_factor.imag()}},
          {"fitted_deviation", r.fitted_deviation},
          {"verdict", transforms::to_string(r.verdict)}};
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto suite = verify::parse_suite(a.suite);
  if (!suite) {
    err << "error: unknown suite '" << a.suite << "'\n";
    return exit_code::usage;
  }
  const auto result = verify::run_suite(*suite, a.tol);
  const bool ok = std::all_of(result.checks.begin(), result.checks.end(),
                              [](const auto& r) { return r.passed(); });
  if (a.format == "json") {
    json doc;
    doc["checks"] = json::array();
    for (const auto& r : result.checks)
      doc["checks"].push_back(to_json(r));
    doc["correspondences"] = json::array();
    for (const auto& r : result.correspondences)
      doc["correspondences"].push_back(to_json(r));
    doc["passed"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : result.correspondences)
      out << fmt::format("correspondence n={} {} ~ {}[{}]: {}  max_abs_deviation={:.3e} "
                         "fitted_factor=({:.9f},{:+.9f}) fitted_deviation={:.3e}\n",
                         r.n, r.candidate, transforms::to_string(r.transform), r.source,
                         transforms::to_string(r.verdict), r.max_abs_deviation,
                         r.fitted_global_factor.real(), r.fitted_global_factor.imag(),
                         r.fitted_deviation);
    for (const auto& r : result.checks) {
      if (r.status == verify::Status::info)
        out << fmt::format("{}: info  {}\n", r.name, r.detail);
      else
        out << fmt::format("{}: {}  max_abs_deviation={:.3e} tolerance={:.1e}  {}\n", r.name,
                           verify::to_string(r.status), r.max_abs_deviation, r.tolerance, r.detail);
    }
  }
  return ok ? exit_code::ok : exit_code::verification_failure;
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
  std::string quantity;
  int n = 1;
  std::optional<double> x;
  std::optional<double> p;
  std::string family = "q1d";
  std::string form = "laguerre";
  std::string parity = "even";
  std::string branch = "plus";
  std::string reading = "scaled";
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  if (a.x.has_value() == a.p.has_value()) {
    err << "error: give exactly one of --x or --p\n";
    return exit_code::usage;
  }
  const double point = a.x ? *a.x : *a.p;
  const QuantumNumber n(a.n);
  auto real = [&](double v) { out << fmt::format("{:.17g}\n", v); };
  auto complex = [&](std::complex<double> v) {
    out << fmt::format("{:.17g} {:+.17g}i\n", v.real(), v.imag());
  };
  const auto& q = a.quantity;
  if (q == "psi") {
    if (a.family == "1d")
      real(wavefun::psi_1d(n, a.parity == "odd" ? Parity::odd : Parity::even, point));
    else
      real(wavefun::psi_q1d(n, point,
                            a.form == "hypergeometric" ? wavefun::WaveForm::hypergeometric
                                                       : wavefun::WaveForm::laguerre));
  } else if (q == "phi5") {
    real(wavefun::phi_q1d_cheb(n, point));
  } else if (q == "phi6") {
    complex(wavefun::phi_olendski(n, point));
  } else if (q == "phi7") {
    real(wavefun::phi_olendski_imag(n, point));
  } else if (q == "phi10") {
    const auto b = (a.branch == "minus" || a.branch == "-") ? wavefun::Branch::minus
                                                             : wavefun::Branch::plus;
    const auto r = a.reading == "literal" ? wavefun::ExponentReading::literal
                                          : wavefun::ExponentReading::scaled;
    complex(wavefun::phi_1d(n, point, b, r));
  } else if (q == "rho") {
    if (a.family == "q1d" && point < 0.0)
      throw std::domain_error("rho: x must be >= 0 for the q1d family");
    real((a.family == "1d" ? wavefun::rho_1d(n) : wavefun::rho_q1d(n)).evaluate(point));
  } else if (q == "gamma") {
    if (a.family == "q1d" && point < 0.0)
      throw std::domain_error("gamma: p must be >= 0 for the q1d family");
    real((a.family == "lorentz" ? wavefun::gamma_lorentz(n) : wavefun::gamma_q1d(n)).evaluate(point));
  } else {
    err << "error: unknown quantity '" << q << "'\n";
    return exit_code::usage;
  }
  return exit_code::ok;
}

} // namespace

std::vector<double> GridSpec::points() const {
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    double x = start + static_cast<double>(i) * step;
    if (std::fabs(x) < 1e-9 * step)
      x = 0.0;
    pts.push_back(x);
  }
  return pts;
}

std::optional<GridSpec> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || !std::isfinite(v))
        return std::nullopt;
      parts.push_back(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0])
    return std::nullopt;
  if ((parts[1] - parts[0]) / parts[2] > 1e7)
    return std::nullopt;
  return GridSpec{parts[0], parts[1], parts[2]};
}

std::string format_fixed4(long long v) {
  const bool negative = v < 0;
  const unsigned long long mag = negative ? 0ULL - static_cast<unsigned long long>(v)
                                          : static_cast<unsigned long long>(v);
  return fmt::format("{}{}.{:04}", negative ? "-" : "", mag / 10000, mag % 10000);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of the quasi-one-dimensional hydrogen atom: densities, "
               "entropies, transforms"};
  app.name("q1dh");
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Shannon entropy table, one row per n");
  table_cmd->add_option("--n-max", table.n_max, "largest principal quantum number")
      ->check(CLI::Range(1, 32));
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--tol", table.tol, "absolute quadrature tolerance")
      ->check(CLI::PositiveNumber);

  FigureArgs figure;
  auto* figure_cmd = app.add_subcommand("figure", "density curves on a grid");
  figure_cmd->add_option("--id", figure.id, "1: rho_q1d, 2: gamma_lorentz, 3: rho_1d, 4: gamma_q1d")
      ->required()
      ->check(CLI::Range(1, 4));
  figure_cmd->add_option("--n", figure.n_list, "principal quantum numbers")
      ->delimiter(',')
      ->check(CLI::Range(1, 32));
  figure_cmd->add_option("--grid", figure.grid, "start:stop:step");
  figure_cmd->add_option("--format", figure.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run named verification checks");
  verify_cmd->add_option("--suite", verify_args.suite)
      ->check(CLI::IsMember(
          {"identities", "normalization", "table", "bbm", "transforms", "fisher", "all"}));
  verify_cmd->add_option("--tol", verify_args.tol)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify_args.format)->check(CLI::IsMember({"csv", "json"}));

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one quantity at one point");
  eval_cmd->add_option("quantity", eval.quantity, "psi|phi5|phi6|phi7|phi10|rho|gamma")
      ->required()
      ->check(CLI::IsMember({"psi", "phi5", "phi6", "phi7", "phi10", "rho", "gamma"}));
  eval_cmd->add_option("--n", eval.n)->check(CLI::Range(1, 64));
  eval_cmd->add_option("--x", eval.x);
  eval_cmd->add_option("--p", eval.p);
  eval_cmd->add_option("--family", eval.family)->check(CLI::IsMember({"q1d", "1d", "lorentz"}));
  eval_cmd->add_option("--form", eval.form)->check(CLI::IsMember({"hypergeometric", "laguerre"}));
  eval_cmd->add_option("--parity", eval.parity)->check(CLI::IsMember({"even", "odd"}));
  eval_cmd->add_option("--branch", eval.branch)->check(CLI::IsMember({"plus", "minus", "+", "-"}));
  eval_cmd->add_option("--reading", eval.reading)->check(CLI::IsMember({"scaled", "literal"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  }

  try {
    if (table_cmd->parsed())
      return cmd_table(table, out);
    if (figure_cmd->parsed())
      return cmd_figure(figure, out, err);
    if (verify_cmd->parsed())
      return cmd_verify(verify_args, out, err);
    return cmd_eval(eval, out, err);
  } catch (const NonConvergence& e) {
    err << "non-convergence: " << e.what() << '\n';
    return exit_code::non_convergence;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

} // namespace q1dh::cli
