#include "q1dh/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>

namespace q1dh::quadrature {

namespace {

// 15-point Kronrod abscissae (positive half) with the embedded 7-point Gauss
// rule on the odd-indexed nodes.
constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double tiny = std::numeric_limits<double>::min();

struct Piece {
  Integrand g;
};

struct Panel {
  std::size_t piece;
  double a;
  double b;
  double value;
  double error;
  double floor;  // rounding-level error below which bisection cannot help

  bool operator<(const Panel& o) const { return error < o.error; }
};

double checked(double v, double x) {
  if (!std::isfinite(v))
    throw NonConvergence("non-finite integrand value at abscissa " + std::to_string(x));
  return v;
}

Panel gauss_kronrod(const Piece& piece, std::size_t index, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::fabs(half);

  const double fc = checked(piece.g(centre), centre);
  double resg = fc * gauss_w[3];
  double resk = fc * kronrod_w[7];
  double resabs = std::fabs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kronrod_x[j];
    f1[j] = checked(piece.g(centre - dx), centre - dx);
    f2[j] = checked(piece.g(centre + dx), centre + dx);
    const double pair = f1[j] + f2[j];
    resk += kronrod_w[j] * pair;
    resabs += kronrod_w[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1)
      resg += gauss_w[j / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = kronrod_w[7] * std::fabs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j)
    resasc += kronrod_w[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

  resabs *= abs_half;
  resasc *= abs_half;
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * eps * resabs;
  if (resabs > tiny / (50.0 * eps))
    err = std::max(floor, err);
  return Panel{index, a, b, resk * half, err, floor};
}

bool splittable(const Panel& p) {
  const double width = p.b - p.a;
  const double mag = std::max(std::fabs(p.a), std::fabs(p.b));
  return width > 1e3 * eps * mag && width > 1e3 * tiny && p.error > 1.0001 * p.floor;
}

// A bisection that did not reduce the error of a panel already at its
// rounding floor will not do better when repeated.
bool stalled(const Panel& parent, const Panel& left, const Panel& right) {
  return left.error + right.error > 0.99 * parent.error && left.error <= 4.0 * left.floor &&
         right.error <= 4.0 * right.floor;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct Interval {
  std::size_t piece;
  double a;
  double b;
};

// Global adaptive refinement over a set of (already mapped) pieces.
QuadratureResult refine(const std::vector<Piece>& pieces, const std::vector<Interval>& start,
                        double abs_tol, long max_evaluations) {
  if (!(abs_tol > 0.0))
    throw std::invalid_argument("abs_tol must be positive");

  std::priority_queue<Panel> active;
  std::vector<Panel> frozen;
  long evaluations = 0;
  for (const auto& iv : start) {
    if (iv.b <= iv.a)
      continue;
    active.push(gauss_kronrod(pieces[iv.piece], iv.piece, iv.a, iv.b));
    evaluations += 15;
  }

  double floor_sum = 0.0;
  auto total_error = [&] {
    double e = 0.0;
    floor_sum = 0.0;
    auto copy = active;
    while (!copy.empty()) {
      e += copy.top().error;
      floor_sum += copy.top().floor;
      copy.pop();
    }
    for (const auto& p : frozen) {
      e += p.error;
      floor_sum += p.floor;
    }
    return e;
  };
  auto rounding_limited = [&](double estimate) {
    return NonConvergence("rounding-limited: error estimate " + sci(estimate) +
                          " cannot reach tolerance " + sci(abs_tol));
  };

  double err_sum = total_error();
  std::size_t since_resum = 0;
  while (!active.empty()) {
    if (err_sum <= abs_tol) {
      err_sum = total_error();
      if (err_sum <= abs_tol)
        break;
    }
    Panel worst = active.top();
    active.pop();
    if (!splittable(worst)) {
      frozen.push_back(worst);
      continue;
    }
    if (evaluations + 30 > max_evaluations)
      throw NonConvergence("evaluation budget of " + std::to_string(max_evaluations) +
                           " exhausted; error estimate " + sci(err_sum) + " > tolerance " +
                           sci(abs_tol));
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gauss_kronrod(pieces[worst.piece], worst.piece, worst.a, mid);
    Panel right = gauss_kronrod(pieces[worst.piece], worst.piece, mid, worst.b);
    evaluations += 30;
    err_sum += left.error + right.error - worst.error;
    if (stalled(worst, left, right)) {
      frozen.push_back(left);
      frozen.push_back(right);
    } else {
      active.push(left);
      active.push(right);
    }
    // the running sum drifts; resum exactly now and then
    if (++since_resum == 256) {
      err_sum = total_error();
      since_resum = 0;
      if (floor_sum > abs_tol)
        throw rounding_limited(err_sum);
    }
  }

  // Sum from smallest to largest contribution.
  std::vector<Panel> all = std::move(frozen);
  while (!active.empty()) {
    all.push_back(active.top());
    active.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Panel& l, const Panel& r) { return std::fabs(l.value) < std::fabs(r.value); });
  QuadratureResult result;
  result.evaluations = std::max(evaluations, 1L);
  for (const auto& p : all) {
    result.value += p.value;
    result.error_estimate += p.error;
  }
  if (result.error_estimate > abs_tol)
    throw rounding_limited(result.error_estimate);
  return result;
}

Integrand right_tail(Integrand f, double origin, double scale) {
  return [f = std::move(f), origin, scale](double t) {
    if (t >= 1.0)
      return 0.0;
    const auto m = map_half_line(t, scale);
    const double x = origin + m.x;
    if (!std::isfinite(x))
      return 0.0;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v * m.jacobian;
  };
}

Integrand left_tail(Integrand f, double origin, double scale) {
  return [f = std::move(f), origin, scale](double t) {
    if (t >= 1.0)
      return 0.0;
    const auto m = map_half_line(t, scale);
    const double x = origin - m.x;
    if (!std::isfinite(x))
      return 0.0;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v * m.jacobian;
  };
}

std::vector<double> sorted_inside(std::vector<double> pts, double lo, double hi) {
  std::erase_if(pts, [&](double x) { return !(x > lo && x < hi); });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

} // namespace

MappedPoint map_half_line(double t, double scale) {
  const double w = 1.0 - t;
  return {scale * t / w, scale / (w * w)};
}

QuadratureResult integrate(const IntegrationRequest& req) {
  if (!(req.scale > 0.0))
    throw std::invalid_argument("integration scale must be positive");
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<Piece> pieces;
  std::vector<Interval> start;
  pieces.push_back({req.integrand});  // piece 0: identity map

  auto add_finite = [&](const std::vector<double>& cuts) {
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      start.push_back({0, cuts[i], cuts[i + 1]});
  };

  if (const auto* fin = std::get_if<Finite>(&req.domain)) {
    double a = fin->a;
    double b = fin->b;
    double sign = 1.0;
    if (b < a) {
      std::swap(a, b);
      sign = -1.0;
    }
    auto cuts = sorted_inside(req.singular_points, a, b);
    cuts.insert(cuts.begin(), a);
    cuts.push_back(b);
    add_finite(cuts);
    auto r = refine(pieces, start, req.abs_tol, req.max_evaluations);
    r.value *= sign;
    return r;
  }

  if (const auto* half = std::get_if<HalfLine>(&req.domain)) {
    auto cuts = sorted_inside(req.singular_points, half->origin, inf);
    cuts.insert(cuts.begin(), half->origin);
    add_finite(cuts);
    pieces.push_back({right_tail(req.integrand, cuts.back(), req.scale)});
    start.push_back({1, 0.0, 1.0});
    return refine(pieces, start, req.abs_tol, req.max_evaluations);
  }

  auto cuts = sorted_inside(req.singular_points, -inf, inf);
  if (cuts.empty())
    cuts.push_back(0.0);
  add_finite(cuts);
  pieces.push_back({left_tail(req.integrand, cuts.front(), req.scale)});
  pieces.push_back({right_tail(req.integrand, cuts.back(), req.scale)});
  start.push_back({1, 0.0, 1.0});
  start.push_back({2, 0.0, 1.0});
  return refine(pieces, start, req.abs_tol, req.max_evaluations);
}

QuadratureResult integrate_arctan(const Integrand& f_of_p, double rate, bool full_line,
                                  const std::vector<double>& nodes, double abs_tol,
                                  long max_evaluations) {
  if (!(rate > 0.0))
    throw std::invalid_argument("arctan substitution rate must be positive");
  constexpr double half_pi = 0.5 * std::numbers::pi;
  std::vector<Piece> pieces{{[&f_of_p, rate](double u) {
    const double c = std::cos(u);
    if (c <= 0.0)
      return 0.0;
    const double v = f_of_p(std::tan(u) / rate);
    return v == 0.0 ? 0.0 : v / (rate * c * c);
  }}};
  const double lo = full_line ? -half_pi : 0.0;
  std::vector<double> cuts;
  for (double p : nodes)
    cuts.push_back(std::atan(rate * p));
  cuts = sorted_inside(cuts, lo, half_pi);
  cuts.insert(cuts.begin(), lo);
  cuts.push_back(half_pi);
  std::vector<Interval> start;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    start.push_back({0, cuts[i], cuts[i + 1]});
  return refine(pieces, start, abs_tol, max_evaluations);
}

QuadratureResult integrate_momentum_compact(QuantumNumber n, const Integrand& integrand_in_u,
                                            double abs_tol, long max_evaluations) {
  const int k_max = 4 * n.value();
  const double step = 0.5 * std::numbers::pi / k_max;
  std::vector<Piece> pieces{{integrand_in_u}};
  std::vector<Interval> start;
  for (int k = 0; k < k_max; ++k)
    start.push_back({0, k * step, k + 1 == k_max ? 0.5 * std::numbers::pi : (k + 1) * step});
  return refine(pieces, start, abs_tol, max_evaluations);
}

QuadratureResult integrate_oscillatory(const Integrand& f, Oscillator kind, double p,
                                       double decay_scale, double abs_tol,
                                       long max_evaluations) {
  if (!(p >= 0.0))
    throw std::invalid_argument("integrate_oscillatory: frequency must be nonnegative");
  if (!(decay_scale > 0.0))
    throw std::invalid_argument("integrate_oscillatory: decay scale must be positive");

  if (p == 0.0) {
    if (kind == Oscillator::sine)
      return {0.0, 0.0, 1};
    return integrate({f, HalfLine{}, decay_scale, abs_tol, {}, max_evaluations});
  }

  // Find a cut-off X, a multiple of the half-period, past which the tail of
  // |f| is negligible.
  const double period = std::numbers::pi / p;
  const Integrand abs_f = [&f](double x) { return std::fabs(f(x)); };
  long evaluations = 0;
  double cutoff = decay_scale;
  double tail_bound = 0.0;
  for (int doubling = 0;; ++doubling) {
    cutoff = std::ceil(cutoff / period) * period;
    // A tail too large to integrate to abs_tol/40 is certainly not negligible.
    try {
      const auto tail = integrate({abs_f, HalfLine{cutoff}, decay_scale, abs_tol / 40.0, {},
                                   max_evaluations});
      evaluations += tail.evaluations;
      tail_bound = tail.value + tail.error_estimate;
      if (tail_bound <= abs_tol / 4.0)
        break;
    } catch (const NonConvergence&) {
    }
    if (doubling > 60)
      throw NonConvergence("integrate_oscillatory: integrand tail does not decay");
    cutoff *= 2.0;
  }

  const double panels = std::round(cutoff / period);
  if (panels * 15.0 > static_cast<double>(max_evaluations))
    throw NonConvergence("integrate_oscillatory: " + std::to_string(static_cast<long>(panels)) +
                         " half-period panels exceed the evaluation budget");

  std::vector<Piece> pieces;
  if (kind == Oscillator::sine)
    pieces.push_back({[&f, p](double x) { return f(x) * std::sin(p * x); }});
  else
    pieces.push_back({[&f, p](double x) { return f(x) * std::cos(p * x); }});
  std::vector<Interval> start;
  const auto count = static_cast<long>(panels);
  start.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k)
    start.push_back({0, k * period, (k + 1) * period});

  auto r = refine(pieces, start, 0.75 * abs_tol, max_evaluations - evaluations);
  r.evaluations += evaluations;
  r.error_estimate += tail_bound;
  return r;
}

} // namespace q1dh::quadrature
