#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace q1dh::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failure = 1;
inline constexpr int non_convergence = 2;
inline constexpr int usage = 64;
} // namespace exit_code

struct GridSpec {
  double start;
  double stop;
  double step;

  std::vector<double> points() const;
};

/// Parses "start:stop:step" with step > 0 and stop >= start.
std::optional<GridSpec> parse_grid(const std::string& text);

/// Fixed four-decimal rendering of a value held as an integer count of 1e-4.
std::string format_fixed4(long long ten_thousandths);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace q1dh::cli
