#pragma once

// Verification reports and the 1D grid description used by the CLI.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace h2d {

enum class ErrorMetric { absolute, relative };

inline const char* to_string(ErrorMetric m) { return m == ErrorMetric::absolute ? "abs" : "rel"; }

struct VerificationReport {
  std::string check_name;
  std::string grid_desc;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  ErrorMetric metric = ErrorMetric::absolute;
  bool pass = false;
  std::string notes;
  std::size_t comparisons = 0;

  double applicable_error() const { return metric == ErrorMetric::absolute ? max_abs_err : max_rel_err; }
};

/// Running maxima of absolute and relative deviations. The relative error
/// divides by max(|reference|, scale_floor).
class ErrorTracker {
public:
  explicit ErrorTracker(double scale_floor = 0.0) : floor_(scale_floor) {}

  void add(std::complex<double> got, std::complex<double> ref) {
    const double d = std::abs(got - ref);
    const double scale = std::max(std::abs(ref), floor_);
    record(d, scale);
  }
  void add(double got, double ref) { add(std::complex<double>(got), std::complex<double>(ref)); }
  /// Record a precomputed deviation whose reference magnitude is `ref_mag`.
  void add_error(double err, double ref_mag) { record(err, std::max(ref_mag, floor_)); }

  double max_abs() const noexcept { return max_abs_; }
  double max_rel() const noexcept { return max_rel_; }
  std::size_t count() const noexcept { return count_; }

  void merge(const ErrorTracker& o) {
    max_abs_ = std::max(max_abs_, o.max_abs_);
    max_rel_ = std::max(max_rel_, o.max_rel_);
    count_ += o.count_;
  }

private:
  void record(double d, double scale) {
    ++count_;
    if (std::isnan(d)) {
      max_abs_ = max_rel_ = std::numeric_limits<double>::infinity();
      return;
    }
    max_abs_ = std::max(max_abs_, d);
    const double r = scale > 0.0 ? d / scale : (d == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    max_rel_ = std::max(max_rel_, r);
  }

  double floor_;
  double max_abs_ = 0.0;
  double max_rel_ = 0.0;
  std::size_t count_ = 0;
};

inline VerificationReport make_report(std::string name, std::string grid, const ErrorTracker& t,
                                      double tolerance, ErrorMetric metric, std::string notes = {}) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.grid_desc = std::move(grid);
  r.max_abs_err = t.max_abs();
  r.max_rel_err = t.max_rel();
  r.tolerance = tolerance;
  r.metric = metric;
  r.comparisons = t.count();
  r.notes = std::move(notes);
  if (t.count() == 0) {
    r.pass = true;
    r.notes = r.notes.empty() ? "vacuous: 0 comparisons" : "vacuous: 0 comparisons; " + r.notes;
  } else {
    r.pass = r.applicable_error() <= tolerance;
  }
  return r;
}

/// min:max:points[:log]
struct GridSpec {
  enum class Scale { linear, log };

  double min = 0.0;
  double max = 1.0;
  int points = 2;
  Scale scale = Scale::linear;

  void validate() const {
    if (!(min < max)) throw std::invalid_argument("grid: min must be < max");
    if (points < 2) throw std::invalid_argument("grid: need at least 2 points");
    if (scale == Scale::log && !(min > 0.0)) throw std::invalid_argument("grid: log scale requires min > 0");
  }

  std::vector<double> values() const {
    validate();
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) {
      const double f = double(i) / (points - 1);
      v[i] = scale == Scale::linear ? min + f * (max - min)
                                    : std::exp(std::log(min) + f * (std::log(max) - std::log(min)));
    }
    v.front() = min;
    v.back() = max;
    return v;
  }

  std::string describe() const;

  static GridSpec parse(std::string_view text);
};

namespace detail {
inline double parse_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw std::invalid_argument("grid: bad number '" + std::string(s) + "'");
  return v;
}

inline std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}
}  // namespace detail

inline GridSpec GridSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (parts.size() < 3 || parts.size() > 4) throw std::invalid_argument("grid: expected min:max:points[:log]");
  GridSpec g;
  g.min = detail::parse_double(parts[0]);
  g.max = detail::parse_double(parts[1]);
  int pts = 0;
  auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), pts);
  if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size())
    throw std::invalid_argument("grid: bad point count '" + std::string(parts[2]) + "'");
  g.points = pts;
  if (parts.size() == 4) {
    if (parts[3] == "log") g.scale = Scale::log;
    else if (parts[3] == "lin" || parts[3] == "linear") g.scale = Scale::linear;
    else throw std::invalid_argument("grid: unknown scale '" + std::string(parts[3]) + "'");
  }
  g.validate();
  return g;
}

inline std::string GridSpec::describe() const {
  return detail::shortest(min) + ":" + detail::shortest(max) + ":" + std::to_string(points) +
         (scale == Scale::log ? ":log" : "");
}

}  // namespace h2d
