#include "hartman/density.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hartman/parallel.hpp"

namespace hartman {

namespace {

void check_window(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("window length must be >= 1");
}

void check_schedule(std::span<const std::int64_t> schedule) {
  if (schedule.empty()) throw std::invalid_argument("window schedule is empty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    check_window(schedule[i]);
    if (i > 0 && schedule[i] <= schedule[i - 1]) {
      throw std::invalid_argument("window schedule must be strictly increasing");
    }
  }
}

std::vector<double> evaluate(const IntegerFunction& f, std::int64_t lo, std::size_t count) {
  std::vector<double> values(count);
  parallel_chunks(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values[i] = f(lo + static_cast<std::int64_t>(i));
  });
  return values;
}

std::vector<long double> prefix_sums(std::span<const double> values) {
  std::vector<long double> prefix(values.size() + 1, 0.0L);
  for (std::size_t i = 0; i < values.size(); ++i) prefix[i + 1] = prefix[i] + values[i];
  return prefix;
}

// Extremes of the window sums starting at offsets [0, positions).
WindowExtrema scan(const std::vector<long double>& prefix, std::int64_t N, std::size_t positions) {
  const auto n = static_cast<std::size_t>(N);
  long double lo = std::numeric_limits<long double>::infinity();
  long double hi = -std::numeric_limits<long double>::infinity();
  std::mutex merge;
  parallel_chunks(positions, [&](std::size_t begin, std::size_t end) {
    long double local_lo = std::numeric_limits<long double>::infinity();
    long double local_hi = -local_lo;
    for (std::size_t i = begin; i < end; ++i) {
      const long double s = prefix[i + n] - prefix[i];
      local_lo = std::min(local_lo, s);
      local_hi = std::max(local_hi, s);
    }
    std::lock_guard lock(merge);
    lo = std::min(lo, local_lo);
    hi = std::max(hi, local_hi);
  });
  WindowExtrema out;
  out.window_length = N;
  out.inf_sum = static_cast<double>(lo);
  out.sup_sum = static_cast<double>(hi);
  out.inf = out.inf_sum / static_cast<double>(N);
  out.sup = out.sup_sum / static_cast<double>(N);
  return out;
}

std::size_t scan_positions(std::int64_t K) {
  if (K < 0) throw std::invalid_argument("scan half-width K must be >= 0");
  return static_cast<std::size_t>(2 * K + 1);
}

DensityReport report_from(std::vector<WindowExtrema> per_window, std::int64_t first,
                          std::int64_t last) {
  DensityReport r;
  r.lower_estimate = per_window.back().inf;
  r.upper_estimate = per_window.back().sup;
  r.window_length = per_window.back().window_length;
  r.scan_first = first;
  r.scan_last = last;
  r.per_window = std::move(per_window);
  return r;
}

std::span<const double> covering_values(const SequenceSlice& f, std::int64_t lo, std::int64_t hi) {
  if (!f.covers(lo, hi)) {
    throw std::invalid_argument("slice [" + std::to_string(f.start) + ", " + std::to_string(f.end()) +
                                ") does not cover the scan range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + ")");
  }
  return std::span<const double>(f.values).subspan(static_cast<std::size_t>(lo - f.start),
                                                   static_cast<std::size_t>(hi - lo));
}

}  // namespace

IntegerFunction as_function(SequenceSlice slice) {
  auto shared = std::make_shared<const SequenceSlice>(std::move(slice));
  return [shared](std::int64_t k) { return shared->at(k); };
}

WindowExtrema sliding_extrema(const IntegerFunction& f, std::int64_t N, std::int64_t K) {
  check_window(N);
  const auto positions = scan_positions(K);
  const auto values = evaluate(f, -K, positions + static_cast<std::size_t>(N) - 1);
  return scan(prefix_sums(values), N, positions);
}

WindowExtrema sliding_extrema(const SequenceSlice& f, std::int64_t N, std::int64_t K) {
  check_window(N);
  const auto positions = scan_positions(K);
  const auto values = covering_values(f, -K, K + N);
  return scan(prefix_sums(values), N, positions);
}

WindowExtrema sliding_extrema(const SequenceSlice& f, std::int64_t N) {
  check_window(N);
  if (static_cast<std::int64_t>(f.values.size()) < N) {
    throw std::invalid_argument("slice shorter than one window");
  }
  return scan(prefix_sums(f.values), N, f.values.size() - static_cast<std::size_t>(N) + 1);
}

DensityReport banach_density(const IntegerFunction& f, std::span<const std::int64_t> schedule,
                             std::int64_t K) {
  check_schedule(schedule);
  const auto positions = scan_positions(K);
  const auto values = evaluate(f, -K, positions + static_cast<std::size_t>(schedule.back()) - 1);
  const auto prefix = prefix_sums(values);
  std::vector<WindowExtrema> per_window;
  for (auto N : schedule) per_window.push_back(scan(prefix, N, positions));
  return report_from(std::move(per_window), -K, K);
}

DensityReport banach_density(const SequenceSlice& f, std::span<const std::int64_t> schedule,
                             std::int64_t K) {
  check_schedule(schedule);
  const auto positions = scan_positions(K);
  const auto prefix = prefix_sums(covering_values(f, -K, K + schedule.back()));
  std::vector<WindowExtrema> per_window;
  for (auto N : schedule) per_window.push_back(scan(prefix, N, positions));
  return report_from(std::move(per_window), -K, K);
}

DensityReport banach_density(const SequenceSlice& f, std::span<const std::int64_t> schedule) {
  check_schedule(schedule);
  if (static_cast<std::int64_t>(f.values.size()) < schedule.back()) {
    throw std::invalid_argument("slice shorter than one window");
  }
  const auto prefix = prefix_sums(f.values);
  // Every schedule entry scans the starts that admit the largest window, so
  // all entries share one scan range.
  const auto positions = f.values.size() - static_cast<std::size_t>(schedule.back()) + 1;
  std::vector<WindowExtrema> per_window;
  for (auto N : schedule) per_window.push_back(scan(prefix, N, positions));
  return report_from(std::move(per_window), f.start,
                     f.start + static_cast<std::int64_t>(positions) - 1);
}

AlmostConvergence is_almost_convergent(const IntegerFunction& f,
                                       std::span<const std::int64_t> schedule, std::int64_t K,
                                       double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  AlmostConvergence out;
  out.report = banach_density(f, schedule, K);
  out.convergent = out.report.upper_estimate - out.report.lower_estimate <= tol;
  out.mean = 0.5 * (out.report.lower_estimate + out.report.upper_estimate);
  return out;
}

CesaroTrace cesaro_trace(const IntegerFunction& f, std::int64_t base_point,
                         std::span<const std::int64_t> n_values) {
  CesaroTrace out;
  out.base_point = base_point;
  out.n_values.assign(n_values.begin(), n_values.end());
  if (n_values.empty()) return out;
  for (auto n : n_values) {
    if (n < 1) throw std::invalid_argument("Cesaro lengths must be positive");
  }
  const auto longest = *std::max_element(n_values.begin(), n_values.end());
  const auto values = evaluate(f, base_point, static_cast<std::size_t>(longest));
  std::vector<double> running(values.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum += values[i];
    running[i] = sum;
  }
  out.averages.reserve(n_values.size());
  for (auto n : n_values) {
    out.averages.push_back(running[static_cast<std::size_t>(n - 1)] / static_cast<double>(n));
  }
  return out;
}

}  // namespace hartman
