#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hartman/sequence.hpp"

namespace hartman {

/// A bounded function on Z. Must be pure: it is evaluated from several
/// threads at once.
using IntegerFunction = std::function<double(std::int64_t)>;

/// Wraps a slice; evaluation outside the slice throws std::out_of_range.
IntegerFunction as_function(SequenceSlice slice);

inline constexpr double kDefaultAlmostConvergenceTolerance = 1e-3;

/// Extremes of s_N(n) = (1/N) sum_{k=n}^{n+N-1} f(k) over the scanned starts.
/// The sums are kept alongside the averages: for 0-1 sequences they are
/// exact integers.
struct WindowExtrema {
  std::int64_t window_length = 0;
  double inf = 0.0;
  double sup = 0.0;
  double inf_sum = 0.0;
  double sup_sum = 0.0;
};

/// Lower/upper Banach density estimates. Both come from the largest window
/// length in the schedule; per_window keeps the whole schedule.
struct DensityReport {
  double lower_estimate = 0.0;
  double upper_estimate = 0.0;
  std::int64_t window_length = 0;
  std::int64_t scan_first = 0;  ///< first window start scanned
  std::int64_t scan_last = 0;   ///< last window start scanned
  std::vector<WindowExtrema> per_window;
};

struct AlmostConvergence {
  bool convergent = false;
  double mean = 0.0;
  DensityReport report;
};

struct CesaroTrace {
  std::int64_t base_point = 0;
  std::vector<std::int64_t> n_values;
  std::vector<double> averages;
};

/// Window starts n range over [-K, K]; f is evaluated on [-K, K + N - 1].
WindowExtrema sliding_extrema(const IntegerFunction& f, std::int64_t N, std::int64_t K);
/// Same, reading from a slice that must cover [-K, K + N - 1].
WindowExtrema sliding_extrema(const SequenceSlice& f, std::int64_t N, std::int64_t K);
/// Every window that fits inside the slice.
WindowExtrema sliding_extrema(const SequenceSlice& f, std::int64_t N);

DensityReport banach_density(const IntegerFunction& f, std::span<const std::int64_t> schedule,
                             std::int64_t K);
DensityReport banach_density(const SequenceSlice& f, std::span<const std::int64_t> schedule,
                             std::int64_t K);
DensityReport banach_density(const SequenceSlice& f, std::span<const std::int64_t> schedule);

/// Almost convergent iff upper - lower <= tol at the last schedule entry; the
/// mean estimate is the midpoint.
AlmostConvergence is_almost_convergent(const IntegerFunction& f,
                                       std::span<const std::int64_t> schedule, std::int64_t K,
                                       double tol = kDefaultAlmostConvergenceTolerance);

/// Averages of f over [base_point, base_point + n) for each n, summed in
/// ascending k.
CesaroTrace cesaro_trace(const IntegerFunction& f, std::int64_t base_point,
                         std::span<const std::int64_t> n_values);

}  // namespace hartman
