#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"

#include "hartman/compactification.hpp"
#include "hartman/window.hpp"

namespace hartman {

/// Finite window [start, start + values.size()) of a bounded sequence on Z.
/// `descriptor` records how the values were produced.
struct SequenceSlice {
  std::int64_t start = 0;
  std::vector<double> values;
  nlohmann::json descriptor;
  bool bits = false;

  std::int64_t end() const { return start + static_cast<std::int64_t>(values.size()); }
  bool covers(std::int64_t lo, std::int64_t hi) const { return lo >= start && hi <= end(); }
  /// Throws std::out_of_range outside the slice.
  double at(std::int64_t k) const;
};

struct ComplexSlice {
  std::int64_t start = 0;
  std::vector<std::complex<double>> values;
  nlohmann::json descriptor;
};

/// One term c * 1_W of a simple function on a compactification.
struct WeightedWindow {
  Window window;
  std::complex<double> coefficient;
};

/// values[i] = 1 iff iota(start + i) lies in w.
SequenceSlice hartman_bits(const CompactificationSpec& spec, const Window& w, std::int64_t start,
                           std::int64_t len);

/// Coding of the rotation by alpha with the partition [0,alpha) | [alpha,1):
/// bit k is 1 iff k*alpha mod 1 lies in [alpha, 1).
SequenceSlice sturmian(double alpha, std::int64_t start, std::int64_t len);
SequenceSlice sturmian(const RotationNumber& alpha, std::int64_t start, std::int64_t len);

/// Indicator of the set {t_n}; ts must be strictly increasing positive integers.
SequenceSlice lacunary_bits(std::span<const std::int64_t> ts, std::int64_t start, std::int64_t len);

/// Hartman function F o iota for the simple function F = sum_j c_j 1_{W_j}.
ComplexSlice hartman_real(const CompactificationSpec& spec, std::span<const WeightedWindow> terms,
                          std::int64_t start, std::int64_t len);

}  // namespace hartman
