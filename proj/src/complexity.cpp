#include "hartman/complexity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace hartman {

ComplexityProfile subword_complexity(const SequenceSlice& bits, int n_max) {
  if (n_max < 1 || n_max > kMaxBlockLength) {
    throw std::invalid_argument("n_max must lie in [1, " + std::to_string(kMaxBlockLength) + "]");
  }
  const auto len = bits.values.size();
  if (len < 4 * static_cast<std::size_t>(n_max)) {
    throw std::invalid_argument("slice of length " + std::to_string(len) + " is too short for n_max " +
                                std::to_string(n_max) + " (need >= 4 * n_max)");
  }
  std::vector<std::uint64_t> packed(len);
  for (std::size_t i = 0; i < len; ++i) {
    const double v = bits.values[i];
    if (v != 0.0 && v != 1.0) throw std::invalid_argument("subword complexity needs a 0-1 slice");
    packed[i] = v == 1.0 ? 1 : 0;
  }

  ComplexityProfile out;
  out.sample_length = len;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(len);
  for (int n = 1; n <= n_max; ++n) {
    seen.clear();
    const auto width = static_cast<std::size_t>(n);
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < len; ++i) {
      word = ((word << 1) | packed[i]) & mask;
      if (i + 1 >= width) seen.insert(word);
    }
    out.n_values.push_back(n);
    out.counts.push_back(seen.size());
  }
  return out;
}

std::vector<double> entropy_profile(const ComplexityProfile& profile) {
  std::vector<double> out;
  out.reserve(profile.counts.size());
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    out.push_back(std::log(static_cast<double>(profile.counts[i])) /
                  static_cast<double>(profile.n_values[i]));
  }
  return out;
}

}  // namespace hartman
