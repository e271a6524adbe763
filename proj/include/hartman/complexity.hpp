#pragma once

#include <cstdint>
#include <vector>

#include "hartman/sequence.hpp"

namespace hartman {

/// counts[i] is the number of distinct length-n_values[i] blocks seen in a
/// sample of sample_length bits. A finite sample can only undercount.
struct ComplexityProfile {
  std::vector<int> n_values;
  std::vector<std::uint64_t> counts;
  std::size_t sample_length = 0;
};

inline constexpr int kMaxBlockLength = 64;

/// p(n) for n = 1..n_max. Needs a 0-1 slice of length >= 4 * n_max, and
/// n_max <= kMaxBlockLength since blocks are packed into 64-bit words.
ComplexityProfile subword_complexity(const SequenceSlice& bits, int n_max);

/// (1/n) ln p(n) for each entry of the profile.
std::vector<double> entropy_profile(const ComplexityProfile& profile);

}  // namespace hartman
