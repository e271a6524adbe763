#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hartman/compactification.hpp"

namespace hartman {

/// A total self-map T of {0, ..., n-1}.
class FiniteSystem {
 public:
  explicit FiniteSystem(std::vector<std::size_t> map);

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t x) const { return map_[x]; }
  const std::vector<std::size_t>& map() const { return map_; }

 private:
  std::vector<std::size_t> map_;
};

/// Cycles ordered by their smallest state; each cycle starts at its smallest
/// state and follows T. basin_of[x] indexes the cycle x eventually enters.
struct CycleDecomposition {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> basin_of;
};

/// Extreme points of the simplex of T-invariant means: the uniform
/// distribution on each cycle, as exact weight vectors over X.
struct InvariantMeanSet {
  std::vector<std::vector<Rational>> cycle_means;
  std::size_t simplex_dim = 0;
};

/// [min_C m_C(f), max_C m_C(f)], the set of values m(f) over invariant means.
struct ValueInterval {
  Rational lower;
  Rational upper;
  bool almost_convergent() const { return lower == upper; }
};

CycleDecomposition decompose(const FiniteSystem& sys);
InvariantMeanSet invariant_mean_simplex(const FiniteSystem& sys);
ValueInterval value_interval(const FiniteSystem& sys, std::span<const Rational> f);

/// sum_x weights[x] * f[x].
Rational apply_mean(std::span<const Rational> weights, std::span<const Rational> f);

/// f o T.
std::vector<Rational> compose(std::span<const Rational> f, const FiniteSystem& sys);

/// s_n(x) = (1/n) sum_{k<n} f(T^k x).
Rational cesaro_average(const FiniteSystem& sys, std::span<const Rational> f, std::size_t x,
                        std::size_t n);

/// Brute-force check of the cycle-mean characterisation. Enumerates every
/// probability vector on X with entries in (1/grid_resolution)Z, keeps those
/// with p(T^{-1}A) = p(A) for all A, and confirms that they are exactly the
/// grid points in the convex hull of the cycle means, that m(f) stays inside
/// value_interval, and that both interval ends are attained by invariant
/// cycle means. Requires size() <= 8.
bool verify_against_bruteforce(const FiniteSystem& sys, std::span<const Rational> f,
                               int grid_resolution);

}  // namespace hartman
