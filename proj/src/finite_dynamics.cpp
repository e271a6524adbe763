#include "hartman/finite_dynamics.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hartman {

FiniteSystem::FiniteSystem(std::vector<std::size_t> map) : map_(std::move(map)) {
  if (map_.empty()) throw std::invalid_argument("a finite system needs at least one state");
  for (auto y : map_) {
    if (y >= map_.size()) {
      throw std::invalid_argument("map entry " + std::to_string(y) + " outside {0, ..., " +
                                  std::to_string(map_.size() - 1) + "}");
    }
  }
}

CycleDecomposition decompose(const FiniteSystem& sys) {
  const std::size_t n = sys.size();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cycle_of(n, kUnseen);  // final basin label
  std::vector<std::size_t> path_stamp(n, kUnseen);
  std::vector<std::vector<std::size_t>> cycles;

  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < n; ++start) {
    if (cycle_of[start] != kUnseen) continue;
    path.clear();
    std::size_t x = start;
    while (cycle_of[x] == kUnseen && path_stamp[x] != start) {
      path_stamp[x] = start;
      path.push_back(x);
      x = sys(x);
    }
    std::size_t label;
    if (cycle_of[x] != kUnseen) {
      label = cycle_of[x];
    } else {
      // x was met twice on this walk: the tail of the path from x is a cycle.
      label = cycles.size();
      auto first = std::find(path.begin(), path.end(), x);
      cycles.emplace_back(first, path.end());
    }
    for (auto y : path) cycle_of[y] = label;
  }

  // Canonical form: rotate each cycle to its smallest state, then sort.
  for (auto& c : cycles) {
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  }
  std::vector<std::size_t> order(cycles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cycles[a].front() < cycles[b].front(); });
  std::vector<std::size_t> relabel(cycles.size());
  CycleDecomposition out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    relabel[order[i]] = i;
    out.cycles.push_back(std::move(cycles[order[i]]));
  }
  out.basin_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) out.basin_of[x] = relabel[cycle_of[x]];
  return out;
}

InvariantMeanSet invariant_mean_simplex(const FiniteSystem& sys) {
  const auto dec = decompose(sys);
  InvariantMeanSet out;
  for (const auto& c : dec.cycles) {
    std::vector<Rational> w(sys.size(), Rational(0));
    const Rational share(1, static_cast<std::int64_t>(c.size()));
    for (auto x : c) w[x] = share;
    out.cycle_means.push_back(std::move(w));
  }
  out.simplex_dim = out.cycle_means.size() - 1;
  return out;
}

Rational apply_mean(std::span<const Rational> weights, std::span<const Rational> f) {
  if (weights.size() != f.size()) throw std::invalid_argument("mean and function differ in length");
  Rational sum(0);
  for (std::size_t x = 0; x < f.size(); ++x) sum += weights[x] * f[x];
  return sum;
}

ValueInterval value_interval(const FiniteSystem& sys, std::span<const Rational> f) {
  if (f.size() != sys.size()) {
    throw std::invalid_argument("function has " + std::to_string(f.size()) + " values, system has " +
                                std::to_string(sys.size()) + " states");
  }
  const auto means = invariant_mean_simplex(sys);
  ValueInterval out{apply_mean(means.cycle_means.front(), f), apply_mean(means.cycle_means.front(), f)};
  for (const auto& m : means.cycle_means) {
    const auto v = apply_mean(m, f);
    out.lower = std::min(out.lower, v);
    out.upper = std::max(out.upper, v);
  }
  return out;
}

std::vector<Rational> compose(std::span<const Rational> f, const FiniteSystem& sys) {
  if (f.size() != sys.size()) throw std::invalid_argument("function length mismatch");
  std::vector<Rational> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[sys(x)];
  return out;
}

Rational cesaro_average(const FiniteSystem& sys, std::span<const Rational> f, std::size_t x,
                        std::size_t n) {
  if (f.size() != sys.size()) throw std::invalid_argument("function length mismatch");
  if (n == 0) throw std::invalid_argument("Cesaro length must be positive");
  if (x >= sys.size()) throw std::invalid_argument("state out of range");
  Rational sum(0);
  for (std::size_t k = 0; k < n; ++k) {
    sum += f[x];
    x = sys(x);
  }
  return sum / static_cast<std::int64_t>(n);
}

namespace {

// p(T^{-1}A) == p(A) for every A, with p given by integer counts.
bool invariant_on_all_subsets(const FiniteSystem& sys, std::span<const std::int64_t> counts) {
  const std::size_t n = sys.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t p_a = 0;
    std::int64_t p_pre = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (mask & (1u << x)) p_a += counts[x];
      if (mask & (1u << sys(x))) p_pre += counts[x];
    }
    if (p_a != p_pre) return false;
  }
  return true;
}

bool invariant_on_all_subsets(const FiniteSystem& sys, std::span<const Rational> p) {
  const std::size_t n = sys.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Rational p_a(0);
    Rational p_pre(0);
    for (std::size_t x = 0; x < n; ++x) {
      if (mask & (1u << x)) p_a += p[x];
      if (mask & (1u << sys(x))) p_pre += p[x];
    }
    if (p_a != p_pre) return false;
  }
  return true;
}

// Calls visit(counts) for every vector of non-negative integers summing to
// `remaining` over positions [i, n); stops early when visit returns false.
template <class Visit>
bool for_each_composition(std::vector<std::int64_t>& counts, std::size_t i, std::int64_t remaining,
                          Visit& visit) {
  if (i + 1 == counts.size()) {
    counts[i] = remaining;
    return visit(std::span<const std::int64_t>(counts));
  }
  for (std::int64_t c = 0; c <= remaining; ++c) {
    counts[i] = c;
    if (!for_each_composition(counts, i + 1, remaining - c, visit)) return false;
  }
  return true;
}

}  // namespace

bool verify_against_bruteforce(const FiniteSystem& sys, std::span<const Rational> f,
                               int grid_resolution) {
  const std::size_t n = sys.size();
  if (n > 8) throw std::invalid_argument("brute-force oracle is limited to 8 states");
  if (grid_resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  if (f.size() != n) throw std::invalid_argument("function length mismatch");

  const auto dec = decompose(sys);
  const auto means = invariant_mean_simplex(sys);
  const auto interval = value_interval(sys, f);
  const std::int64_t R = grid_resolution;

  std::vector<std::vector<std::size_t>> preimage(n);
  for (std::size_t x = 0; x < n; ++x) preimage[sys(x)].push_back(x);
  std::vector<bool> on_cycle(n, false);
  for (const auto& c : dec.cycles) {
    for (auto x : c) on_cycle[x] = true;
  }

  bool seen_any = false;
  Rational seen_min(0);
  Rational seen_max(0);
  auto check_point = [&](std::span<const std::int64_t> counts) {
    bool singleton_invariant = true;
    for (std::size_t y = 0; y < n && singleton_invariant; ++y) {
      std::int64_t mass = 0;
      for (auto x : preimage[y]) mass += counts[x];
      singleton_invariant = mass == counts[y];
    }
    const bool invariant = singleton_invariant && invariant_on_all_subsets(sys, counts);

    bool in_hull = true;
    for (std::size_t x = 0; x < n && in_hull; ++x) {
      if (!on_cycle[x] && counts[x] != 0) in_hull = false;
    }
    for (const auto& c : dec.cycles) {
      for (auto x : c) {
        if (counts[x] != counts[c.front()]) in_hull = false;
      }
    }
    if (invariant != in_hull) return false;
    if (!invariant) return true;

    Rational value(0);
    for (std::size_t x = 0; x < n; ++x) value += f[x] * Rational(counts[x], R);
    if (value < interval.lower || value > interval.upper) return false;
    if (!seen_any || value < seen_min) seen_min = value;
    if (!seen_any || value > seen_max) seen_max = value;
    seen_any = true;
    return true;
  };
  std::vector<std::int64_t> counts(n, 0);
  // No invariant grid point at all is consistent when no combination of
  // cycle lengths sums to R (e.g. a lone 7-cycle on the 1/12 grid).
  if (!for_each_composition(counts, 0, R, check_point)) return false;

  // Interval ends: each cycle mean must be invariant, and whenever a cycle
  // mean sits on the grid (|C| divides R) the enumeration must reach its value.
  bool lower_attained = false;
  bool upper_attained = false;
  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    const auto& w = means.cycle_means[i];
    if (!invariant_on_all_subsets(sys, std::span<const Rational>(w))) return false;
    const auto v = apply_mean(w, f);
    if (v < interval.lower || v > interval.upper) return false;
    const bool on_grid = R % static_cast<std::int64_t>(dec.cycles[i].size()) == 0;
    if (on_grid && (!seen_any || v < seen_min || v > seen_max)) return false;
    if (v == interval.lower) {
      lower_attained = true;
      if (on_grid && seen_min != v) return false;
    }
    if (v == interval.upper) {
      upper_attained = true;
      if (on_grid && seen_max != v) return false;
    }
  }
  return lower_attained && upper_attained;
}

}  // namespace hartman
