// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hartman/cantor.hpp"
#include "hartman/complexity.hpp"
#include "hartman/density.hpp"
#include "hartman/finite_dynamics.hpp"
#include "hartman/sequence.hpp"

namespace {

using namespace hartman;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // <= 0 means no limit
  std::function<Outcome()> check;
};

const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Outcome cantor_period_means() {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) worst = std::max(worst, std::abs(period_mean(n) - std::ldexp(1.0, -n)));
  return {worst <= 1e-9, "max |mean - 2^-n| = " + num(worst) + " (n = 1..8)"};
}

Outcome cantor_self_similarity() {
  double worst = 0.0;
  for (int n = 0; n <= 6; ++n) {
    for (std::int64_t k = -10000; k <= 10000; ++k) {
      worst = std::max(worst, std::abs(f_n(n + 1, 3 * k) - f_n(n, k)));
    }
  }
  return {worst <= 1e-12, "max |f_{n+1}(3k) - f_n(k)| = " + num(worst) + " (n <= 6, |k| <= 1e4)"};
}

Outcome fourier_homomorphism() {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = -1000; k <= 1000; ++k) ks.push_back(k);
  double worst = 0.0;
  auto check = [&](const DiscreteMeasure& a, const DiscreteMeasure& b) {
    const auto fa = fourier_stieltjes(a, ks);
    const auto fb = fourier_stieltjes(b, ks);
    const auto fab = fourier_stieltjes(convolve(a, b), ks);
    for (std::size_t i = 0; i < ks.size(); ++i) worst = std::max(worst, std::abs(fab[i] - fa[i] * fb[i]));
  };
  for (int n = 1; n <= 10; ++n) check(cantor_nu(n), cantor_nu(n - 1));

  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  std::uniform_real_distribution<double> w(-1.0, 1.0);
  auto two_atoms = [&] {
    std::vector<Atom> atoms;
    for (int i = 0; i < 2; ++i) {
      const auto q = den(rng);
      std::uniform_int_distribution<std::int64_t> p(0, q - 1);
      atoms.push_back({Rational(p(rng), q), {w(rng), w(rng)}});
    }
    return DiscreteMeasure(atoms);
  };
  for (int t = 0; t < 100; ++t) {
    auto a = two_atoms();
    check(a, two_atoms());
  }
  return {worst <= 1e-12, "max |(a*b)^ - a^ b^| = " + num(worst) + " (nu_n*nu_{n-1}, n <= 10; 100 random pairs)"};
}

Outcome finite_oracle() {
  std::mt19937_64 rng(7);
  std::size_t checked = 0, failures = 0;
  auto run = [&](const std::vector<std::size_t>& map) {
    const FiniteSystem sys(map);
    std::uniform_int_distribution<int> val(-6, 6);
    std::vector<Rational> f(map.size());
    for (auto& v : f) v = Rational(val(rng), 1 + val(rng) % 3 + 3);
    ++checked;
    if (!verify_against_bruteforce(sys, f, 12)) ++failures;
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& map : testing::all_maps(n)) run(map);
  }
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int t = 0; t < 200; ++t) run(testing::random_map(rng, size(rng)));
  return {failures == 0, std::to_string(checked) + " maps checked, " + std::to_string(failures) + " mismatches"};
}

Outcome banach_densities() {
  const std::int64_t K = std::int64_t{1} << 20;
  bool parity_ok = true;
  for (std::int64_t N : {2, 10, 1024, 4096}) {
    const auto e = sliding_extrema([](std::int64_t k) { return testing::in_even_set(k) ? 1.0 : 0.0; }, N, K);
    parity_ok = parity_ok && e.inf == 0.5 && e.sup == 0.5;
  }
  const std::int64_t schedule[] = {1024};
  const auto r = banach_density([](std::int64_t k) { return testing::in_even_block_set(k) ? 1.0 : 0.0; }, schedule,
                                K);
  const bool block_ok = r.lower_estimate <= 0.01 && r.upper_estimate >= 0.49;
  return {parity_ok && block_ok, std::string("parity (0.5, 0.5) ") + (parity_ok ? "exact" : "WRONG") +
                                     "; even-block set lower " + num(r.lower_estimate) + ", upper " +
                                     num(r.upper_estimate) + " at N = 2^10, K = 2^20"};
}

Outcome sturmian_complexity() {
  const auto s = sturmian(kGolden, 0, 100000);
  const auto profile = subword_complexity(s, 20);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    const auto n = static_cast<std::size_t>(profile.n_values[i]);
    if (profile.counts[i] != n + 1 || testing::distinct_subwords_bruteforce(s.values, n) != n + 1) ++bad;
  }
  return {bad == 0 && profile.counts.size() == 20,
          "p(n) = n + 1 for n = 1..20 on 1e5 terms (" + std::to_string(bad) + " mismatches vs oracle)"};
}

double mean_of(const SequenceSlice& s) {
  double sum = 0.0;
  for (double v : s.values) sum += v;
  return sum / static_cast<double>(s.values.size());
}

Outcome equidistribution() {
  const std::int64_t N = 1000000;
  const double sturm_err = std::abs(mean_of(sturmian(kGolden, 0, N)) - (1.0 - kGolden));
  const auto spec = CompactificationSpec::torus({RotationNumber::from_double(kGolden)});
  double beatty_err = 0.0;
  for (double beta : {0.1, 1.0 / std::numbers::pi, 0.75}) {
    const auto bits = hartman_bits(spec, Window::arcs(spec, {Arc(0.0, beta)}), 0, N);
    beatty_err = std::max(beatty_err, std::abs(mean_of(bits) - beta));
  }
  return {sturm_err <= 1e-3 && beatty_err <= 1e-3,
          "Sturmian |density - (1 - alpha)| = " + num(sturm_err) + "; Beatty max |density - beta| = " +
              num(beatty_err) + " over 1e6 terms"};
}

Outcome lacunary_null() {
  std::vector<std::int64_t> powers;
  for (std::int64_t t = 1; t <= 4000000; t *= 2) powers.push_back(t);
  const std::int64_t schedule[] = {10000};
  const auto r = banach_density(
      [&](std::int64_t k) { return std::binary_search(powers.begin(), powers.end(), k) ? 1.0 : 0.0; }, schedule,
      1000000);
  return {r.upper_estimate <= 0.01, "upper density of {2^n} = " + num(r.upper_estimate) + " at N = 1e4, K = 1e6"};
}

Outcome invariance_identities() {
  std::mt19937_64 rng(99);
  std::size_t means_checked = 0, mean_failures = 0;
  for (int t = 0; t < 500; ++t) {
    std::uniform_int_distribution<std::size_t> size(1, 12);
    const FiniteSystem sys(testing::random_map(rng, size(rng)));
    std::uniform_int_distribution<int> val(-20, 20);
    std::vector<Rational> f(sys.size());
    for (auto& v : f) v = Rational(val(rng), 7);
    const auto fT = compose(f, sys);
    for (const auto& m : invariant_mean_simplex(sys).cycle_means) {
      ++means_checked;
      if (apply_mean(m, fT) != apply_mean(m, f)) ++mean_failures;
      // pushforward of m under T equals m
      std::vector<Rational> pushed(sys.size(), Rational(0));
      for (std::size_t x = 0; x < sys.size(); ++x) pushed[sys(x)] += m[x];
      if (pushed != m) ++mean_failures;
    }
  }

  std::size_t bound_failures = 0;
  std::uniform_real_distribution<double> unit(-3.0, 3.0);
  std::bernoulli_distribution coin(0.5);
  const std::vector<std::int64_t> ns = {1, 2, 3, 5, 8, 13, 50, 200, 1000};
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> values(1200);
    const bool binary = coin(rng);
    for (auto& v : values) v = binary ? (coin(rng) ? 1.0 : 0.0) : unit(rng);
    const double lo = *std::min_element(values.begin(), values.end());
    const double hi = *std::max_element(values.begin(), values.end());
    const std::int64_t base = -100;
    const IntegerFunction f = [&](std::int64_t k) { return values[static_cast<std::size_t>(k - base)]; };
    const auto trace = cesaro_trace(f, base, ns);
    for (double a : trace.averages) {
      if (a < lo || a > hi) ++bound_failures;
    }
    // the same bound along an orbit of a random finite map
    const FiniteSystem sys(testing::random_map(rng, 10));
    std::vector<Rational> g(10);
    for (std::size_t x = 0; x < g.size(); ++x) g[x] = Rational(static_cast<std::int64_t>(rng() % 19) - 9, 4);
    const auto [glo, ghi] = std::minmax_element(g.begin(), g.end());
    for (std::size_t n : {1u, 4u, 17u, 60u}) {
      const auto s = cesaro_average(sys, g, rng() % 10, n);
      if (s < *glo || s > *ghi) ++bound_failures;
    }
  }
  return {mean_failures == 0 && bound_failures == 0,
          std::to_string(means_checked) + " cycle means exactly invariant (" + std::to_string(mean_failures) +
              " failures); Cesaro bound violations on 1000 sequences: " + std::to_string(bound_failures)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Cantor period means equal 2^-n", 1.0, cantor_period_means},
      {2, "Cantor self-similarity", 0.0, cantor_self_similarity},
      {3, "Fourier-Stieltjes convolution homomorphism", 5.0, fourier_homomorphism},
      {4, "finite dynamics vs brute-force simplex grid", 30.0, finite_oracle},
      {5, "Banach densities of parity and block sets", 10.0, banach_densities},
      {6, "Sturmian subword complexity", 5.0, sturmian_complexity},
      {7, "equidistribution of Sturmian and Beatty windows", 10.0, equidistribution},
      {8, "lacunary set has null upper density", 5.0, lacunary_null},
      {9, "invariance identities and Cesaro bounds", 0.0, invariance_identities},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.time_limit_s <= 0.0 || secs < c.time_limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %d: %s: %s; %.3f s", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    if (c.time_limit_s > 0.0) std::printf(" (limit %.0f s%s)", c.time_limit_s, in_time ? "" : ", EXCEEDED");
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
