#include "hartman/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hartman/detail/wide_int.hpp"
#include "hartman/parallel.hpp"

namespace hartman {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::int64_t kMaxTableSize = std::int64_t{1} << 24;

std::int64_t mod_nonneg(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t magnitude(std::int64_t k) {
  return k < 0 ? ~static_cast<std::uint64_t>(k) + 1 : static_cast<std::uint64_t>(k);
}

// cos(2 pi k / 3^j) with k reduced mod 3^j first, so that the value is
// bit-identical across k + 3^j Z.
double cos_third_power(std::int64_t k, int j) {
  if (j > 39) {
    // 3^j exceeds every int64 magnitude; cos is even.
    return std::cos(kTwoPi * (static_cast<double>(magnitude(k)) / std::pow(3.0, j)));
  }
  const auto p = pow3(j);
  const auto r = mod_nonneg(k, p);
  return std::cos(kTwoPi * (static_cast<double>(r) / static_cast<double>(p)));
}

void check_n(int n) {
  if (n < 0) throw std::invalid_argument("truncation depth n must be >= 0");
}

}  // namespace

Rational reduce_mod1(const Rational& x) {
  return Rational(mod_nonneg(x.numerator(), x.denominator()), x.denominator());
}

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  for (auto& a : atoms) a.location = reduce_mod1(a.location);
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return a.location < b.location; });
  for (auto& a : atoms) {
    if (!atoms_.empty() && atoms_.back().location == a.location) {
      atoms_.back().weight += a.weight;
    } else {
      atoms_.push_back(a);
    }
  }
}

DiscreteMeasure DiscreteMeasure::dirac(Rational location, std::complex<double> weight) {
  return DiscreteMeasure({Atom{location, weight}});
}

std::complex<double> DiscreteMeasure::total_weight() const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& a : atoms_) sum += a.weight;
  return sum;
}

DiscreteMeasure convolve(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  std::vector<Atom> out;
  out.reserve(a.atoms().size() * b.atoms().size());
  for (const auto& x : a.atoms()) {
    for (const auto& y : b.atoms()) out.push_back({x.location + y.location, x.weight * y.weight});
  }
  return DiscreteMeasure(std::move(out));
}

std::complex<double> fourier_stieltjes(const DiscreteMeasure& m, std::int64_t k) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& a : m.atoms()) {
    const std::int64_t q = a.location.denominator();
    const auto r = static_cast<std::int64_t>(
        static_cast<detail::wide_int>(mod_nonneg(k, q)) * a.location.numerator() % q);
    const double angle = kTwoPi * (static_cast<double>(r) / static_cast<double>(q));
    sum += a.weight * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::vector<std::complex<double>> fourier_stieltjes(const DiscreteMeasure& m,
                                                    std::span<const std::int64_t> ks) {
  std::vector<std::complex<double>> out(ks.size());
  std::int64_t common = 1;
  for (const auto& a : m.atoms()) {
    common = std::lcm(common, a.location.denominator());
    if (common > kMaxTableSize) break;
  }
  // A table of L roots pays off only when it is no larger than the direct
  // evaluation count.
  const auto direct_cost = static_cast<std::int64_t>(m.atoms().size() * ks.size());
  if (common > kMaxTableSize || common > direct_cost) {
    parallel_chunks(ks.size(), [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) out[i] = fourier_stieltjes(m, ks[i]);
    }, 16);
    return out;
  }

  const auto L = common;
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(L));
  for (std::int64_t j = 0; j < L; ++j) {
    const double angle = kTwoPi * (static_cast<double>(j) / static_cast<double>(L));
    roots[static_cast<std::size_t>(j)] = {std::cos(angle), std::sin(angle)};
  }
  std::vector<std::int64_t> scaled;  // location * L, an integer in [0, L)
  scaled.reserve(m.atoms().size());
  for (const auto& a : m.atoms()) {
    scaled.push_back(a.location.numerator() * (L / a.location.denominator()));
  }
  parallel_chunks(ks.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto k = mod_nonneg(ks[i], L);
      std::complex<double> sum{0.0, 0.0};
      for (std::size_t t = 0; t < scaled.size(); ++t) {
        sum += m.atoms()[t].weight * roots[static_cast<std::size_t>(k * scaled[t] % L)];
      }
      out[i] = sum;
    }
  }, 16);
  return out;
}

DiscreteMeasure cantor_nu(int n) {
  check_n(n);
  if (n > 39) throw std::invalid_argument("nu_n needs 3^n to fit in int64");
  auto nu = DiscreteMeasure::dirac(Rational(1, 2));
  for (int j = 1; j <= n; ++j) {
    const Rational step(1, pow3(j));
    const DiscreteMeasure pair({Atom{-step, 0.5}, Atom{step, 0.5}});
    nu = convolve(nu, pair);
  }
  return nu;
}

double f_tilde_n(int n, std::int64_t k, bool include_half_factor) {
  check_n(n);
  double prod = 1.0;
  for (int j = 1; j <= n; ++j) prod *= cos_third_power(k, j);
  if (include_half_factor && (magnitude(k) & 1U)) prod = -prod;
  return prod;
}

double f_n(int n, std::int64_t k) {
  check_n(n);
  double prod = 1.0;
  for (int j = 1; j <= n; ++j) {
    const double c = cos_third_power(k, j);
    prod *= c * c;
  }
  return prod;
}

CantorTruncation cantor_truncation(int n) {
  check_n(n);
  if (n > 20) throw std::invalid_argument("period search is limited to n <= 20");
  const std::int64_t full = pow3(n);
  for (int i = 0; i <= n; ++i) {
    const std::int64_t d = pow3(i);
    bool periodic = true;
    for (std::int64_t k = 0; k < full && periodic; ++k) periodic = f_n(n, k + d) == f_n(n, k);
    if (periodic) return {n, d};
  }
  return {n, full};
}

double period_mean(int n) {
  check_n(n);
  if (n > 39) throw std::invalid_argument("3^n must fit in int64");
  const std::int64_t period = pow3(n);
  constexpr std::int64_t kBlock = std::int64_t{1} << 20;
  std::vector<double> buffer;
  double sum = 0.0;
  for (std::int64_t lo = 0; lo < period; lo += kBlock) {
    const auto count = static_cast<std::size_t>(std::min(kBlock, period - lo));
    buffer.resize(count);
    parallel_chunks(count, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) buffer[i] = f_n(n, lo + static_cast<std::int64_t>(i));
    });
    for (double v : buffer) sum += v;
  }
  return sum / static_cast<double>(period);
}

double triadic_realization(int n, const TriadicPoint& point) {
  check_n(n);
  if (point.digits.size() < static_cast<std::size_t>(n)) {
    throw ShapeMismatch("F_" + std::to_string(n) + " needs at least " + std::to_string(n) +
                        " triadic digits, point has " + std::to_string(point.digits.size()));
  }
  return f_n(n, triadic_residue(point.digits, n));
}

double triadic_realization(int n, const CompactificationSpec& spec, const CompactPoint& point) {
  check_conforms(spec, point);
  for (std::size_t i = 0; i < spec.factor_count(); ++i) {
    if (std::holds_alternative<TriadicFactor>(spec.factors()[i])) {
      return triadic_realization(n, std::get<TriadicPoint>(point.coords[i]));
    }
  }
  throw ShapeMismatch("compactification has no triadic factor");
}

}  // namespace hartman
