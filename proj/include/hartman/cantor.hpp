#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hartman/compactification.hpp"

namespace hartman {

/// Point mass on the circle R/Z at an exact rational location.
struct Atom {
  Rational location;
  std::complex<double> weight;
};

/// Finitely supported complex measure on the circle. Locations are reduced
/// into [0,1), atoms at equal locations are merged, and atoms are kept sorted
/// by location.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  static DiscreteMeasure dirac(Rational location, std::complex<double> weight = 1.0);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::complex<double> total_weight() const;

 private:
  std::vector<Atom> atoms_;
};

Rational reduce_mod1(const Rational& x);

DiscreteMeasure convolve(const DiscreteMeasure& a, const DiscreteMeasure& b);

/// sum over atoms of w * exp(2 pi i k loc).
std::complex<double> fourier_stieltjes(const DiscreteMeasure& m, std::int64_t k);

/// Transform at many frequencies. When the atoms share a modest common
/// denominator L the characters come from a table of L-th roots of unity.
std::vector<std::complex<double>> fourier_stieltjes(const DiscreteMeasure& m,
                                                    std::span<const std::int64_t> ks);

/// nu_0 = delta_{1/2}, nu_n = nu_{n-1} * (delta_{-1/3^n} + delta_{1/3^n}) / 2.
DiscreteMeasure cantor_nu(int n);

/// prod_{j=1}^n cos(2 pi k / 3^j), times (-1)^k when include_half_factor is
/// set (the character of the base atom at 1/2).
double f_tilde_n(int n, std::int64_t k, bool include_half_factor = false);

/// prod_{j=1}^n cos^2(2 pi k / 3^j), in [0,1].
double f_n(int n, std::int64_t k);

struct CantorTruncation {
  int n = 0;
  std::int64_t period = 1;  ///< minimal period of f_n
};

CantorTruncation cantor_truncation(int n);

/// (1/3^n) sum_{k=0}^{3^n - 1} f_n(k), summed in ascending k.
double period_mean(int n);

/// F_n on the 3-adic integers: f_n evaluated at the residue mod 3^n encoded by
/// the first n digits, so that F_n(iota(k)) = f_n(k).
double triadic_realization(int n, const TriadicPoint& point);
double triadic_realization(int n, const CompactificationSpec& spec, const CompactPoint& point);

}  // namespace hartman
