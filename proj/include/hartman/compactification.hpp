#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

namespace hartman {

using Rational = boost::rational<std::int64_t>;

/// Thrown when a compactification description violates its invariants.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a point or window does not have the shape its spec demands.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rotation number on the circle. Either a float (usually an approximant of
/// an irrational) or an exact rational p/q; the exact form lets degenerate
/// finite-image rotations be evaluated without rounding.
class RotationNumber {
 public:
  static RotationNumber from_double(double value, bool irrational = true);
  static RotationNumber from_rational(std::int64_t p, std::int64_t q);

  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }
  bool irrational() const { return irrational_; }

  /// k * alpha reduced into [0,1).
  double multiple(std::int64_t k) const;

  bool operator==(const RotationNumber&) const = default;

 private:
  RotationNumber(double value, std::optional<Rational> exact, bool irrational)
      : value_(value), exact_(exact), irrational_(irrational) {}

  double value_;
  std::optional<Rational> exact_;
  bool irrational_;
};

struct TorusFactor {
  std::vector<RotationNumber> alphas;
  bool operator==(const TorusFactor&) const = default;
};

struct CyclicFactor {
  std::int64_t modulus;
  bool operator==(const CyclicFactor&) const = default;
};

/// Digit truncation of the 3-adic integers, i.e. the quotient Z/3^digits.
struct TriadicFactor {
  int digits;
  bool operator==(const TriadicFactor&) const = default;
};

using Factor = std::variant<TorusFactor, CyclicFactor, TriadicFactor>;

/// Finite description of a metrizable group compactification of Z: a single
/// factor or a flat product of factors.
class CompactificationSpec {
 public:
  static CompactificationSpec torus(std::vector<RotationNumber> alphas);
  static CompactificationSpec cyclic(std::int64_t modulus);
  static CompactificationSpec triadic(int digits);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  bool is_product() const { return factors_.size() > 1; }

  bool operator==(const CompactificationSpec&) const = default;

 private:
  friend CompactificationSpec product(const std::vector<CompactificationSpec>&);
  explicit CompactificationSpec(std::vector<Factor> factors);

  std::vector<Factor> factors_;
};

/// Supremum of compactifications. Nested products are flattened and a
/// singleton list collapses to its only element.
CompactificationSpec product(const std::vector<CompactificationSpec>& specs);

struct TorusPoint {
  std::vector<double> coords;
  bool operator==(const TorusPoint&) const = default;
};

struct CyclicPoint {
  std::int64_t residue;
  bool operator==(const CyclicPoint&) const = default;
};

/// Least significant digit first: 5 is {2, 1, 0} at three digits.
struct TriadicPoint {
  std::vector<std::uint8_t> digits;
  bool operator==(const TriadicPoint&) const = default;
};

using FactorPoint = std::variant<TorusPoint, CyclicPoint, TriadicPoint>;

struct CompactPoint {
  std::vector<FactorPoint> coords;
  bool operator==(const CompactPoint&) const = default;
};

CompactPoint iota(const CompactificationSpec& spec, std::int64_t k);
CompactPoint add(const CompactificationSpec& spec, const CompactPoint& p,
                 const CompactPoint& q);
CompactPoint identity(const CompactificationSpec& spec);

/// Throws ShapeMismatch unless p is a point of spec.
void check_conforms(const CompactificationSpec& spec, const CompactPoint& p);

/// x - floor(x).
double reduce_mod1(double x);

/// Distance on R/Z.
double circle_distance(double a, double b);

/// Base-3 digits of k modulo 3^digits, least significant first. Negative k
/// map to their 3-adic complement.
std::vector<std::uint8_t> triadic_digits(std::int64_t k, int digits);

/// Sum of two digit strings of equal length, carry dropped past the end.
std::vector<std::uint8_t> triadic_add(const std::vector<std::uint8_t>& a,
                                      const std::vector<std::uint8_t>& b);

/// Integer value of the first `count` digits (requires count <= 39).
std::int64_t triadic_residue(const std::vector<std::uint8_t>& digits, int count);

std::int64_t pow3(int exponent);

std::string describe(const Factor& factor);

}  // namespace hartman
