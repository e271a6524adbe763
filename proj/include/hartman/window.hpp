#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "hartman/compactification.hpp"

namespace hartman {

/// Half-open arc of the circle. lo < hi is [lo, hi); lo > hi wraps around as
/// [lo, 1) u [0, hi). The whole circle is {0, 1}.
class Arc {
 public:
  Arc(double lo, double hi);
  static Arc full() { return Arc(0.0, 1.0); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool wraps() const { return lo_ > hi_; }
  bool is_full() const { return lo_ == 0.0 && hi_ == 1.0; }

  double length() const { return wraps() ? (1.0 - lo_) + hi_ : hi_ - lo_; }
  bool contains(double x) const { return wraps() ? (x >= lo_ || x < hi_) : (x >= lo_ && x < hi_); }

  /// The arc {x + shift}.
  Arc shifted(double shift) const;
  /// [hi, lo); undefined for the full circle.
  Arc complement() const;

  bool operator==(const Arc&) const = default;

 private:
  double lo_;
  double hi_;
};

struct Unconstrained {
  bool operator==(const Unconstrained&) const = default;
};

/// One arc per torus coordinate; the constraint is their product box.
struct BoxConstraint {
  std::vector<Arc> arcs;
  bool operator==(const BoxConstraint&) const = default;
};

/// Sorted, duplicate-free residues.
struct ResidueConstraint {
  std::vector<std::int64_t> residues;
  bool operator==(const ResidueConstraint&) const = default;
};

/// Cylinder of 3-adic points whose leading digits equal `prefix`.
struct PrefixConstraint {
  std::vector<std::uint8_t> prefix;
  bool operator==(const PrefixConstraint&) const = default;
};

using FactorConstraint =
    std::variant<Unconstrained, BoxConstraint, ResidueConstraint, PrefixConstraint>;

/// Haar-continuity set in a compactification: the intersection of one
/// constraint per factor. Boundaries of boxes, cylinders and residue sets are
/// Haar-null, so every representable window is a continuity set.
class Window {
 public:
  Window(CompactificationSpec spec, std::vector<FactorConstraint> constraints);

  static Window full(const CompactificationSpec& spec);
  /// Single-factor shorthand.
  static Window arcs(const CompactificationSpec& spec, std::vector<Arc> arcs);
  static Window residues(const CompactificationSpec& spec, std::vector<std::int64_t> residues);
  static Window prefix(const CompactificationSpec& spec, std::vector<std::uint8_t> prefix);

  const CompactificationSpec& spec() const { return spec_; }
  const std::vector<FactorConstraint>& constraints() const { return constraints_; }

  bool contains(const CompactPoint& p) const;
  double haar_measure() const { return measure_; }

  /// {x + g : x in this window}. Exact on cyclic and triadic factors.
  Window translate(const CompactPoint& g) const;

  bool operator==(const Window& other) const {
    return spec_ == other.spec_ && constraints_ == other.constraints_;
  }

 private:
  CompactificationSpec spec_;
  std::vector<FactorConstraint> constraints_;
  double measure_;
};

/// Membership without the shape check, for hot loops over iota(k).
bool contains_unchecked(const Window& w, const CompactPoint& p);

}  // namespace hartman
