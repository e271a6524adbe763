#include "hartman/compactification.hpp"

#include <cmath>
#include <sstream>

#include "hartman/detail/overloaded.hpp"
#include "hartman/detail/wide_int.hpp"

namespace hartman {

namespace {

using detail::overloaded;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

double reduce_mod1(double x) {
  double r = x - std::floor(x);
  // x slightly below an integer can round up to exactly 1.
  return r >= 1.0 ? 0.0 : r;
}

double circle_distance(double a, double b) {
  double d = reduce_mod1(a - b);
  return std::min(d, 1.0 - d);
}

RotationNumber RotationNumber::from_double(double value, bool irrational) {
  if (!std::isfinite(value) || value < 0.0 || value >= 1.0) {
    throw SpecError("rotation number must lie in [0,1)");
  }
  return RotationNumber(value, std::nullopt, irrational);
}

RotationNumber RotationNumber::from_rational(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw SpecError("rotation number denominator must be positive");
  if (p < 0 || p >= q) throw SpecError("rotation number must lie in [0,1)");
  Rational r(p, q);
  return RotationNumber(static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()), r,
                        false);
}

double RotationNumber::multiple(std::int64_t k) const {
  if (exact_) {
    const std::int64_t q = exact_->denominator();
    const detail::wide_int prod = static_cast<detail::wide_int>(floor_mod(k, q)) * exact_->numerator();
    const auto r = static_cast<std::int64_t>(prod % q);
    return static_cast<double>(r) / static_cast<double>(q);
  }
  const long double x = static_cast<long double>(k) * static_cast<long double>(value_);
  return reduce_mod1(static_cast<double>(x - std::floor(x)));
}

CompactificationSpec::CompactificationSpec(std::vector<Factor> factors)
    : factors_(std::move(factors)) {}

CompactificationSpec CompactificationSpec::torus(std::vector<RotationNumber> alphas) {
  if (alphas.empty()) throw SpecError("torus needs at least one rotation number");
  return CompactificationSpec({TorusFactor{std::move(alphas)}});
}

CompactificationSpec CompactificationSpec::cyclic(std::int64_t modulus) {
  if (modulus < 1) throw SpecError("cyclic modulus must be >= 1");
  return CompactificationSpec({CyclicFactor{modulus}});
}

CompactificationSpec CompactificationSpec::triadic(int digits) {
  if (digits < 1) throw SpecError("triadic precision must be >= 1 digit");
  return CompactificationSpec({TriadicFactor{digits}});
}

CompactificationSpec product(const std::vector<CompactificationSpec>& specs) {
  if (specs.empty()) throw SpecError("product of an empty list");
  std::vector<Factor> flat;
  for (const auto& s : specs) {
    flat.insert(flat.end(), s.factors().begin(), s.factors().end());
  }
  return CompactificationSpec(std::move(flat));
}

std::int64_t pow3(int exponent) {
  if (exponent < 0 || exponent > 39) throw std::out_of_range("3^e overflows int64");
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= 3;
  return r;
}

std::vector<std::uint8_t> triadic_digits(std::int64_t k, int digits) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(digits), 0);
  const bool negative = k < 0;
  // |k| as unsigned so INT64_MIN is representable.
  std::uint64_t mag = negative ? ~static_cast<std::uint64_t>(k) + 1 : static_cast<std::uint64_t>(k);
  for (auto& d : out) {
    d = static_cast<std::uint8_t>(mag % 3);
    mag /= 3;
  }
  if (!negative) return out;
  // -x = (complement of x) + 1 in base 3.
  for (auto& d : out) d = static_cast<std::uint8_t>(2 - d);
  std::vector<std::uint8_t> one(out.size(), 0);
  one[0] = 1;
  return triadic_add(out, one);
}

std::vector<std::uint8_t> triadic_add(const std::vector<std::uint8_t>& a,
                                      const std::vector<std::uint8_t>& b) {
  if (a.size() != b.size()) throw ShapeMismatch("triadic digit strings differ in length");
  std::vector<std::uint8_t> out(a.size());
  int carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int s = a[i] + b[i] + carry;
    out[i] = static_cast<std::uint8_t>(s % 3);
    carry = s / 3;
  }
  return out;
}

std::int64_t triadic_residue(const std::vector<std::uint8_t>& digits, int count) {
  if (count < 0 || static_cast<std::size_t>(count) > digits.size()) {
    throw ShapeMismatch("not enough triadic digits");
  }
  if (count > 39) throw std::out_of_range("residue mod 3^n overflows int64");
  std::int64_t r = 0;
  for (int i = count - 1; i >= 0; --i) r = 3 * r + digits[static_cast<std::size_t>(i)];
  return r;
}

CompactPoint iota(const CompactificationSpec& spec, std::int64_t k) {
  CompactPoint p;
  p.coords.reserve(spec.factor_count());
  for (const auto& f : spec.factors()) {
    p.coords.push_back(std::visit(
        overloaded{[k](const TorusFactor& t) -> FactorPoint {
                     TorusPoint tp;
                     tp.coords.reserve(t.alphas.size());
                     for (const auto& a : t.alphas) tp.coords.push_back(a.multiple(k));
                     return tp;
                   },
                   [k](const CyclicFactor& c) -> FactorPoint {
                     return CyclicPoint{floor_mod(k, c.modulus)};
                   },
                   [k](const TriadicFactor& t) -> FactorPoint {
                     return TriadicPoint{triadic_digits(k, t.digits)};
                   }},
        f));
  }
  return p;
}

CompactPoint identity(const CompactificationSpec& spec) { return iota(spec, 0); }

void check_conforms(const CompactificationSpec& spec, const CompactPoint& p) {
  if (p.coords.size() != spec.factor_count()) {
    throw ShapeMismatch("point has " + std::to_string(p.coords.size()) + " factors, spec has " +
                        std::to_string(spec.factor_count()));
  }
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const auto& f = spec.factors()[i];
    const auto& c = p.coords[i];
    const std::string where = "factor " + std::to_string(i) + ": ";
    if (const auto* t = std::get_if<TorusFactor>(&f)) {
      const auto* tp = std::get_if<TorusPoint>(&c);
      if (!tp || tp->coords.size() != t->alphas.size()) {
        throw ShapeMismatch(where + "expected a torus point of dimension " +
                            std::to_string(t->alphas.size()));
      }
      for (double x : tp->coords) {
        if (!(x >= 0.0 && x < 1.0)) throw ShapeMismatch(where + "torus coordinate outside [0,1)");
      }
    } else if (const auto* cy = std::get_if<CyclicFactor>(&f)) {
      const auto* cp = std::get_if<CyclicPoint>(&c);
      if (!cp || cp->residue < 0 || cp->residue >= cy->modulus) {
        throw ShapeMismatch(where + "expected a residue mod " + std::to_string(cy->modulus));
      }
    } else {
      const auto& tr = std::get<TriadicFactor>(f);
      const auto* tp = std::get_if<TriadicPoint>(&c);
      if (!tp || tp->digits.size() != static_cast<std::size_t>(tr.digits)) {
        throw ShapeMismatch(where + "expected " + std::to_string(tr.digits) + " triadic digits");
      }
      for (auto d : tp->digits) {
        if (d > 2) throw ShapeMismatch(where + "triadic digit outside {0,1,2}");
      }
    }
  }
}

CompactPoint add(const CompactificationSpec& spec, const CompactPoint& p, const CompactPoint& q) {
  check_conforms(spec, p);
  check_conforms(spec, q);
  CompactPoint r;
  r.coords.reserve(p.coords.size());
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const auto& f = spec.factors()[i];
    if (std::holds_alternative<TorusFactor>(f)) {
      const auto& a = std::get<TorusPoint>(p.coords[i]).coords;
      const auto& b = std::get<TorusPoint>(q.coords[i]).coords;
      TorusPoint out;
      out.coords.reserve(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) out.coords.push_back(reduce_mod1(a[j] + b[j]));
      r.coords.emplace_back(std::move(out));
    } else if (const auto* c = std::get_if<CyclicFactor>(&f)) {
      const auto a = std::get<CyclicPoint>(p.coords[i]).residue;
      const auto b = std::get<CyclicPoint>(q.coords[i]).residue;
      const auto sum = (static_cast<detail::wide_int>(a) + b) % c->modulus;
      r.coords.emplace_back(CyclicPoint{static_cast<std::int64_t>(sum)});
    } else {
      r.coords.emplace_back(TriadicPoint{triadic_add(std::get<TriadicPoint>(p.coords[i]).digits,
                                                     std::get<TriadicPoint>(q.coords[i]).digits)});
    }
  }
  return r;
}

std::string describe(const Factor& factor) {
  std::ostringstream os;
  std::visit(overloaded{[&](const TorusFactor& t) { os << "torus(dim=" << t.alphas.size() << ")"; },
                        [&](const CyclicFactor& c) { os << "cyclic(" << c.modulus << ")"; },
                        [&](const TriadicFactor& t) { os << "triadic(" << t.digits << ")"; }},
             factor);
  return os.str();
}

}  // namespace hartman
