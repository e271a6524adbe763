#include "hartman/window.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hartman/detail/overloaded.hpp"
#include "hartman/detail/wide_int.hpp"

namespace hartman {

using detail::overloaded;

Arc::Arc(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo >= 0.0 && lo < 1.0) || !(hi >= 0.0 && hi <= 1.0)) {
    throw SpecError("arc endpoints must satisfy 0 <= lo < 1 and 0 <= hi <= 1");
  }
  if (lo > hi && hi == 0.0) hi_ = 1.0;  // [lo,1) u [0,0) is just [lo,1)
  if (lo_ == hi_) throw SpecError("arc endpoints coincide");
}

Arc Arc::shifted(double shift) const {
  if (is_full()) return *this;
  const double lo = reduce_mod1(lo_ + shift);
  const double hi = reduce_mod1(hi_ + shift);
  return Arc(lo, hi == 0.0 ? 1.0 : hi);
}

Arc Arc::complement() const {
  if (is_full()) throw SpecError("the full circle has an empty complement");
  return Arc(hi_ == 1.0 ? 0.0 : hi_, lo_ == 0.0 ? 1.0 : lo_);
}

namespace {

double constraint_measure(const Factor& f, const FactorConstraint& c) {
  return std::visit(
      overloaded{[](const Unconstrained&) { return 1.0; },
                 [](const BoxConstraint& b) {
                   double m = 1.0;
                   for (const auto& a : b.arcs) m *= a.length();
                   return m;
                 },
                 [&](const ResidueConstraint& r) {
                   const auto mod = std::get<CyclicFactor>(f).modulus;
                   return static_cast<double>(r.residues.size()) / static_cast<double>(mod);
                 },
                 [](const PrefixConstraint& p) {
                   return std::pow(3.0, -static_cast<double>(p.prefix.size()));
                 }},
      c);
}

void validate(const Factor& f, FactorConstraint& c, std::size_t index) {
  const std::string where = "window factor " + std::to_string(index) + " (" + describe(f) + "): ";
  if (std::holds_alternative<Unconstrained>(c)) return;
  if (auto* b = std::get_if<BoxConstraint>(&c)) {
    const auto* t = std::get_if<TorusFactor>(&f);
    if (!t) throw ShapeMismatch(where + "arcs need a torus factor");
    if (b->arcs.size() != t->alphas.size()) {
      throw ShapeMismatch(where + "need one arc per torus coordinate");
    }
    return;
  }
  if (auto* r = std::get_if<ResidueConstraint>(&c)) {
    const auto* cy = std::get_if<CyclicFactor>(&f);
    if (!cy) throw ShapeMismatch(where + "residues need a cyclic factor");
    for (auto x : r->residues) {
      if (x < 0 || x >= cy->modulus) throw ShapeMismatch(where + "residue out of range");
    }
    std::sort(r->residues.begin(), r->residues.end());
    r->residues.erase(std::unique(r->residues.begin(), r->residues.end()), r->residues.end());
    return;
  }
  auto& p = std::get<PrefixConstraint>(c);
  const auto* tr = std::get_if<TriadicFactor>(&f);
  if (!tr) throw ShapeMismatch(where + "a digit prefix needs a triadic factor");
  if (p.prefix.size() > static_cast<std::size_t>(tr->digits)) {
    throw ShapeMismatch(where + "prefix longer than the triadic precision");
  }
  for (auto d : p.prefix) {
    if (d > 2) throw ShapeMismatch(where + "prefix digit outside {0,1,2}");
  }
}

bool constraint_contains(const FactorConstraint& c, const FactorPoint& x) {
  return std::visit(
      overloaded{[](const Unconstrained&) { return true; },
                 [&](const BoxConstraint& b) {
                   const auto& coords = std::get<TorusPoint>(x).coords;
                   for (std::size_t j = 0; j < b.arcs.size(); ++j) {
                     if (!b.arcs[j].contains(coords[j])) return false;
                   }
                   return true;
                 },
                 [&](const ResidueConstraint& r) {
                   return std::binary_search(r.residues.begin(), r.residues.end(),
                                             std::get<CyclicPoint>(x).residue);
                 },
                 [&](const PrefixConstraint& p) {
                   const auto& digits = std::get<TriadicPoint>(x).digits;
                   return std::equal(p.prefix.begin(), p.prefix.end(), digits.begin());
                 }},
      c);
}

}  // namespace

Window::Window(CompactificationSpec spec, std::vector<FactorConstraint> constraints)
    : spec_(std::move(spec)), constraints_(std::move(constraints)), measure_(1.0) {
  if (constraints_.size() != spec_.factor_count()) {
    throw ShapeMismatch("window has " + std::to_string(constraints_.size()) +
                        " factor constraints, spec has " + std::to_string(spec_.factor_count()));
  }
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    validate(spec_.factors()[i], constraints_[i], i);
    measure_ *= constraint_measure(spec_.factors()[i], constraints_[i]);
  }
}

Window Window::full(const CompactificationSpec& spec) {
  return Window(spec, std::vector<FactorConstraint>(spec.factor_count(), Unconstrained{}));
}

Window Window::arcs(const CompactificationSpec& spec, std::vector<Arc> arcs) {
  return Window(spec, {BoxConstraint{std::move(arcs)}});
}

Window Window::residues(const CompactificationSpec& spec, std::vector<std::int64_t> residues) {
  return Window(spec, {ResidueConstraint{std::move(residues)}});
}

Window Window::prefix(const CompactificationSpec& spec, std::vector<std::uint8_t> prefix) {
  return Window(spec, {PrefixConstraint{std::move(prefix)}});
}

bool contains_unchecked(const Window& w, const CompactPoint& p) {
  const auto& cs = w.constraints();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!constraint_contains(cs[i], p.coords[i])) return false;
  }
  return true;
}

bool Window::contains(const CompactPoint& p) const {
  check_conforms(spec_, p);
  return contains_unchecked(*this, p);
}

Window Window::translate(const CompactPoint& g) const {
  check_conforms(spec_, g);
  std::vector<FactorConstraint> out;
  out.reserve(constraints_.size());
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const auto& x = g.coords[i];
    out.push_back(std::visit(
        overloaded{[](const Unconstrained& u) -> FactorConstraint { return u; },
                   [&](const BoxConstraint& b) -> FactorConstraint {
                     const auto& shift = std::get<TorusPoint>(x).coords;
                     BoxConstraint moved;
                     for (std::size_t j = 0; j < b.arcs.size(); ++j) {
                       moved.arcs.push_back(b.arcs[j].shifted(shift[j]));
                     }
                     return moved;
                   },
                   [&](const ResidueConstraint& r) -> FactorConstraint {
                     const auto m = std::get<CyclicFactor>(spec_.factors()[i]).modulus;
                     const auto shift = std::get<CyclicPoint>(x).residue;
                     ResidueConstraint moved;
                     for (auto v : r.residues) {
                       moved.residues.push_back(
                           static_cast<std::int64_t>((static_cast<detail::wide_int>(v) + shift) % m));
                     }
                     return moved;
                   },
                   [&](const PrefixConstraint& p) -> FactorConstraint {
                     const auto& digits = std::get<TriadicPoint>(x).digits;
                     std::vector<std::uint8_t> head(digits.begin(),
                                                    digits.begin() + static_cast<std::ptrdiff_t>(p.prefix.size()));
                     return PrefixConstraint{triadic_add(p.prefix, head)};
                   }},
        constraints_[i]));
  }
  return Window(spec_, std::move(out));
}

}  // namespace hartman
