#include "hartman/json_io.hpp"

#include <charconv>
#include <string>

#include "hartman/detail/overloaded.hpp"

namespace hartman {

using detail::overloaded;
using nlohmann::json;

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw SpecError("expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

RotationNumber rotation_from_json(const json& j) {
  if (j.is_number()) return RotationNumber::from_double(j.get<double>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw SpecError("rotation string must look like \"p/q\"");
    return RotationNumber::from_rational(parse_int(std::string_view(s).substr(0, slash)),
                                         parse_int(std::string_view(s).substr(slash + 1)));
  }
  if (j.is_object() && j.contains("value")) {
    return RotationNumber::from_double(j.at("value").get<double>(), j.value("irrational", true));
  }
  throw SpecError("unrecognised rotation number: " + j.dump());
}

json rotation_to_json(const RotationNumber& r) {
  if (r.exact()) {
    return std::to_string(r.exact()->numerator()) + "/" + std::to_string(r.exact()->denominator());
  }
  if (r.irrational()) return r.value();
  return json{{"value", r.value()}, {"irrational", false}};
}

CompactificationSpec single_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw SpecError("a compactification is an object with exactly one of "
                    "\"torus\", \"cyclic\", \"triadic\", \"product\"");
  }
  if (j.contains("torus")) {
    const auto& list = j.at("torus");
    if (!list.is_array()) throw SpecError("\"torus\" must be an array");
    std::vector<RotationNumber> alphas;
    for (const auto& a : list) alphas.push_back(rotation_from_json(a));
    return CompactificationSpec::torus(std::move(alphas));
  }
  if (j.contains("cyclic")) {
    if (!j.at("cyclic").is_number_integer()) throw SpecError("\"cyclic\" must be an integer");
    return CompactificationSpec::cyclic(j.at("cyclic").get<std::int64_t>());
  }
  if (j.contains("triadic")) {
    const auto& t = j.at("triadic");
    if (!t.is_object() || !t.contains("digits") || !t.at("digits").is_number_integer()) {
      throw SpecError("\"triadic\" must be {\"digits\": n}");
    }
    return CompactificationSpec::triadic(t.at("digits").get<int>());
  }
  if (j.contains("product")) {
    const auto& list = j.at("product");
    if (!list.is_array()) throw SpecError("\"product\" must be an array");
    std::vector<CompactificationSpec> parts;
    for (const auto& p : list) parts.push_back(single_from_json(p));
    return product(parts);
  }
  throw SpecError("unknown compactification kind: " + j.dump());
}

json factor_to_json(const Factor& f) {
  return std::visit(overloaded{[](const TorusFactor& t) {
                                 json list = json::array();
                                 for (const auto& a : t.alphas) list.push_back(rotation_to_json(a));
                                 return json{{"torus", list}};
                               },
                               [](const CyclicFactor& c) { return json{{"cyclic", c.modulus}}; },
                               [](const TriadicFactor& t) {
                                 return json{{"triadic", {{"digits", t.digits}}}};
                               }},
                    f);
}

FactorConstraint constraint_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("window constraint must be an object");
  if (j.empty()) return Unconstrained{};
  if (j.size() != 1) {
    throw SpecError("window constraint takes one of \"arcs\", \"residues\", \"prefix\"");
  }
  if (j.contains("arcs")) {
    BoxConstraint b;
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw SpecError("an arc is a pair [lo, hi]");
      b.arcs.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    return b;
  }
  if (j.contains("residues")) {
    return ResidueConstraint{j.at("residues").get<std::vector<std::int64_t>>()};
  }
  if (j.contains("prefix")) {
    PrefixConstraint p;
    for (const auto& d : j.at("prefix")) {
      const auto v = d.get<int>();
      if (v < 0 || v > 2) throw SpecError("prefix digits must be 0, 1 or 2");
      p.prefix.push_back(static_cast<std::uint8_t>(v));
    }
    return p;
  }
  throw SpecError("unknown window constraint: " + j.dump());
}

json constraint_to_json(const FactorConstraint& c) {
  return std::visit(overloaded{[](const Unconstrained&) { return json::object(); },
                               [](const BoxConstraint& b) {
                                 json arcs = json::array();
                                 for (const auto& a : b.arcs) arcs.push_back({a.lo(), a.hi()});
                                 return json{{"arcs", arcs}};
                               },
                               [](const ResidueConstraint& r) { return json{{"residues", r.residues}}; },
                               [](const PrefixConstraint& p) {
                                 std::vector<int> digits(p.prefix.begin(), p.prefix.end());
                                 return json{{"prefix", digits}};
                               }},
                    c);
}

bool is_constraint_key(const std::string& key) {
  return key == "arcs" || key == "residues" || key == "prefix";
}

}  // namespace

CompactificationSpec spec_from_json(const json& j) {
  try {
    return single_from_json(j);
  } catch (const json::exception& e) {
    throw SpecError(std::string("bad compactification JSON: ") + e.what());
  }
}

json spec_to_json(const CompactificationSpec& spec) {
  if (!spec.is_product()) return factor_to_json(spec.factors().front());
  json list = json::array();
  for (const auto& f : spec.factors()) list.push_back(factor_to_json(f));
  return json{{"product", list}};
}

Window window_from_json(const CompactificationSpec& spec, const json& j) {
  try {
    if (!j.is_object()) throw SpecError("a window is a JSON object");
    std::vector<FactorConstraint> cs(spec.factor_count(), Unconstrained{});
    const bool bare = j.empty() || is_constraint_key(j.begin().key());
    if (bare) {
      if (spec.is_product() && !j.empty()) {
        throw SpecError("product windows must key constraints by factor index");
      }
      cs[0] = constraint_from_json(j);
      return Window(spec, std::move(cs));
    }
    for (const auto& [key, value] : j.items()) {
      const auto index = parse_int(key);
      if (index < 0 || static_cast<std::size_t>(index) >= cs.size()) {
        throw SpecError("window factor index " + key + " out of range");
      }
      cs[static_cast<std::size_t>(index)] = constraint_from_json(value);
    }
    return Window(spec, std::move(cs));
  } catch (const json::exception& e) {
    throw SpecError(std::string("bad window JSON: ") + e.what());
  }
}

json window_to_json(const Window& w) {
  const auto& cs = w.constraints();
  if (!w.spec().is_product()) return constraint_to_json(cs.front());
  json out = json::object();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!std::holds_alternative<Unconstrained>(cs[i])) {
      out[std::to_string(i)] = constraint_to_json(cs[i]);
    }
  }
  return out;
}

}  // namespace hartman
