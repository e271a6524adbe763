#pragma once

#include "json.hpp"

#include "hartman/compactification.hpp"
#include "hartman/window.hpp"

namespace hartman {

/// {"torus":[...]}, {"cyclic":m}, {"triadic":{"digits":d}} or {"product":[...]}.
/// Torus entries are numbers, "p/q" strings, or {"value":x,"irrational":b}.
CompactificationSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const CompactificationSpec& spec);

/// Single-factor specs take a bare constraint object such as
/// {"arcs":[[0,0.5]]}, {"residues":[0,2]} or {"prefix":[2,1]}; products key
/// constraints by factor index, {"0":{...},"2":{...}}. Missing factors and
/// {} are unconstrained.
Window window_from_json(const CompactificationSpec& spec, const nlohmann::json& j);
nlohmann::json window_to_json(const Window& w);

}  // namespace hartman
