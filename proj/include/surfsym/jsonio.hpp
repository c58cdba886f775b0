#pragma once

#include "surfsym/classifier.hpp"

#include <string>

namespace surfsym {

// Stable machine-readable report (schema 1). Rationals are "p/q" strings,
// certified enclosures are {"lo","hi"} objects; algebraic root coordinates
// additionally carry their minimal-polynomial ("minpoly"). Deterministic for
// identical (input, seed, flags).
std::string report_to_json(const SymmetryReport& rep);

// Human-readable report, same determinism guarantee.
std::string report_to_text(const SymmetryReport& rep);

} // namespace surfsym
