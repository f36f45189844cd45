#pragma once

#include <string>
#include <string_view>

#include "gentropy/composition.hpp"
#include "gentropy/entropy.hpp"

namespace gentropy {

/// Catalog identifiers, `name[:key=value,...]`:
///   bg[:c=<r>]  tsallis:q=<r>[,c=<r>]  twopower:q1=<r>,q2=<r>
///   renyi:alpha=<r>  logpow:a=<r>,b=<r>,q=<r>
/// tsallis with q = 1 resolves to bg with the same c.
Entropy parse_entropy(std::string_view id);

/// Law identifiers: additive | mult:alpha=<r> | renyitype:<entropy id>,alpha=<r>.
/// The entropy inside renyitype must be a non-trace spec.
CompositionLaw parse_law(std::string_view id);

std::string format_entropy_id(const Entropy& s);
std::string format_law_id(const CompositionLaw& law);

}  // namespace gentropy
