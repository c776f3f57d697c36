#pragma once

#include <string>
#include <vector>

#include "hilbfrob/presentation.hpp"

namespace hilbfrob {
namespace models {

/// Catalog entry: a validated presentation plus a documentation note. The
/// twisted level data used by the generating functions is read off the
/// presentation's weights and bidegrees.
struct ModelEntry {
    Presentation pres;
    std::string doc;
};

/// Built-in models: toy-sphere, k3, abelian, enriques-z2, point.
/// Throws UNKNOWN_MODEL otherwise.
const ModelEntry& model(const std::string& name);
std::vector<std::string> model_names();

/// The abelian presentation re-weighted over G = (Z/n)^4 (character group of
/// the n-torsion), trivially weighted; this is the input to the Kummer build.
Presentation abelian_with_torsion_weights(int n);

/// Toy sphere extended by a middle-degree class t (deg 0, t*t = p). Its
/// degree-0 line carries a nonzero canonical class candidate, which the
/// boundary-operator checks need; not a catalog entry.
Presentation variant_toy();

} // namespace models
} // namespace hilbfrob
