#pragma once

#include <string>

#include <json.hpp>

#include "hilbfrob/fock.hpp"
#include "hilbfrob/hilbert_algebra.hpp"
#include "hilbfrob/presentation.hpp"

namespace hilbfrob {

/// Presentation file format (JSON): see README for the grammar. Rationals are
/// serialized as strings "num" or "num/den"; weights as coordinate arrays.
nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

Presentation load_presentation_file(const std::string& path);
void save_presentation_file(const Presentation& p, const std::string& path);

nlohmann::json element_to_json(const Presentation& p, const Element& x);
Element element_from_json(const Presentation& p, const nlohmann::json& j);

/// HilbertElements as lists of (sigma in cycle notation, orbit -> basis id,
/// coeff).
nlohmann::json hilbert_element_to_json(const HilbertElement& x);
HilbertElement hilbert_element_from_json(const Presentation& p, int n, const nlohmann::json& j);

/// Fock vectors as lists of ((level, basis id) pairs, coeff).
nlohmann::json fock_vector_to_json(const Presentation& p, const FockVector& v);

} // namespace hilbfrob
