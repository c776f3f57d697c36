#pragma once

#include <boost/container/small_vector.hpp>

#include "hilbfrob/permutation.hpp"
#include "hilbfrob/presentation.hpp"

namespace hilbfrob {

/// Element of a tensor product of weight components of H, with one slot per
/// block of an orbit partition (slots in the canonical block order).
struct OrbitTensor {
    const Presentation* H = nullptr;
    std::vector<Weight> slot_weights;

    struct Term {
        boost::container::small_vector<int32_t, 8> labels;
        Rational coeff;
    };
    std::vector<Term> terms;

    static OrbitTensor monomial(const Presentation& H, std::vector<Weight> slot_weights,
                                const std::vector<int32_t>& labels);
    void add_term(const Term& t);
    bool is_zero() const { return terms.empty(); }
};

/// Fibre-wise multiplication along the surjection fine -> coarse (given as a
/// block map, see orbit_surjection). Slot weights must add along fibres.
OrbitTensor nabla(const OrbitTensor& x, const std::vector<int>& block_map,
                  const std::vector<Weight>& coarse_weights);

/// Fibre-wise iterated diagonal along fine -> coarse, projecting each new leg
/// onto its prescribed weight.
OrbitTensor delta_map(const OrbitTensor& y, const std::vector<int>& block_map,
                      const std::vector<Weight>& fine_weights);

/// Slot-aligned product (u1 (x) ... (x) uk) * (v1 (x) ... (x) vk) with Koszul
/// interleaving signs.
OrbitTensor pointwise_product(const OrbitTensor& a, const OrbitTensor& b);

/// Multiplies the given slot of every term by a (weight-0) element.
OrbitTensor multiply_slot(const OrbitTensor& a, size_t slot, const Element& e);

} // namespace hilbfrob
