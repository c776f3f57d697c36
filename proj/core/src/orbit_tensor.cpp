#include "hilbfrob/orbit_tensor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hilbfrob/errors.hpp"

namespace hilbfrob {

namespace {

using Labels = boost::container::small_vector<int32_t, 8>;

void accumulate(std::map<Labels, Rational>& acc, const Labels& l, const Rational& c) {
    auto& slot = acc[l];
    slot += c;
    if (slot.is_zero()) acc.erase(l);
}

OrbitTensor from_map(const Presentation& H, std::vector<Weight> slot_weights,
                     const std::map<Labels, Rational>& acc) {
    OrbitTensor out;
    out.H = &H;
    out.slot_weights = std::move(slot_weights);
    for (const auto& [l, c] : acc) out.terms.push_back({l, c});
    return out;
}

int koszul_of_rearrangement(const Presentation& H, const Labels& labels,
                            const std::vector<int>& perm) {
    // perm[k] = source slot whose factor lands at position k
    int sign = 1;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b] && H.odd(labels[perm[a]]) && H.odd(labels[perm[b]]))
                sign = -sign;
    return sign;
}

// Splits a single homogeneous element x (as sparse coords) of weight
// sum(weights) into legs of the prescribed weights via the iterated diagonal.
void split_element(const Presentation& H, const SparseVec& x, const std::vector<Weight>& weights,
                   size_t from, const Rational& scale, std::map<Labels, Rational>& acc,
                   const Labels& prefix) {
    if (from + 1 == weights.size()) {
        for (const auto& [b, c] : x) {
            if (H.basis[b].weight != weights[from]) continue;
            Labels full = prefix;
            full.push_back(b);
            accumulate(acc, full, c * scale);
        }
        return;
    }
    if (!H.diagonal) throw Error(ErrorCode::NO_DIAGONAL, "delta_map needs a diagonal");
    Weight rest = weights[from + 1];
    for (size_t k = from + 2; k < weights.size(); ++k) rest = H.group.add(rest, weights[k]);
    for (const auto& [b, c] : x) {
        auto it = H.diagonal->find(b);
        if (it == H.diagonal->end()) continue;
        for (const auto& t : it->second) {
            if (H.basis[t.a].weight != weights[from]) continue;
            if (H.basis[t.b].weight != rest) continue;
            Labels next_prefix = prefix;
            next_prefix.push_back(t.a);
            SparseVec leg{{t.b, Rational(1)}};
            split_element(H, leg, weights, from + 1, c * scale * t.coeff, acc, next_prefix);
        }
    }
}

} // namespace

OrbitTensor OrbitTensor::monomial(const Presentation& H, std::vector<Weight> slot_weights,
                                  const std::vector<int32_t>& labels) {
    if (labels.size() != slot_weights.size())
        throw Error(ErrorCode::SIZE_MISMATCH, "label/slot count mismatch");
    for (size_t i = 0; i < labels.size(); ++i)
        if (H.basis[labels[i]].weight != slot_weights[i])
            throw Error(ErrorCode::WEIGHT_MISMATCH,
                        "label " + H.basis[labels[i]].id + " not of slot weight");
    OrbitTensor t;
    t.H = &H;
    t.slot_weights = std::move(slot_weights);
    Term term;
    term.labels.assign(labels.begin(), labels.end());
    term.coeff = Rational(1);
    t.terms.push_back(std::move(term));
    return t;
}

void OrbitTensor::add_term(const Term& t) {
    terms.push_back(t);
}

OrbitTensor nabla(const OrbitTensor& x, const std::vector<int>& block_map,
                  const std::vector<Weight>& coarse_weights) {
    const Presentation& H = *x.H;
    const size_t fine_n = x.slot_weights.size();
    if (block_map.size() != fine_n) throw Error(ErrorCode::SIZE_MISMATCH, "nabla: bad block map");
    // weights must add along fibres
    std::vector<Weight> sums(coarse_weights.size(), H.group.zero());
    for (size_t i = 0; i < fine_n; ++i)
        sums[block_map[i]] = H.group.add(sums[block_map[i]], x.slot_weights[i]);
    for (size_t j = 0; j < coarse_weights.size(); ++j)
        if (sums[j] != coarse_weights[j])
            throw Error(ErrorCode::WEIGHT_MISMATCH, "nabla: weights not additive along fibres");
    // group fine slots by coarse block, stably
    std::vector<int> order(fine_n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return block_map[a] < block_map[b]; });

    std::map<boost::container::small_vector<int32_t, 8>, Rational> acc;
    for (const auto& term : x.terms) {
        int sign = koszul_of_rearrangement(H, term.labels, order);
        // multiply within each fibre, in grouped order
        std::vector<Element> per_slot(coarse_weights.size());
        bool dead = false;
        for (size_t j = 0; j < coarse_weights.size() && !dead; ++j) {
            Element prod = H.zero_element();
            bool first = true;
            for (int i : order) {
                if (block_map[i] != static_cast<int>(j)) continue;
                Element leg = H.element(SparseVec{{term.labels[i], Rational(1)}});
                if (first) {
                    prod = leg;
                    first = false;
                } else {
                    prod = H.multiply(prod, leg);
                }
            }
            if (first) throw Error(ErrorCode::NOT_A_REFINEMENT, "nabla: empty fibre");
            if (prod.is_zero()) dead = true;
            per_slot[j] = std::move(prod);
        }
        if (dead) continue;
        // expand the tensor product of sparse slots
        boost::container::small_vector<int32_t, 8> labels(coarse_weights.size());
        Rational c = term.coeff * Rational(sign);
        std::function<void(size_t, const Rational&)> rec = [&](size_t j, const Rational& cc) {
            if (j == per_slot.size()) {
                accumulate(acc, labels, cc);
                return;
            }
            for (const auto& [b, cb] : per_slot[j].coords) {
                labels[j] = b;
                rec(j + 1, cc * cb);
            }
        };
        rec(0, c);
    }
    return from_map(H, coarse_weights, acc);
}

OrbitTensor delta_map(const OrbitTensor& y, const std::vector<int>& block_map,
                      const std::vector<Weight>& fine_weights) {
    const Presentation& H = *y.H;
    const size_t fine_n = fine_weights.size();
    if (block_map.size() != fine_n)
        throw Error(ErrorCode::SIZE_MISMATCH, "delta_map: bad block map");
    const size_t coarse_n = y.slot_weights.size();
    // fibres in grouped (stable) order
    std::vector<std::vector<int>> fibre(coarse_n);
    for (size_t i = 0; i < fine_n; ++i) {
        if (block_map[i] < 0 || block_map[i] >= static_cast<int>(coarse_n))
            throw Error(ErrorCode::SIZE_MISMATCH, "delta_map: block map out of range");
        fibre[block_map[i]].push_back(static_cast<int>(i));
    }
    std::vector<Weight> sums(coarse_n, H.group.zero());
    for (size_t i = 0; i < fine_n; ++i)
        sums[block_map[i]] = H.group.add(sums[block_map[i]], fine_weights[i]);
    for (size_t j = 0; j < coarse_n; ++j) {
        if (fibre[j].empty()) throw Error(ErrorCode::NOT_A_REFINEMENT, "delta_map: empty fibre");
        if (sums[j] != y.slot_weights[j])
            throw Error(ErrorCode::WEIGHT_MISMATCH, "delta_map: weights not additive");
    }
    // grouped fine order: fibre[0] then fibre[1] ...; target order is 0..fine_n-1.
    std::vector<int> grouped;
    for (const auto& f : fibre) grouped.insert(grouped.end(), f.begin(), f.end());
    // perm[k] = position in grouped order of the factor that lands at slot k
    std::vector<int> perm(fine_n);
    for (size_t pos = 0; pos < grouped.size(); ++pos) perm[grouped[pos]] = static_cast<int>(pos);

    std::map<boost::container::small_vector<int32_t, 8>, Rational> acc;
    for (const auto& term : y.terms) {
        // split each coarse slot into its fibre legs
        std::vector<std::map<Labels, Rational>> splits(coarse_n);
        bool dead = false;
        for (size_t j = 0; j < coarse_n && !dead; ++j) {
            std::vector<Weight> legw;
            for (int i : fibre[j]) legw.push_back(fine_weights[i]);
            SparseVec x{{term.labels[j], Rational(1)}};
            split_element(H, x, legw, 0, Rational(1), splits[j], {});
            if (splits[j].empty()) dead = true;
        }
        if (dead) continue;
        // cross product over coarse slots, then reorder legs to slot order
        Labels grouped_labels(fine_n);
        std::function<void(size_t, const Rational&)> rec = [&](size_t j, const Rational& cc) {
            if (j == coarse_n) {
                Labels in_grouped(grouped_labels);
                // reorder from grouped order to canonical fine order
                Labels target(fine_n);
                std::vector<int> src_of(fine_n);
                for (size_t k = 0; k < fine_n; ++k) {
                    target[k] = in_grouped[perm[k]];
                    src_of[k] = perm[k];
                }
                // Koszul sign of the rearrangement, with degrees read in the
                // grouped order
                int sign = 1;
                for (size_t a = 0; a < fine_n; ++a)
                    for (size_t b = a + 1; b < fine_n; ++b)
                        if (src_of[a] > src_of[b] && H.odd(in_grouped[src_of[a]]) &&
                            H.odd(in_grouped[src_of[b]]))
                            sign = -sign;
                accumulate(acc, target, cc * Rational(sign));
                return;
            }
            size_t base = 0;
            for (size_t jj = 0; jj < j; ++jj) base += fibre[jj].size();
            for (const auto& [legs, cl] : splits[j]) {
                for (size_t t = 0; t < legs.size(); ++t) grouped_labels[base + t] = legs[t];
                rec(j + 1, cc * cl);
            }
        };
        rec(0, term.coeff);
    }
    return from_map(H, fine_weights, acc);
}

OrbitTensor pointwise_product(const OrbitTensor& a, const OrbitTensor& b) {
    const Presentation& H = *a.H;
    if (a.slot_weights.size() != b.slot_weights.size())
        throw Error(ErrorCode::SIZE_MISMATCH, "pointwise product: slot mismatch");
    const size_t k = a.slot_weights.size();
    std::vector<Weight> weights(k);
    for (size_t j = 0; j < k; ++j) weights[j] = H.group.add(a.slot_weights[j], b.slot_weights[j]);
    std::map<boost::container::small_vector<int32_t, 8>, Rational> acc;
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            // (u1 (x) .. (x) uk)(v1 (x) .. (x) vk): vi crosses uj for j > i
            int sign = 1;
            for (size_t i = 0; i < k; ++i) {
                if (!H.odd(tb.labels[i])) continue;
                for (size_t j = i + 1; j < k; ++j)
                    if (H.odd(ta.labels[j])) sign = -sign;
            }
            // expand slotwise products
            boost::container::small_vector<int32_t, 8> labels(k);
            std::function<void(size_t, const Rational&)> rec = [&](size_t j, const Rational& cc) {
                if (j == k) {
                    accumulate(acc, labels, cc);
                    return;
                }
                for (const auto& [u, cu] : H.mult_basis(ta.labels[j], tb.labels[j])) {
                    labels[j] = u;
                    rec(j + 1, cc * cu);
                }
            };
            rec(0, ta.coeff * tb.coeff * Rational(sign));
        }
    }
    return from_map(H, weights, acc);
}

OrbitTensor multiply_slot(const OrbitTensor& a, size_t slot, const Element& e) {
    const Presentation& H = *a.H;
    auto we = H.homogeneous_weight(e);
    if (!we || !we->is_zero())
        throw Error(ErrorCode::WEIGHT_MISMATCH, "multiply_slot expects a weight-0 element");
    std::map<boost::container::small_vector<int32_t, 8>, Rational> acc;
    for (const auto& t : a.terms) {
        Element prod = H.multiply(H.element(SparseVec{{t.labels[slot], Rational(1)}}), e);
        for (const auto& [u, cu] : prod.coords) {
            auto labels = t.labels;
            labels[slot] = u;
            accumulate(acc, labels, t.coeff * cu);
        }
    }
    return from_map(H, a.slot_weights, acc);
}

} // namespace hilbfrob
