#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "hilbfrob/rational.hpp"

namespace hilbfrob {

/// Sparse rational vector: sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<int32_t, Rational>>;

/// a += c * b
inline void sparse_axpy(SparseVec& a, const SparseVec& b, const Rational& c) {
    if (c.is_zero() || b.empty()) return;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            if (out.back().second.is_zero()) out.pop_back();
            ++j;
        } else {
            Rational v = std::move(a[i].second);
            v += c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

inline void sparse_add_term(SparseVec& a, int32_t idx, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](const auto& p, int32_t v) { return p.first < v; });
    if (it != a.end() && it->first == idx) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    } else {
        a.insert(it, {idx, c});
    }
}

inline const Rational* sparse_find(const SparseVec& a, int32_t idx) {
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](const auto& p, int32_t v) { return p.first < v; });
    if (it != a.end() && it->first == idx) return &it->second;
    return nullptr;
}

inline void sparse_scale(SparseVec& a, const Rational& c) {
    if (c.is_zero()) {
        a.clear();
        return;
    }
    for (auto& [k, v] : a) v *= c;
}

} // namespace hilbfrob
