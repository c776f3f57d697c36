#pragma once

#include <algorithm>
#include <map>

#include "hilbfrob/sparse.hpp"

namespace hilbfrob {

/// Incremental sparse row echelon form over the rationals. Rows are kept
/// fully reduced (RREF) with unit pivots; pivot columns are chosen smallest
/// first, so results are deterministic in the insertion-independent sense.
class SparseRREF {
public:
    /// Reduces r against the current rows; if a nonzero residual remains it
    /// becomes a new pivot row. Returns true when the row enlarged the span.
    bool add_row(SparseVec r) {
        reduce_in_place(r);
        if (r.empty()) return false;
        Rational lead = r.front().second;
        for (auto& [c, v] : r) v /= lead;
        int32_t piv = r.front().first;
        // eliminate the new pivot from existing rows
        for (auto& [p, row] : rows_) {
            if (const Rational* v = sparse_find(row, piv)) {
                Rational f = *v;
                sparse_axpy(row, r, -f);
            }
        }
        rows_.emplace(piv, std::move(r));
        return true;
    }

    /// Residual of r modulo the row space.
    SparseVec reduce(SparseVec r) const {
        reduce_in_place(r);
        return r;
    }

    bool contains(const SparseVec& r) const { return reduce(r).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int32_t, SparseVec>& rows() const { return rows_; }
    bool is_pivot(int32_t col) const { return rows_.count(col) != 0; }

private:
    std::map<int32_t, SparseVec> rows_; // pivot column -> reduced row

    void reduce_in_place(SparseVec& r) const {
        while (!r.empty()) {
            auto it = rows_.find(r.front().first);
            if (it == rows_.end()) {
                // leading column is free; eliminate any later pivot columns
                bool touched = false;
                for (size_t k = 1; k < r.size(); ++k) {
                    auto jt = rows_.find(r[k].first);
                    if (jt != rows_.end()) {
                        Rational f = r[k].second;
                        sparse_axpy(r, jt->second, -f);
                        touched = true;
                        break;
                    }
                }
                if (!touched) return;
            } else {
                Rational f = r.front().second;
                sparse_axpy(r, it->second, -f);
            }
        }
    }
};

} // namespace hilbfrob
