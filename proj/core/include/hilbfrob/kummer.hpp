#pragma once

#include <memory>

#include "hilbfrob/hilbert_algebra.hpp"
#include "hilbfrob/linalg.hpp"

namespace hilbfrob {

/// phi(alpha) = delta^(n-1)(alpha) <id>: the iterated Hopf comultiplication
/// placed in the identity sector. Algebra homomorphism of degree -(n-1) d.
HilbertElement phi(const Presentation& H, const Element& alpha, int n);

/// The n-th Kummer algebra K^[n] H = H^[n] (x)_H Q: quotient of H^[n] by the
/// span of phi(ker eps) . H^[n]. Carries the inherited grading and weighting.
struct KummerAlgebra {
    int n = 0;
    const Presentation* owner = nullptr;
    /// quotient basis: invariant indices of the chosen coset representatives
    /// (the non-pivot columns of the row reduction)
    std::vector<int> rep_invariants;
    /// structure constants over the representative basis
    std::vector<std::vector<SparseVec>> mult;
    SparseVec unit; // in representative coordinates
    std::vector<int> degrees;
    std::vector<Weight> twists;
    std::shared_ptr<const SparseRREF> ideal;

    int dim() const { return static_cast<int>(rep_invariants.size()); }
    std::map<int, int> dims_by_degree() const;
    std::map<Weight, std::map<int, int>> graded_dims() const;

    /// Invariant coordinates of H^[n] -> representative coordinates mod ideal.
    SparseVec reduce_invariant(SparseVec inv_coords) const;

    /// The quotient as a presentation (algebra structure only; no integral or
    /// diagonal is exhibited), round-trippable through validate.
    Presentation export_presentation() const;
};

KummerAlgebra kummer_build(const HilbertAlgebra& A);
KummerAlgebra kummer_build(const Presentation& H, int n,
                           long long budget = kDefaultHilbertBudget);

struct LerayRow {
    int degree = 0;
    long long fock_side = 0;
    long long kummer_side = 0;
};

struct LerayReport {
    bool pass = true;
    std::vector<LerayRow> rows;
};

/// Per-degree dimension identity
///   sum_{L in G} dim_D Fock_L(weight n) = sum_{i+j=D-d} dim_i H . dim_j K^[n],
/// the Kuenneth form of H*(X x K_n) computed two independent ways (the shift
/// by d reflects the counit degree; at n = 1 both sides reduce to dim H).
LerayReport leray_dimension_check(const Presentation& H, int n, const KummerAlgebra& K);

} // namespace hilbfrob
