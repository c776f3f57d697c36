#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "hilbfrob/fock.hpp"
#include "hilbfrob/orbit_tensor.hpp"
#include "hilbfrob/permutation.hpp"
#include "hilbfrob/presentation.hpp"

namespace hilbfrob {

/// Basis vector of H_n: a permutation sector, one label in H(|B| L) per
/// sigma-orbit B (orbits in canonical order), and the twist L.
struct HilbertBasisVector {
    Weight L;
    Permutation sigma;
    std::vector<int32_t> labels;

    bool operator==(const HilbertBasisVector& o) const = default;
    auto operator<=>(const HilbertBasisVector& o) const = default;
    std::string str(const Presentation& H) const;
};

struct HilbertElement {
    const Presentation* owner = nullptr;
    int n = 0;
    // sorted by basis vector, no zeros
    std::vector<std::pair<HilbertBasisVector, Rational>> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const HilbertBasisVector& v, const Rational& c);
    void axpy(const HilbertElement& x, const Rational& c);
    bool operator==(const HilbertElement& o) const {
        return owner == o.owner && n == o.n && terms == o.terms;
    }
    std::string str() const;
};

/// pi . (alpha<sigma>) = (pi.alpha)<pi sigma pi^-1> with the Koszul sign of
/// the induced permutation of tensor legs.
HilbertElement sn_act(const Permutation& pi, const HilbertElement& x);

/// The composite Delta_{<s,t>,(st)} (nabla^{s,<s,t>}(a) nabla^{t,<s,t>}(b)
/// e^{gamma(s,t)}), emitted over (sigma tau)-orbit sectors.
std::vector<std::pair<HilbertBasisVector, Rational>> m_sigma_tau(
    const Presentation& H, const Permutation& sigma, const std::vector<int32_t>& alpha,
    const Weight& L, const Permutation& tau, const std::vector<int32_t>& beta, const Weight& M);

/// Bilinear extension of (a<s>)(b<t>) = m_{s,t}(a,b)<st>.
HilbertElement product(const HilbertElement& x, const HilbertElement& y);

/// (1/n!) sum_pi sn_act(pi, x).
HilbertElement invariant_projection(const HilbertElement& x);

/// The 1/n! symmetrization isomorphism onto the weight-n part of
/// S(L) = S*(sum_{v>=1} H(vL)); x must be S_n-invariant and of pure twist L.
FockVector to_symmetric_word(const HilbertElement& x);

inline constexpr long long kDefaultHilbertBudget = 2000000;

/// The n-th Hilbert algebra of a validated presentation with diagonal:
/// enumerates H_n over every twist L, builds the signed-orbit invariant
/// basis, and serves the product in invariant coordinates (memoised).
class HilbertAlgebra {
public:
    static HilbertAlgebra build(const Presentation& H, int n,
                                long long budget = kDefaultHilbertBudget);

    struct Invariant {
        // orbit sum with signs, sorted; the first term is the lex-smallest
        // representative and carries +1
        std::vector<std::pair<HilbertBasisVector, int>> terms;
        long long stabilizer = 1;
        Weight L;
        int degree = 0;
    };

    const Presentation& algebra() const { return *H_; }
    int n() const { return n_; }
    long long pre_invariant_terms() const { return pre_invariant_terms_; }
    const std::vector<Invariant>& invariants() const { return invariants_; }
    int dim() const { return static_cast<int>(invariants_.size()); }

    /// dims by (twist, degree)
    std::map<Weight, std::map<int, int>> graded_dims() const;

    HilbertElement invariant_element(int k) const;
    HilbertElement expand(const SparseVec& inv_coords) const;
    /// Inverse of expand on invariant elements; NOT_INVARIANT otherwise.
    SparseVec to_invariant_coords(const HilbertElement& x) const;

    const SparseVec& unit_coords() const { return unit_coords_; }
    HilbertElement unit() const { return expand(unit_coords_); }

    /// Product of invariant basis elements in invariant coordinates.
    /// Computed by expanding one orbit only: X_i X_j = (n!/s_i) proj(rep_i X_j).
    const SparseVec& product_invariant(int i, int j) const;
    SparseVec product_coords(const SparseVec& a, const SparseVec& b) const;

private:
    const Presentation* H_ = nullptr;
    int n_ = 0;
    long long pre_invariant_terms_ = 0;
    std::vector<Invariant> invariants_;
    SparseVec unit_coords_;
    // basis vector -> (invariant index, sign); sign 0 marks a vanished orbit
    std::map<HilbertBasisVector, std::pair<int, int>> locate_;
    struct Memo {
        std::mutex mutex;
        std::unordered_map<uint64_t, SparseVec> table;
    };
    mutable std::unique_ptr<Memo> memo_ = std::make_unique<Memo>();

    friend HilbertElement sn_act(const Permutation&, const HilbertElement&);
};

} // namespace hilbfrob
