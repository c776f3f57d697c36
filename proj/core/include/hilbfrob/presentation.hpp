#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hilbfrob/errors.hpp"
#include "hilbfrob/sparse.hpp"
#include "hilbfrob/weight_group.hpp"

namespace hilbfrob {

struct BasisVector {
    std::string id;
    int degree = 0;
    Weight weight;
    std::optional<std::pair<int, int>> bidegree; // shifted Hodge bidegree (i, j)
};

class Presentation;

/// Sparse rational linear combination of basis vectors of one presentation.
struct Element {
    const Presentation* owner = nullptr;
    SparseVec coords;

    bool is_zero() const { return coords.empty(); }
};

/// Sum of a (x) b terms in H tensor H.
struct Tensor2Term {
    int32_t a = 0;
    int32_t b = 0;
    Rational coeff;
};
using Tensor2 = std::vector<Tensor2Term>;

struct CheckResult {
    std::string axiom;
    bool pass = true;
    std::string witness;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool usable() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

struct HopfData {
    // delta: basis index -> terms of delta(x), degree -d
    std::unordered_map<int32_t, Tensor2> delta;
    // counit, degree d (supported on degree -d)
    SparseVec epsilon;
};

/// A weighted, graded Frobenius-algebra presentation: finite basis with
/// degrees and weights, structure constants of a degree-d multiplication,
/// and optionally an integral, a diagonal and Hopf data.
class Presentation {
public:
    int degree_d = 0;
    WeightGroup group = WeightGroup::trivial();
    std::vector<BasisVector> basis;
    SparseVec unit;
    std::optional<SparseVec> integral;
    // diagonal: basis index x -> all components of Delta(x), degree d
    std::optional<std::unordered_map<int32_t, Tensor2>> diagonal;
    std::optional<HopfData> hopf;
    std::string name;
    std::string note;

    Presentation() = default;
    Presentation(const Presentation& o);
    Presentation& operator=(const Presentation& o);
    Presentation(Presentation&&) = default;
    Presentation& operator=(Presentation&&) = default;

    /// Sets c_{ab}^{out} += c (one directed entry; commutativity is an axiom
    /// checked by validate, not an assumption).
    void set_mult(int32_t a, int32_t b, int32_t out, const Rational& c);
    /// Sets both c_{ab} and the Koszul-commuted c_{ba}.
    void set_mult_sym(int32_t a, int32_t b, int32_t out, const Rational& c);

    int dim() const { return static_cast<int>(basis.size()); }
    int index_of(const std::string& id) const;
    const SparseVec& mult_basis(int32_t a, int32_t b) const;
    bool odd(int32_t i) const { return basis[i].degree & 1; }

    /// Must be called after the fields above are populated (models and the
    /// loaders do this). Recomputes the index and weight caches.
    void finalize();
    bool finalized() const { return finalized_; }
    bool validated() const { return validated_; }

    const std::vector<int32_t>& basis_of_weight(const Weight& w) const;
    std::vector<Weight> weights_present() const;

    Element element(const SparseVec& coords) const { return Element{this, coords}; }
    Element element_of(const std::string& id) const;
    Element zero_element() const { return Element{this, {}}; }
    Element unit_element() const { return Element{this, unit}; }

    Element multiply(const Element& a, const Element& b) const;
    Rational pair(const Element& a, const Element& b) const;
    Element integrate_mult(const Element& a) const; // linear form application
    Rational integral_of(const Element& a) const;

    Tensor2 diagonal_full(const Element& x) const;
    Tensor2 diagonal_component(const Element& x, const Weight& L, const Weight& M) const;
    Tensor2 dual_basis(const Weight& w) const;
    Element euler_class() const;
    Element euler_power(int k) const;

    std::optional<int> homogeneous_degree(const Element& x) const;
    std::optional<Weight> homogeneous_weight(const Element& x) const;
    int degree_of_term(int32_t i) const { return basis[i].degree; }

    /// Pairing partners of basis vector s: all (t, <s,t>) with nonzero pairing.
    const std::vector<std::pair<int32_t, Rational>>& pairing_partners(int32_t s) const;

    /// Fills the diagonal with the pairing-dual of multiplication.
    Presentation derive_diagonal_from_integral() const;

    /// Re-presents the same algebra over a different weight group, placing
    /// every basis vector in weight 0 (trivial weighting).
    Presentation with_trivial_weighting(const WeightGroup& g) const;

    std::string describe_basis(int32_t i) const { return basis[i].id; }
    std::string describe(const Element& x) const;

    friend ValidationReport validate(Presentation& pres);

private:
    struct Caches {
        std::mutex mutex;
        std::map<Weight, Tensor2> dual;
        std::vector<std::vector<std::pair<int32_t, Rational>>> pairing;
        bool pairing_built = false;
        std::vector<Element> euler_powers;
    };

    bool finalized_ = false;
    bool validated_ = false;
    std::unordered_map<std::string, int32_t> index_;
    std::unordered_map<uint64_t, SparseVec> mult_;
    std::map<Weight, std::vector<int32_t>> by_weight_;
    mutable std::unique_ptr<Caches> caches_ = std::make_unique<Caches>();

    void require_finalized() const;
};

/// Runs all axioms; marks the presentation usable when every mandatory axiom
/// passes. Witnesses name the offending basis tuple.
ValidationReport validate(Presentation& pres);

/// Throws REJECTED with the first failing axiom.
void validate_or_throw(Presentation& pres);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Rational& c, Element a);

} // namespace hilbfrob
