#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hilbfrob/presentation.hpp"

namespace hilbfrob {

/// Creation monomial acting on the vacuum: sorted factors (level, basis id),
/// packed as (level << 16) | basis so lexicographic order is the integer
/// order. Odd-degree factors appear at most once per (level, id).
struct FockMonomial {
    boost::container::small_vector<uint32_t, 8> f;

    static uint32_t pack(int level, int32_t basis) {
        return (uint32_t(level) << 16) | uint32_t(basis);
    }
    static int level_of(uint32_t packed) { return int(packed >> 16); }
    static int32_t basis_of(uint32_t packed) { return int32_t(packed & 0xffff); }

    size_t size() const { return f.size(); }
    int level_at(size_t i) const { return level_of(f[i]); }
    int32_t basis_at(size_t i) const { return basis_of(f[i]); }
    int weight() const {
        int w = 0;
        for (uint32_t x : f) w += level_of(x);
        return w;
    }
    int degree(const Presentation& p) const {
        int d = 0;
        for (uint32_t x : f) d += p.basis[basis_of(x)].degree;
        return d;
    }
    bool operator==(const FockMonomial& o) const { return f == o.f; }
    bool operator<(const FockMonomial& o) const {
        return std::lexicographical_compare(f.begin(), f.end(), o.f.begin(), o.f.end());
    }
    std::string str(const Presentation& p) const;
};

struct FockVector {
    // sorted by monomial, no zeros
    std::vector<std::pair<FockMonomial, Rational>> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const FockMonomial& m, const Rational& c);
    void axpy(const FockVector& v, const Rational& c);
    bool operator==(const FockVector& o) const { return terms == o.terms; }
};

/// The Fock module over a presentation twisted by L: level nu >= 1 carries the
/// weight-(nu*L) component. All operators are exact and lazy; nothing is
/// materialised beyond the vectors being acted on.
class FockSpace {
public:
    FockSpace(const Presentation& H, Weight L);
    explicit FockSpace(const Presentation& H);

    const Presentation& algebra() const { return *H_; }
    const Weight& twist() const { return L_; }
    Weight level_weight(long long level) const { return H_->group.scale(level, L_); }
    const std::vector<int32_t>& level_basis(long long level) const {
        return H_->basis_of_weight(level_weight(level));
    }

    FockVector vacuum() const;

    /// q(alpha at the given level) applied to v. Creation for level > 0,
    /// contraction for level < 0, zero for level 0.
    FockVector q(int level, const Element& alpha, const FockVector& v) const;

    /// L(alpha at the given level): the normal-ordered quadratic operator,
    /// with the sum over nu truncated to the window that can act nontrivially.
    FockVector virasoro(int level, const Element& alpha, const FockVector& v) const;

    /// Euler form e(alpha at level n, beta at level -n), skew-symmetric.
    Rational euler_form(int level, const Element& alpha, const Element& beta) const;

    std::vector<FockMonomial> monomials_of_weight(int w) const;
    std::vector<FockMonomial> monomials_up_to(int w) const;

    // Single-monomial primitives (used by the relation sweeps).
    // Creation of (level, basis): returns false when the product vanishes,
    // otherwise fills out/sign.
    bool create(const FockMonomial& m, int level, int32_t basis, FockMonomial& out,
                int& sign) const;
    // Contraction of basis vector s at level -mu against m; appends results.
    void contract(const FockMonomial& m, int mu, int32_t s, const Rational& scale,
                  FockVector& out) const;

private:
    const Presentation* H_;
    Weight L_;

    void check_level_element(int level, const Element& alpha) const;
};

/// The boundary operator: the unique degree-2, weight-0 operator with
/// d|0> = 0 and [d, q(alpha)] = L([d,alpha]) + q(K([d,alpha])), where
/// K(alpha) = ((|n|-1)/2) K_class alpha on level n. Values on monomials are
/// memoised per instance.
class BoundaryOperator {
public:
    BoundaryOperator(const FockSpace& fs, Element k_class);

    FockVector apply(const FockVector& v);
    /// [d, q(alpha at level)] applied to v.
    FockVector commutator_with_q(int level, const Element& alpha, const FockVector& v);
    /// Evaluates d on a monomial by peeling the factor at position i instead
    /// of position 0 (order-independence probe).
    FockVector apply_peeling(const FockMonomial& m, size_t i);

private:
    const FockSpace* fs_;
    Element k_class_;
    std::map<FockMonomial, FockVector> memo_;

    FockVector apply_monomial(const FockMonomial& m);
    FockVector peel(const FockMonomial& m, size_t i);
};

struct RelationReport {
    std::string relation;
    bool pass = true;
    long long cases = 0;
    std::string witness;
};

struct CommutatorCheckOptions {
    int max_weight = 4;
    int max_level = 3;
    Element k_class; // empty => zero class
    int jobs = 1;
};

/// kinds: comma-separated subset of
///   heisenberg, vir_and_q, virasoro, euler, lehn, all
std::vector<RelationReport> commutator_check(const FockSpace& fs, const std::string& kinds,
                                             const CommutatorCheckOptions& opt);

std::string fock_vector_str(const FockSpace& fs, const FockVector& v);

} // namespace hilbfrob
