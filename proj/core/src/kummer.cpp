#include "hilbfrob/kummer.hpp"

#include <algorithm>

#include "hilbfrob/errors.hpp"
#include "hilbfrob/linalg.hpp"

namespace hilbfrob {

HilbertElement phi(const Presentation& H, const Element& alpha, int n) {
    if (!H.hopf) throw Error(ErrorCode::NO_HOPF, "phi needs Hopf data");
    if (n < 1) throw Error(ErrorCode::BAD_INPUT, "phi needs n >= 1");
    if (alpha.owner != &H) throw Error(ErrorCode::OWNER_MISMATCH, "phi: foreign element");
    // iterated comultiplication into n legs, splitting the first leg each time
    using Legs = std::vector<int32_t>;
    std::map<Legs, Rational> acc;
    for (const auto& [b, c] : alpha.coords) acc[{b}] += c;
    for (int step = 1; step < n; ++step) {
        std::map<Legs, Rational> next;
        for (const auto& [legs, c] : acc) {
            auto it = H.hopf->delta.find(legs[0]);
            if (it == H.hopf->delta.end()) continue;
            for (const auto& t : it->second) {
                Legs l2;
                l2.push_back(t.a);
                l2.push_back(t.b);
                l2.insert(l2.end(), legs.begin() + 1, legs.end());
                auto& slot = next[l2];
                slot += c * t.coeff;
                if (slot.is_zero()) next.erase(l2);
            }
        }
        acc = std::move(next);
    }
    HilbertElement out;
    out.owner = &H;
    out.n = n;
    Permutation id = Permutation::identity(n);
    for (const auto& [legs, c] : acc) {
        HilbertBasisVector v;
        v.L = H.group.zero();
        v.sigma = id;
        v.labels = legs;
        // all legs must be weight 0 for the id sector at twist 0
        for (int32_t b : legs)
            if (!H.basis[b].weight.is_zero())
                throw Error(ErrorCode::WEIGHT_MISMATCH, "Hopf delta leaves weight 0");
        out.add_term(v, c);
    }
    return out;
}

namespace {

// homogeneous generating set of ker eps
std::vector<Element> kernel_of_counit(const Presentation& H) {
    const SparseVec& eps = H.hopf->epsilon;
    auto eps_of = [&](int32_t b) -> Rational {
        if (const Rational* v = sparse_find(eps, b)) return *v;
        return Rational(0);
    };
    int32_t pivot = -1;
    for (int32_t b = 0; b < H.dim(); ++b)
        if (!eps_of(b).is_zero()) {
            pivot = b;
            break;
        }
    if (pivot < 0) throw Error(ErrorCode::BAD_INPUT, "counit is zero");
    std::vector<Element> out;
    Rational ep = eps_of(pivot);
    for (int32_t b = 0; b < H.dim(); ++b) {
        Rational eb = eps_of(b);
        if (eb.is_zero()) {
            out.push_back(H.element(SparseVec{{b, Rational(1)}}));
        } else if (b != pivot) {
            SparseVec coords{{b, Rational(1)}};
            sparse_add_term(coords, pivot, -(eb / ep));
            out.push_back(H.element(coords));
        }
    }
    return out;
}

} // namespace

KummerAlgebra kummer_build(const HilbertAlgebra& A) {
    const Presentation& H = A.algebra();
    if (!H.hopf) throw Error(ErrorCode::NO_HOPF, "kummer build needs Hopf data");
    const int n = A.n();

    // invariant coordinates of the phi image of each kernel generator
    std::vector<SparseVec> phis;
    for (const Element& x : kernel_of_counit(H)) {
        HilbertElement px = phi(H, x, n);
        if (!px.is_zero()) phis.push_back(A.to_invariant_coords(px));
    }

    // ideal rows phi(x) . X_j; columns are invariant indices, so pivots fall
    // on the lexicographically smallest representatives.
    auto rref = std::make_shared<SparseRREF>();
    for (const SparseVec& px : phis) {
        for (int j = 0; j < A.dim(); ++j) {
            SparseVec row;
            for (const auto& [k, c] : px) sparse_axpy(row, A.product_invariant(k, j), c);
            if (!row.empty()) rref->add_row(std::move(row));
        }
    }

    KummerAlgebra K;
    K.n = n;
    K.owner = &H;
    K.ideal = rref;
    for (int k = 0; k < A.dim(); ++k) {
        if (rref->is_pivot(k)) continue;
        K.rep_invariants.push_back(k);
        K.degrees.push_back(A.invariants()[k].degree);
        K.twists.push_back(A.invariants()[k].L);
    }
    K.unit = K.reduce_invariant(A.unit_coords());
    K.mult.assign(K.dim(), std::vector<SparseVec>(K.dim()));
    for (int i = 0; i < K.dim(); ++i)
        for (int j = 0; j < K.dim(); ++j)
            K.mult[i][j] = K.reduce_invariant(
                A.product_invariant(K.rep_invariants[i], K.rep_invariants[j]));
    return K;
}

KummerAlgebra kummer_build(const Presentation& H, int n, long long budget) {
    HilbertAlgebra A = HilbertAlgebra::build(H, n, budget);
    return kummer_build(A);
}

SparseVec KummerAlgebra::reduce_invariant(SparseVec inv_coords) const {
    SparseVec residual = ideal->reduce(std::move(inv_coords));
    SparseVec out;
    for (const auto& [k, c] : residual) {
        auto it = std::lower_bound(rep_invariants.begin(), rep_invariants.end(), k);
        if (it == rep_invariants.end() || *it != k)
            throw Error(ErrorCode::BAD_INPUT, "reduction left a pivot column");
        sparse_add_term(out, static_cast<int32_t>(it - rep_invariants.begin()), c);
    }
    return out;
}

std::map<int, int> KummerAlgebra::dims_by_degree() const {
    std::map<int, int> out;
    for (int d : degrees) out[d]++;
    return out;
}

std::map<Weight, std::map<int, int>> KummerAlgebra::graded_dims() const {
    std::map<Weight, std::map<int, int>> out;
    for (int r = 0; r < dim(); ++r) out[twists[r]][degrees[r]]++;
    return out;
}

Presentation KummerAlgebra::export_presentation() const {
    Presentation p;
    p.name = "kummer-n" + std::to_string(n) + (owner ? "-" + owner->name : "");
    p.note = "Kummer quotient algebra (algebra structure only)";
    p.degree_d = n * owner->degree_d;
    p.group = owner->group;
    for (int r = 0; r < dim(); ++r)
        p.basis.push_back({"e" + std::to_string(r), degrees[r], twists[r], std::nullopt});
    p.finalize();
    for (const auto& [r, c] : unit) sparse_add_term(p.unit, r, c);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (const auto& [r, c] : mult[i][j]) p.set_mult(i, j, r, c);
    p.finalize();
    return p;
}

LerayReport leray_dimension_check(const Presentation& H, int n, const KummerAlgebra& K) {
    // left side: sum over L of the Fock weight-n dimensions, per degree
    std::map<int, long long> fock;
    for (const Weight& L : H.group.elements()) {
        FockSpace fs(H, L);
        for (const FockMonomial& m : fs.monomials_of_weight(n)) fock[m.degree(H)]++;
    }
    // right side: dim_i H (*) dim_j K^[n], shifted by d
    std::map<int, long long> h_dims;
    for (const auto& b : H.basis) h_dims[b.degree]++;
    std::map<int, long long> k_dims;
    for (int d : K.degrees) k_dims[d]++;
    std::map<int, long long> rhs;
    for (const auto& [i, hi] : h_dims)
        for (const auto& [j, kj] : k_dims) rhs[i + j + H.degree_d] += hi * kj;

    LerayReport rep;
    std::map<int, LerayRow> rows;
    for (const auto& [d, v] : fock) {
        rows[d].degree = d;
        rows[d].fock_side = v;
    }
    for (const auto& [d, v] : rhs) {
        rows[d].degree = d;
        rows[d].kummer_side = v;
    }
    for (const auto& [d, row] : rows) {
        rep.rows.push_back(row);
        if (row.fock_side != row.kummer_side) rep.pass = false;
    }
    return rep;
}

} // namespace hilbfrob
