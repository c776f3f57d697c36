#include "hilbfrob/hilbert_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "hilbfrob/errors.hpp"

namespace hilbfrob {

std::string HilbertBasisVector::str(const Presentation& H) const {
    std::string s = "(";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) s += " (x) ";
        s += H.basis[labels[i]].id;
    }
    s += ")<" + sigma.cycle_str() + ">";
    if (!L.is_zero()) s += "@" + L.str();
    return s;
}

void HilbertElement::add_term(const HilbertBasisVector& v, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(
        terms.begin(), terms.end(), v,
        [](const auto& t, const HilbertBasisVector& key) { return t.first < key; });
    if (it != terms.end() && it->first == v) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    } else {
        terms.insert(it, {v, c});
    }
}

void HilbertElement::axpy(const HilbertElement& x, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [v, cv] : x.terms) add_term(v, c * cv);
}

std::string HilbertElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : terms) {
        if (!first) os << " + ";
        if (!c.is_one()) os << c.str() << "*";
        os << v.str(*owner);
        first = false;
    }
    return os.str();
}

HilbertElement sn_act(const Permutation& pi, const HilbertElement& x) {
    if (pi.size() != x.n) throw Error(ErrorCode::SIZE_MISMATCH, "sn_act: wrong degree");
    const Presentation& H = *x.owner;
    HilbertElement out;
    out.owner = x.owner;
    out.n = x.n;
    for (const auto& [v, c] : x.terms) {
        Permutation sigma2 = v.sigma.conjugate_by(pi);
        OrbitPartition src = orbits(v.sigma);
        OrbitPartition dst = orbits(sigma2);
        const size_t k = src.blocks.size();
        // target slot j receives the factor of source orbit i with
        // pi(B_i) = B'_j
        std::vector<int> src_of(k);
        std::vector<int32_t> labels(k);
        for (size_t i = 0; i < k; ++i) {
            int j = dst.block_of[pi(src.blocks[i][0])];
            src_of[j] = static_cast<int>(i);
            labels[j] = v.labels[i];
        }
        int sign = 1;
        for (size_t a = 0; a < k; ++a)
            for (size_t b = a + 1; b < k; ++b)
                if (src_of[a] > src_of[b] && H.odd(v.labels[src_of[a]]) &&
                    H.odd(v.labels[src_of[b]]))
                    sign = -sign;
        out.add_term(HilbertBasisVector{v.L, sigma2, std::move(labels)}, c * Rational(sign));
    }
    return out;
}

std::vector<std::pair<HilbertBasisVector, Rational>> m_sigma_tau(
    const Presentation& H, const Permutation& sigma, const std::vector<int32_t>& alpha,
    const Weight& L, const Permutation& tau, const std::vector<int32_t>& beta, const Weight& M) {
    OrbitPartition ps = orbits(sigma);
    OrbitPartition pt = orbits(tau);
    Permutation rho = sigma.compose(tau);
    OrbitPartition pr = orbits(rho);
    OrbitPartition joint = joint_orbits(sigma, tau);
    std::vector<int> gamma = graph_defect(sigma, tau);

    auto slot_weights = [&H](const OrbitPartition& part, const Weight& w) {
        std::vector<Weight> ws;
        ws.reserve(part.blocks.size());
        for (const auto& b : part.blocks)
            ws.push_back(H.group.scale(static_cast<long long>(b.size()), w));
        return ws;
    };
    Weight LM = H.group.add(L, M);
    std::vector<Weight> joint_L = slot_weights(joint, L);
    std::vector<Weight> joint_M = slot_weights(joint, M);
    std::vector<Weight> joint_LM = slot_weights(joint, LM);
    std::vector<Weight> rho_LM = slot_weights(pr, LM);

    OrbitTensor ta = OrbitTensor::monomial(H, slot_weights(ps, L), alpha);
    OrbitTensor tb = OrbitTensor::monomial(H, slot_weights(pt, M), beta);
    OrbitTensor na = nabla(ta, orbit_surjection(ps, joint), joint_L);
    OrbitTensor nb = nabla(tb, orbit_surjection(pt, joint), joint_M);
    OrbitTensor prod = pointwise_product(na, nb);
    for (size_t j = 0; j < gamma.size(); ++j) {
        if (gamma[j] == 0 || prod.is_zero()) continue;
        prod = multiply_slot(prod, j, H.euler_power(gamma[j]));
    }
    OrbitTensor split = delta_map(prod, orbit_surjection(pr, joint), rho_LM);

    std::vector<std::pair<HilbertBasisVector, Rational>> out;
    out.reserve(split.terms.size());
    for (const auto& t : split.terms) {
        HilbertBasisVector v;
        v.L = LM;
        v.sigma = rho;
        v.labels.assign(t.labels.begin(), t.labels.end());
        out.push_back({std::move(v), t.coeff});
    }
    return out;
}

HilbertElement product(const HilbertElement& x, const HilbertElement& y) {
    if (x.owner != y.owner || x.n != y.n)
        throw Error(ErrorCode::SIZE_MISMATCH, "product: mismatched Hilbert elements");
    const Presentation& H = *x.owner;
    HilbertElement out;
    out.owner = x.owner;
    out.n = x.n;
    for (const auto& [v, cv] : x.terms)
        for (const auto& [w, cw] : y.terms) {
            auto terms = m_sigma_tau(H, v.sigma, v.labels, v.L, w.sigma, w.labels, w.L);
            for (auto& [bv, c] : terms) out.add_term(bv, c * cv * cw);
        }
    return out;
}

HilbertElement invariant_projection(const HilbertElement& x) {
    HilbertElement out;
    out.owner = x.owner;
    out.n = x.n;
    if (x.is_zero()) return out;
    auto perms = enumerate_sn(x.n, std::max(x.n, kDefaultSnBound));
    Rational inv_fact = Rational(1) / factorial(x.n);
    for (const auto& pi : perms) out.axpy(sn_act(pi, x), inv_fact);
    return out;
}

FockVector to_symmetric_word(const HilbertElement& x) {
    const Presentation& H = *x.owner;
    // invariance under adjacent transpositions suffices
    for (int i = 0; i + 1 < x.n; ++i) {
        std::vector<uint8_t> im(x.n);
        for (int k = 0; k < x.n; ++k) im[k] = static_cast<uint8_t>(k);
        std::swap(im[i], im[i + 1]);
        if (!(sn_act(Permutation(im), x) == x))
            throw Error(ErrorCode::NOT_INVARIANT, "to_symmetric_word needs an invariant element");
    }
    FockVector out;
    Rational inv_fact = Rational(1) / factorial(x.n);
    for (const auto& [v, c] : x.terms) {
        OrbitPartition part = orbits(v.sigma);
        // factors (|B|, label) in orbit order, then Koszul-sorted
        std::vector<uint32_t> factors;
        std::vector<int> degs;
        for (size_t i = 0; i < part.blocks.size(); ++i) {
            factors.push_back(
                FockMonomial::pack(static_cast<int>(part.blocks[i].size()), v.labels[i]));
            degs.push_back(H.basis[v.labels[i]].degree);
        }
        // stable insertion sort tracking the Koszul sign
        int sign = 1;
        bool zero = false;
        for (size_t i = 1; i < factors.size() && !zero; ++i) {
            for (size_t j = i; j > 0 && factors[j] < factors[j - 1]; --j) {
                if ((degs[j] & 1) && (degs[j - 1] & 1)) sign = -sign;
                std::swap(factors[j], factors[j - 1]);
                std::swap(degs[j], degs[j - 1]);
            }
        }
        for (size_t i = 0; i + 1 < factors.size() && !zero; ++i)
            if (factors[i] == factors[i + 1] && (degs[i] & 1)) zero = true;
        if (zero) continue;
        FockMonomial m;
        m.f.assign(factors.begin(), factors.end());
        out.add_term(m, c * inv_fact * Rational(sign));
    }
    return out;
}

HilbertAlgebra HilbertAlgebra::build(const Presentation& H, int n, long long budget) {
    if (!H.validated())
        throw Error(ErrorCode::BAD_INPUT, "hilbert build needs a validated presentation");
    if (!H.diagonal) throw Error(ErrorCode::NO_DIAGONAL, "hilbert build needs a diagonal");
    if (n < 0) throw Error(ErrorCode::BAD_INPUT, "n must be >= 0");

    HilbertAlgebra A;
    A.H_ = &H;
    A.n_ = n;

    auto perms = enumerate_sn(n, std::max(n, kDefaultSnBound));
    std::vector<Weight> twists = H.group.elements();
    std::sort(twists.begin(), twists.end());

    // budget estimate before materialising
    long long estimate = 0;
    std::vector<std::pair<Permutation, OrbitPartition>> sectors;
    for (const auto& sigma : perms) sectors.push_back({sigma, orbits(sigma)});
    for (const Weight& L : twists) {
        for (const auto& [sigma, part] : sectors) {
            long long count = 1;
            for (const auto& b : part.blocks) {
                count *= static_cast<long long>(
                    H.basis_of_weight(H.group.scale(static_cast<long long>(b.size()), L)).size());
                if (count == 0) break;
            }
            estimate += count;
            if (estimate > budget)
                throw Error(ErrorCode::BUDGET_EXCEEDED,
                            "estimated H_n dimension >= " + std::to_string(estimate) +
                                " exceeds budget " + std::to_string(budget) +
                                "; set HILBFROB_BUDGET to raise");
        }
    }
    A.pre_invariant_terms_ = estimate;

    // enumerate basis vectors and group them into signed S_n-orbits
    for (const Weight& L : twists) {
        for (const auto& [sigma, part] : sectors) {
            const size_t k = part.blocks.size();
            std::vector<const std::vector<int32_t>*> choices(k);
            bool empty = false;
            for (size_t i = 0; i < k; ++i) {
                choices[i] = &H.basis_of_weight(
                    H.group.scale(static_cast<long long>(part.blocks[i].size()), L));
                if (choices[i]->empty()) empty = true;
            }
            if (empty) continue;
            std::vector<size_t> pick(k, 0);
            while (true) {
                HilbertBasisVector v;
                v.L = L;
                v.sigma = sigma;
                v.labels.resize(k);
                for (size_t i = 0; i < k; ++i) v.labels[i] = (*choices[i])[pick[i]];
                if (!A.locate_.count(v)) {
                    // build the signed orbit of v
                    HilbertElement seed;
                    seed.owner = &H;
                    seed.n = n;
                    seed.add_term(v, Rational(1));
                    std::map<HilbertBasisVector, int> orbit;
                    bool killed = false;
                    long long stab = 0;
                    for (const auto& pi : perms) {
                        HilbertElement img = sn_act(pi, seed);
                        const auto& [w, c] = img.terms.front();
                        int s = c.sign();
                        auto it = orbit.find(w);
                        if (it == orbit.end()) {
                            orbit.emplace(w, s);
                        } else if (it->second != s) {
                            killed = true;
                            break;
                        }
                        if (w == v) ++stab;
                    }
                    if (killed) {
                        // odd self-symmetry: the whole orbit symmetrises to 0
                        for (const auto& pi : perms) {
                            HilbertElement img = sn_act(pi, seed);
                            A.locate_.emplace(img.terms.front().first, std::make_pair(-1, 0));
                        }
                    } else {
                        Invariant inv;
                        inv.L = L;
                        inv.stabilizer = stab;
                        int rep_sign = orbit.begin()->second;
                        int deg = 0;
                        for (int32_t lab : v.labels) deg += H.basis[lab].degree;
                        inv.degree = deg;
                        for (const auto& [w, s] : orbit)
                            inv.terms.push_back({w, s * rep_sign});
                        int index = static_cast<int>(A.invariants_.size());
                        for (const auto& [w, s] : inv.terms)
                            A.locate_.emplace(w, std::make_pair(index, s));
                        A.invariants_.push_back(std::move(inv));
                    }
                }
                // advance mixed-radix counter
                size_t i = 0;
                while (i < k && ++pick[i] == choices[i]->size()) {
                    pick[i] = 0;
                    ++i;
                }
                if (i == k) break;
            }
        }
    }

    // unit: (1,...,1)<id> at twist 0
    {
        HilbertElement u;
        u.owner = &H;
        u.n = n;
        HilbertBasisVector v;
        v.L = H.group.zero();
        v.sigma = Permutation::identity(n);
        // expand the unit coordinates over the n singleton slots
        std::vector<std::pair<HilbertBasisVector, Rational>> stack{{v, Rational(1)}};
        for (int i = 0; i < n; ++i) {
            std::vector<std::pair<HilbertBasisVector, Rational>> next;
            for (const auto& [w, c] : stack)
                for (const auto& [b, cb] : H.unit) {
                    HilbertBasisVector w2 = w;
                    w2.labels.push_back(b);
                    next.push_back({w2, c * cb});
                }
            stack = std::move(next);
        }
        for (const auto& [w, c] : stack) u.add_term(w, c);
        A.unit_coords_ = A.to_invariant_coords(u);
    }
    return A;
}

std::map<Weight, std::map<int, int>> HilbertAlgebra::graded_dims() const {
    std::map<Weight, std::map<int, int>> dims;
    for (const auto& inv : invariants_) dims[inv.L][inv.degree]++;
    return dims;
}

HilbertElement HilbertAlgebra::invariant_element(int k) const {
    HilbertElement out;
    out.owner = H_;
    out.n = n_;
    for (const auto& [v, s] : invariants_[k].terms) out.add_term(v, Rational(s));
    return out;
}

HilbertElement HilbertAlgebra::expand(const SparseVec& inv_coords) const {
    HilbertElement out;
    out.owner = H_;
    out.n = n_;
    for (const auto& [k, c] : inv_coords)
        for (const auto& [v, s] : invariants_[k].terms) out.add_term(v, c * Rational(s));
    return out;
}

SparseVec HilbertAlgebra::to_invariant_coords(const HilbertElement& x) const {
    if (x.owner != H_ || x.n != n_)
        throw Error(ErrorCode::SIZE_MISMATCH, "element of a different Hilbert algebra");
    SparseVec coords;
    for (const auto& [v, c] : x.terms) {
        auto it = locate_.find(v);
        if (it == locate_.end() || it->second.second == 0)
            throw Error(ErrorCode::NOT_INVARIANT, "term " + v.str(*H_) + " is not invariant-spanned");
        // only record on representatives; consistency is checked below
        if (v == invariants_[it->second.first].terms.front().first)
            sparse_add_term(coords, it->second.first, c);
    }
    HilbertElement check = expand(coords);
    if (!(check == x)) throw Error(ErrorCode::NOT_INVARIANT, "element is not S_n-invariant");
    return coords;
}

const SparseVec& HilbertAlgebra::product_invariant(int i, int j) const {
    uint64_t key = (uint64_t(uint32_t(i)) << 32) | uint32_t(j);
    {
        std::lock_guard<std::mutex> lk(memo_->mutex);
        auto it = memo_->table.find(key);
        if (it != memo_->table.end()) return it->second;
    }
    const Invariant& I = invariants_[i];
    HilbertElement xj = invariant_element(j);
    // w = rep_i * X_j
    const HilbertBasisVector& rep = I.terms.front().first;
    HilbertElement w;
    w.owner = H_;
    w.n = n_;
    for (const auto& [v, cv] : xj.terms) {
        auto terms = m_sigma_tau(*H_, rep.sigma, rep.labels, rep.L, v.sigma, v.labels, v.L);
        for (auto& [bv, c] : terms) w.add_term(bv, c * cv);
    }
    // X_i X_j = (n!/s_i) proj(w); read off coefficients orbit-wise:
    // coeff_{X_k} = (s_k / s_i) sum_{t in X_k} eps_t c_t(w)
    SparseVec out;
    for (const auto& [v, c] : w.terms) {
        auto it = locate_.find(v);
        if (it == locate_.end())
            throw Error(ErrorCode::BAD_INPUT, "product term outside H_n basis: " + v.str(*H_));
        if (it->second.second == 0) continue; // vanished orbit: projects to 0
        int k = it->second.first;
        Rational contrib = c * Rational(it->second.second) *
                           Rational(invariants_[k].stabilizer, I.stabilizer);
        sparse_add_term(out, k, contrib);
    }
    std::lock_guard<std::mutex> lk(memo_->mutex);
    auto [it, inserted] = memo_->table.emplace(key, std::move(out));
    return it->second;
}

SparseVec HilbertAlgebra::product_coords(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) sparse_axpy(out, product_invariant(i, j), ci * cj);
    return out;
}

} // namespace hilbfrob
