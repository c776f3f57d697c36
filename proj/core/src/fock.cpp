#include "hilbfrob/fock.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "hilbfrob/errors.hpp"

namespace hilbfrob {

std::string FockMonomial::str(const Presentation& p) const {
    if (f.empty()) return "|0>";
    std::string s;
    for (uint32_t x : f) {
        s += "q" + std::to_string(level_of(x)) + "(" + p.basis[basis_of(x)].id + ")";
    }
    return s + "|0>";
}

void FockVector::add_term(const FockMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), m,
                               [](const auto& t, const FockMonomial& key) { return t.first < key; });
    if (it != terms.end() && it->first == m) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    } else {
        terms.insert(it, {m, c});
    }
}

void FockVector::axpy(const FockVector& v, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [m, cm] : v.terms) add_term(m, c * cm);
}

FockSpace::FockSpace(const Presentation& H, Weight L) : H_(&H), L_(std::move(L)) {
    if (H.dim() >= 0xffff)
        throw Error(ErrorCode::BUDGET_EXCEEDED, "basis too large for packed fock monomials");
}
FockSpace::FockSpace(const Presentation& H) : FockSpace(H, H.group.zero()) {}

FockVector FockSpace::vacuum() const {
    FockVector v;
    v.terms.push_back({FockMonomial{}, Rational(1)});
    return v;
}

void FockSpace::check_level_element(int level, const Element& alpha) const {
    if (alpha.owner != H_) throw Error(ErrorCode::OWNER_MISMATCH, "element of a different algebra");
    Weight expect = level_weight(level);
    for (const auto& [i, c] : alpha.coords)
        if (H_->basis[i].weight != expect)
            throw Error(ErrorCode::NOT_HOMOGENEOUS,
                        "element is not of weight " + expect.str() + " (level " +
                            std::to_string(level) + ")");
}

bool FockSpace::create(const FockMonomial& m, int level, int32_t basis, FockMonomial& out,
                       int& sign) const {
    const uint32_t packed = FockMonomial::pack(level, basis);
    const bool odd = H_->odd(basis);
    size_t k = 0;
    int odd_before = 0;
    while (k < m.f.size() && m.f[k] < packed) {
        if (H_->odd(m.basis_at(k))) ++odd_before;
        ++k;
    }
    if (odd && k < m.f.size() && m.f[k] == packed) return false;
    out.f = m.f;
    out.f.insert(out.f.begin() + k, packed);
    sign = (odd && (odd_before & 1)) ? -1 : 1;
    return true;
}

void FockSpace::contract(const FockMonomial& m, int mu, int32_t s, const Rational& scale,
                         FockVector& out) const {
    // q(s at level -mu): super-derivation, [q(s at -mu), q(t at mu)] = -mu <s,t>.
    const bool s_odd = H_->odd(s);
    const auto& partners = H_->pairing_partners(s);
    if (partners.empty()) return;
    int odd_before = 0;
    for (size_t i = 0; i < m.f.size(); ++i) {
        const int32_t b = m.basis_at(i);
        if (m.level_at(i) == mu) {
            for (const auto& [t, val] : partners) {
                if (t != b) continue;
                Rational c = scale * val * Rational(-mu);
                if (s_odd && (odd_before & 1)) c = -c;
                FockMonomial rest;
                rest.f = m.f;
                rest.f.erase(rest.f.begin() + i);
                out.add_term(rest, c);
                break;
            }
        }
        if (H_->odd(b)) ++odd_before;
    }
}

FockVector FockSpace::q(int level, const Element& alpha, const FockVector& v) const {
    check_level_element(level, alpha);
    FockVector out;
    if (level == 0) return out;
    if (level > 0) {
        for (const auto& [s, cs] : alpha.coords) {
            for (const auto& [m, cm] : v.terms) {
                FockMonomial res;
                int sign = 0;
                if (create(m, level, s, res, sign))
                    out.add_term(res, cs * cm * Rational(sign));
            }
        }
    } else {
        for (const auto& [s, cs] : alpha.coords)
            for (const auto& [m, cm] : v.terms) contract(m, -level, s, cs * cm, out);
    }
    return out;
}

FockVector FockSpace::virasoro(int level, const Element& alpha, const FockVector& v) const {
    check_level_element(level, alpha);
    FockVector out;
    const int n = level;
    const Rational half(1, 2);
    for (const auto& [m, cm] : v.terms) {
        const int w = m.weight();
        FockVector mono;
        mono.terms.push_back({m, Rational(1)});
        for (int nu = -w; nu <= n + w; ++nu) {
            if (nu == 0 || nu == n) continue;
            Tensor2 duals = H_->dual_basis(level_weight(nu));
            for (const auto& t : duals) {
                Element e2a = H_->multiply(H_->element(SparseVec{{t.b, Rational(1)}}), alpha);
                if (e2a.is_zero()) continue;
                Element e1 = H_->element(SparseVec{{t.a, Rational(1)}});
                FockVector r;
                if (nu >= n - nu) {
                    r = q(nu, e1, q(n - nu, e2a, mono));
                } else {
                    r = q(n - nu, e2a, q(nu, e1, mono));
                }
                out.axpy(r, half * t.coeff * cm);
            }
        }
    }
    return out;
}

Rational FockSpace::euler_form(int level, const Element& alpha, const Element& beta) const {
    check_level_element(level, alpha);
    check_level_element(-level, beta);
    if (!H_->integral) throw Error(ErrorCode::NO_INTEGRAL, "euler form needs an integral");
    if (level < 0) return -euler_form(-level, beta, alpha);
    Rational acc;
    Element ab = H_->multiply(alpha, beta);
    if (ab.is_zero()) return acc;
    for (int nu = 0; nu <= level; ++nu) {
        Rational factor(static_cast<long long>(nu) * (level - nu), 2);
        if (factor.is_zero()) continue;
        for (const auto& t : H_->dual_basis(level_weight(nu))) {
            Element prod = H_->multiply(
                H_->multiply(H_->element(SparseVec{{t.a, Rational(1)}}),
                             H_->element(SparseVec{{t.b, Rational(1)}})),
                ab);
            acc += factor * t.coeff * H_->integral_of(prod);
        }
    }
    return acc;
}

namespace {

void enumerate_rec(const FockSpace& fs, int level, size_t min_pos, int remaining, FockMonomial& cur,
                   std::vector<FockMonomial>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (level > remaining) return;
    // skip to the next level
    enumerate_rec(fs, level + 1, 0, remaining, cur, out);
    const auto& basis = fs.level_basis(level);
    for (size_t pos = min_pos; pos < basis.size(); ++pos) {
        int32_t b = basis[pos];
        cur.f.push_back(FockMonomial::pack(level, b));
        size_t next_min = fs.algebra().odd(b) ? pos + 1 : pos;
        enumerate_rec(fs, level, next_min, remaining - level, cur, out);
        cur.f.pop_back();
    }
}

} // namespace

std::vector<FockMonomial> FockSpace::monomials_of_weight(int w) const {
    std::vector<FockMonomial> out;
    FockMonomial cur;
    enumerate_rec(*this, 1, 0, w, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FockMonomial> FockSpace::monomials_up_to(int w) const {
    std::vector<FockMonomial> out;
    for (int k = 0; k <= w; ++k) {
        auto part = monomials_of_weight(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

BoundaryOperator::BoundaryOperator(const FockSpace& fs, Element k_class)
    : fs_(&fs), k_class_(std::move(k_class)) {
    if (k_class_.owner == nullptr) k_class_ = fs.algebra().zero_element();
    if (k_class_.owner != &fs.algebra())
        throw Error(ErrorCode::OWNER_MISMATCH, "K class from a different algebra");
    for (const auto& [i, c] : k_class_.coords) {
        const auto& b = fs.algebra().basis[i];
        if (b.degree != 0 || !b.weight.is_zero())
            throw Error(ErrorCode::BAD_INPUT,
                        "K class must be a weight-0, degree-0 element (canonical divisor)");
    }
}

FockVector BoundaryOperator::commutator_with_q(int level, const Element& alpha,
                                               const FockVector& v) {
    // [d, q(alpha)] = L([d,alpha]) + q(K([d,alpha])),
    // K(n alpha) = n (|n|-1)/2 K alpha on level n.
    const int n = level;
    FockVector out = fs_->virasoro(n, alpha, v);
    FockVector scaled;
    scaled.axpy(out, Rational(n));
    out = std::move(scaled);
    if (!k_class_.is_zero() && n != 0) {
        Rational c(static_cast<long long>(n) * (std::abs(n) - 1), 2);
        if (!c.is_zero()) {
            Element ka = fs_->algebra().multiply(k_class_, alpha);
            if (!ka.is_zero()) out.axpy(fs_->q(n, ka, v), c);
        }
    }
    return out;
}

FockVector BoundaryOperator::peel(const FockMonomial& m, size_t i) {
    // m = sign * f_i * rest, sign from moving f_i across the preceding factors.
    const auto& H = fs_->algebra();
    int level = m.level_at(i);
    int32_t b = m.basis_at(i);
    int odd_before = 0;
    for (size_t j = 0; j < i; ++j)
        if (H.odd(m.basis_at(j))) ++odd_before;
    int sign = (H.odd(b) && (odd_before & 1)) ? -1 : 1;
    FockMonomial rest;
    rest.f = m.f;
    rest.f.erase(rest.f.begin() + i);
    FockVector rv;
    rv.terms.push_back({rest, Rational(sign)});
    Element alpha = H.element(SparseVec{{b, Rational(1)}});
    FockVector out = commutator_with_q(level, alpha, rv);
    FockVector drest;
    drest.axpy(apply_monomial(rest), Rational(sign));
    out.axpy(fs_->q(level, alpha, drest), Rational(1));
    return out;
}

FockVector BoundaryOperator::apply_monomial(const FockMonomial& m) {
    if (m.f.empty()) return FockVector{};
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    FockVector out = peel(m, 0);
    memo_.emplace(m, out);
    return out;
}

FockVector BoundaryOperator::apply(const FockVector& v) {
    FockVector out;
    for (const auto& [m, c] : v.terms) out.axpy(apply_monomial(m), c);
    return out;
}

FockVector BoundaryOperator::apply_peeling(const FockMonomial& m, size_t i) {
    if (m.f.empty()) return FockVector{};
    return peel(m, i);
}

std::string fock_vector_str(const FockSpace& fs, const FockVector& v) {
    if (v.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v.terms) {
        if (!first) os << " + ";
        if (!c.is_one()) os << c.str() << "*";
        os << m.str(fs.algebra());
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Relation sweeps
// ---------------------------------------------------------------------------

namespace {

struct SweepOp {
    int level = 0;
    int32_t basis = 0;
    bool odd = false;
};

struct PairScalar {
    Rational value; // [q_i, q_j] = value * id
};

// Applies op to a single monomial; appends (monomial, coeff*scale).
void apply_op(const FockSpace& fs, const SweepOp& op, const FockMonomial& m, const Rational& scale,
              FockVector& out) {
    if (op.level == 0) return;
    if (op.level > 0) {
        FockMonomial res;
        int sign = 0;
        if (fs.create(m, op.level, op.basis, res, sign))
            out.add_term(res, scale * Rational(sign));
    } else {
        fs.contract(m, -op.level, op.basis, scale, out);
    }
}

void apply_op(const FockSpace& fs, const SweepOp& op, const FockVector& v, FockVector& out) {
    for (const auto& [m, c] : v.terms) apply_op(fs, op, m, c, out);
}

uint32_t level_mask(const FockMonomial& m) {
    uint32_t mask = 0;
    for (uint32_t x : m.f) {
        int lvl = FockMonomial::level_of(x);
        if (lvl < 32) mask |= (1u << lvl);
    }
    return mask;
}

struct SweepResult {
    bool pass = true;
    long long cases = 0;
    std::string witness;
};

// Heisenberg commutation relations, checked tightly: the inner loop runs on
// single monomials with cached first applications.
SweepResult heisenberg_sweep(const FockSpace& fs, int max_weight, int max_level, int jobs) {
    const Presentation& H = fs.algebra();
    std::vector<SweepOp> ops;
    for (int lvl = -max_level; lvl <= max_level; ++lvl) {
        if (lvl == 0) continue;
        for (int32_t b : fs.level_basis(lvl)) ops.push_back({lvl, b, H.odd(b)});
    }
    const size_t nops = ops.size();
    // scalar of [q_i, q_j]
    std::vector<Rational> scalars(nops * nops);
    for (size_t i = 0; i < nops; ++i)
        for (size_t j = 0; j < nops; ++j) {
            if (ops[i].level + ops[j].level != 0) continue;
            Rational p = H.pair(H.element(SparseVec{{ops[i].basis, Rational(1)}}),
                                H.element(SparseVec{{ops[j].basis, Rational(1)}}));
            scalars[i * nops + j] = Rational(ops[i].level) * p;
        }
    std::vector<FockMonomial> span = fs.monomials_up_to(max_weight);

    auto run_range = [&](size_t lo, size_t hi, SweepResult& res) {
        std::vector<FockVector> first(nops);
        for (size_t mi = lo; mi < hi && res.pass; ++mi) {
            const FockMonomial& m = span[mi];
            const uint32_t mask = level_mask(m);
            auto surely_zero = [&](const SweepOp& o) {
                return o.level < 0 && !(mask & (1u << (-o.level)));
            };
            for (size_t i = 0; i < nops; ++i) {
                first[i].terms.clear();
                apply_op(fs, ops[i], m, Rational(1), first[i]);
            }
            for (size_t i = 0; i < nops && res.pass; ++i) {
                for (size_t j = i; j < nops; ++j) {
                    // Cheap skips: if one side annihilates a level absent from
                    // m and the other side does not create that level, every
                    // term of the relation vanishes.
                    if (surely_zero(ops[j]) &&
                        !(ops[i].level > 0 && ops[i].level == -ops[j].level)) {
                        res.cases++;
                        continue;
                    }
                    if (surely_zero(ops[i]) &&
                        !(ops[j].level > 0 && ops[j].level == -ops[i].level)) {
                        res.cases++;
                        continue;
                    }
                    const Rational& s = scalars[i * nops + j];
                    FockVector lhs;
                    apply_op(fs, ops[i], first[j], lhs);
                    FockVector other;
                    apply_op(fs, ops[j], first[i], other);
                    int eps = (ops[i].odd && ops[j].odd) ? -1 : 1;
                    lhs.axpy(other, Rational(-eps));
                    if (!s.is_zero()) {
                        FockVector mm;
                        mm.terms.push_back({m, Rational(1)});
                        lhs.axpy(mm, -s);
                    }
                    res.cases++;
                    if (!lhs.is_zero()) {
                        res.pass = false;
                        res.witness = "[q" + std::to_string(ops[i].level) + "(" +
                                      H.basis[ops[i].basis].id + "), q" +
                                      std::to_string(ops[j].level) + "(" +
                                      H.basis[ops[j].basis].id + ")] on " + m.str(H) +
                                      ": residual " + fock_vector_str(fs, lhs);
                        break;
                    }
                }
            }
        }
    };

    int nthreads = std::max(1, jobs);
    if (nthreads == 1 || span.size() < 64) {
        SweepResult res;
        run_range(0, span.size(), res);
        return res;
    }
    std::vector<SweepResult> results(nthreads);
    std::vector<std::thread> threads;
    size_t chunk = (span.size() + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        size_t lo = std::min(span.size(), t * chunk);
        size_t hi = std::min(span.size(), lo + chunk);
        threads.emplace_back([&, lo, hi, t] { run_range(lo, hi, results[t]); });
    }
    for (auto& th : threads) th.join();
    SweepResult merged;
    for (const auto& r : results) {
        merged.cases += r.cases;
        if (!r.pass && merged.pass) {
            merged.pass = false;
            merged.witness = r.witness;
        }
    }
    return merged;
}

std::vector<std::pair<int, int32_t>> sweep_labels(const FockSpace& fs, int max_level,
                                                  bool include_zero) {
    std::vector<std::pair<int, int32_t>> out;
    for (int lvl = -max_level; lvl <= max_level; ++lvl) {
        if (lvl == 0 && !include_zero) continue;
        for (int32_t b : fs.level_basis(lvl)) out.push_back({lvl, b});
    }
    return out;
}

SweepResult vir_and_q_sweep(const FockSpace& fs, int max_weight, int max_level) {
    const Presentation& H = fs.algebra();
    SweepResult res;
    std::vector<FockMonomial> span = fs.monomials_up_to(max_weight);
    auto labels = sweep_labels(fs, max_level, true);
    for (const auto& [n, a] : labels) {
        Element alpha = H.element(SparseVec{{a, Rational(1)}});
        for (const auto& [m_lvl, b] : labels) {
            Element beta = H.element(SparseVec{{b, Rational(1)}});
            Element ab = H.multiply(alpha, beta);
            for (const FockMonomial& m : span) {
                FockVector v;
                v.terms.push_back({m, Rational(1)});
                // [L(alpha), q(beta)] + q(alpha [d,beta]) = 0
                FockVector lhs = fs.virasoro(n, alpha, fs.q(m_lvl, beta, v));
                int eps = (H.odd(a) && H.odd(b)) ? -1 : 1;
                lhs.axpy(fs.q(m_lvl, beta, fs.virasoro(n, alpha, v)), Rational(-eps));
                if (!ab.is_zero() && m_lvl != 0)
                    lhs.axpy(fs.q(n + m_lvl, ab, v), Rational(m_lvl));
                res.cases++;
                if (!lhs.is_zero()) {
                    res.pass = false;
                    res.witness = "[L" + std::to_string(n) + "(" + H.basis[a].id + "), q" +
                                  std::to_string(m_lvl) + "(" + H.basis[b].id + ")] on " +
                                  m.str(H);
                    return res;
                }
            }
        }
    }
    return res;
}

SweepResult virasoro_sweep(const FockSpace& fs, int max_weight, int max_level) {
    const Presentation& H = fs.algebra();
    SweepResult res;
    std::vector<FockMonomial> span = fs.monomials_up_to(max_weight);
    auto labels = sweep_labels(fs, max_level, true);
    for (const auto& [m_lvl, a] : labels) {
        Element alpha = H.element(SparseVec{{a, Rational(1)}});
        for (const auto& [n_lvl, b] : labels) {
            Element beta = H.element(SparseVec{{b, Rational(1)}});
            Element ab = H.multiply(alpha, beta);
            Rational central;
            if (m_lvl + n_lvl == 0) central = fs.euler_form(m_lvl, alpha, beta);
            for (const FockMonomial& m : span) {
                FockVector v;
                v.terms.push_back({m, Rational(1)});
                // [L(a), L(b)] - (m-n) L(ab) + e(a,b) id = 0
                FockVector lhs = fs.virasoro(m_lvl, alpha, fs.virasoro(n_lvl, beta, v));
                int eps = (H.odd(a) && H.odd(b)) ? -1 : 1;
                lhs.axpy(fs.virasoro(n_lvl, beta, fs.virasoro(m_lvl, alpha, v)), Rational(-eps));
                if (!ab.is_zero())
                    lhs.axpy(fs.virasoro(m_lvl + n_lvl, ab, v), Rational(-(m_lvl - n_lvl)));
                if (!central.is_zero()) lhs.axpy(v, central);
                res.cases++;
                if (!lhs.is_zero()) {
                    res.pass = false;
                    res.witness = "[L" + std::to_string(m_lvl) + "(" + H.basis[a].id + "), L" +
                                  std::to_string(n_lvl) + "(" + H.basis[b].id + ")] on " +
                                  m.str(H);
                    return res;
                }
            }
        }
    }
    return res;
}

SweepResult euler_sweep(const FockSpace& fs, int max_level) {
    // closed form e(a,b) = ((n^3-n)/12) int(e a b) against the general
    // formula, valid when all level spaces coincide (period-1 weighting).
    const Presentation& H = fs.algebra();
    SweepResult res;
    Element e = H.euler_class();
    for (int n = 0; n <= max_level; ++n) {
        for (int32_t a : fs.level_basis(n))
            for (int32_t b : fs.level_basis(-n)) {
                Element ea = H.element(SparseVec{{a, Rational(1)}});
                Element eb = H.element(SparseVec{{b, Rational(1)}});
                Rational general = fs.euler_form(n, ea, eb);
                Rational closed(static_cast<long long>(n) * n * n - n, 12);
                closed *= H.integral_of(H.multiply(H.multiply(e, ea), eb));
                res.cases++;
                if (general != closed) {
                    res.pass = false;
                    res.witness = "e(" + H.basis[a].id + "@" + std::to_string(n) + ", " +
                                  H.basis[b].id + "@-" + std::to_string(n) + ") = " + general.str() +
                                  " vs closed form " + closed.str();
                    return res;
                }
            }
    }
    return res;
}

SweepResult lehn_sweep(const FockSpace& fs, int max_weight, int max_level, const Element& k_class) {
    const Presentation& H = fs.algebra();
    SweepResult res;
    BoundaryOperator boundary(fs, k_class);
    std::vector<FockMonomial> span = fs.monomials_up_to(max_weight);

    // Order independence of the recursion.
    for (const FockMonomial& m : span) {
        if (m.f.size() < 2) continue;
        FockVector ref = boundary.apply_peeling(m, 0);
        for (size_t i = 1; i < m.f.size(); ++i) {
            res.cases++;
            if (!(boundary.apply_peeling(m, i) == ref)) {
                res.pass = false;
                res.witness = "boundary recursion order-dependent on " + m.str(H);
                return res;
            }
        }
    }

    auto labels = sweep_labels(fs, max_level, false);
    // [d, q(alpha)] = L([d,alpha]) + q(K([d,alpha]))
    for (const auto& [n, a] : labels) {
        Element alpha = H.element(SparseVec{{a, Rational(1)}});
        for (const FockMonomial& m : span) {
            FockVector v;
            v.terms.push_back({m, Rational(1)});
            FockVector lhs = boundary.apply(fs.q(n, alpha, v));
            lhs.axpy(fs.q(n, alpha, boundary.apply(v)), Rational(-1));
            lhs.axpy(boundary.commutator_with_q(n, alpha, v), Rational(-1));
            res.cases++;
            if (!lhs.is_zero()) {
                res.pass = false;
                res.witness = "[d, q" + std::to_string(n) + "(" + H.basis[a].id + ")] on " +
                              m.str(H);
                return res;
            }
        }
    }

    // Derived relation: [q'(a), q(b)] = -q([d,a][d,b]) - int(K([d,a])[d,b]) id,
    // with q'(a) evaluated as the honest commutator [d, q(a)].
    auto qprime = [&](int lvl, const Element& alpha, const FockVector& x) {
        FockVector r = boundary.apply(fs.q(lvl, alpha, x));
        r.axpy(fs.q(lvl, alpha, boundary.apply(x)), Rational(-1));
        return r;
    };
    for (const auto& [m_lvl, a] : labels) {
        Element alpha = H.element(SparseVec{{a, Rational(1)}});
        for (const auto& [n_lvl, b] : labels) {
            Element beta = H.element(SparseVec{{b, Rational(1)}});
            Element ab = H.multiply(alpha, beta);
            Rational scalar;
            if (m_lvl + n_lvl == 0 && !k_class.is_zero()) {
                Rational c(static_cast<long long>(m_lvl) * (std::abs(m_lvl) - 1), 2);
                scalar = Rational(n_lvl) * c *
                         H.integral_of(H.multiply(H.multiply(k_class, alpha), beta));
            }
            int eps = (H.odd(a) && H.odd(b)) ? -1 : 1;
            for (const FockMonomial& m : span) {
                FockVector v;
                v.terms.push_back({m, Rational(1)});
                FockVector lhs = qprime(m_lvl, alpha, fs.q(n_lvl, beta, v));
                lhs.axpy(fs.q(n_lvl, beta, qprime(m_lvl, alpha, v)), Rational(-eps));
                if (!ab.is_zero() && m_lvl + n_lvl != 0)
                    lhs.axpy(fs.q(m_lvl + n_lvl, ab, v),
                             Rational(static_cast<long long>(m_lvl) * n_lvl));
                if (!scalar.is_zero()) lhs.axpy(v, scalar);
                res.cases++;
                if (!lhs.is_zero()) {
                    res.pass = false;
                    res.witness = "[q'" + std::to_string(m_lvl) + "(" + H.basis[a].id + "), q" +
                                  std::to_string(n_lvl) + "(" + H.basis[b].id + ")] on " +
                                  m.str(H);
                    return res;
                }
            }
        }
    }
    return res;
}

} // namespace

std::vector<RelationReport> commutator_check(const FockSpace& fs, const std::string& kinds,
                                             const CommutatorCheckOptions& opt) {
    std::vector<std::string> wanted;
    {
        std::stringstream ss(kinds);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) wanted.push_back(item);
        }
    }
    auto has = [&](const std::string& k) {
        for (const auto& w : wanted)
            if (w == k || w == "all") return true;
        return false;
    };
    std::vector<RelationReport> out;
    auto push = [&](const std::string& name, const SweepResult& r) {
        out.push_back({name, r.pass, r.cases, r.witness});
    };
    if (has("heisenberg"))
        push("heisenberg", heisenberg_sweep(fs, opt.max_weight, opt.max_level, opt.jobs));
    if (has("vir_and_q")) push("vir_and_q", vir_and_q_sweep(fs, opt.max_weight, opt.max_level));
    if (has("virasoro")) push("virasoro", virasoro_sweep(fs, opt.max_weight, opt.max_level));
    if (has("euler")) push("euler", euler_sweep(fs, opt.max_level));
    if (has("lehn")) {
        Element k = opt.k_class.owner ? opt.k_class : fs.algebra().zero_element();
        push("lehn", lehn_sweep(fs, opt.max_weight, opt.max_level, k));
    }
    if (out.empty()) throw Error(ErrorCode::BAD_INPUT, "no known checks in '" + kinds + "'");
    return out;
}

} // namespace hilbfrob
