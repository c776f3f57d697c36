#include "hilbfrob/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace hilbfrob {

namespace {

uint64_t mult_key(int32_t a, int32_t b) {
    return (uint64_t(uint32_t(a)) << 32) | uint64_t(uint32_t(b));
}

const SparseVec kEmpty{};

using DenseMatrix = std::vector<std::vector<Rational>>;

// Returns the inverse, or nullopt if singular.
std::optional<DenseMatrix> invert(DenseMatrix m) {
    const size_t n = m.size();
    DenseMatrix inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

void tensor2_add(std::map<std::pair<int32_t, int32_t>, Rational>& acc, int32_t a, int32_t b,
                 const Rational& c) {
    auto& slot = acc[{a, b}];
    slot += c;
    if (slot.is_zero()) acc.erase({a, b});
}

Tensor2 tensor2_from_map(const std::map<std::pair<int32_t, int32_t>, Rational>& acc) {
    Tensor2 out;
    out.reserve(acc.size());
    for (const auto& [k, v] : acc) out.push_back({k.first, k.second, v});
    return out;
}

} // namespace

Presentation::Presentation(const Presentation& o)
    : degree_d(o.degree_d),
      group(o.group),
      basis(o.basis),
      unit(o.unit),
      integral(o.integral),
      diagonal(o.diagonal),
      hopf(o.hopf),
      name(o.name),
      note(o.note),
      finalized_(o.finalized_),
      validated_(o.validated_),
      index_(o.index_),
      mult_(o.mult_),
      by_weight_(o.by_weight_),
      caches_(std::make_unique<Caches>()) {}

Presentation& Presentation::operator=(const Presentation& o) {
    if (this != &o) {
        degree_d = o.degree_d;
        group = o.group;
        basis = o.basis;
        unit = o.unit;
        integral = o.integral;
        diagonal = o.diagonal;
        hopf = o.hopf;
        name = o.name;
        note = o.note;
        finalized_ = o.finalized_;
        validated_ = o.validated_;
        index_ = o.index_;
        mult_ = o.mult_;
        by_weight_ = o.by_weight_;
        caches_ = std::make_unique<Caches>();
    }
    return *this;
}

void Presentation::set_mult(int32_t a, int32_t b, int32_t out, const Rational& c) {
    auto& vec = mult_[mult_key(a, b)];
    sparse_add_term(vec, out, c);
    if (vec.empty()) mult_.erase(mult_key(a, b));
}

void Presentation::set_mult_sym(int32_t a, int32_t b, int32_t out, const Rational& c) {
    set_mult(a, b, out, c);
    if (a != b) {
        Rational cc = (odd(a) && odd(b)) ? -c : c;
        set_mult(b, a, out, cc);
    }
}

int Presentation::index_of(const std::string& id) const {
    require_finalized();
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorCode::BAD_INPUT, "unknown basis id '" + id + "'");
    return it->second;
}

const SparseVec& Presentation::mult_basis(int32_t a, int32_t b) const {
    auto it = mult_.find(mult_key(a, b));
    return it == mult_.end() ? kEmpty : it->second;
}

void Presentation::finalize() {
    index_.clear();
    by_weight_.clear();
    caches_ = std::make_unique<Caches>();
    for (int32_t i = 0; i < dim(); ++i) {
        if (!index_.emplace(basis[i].id, i).second)
            throw Error(ErrorCode::BAD_INPUT, "duplicate basis id '" + basis[i].id + "'");
        if (basis[i].weight.coords.size() != group.moduli().size())
            throw Error(ErrorCode::BAD_INPUT, "weight arity mismatch for '" + basis[i].id + "'");
        by_weight_[basis[i].weight].push_back(i);
    }
    finalized_ = true;
    validated_ = false;
}

void Presentation::require_finalized() const {
    if (!finalized_) throw Error(ErrorCode::BAD_INPUT, "presentation not finalized");
}

const std::vector<int32_t>& Presentation::basis_of_weight(const Weight& w) const {
    require_finalized();
    static const std::vector<int32_t> empty;
    auto it = by_weight_.find(w);
    return it == by_weight_.end() ? empty : it->second;
}

std::vector<Weight> Presentation::weights_present() const {
    require_finalized();
    std::vector<Weight> out;
    for (const auto& [w, _] : by_weight_) out.push_back(w);
    return out;
}

Element Presentation::element_of(const std::string& id) const {
    return Element{this, {{index_of(id), Rational(1)}}};
}

Element Presentation::multiply(const Element& a, const Element& b) const {
    if (a.owner != this || b.owner != this)
        throw Error(ErrorCode::OWNER_MISMATCH, "elements belong to different presentations");
    Element out = zero_element();
    for (const auto& [i, ci] : a.coords)
        for (const auto& [j, cj] : b.coords) sparse_axpy(out.coords, mult_basis(i, j), ci * cj);
    return out;
}

Rational Presentation::integral_of(const Element& a) const {
    if (!integral) throw Error(ErrorCode::NO_INTEGRAL, "presentation has no integral");
    Rational r;
    for (const auto& [i, c] : a.coords) {
        if (const Rational* v = sparse_find(*integral, i)) r += c * *v;
    }
    return r;
}

Rational Presentation::pair(const Element& a, const Element& b) const {
    return integral_of(multiply(a, b));
}

Tensor2 Presentation::diagonal_full(const Element& x) const {
    if (!diagonal) throw Error(ErrorCode::NO_DIAGONAL, "presentation has no diagonal");
    std::map<std::pair<int32_t, int32_t>, Rational> acc;
    for (const auto& [i, c] : x.coords) {
        auto it = diagonal->find(i);
        if (it == diagonal->end()) continue;
        for (const auto& t : it->second) tensor2_add(acc, t.a, t.b, c * t.coeff);
    }
    return tensor2_from_map(acc);
}

Tensor2 Presentation::diagonal_component(const Element& x, const Weight& L, const Weight& M) const {
    auto wx = homogeneous_weight(x);
    if (!wx || *wx != group.add(L, M))
        throw Error(ErrorCode::WEIGHT_MISMATCH, "element weight is not L+M");
    Tensor2 out;
    for (const auto& t : diagonal_full(x))
        if (basis[t.a].weight == L && basis[t.b].weight == M) out.push_back(t);
    return out;
}

Tensor2 Presentation::dual_basis(const Weight& w) const {
    require_finalized();
    {
        std::lock_guard<std::mutex> lk(caches_->mutex);
        auto it = caches_->dual.find(w);
        if (it != caches_->dual.end()) return it->second;
    }
    if (!integral) throw Error(ErrorCode::NO_INTEGRAL, "dual basis needs an integral");
    const auto& bw = basis_of_weight(w);
    const auto& bnw = basis_of_weight(group.neg(w));
    if (bw.size() != bnw.size())
        throw Error(ErrorCode::DEGENERATE_PAIRING,
                    "weight blocks (" + w.str() + ", -" + w.str() + ") have different dimensions");
    const size_t n = bw.size();
    DenseMatrix gram(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            gram[i][j] = pair(element_of(basis[bnw[i]].id), element_of(basis[bw[j]].id));
    auto inv = invert(gram);
    if (!inv)
        throw Error(ErrorCode::DEGENERATE_PAIRING, "pairing block at weight " + w.str() + " is singular");
    // T = sum_j b_j (x) sum_k inv[j][k] c_k satisfies sum_j <a, b_j> t_j = a.
    Tensor2 out;
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
            if (!(*inv)[j][k].is_zero()) out.push_back({bw[j], bnw[k], (*inv)[j][k]});
    std::lock_guard<std::mutex> lk(caches_->mutex);
    caches_->dual[w] = out;
    return out;
}

Element Presentation::euler_class() const {
    if (!diagonal) throw Error(ErrorCode::NO_DIAGONAL, "euler class needs a diagonal");
    Weight z = group.zero();
    Element one = unit_element();
    Element e = zero_element();
    for (const auto& t : diagonal_component(one, z, z)) {
        sparse_axpy(e.coords, mult_basis(t.a, t.b), t.coeff);
    }
    return e;
}

Element Presentation::euler_power(int k) const {
    Element e = euler_class();
    std::lock_guard<std::mutex> lk(caches_->mutex);
    auto& powers = caches_->euler_powers;
    if (powers.empty()) powers.push_back(unit_element());
    while (static_cast<int>(powers.size()) <= k) powers.push_back(multiply(powers.back(), e));
    return powers[k];
}

std::optional<int> Presentation::homogeneous_degree(const Element& x) const {
    std::optional<int> d;
    for (const auto& [i, c] : x.coords) {
        if (!d) d = basis[i].degree;
        else if (*d != basis[i].degree) return std::nullopt;
    }
    if (!d) d = 0;
    return d;
}

std::optional<Weight> Presentation::homogeneous_weight(const Element& x) const {
    std::optional<Weight> w;
    for (const auto& [i, c] : x.coords) {
        if (!w) w = basis[i].weight;
        else if (*w != basis[i].weight) return std::nullopt;
    }
    if (!w) w = group.zero();
    return w;
}

const std::vector<std::pair<int32_t, Rational>>& Presentation::pairing_partners(int32_t s) const {
    std::lock_guard<std::mutex> lk(caches_->mutex);
    if (!caches_->pairing_built) {
        caches_->pairing.assign(dim(), {});
        if (integral) {
            for (int32_t i = 0; i < dim(); ++i) {
                const Weight nw = group.neg(basis[i].weight);
                for (int32_t j : basis_of_weight(nw)) {
                    Rational v = pair(element_of(basis[i].id), element_of(basis[j].id));
                    if (!v.is_zero()) caches_->pairing[i].push_back({j, v});
                }
            }
        }
        caches_->pairing_built = true;
    }
    return caches_->pairing[s];
}

Presentation Presentation::derive_diagonal_from_integral() const {
    require_finalized();
    if (!integral) throw Error(ErrorCode::NO_INTEGRAL, "derive_diagonal needs an integral");
    Presentation out = *this;
    std::unordered_map<int32_t, Tensor2> diag;
    for (int32_t x = 0; x < dim(); ++x) {
        std::map<std::pair<int32_t, int32_t>, Rational> acc;
        Element ex = element_of(basis[x].id);
        for (const Weight& m : weights_present()) {
            // Delta_{L,M}(x) = sum (x * e1) (x) e2 over the dual tensor at -M.
            Tensor2 t = dual_basis(group.neg(m));
            for (const auto& term : t) {
                Element xa = multiply(ex, element_of(basis[term.a].id));
                for (const auto& [u, cu] : xa.coords) tensor2_add(acc, u, term.b, cu * term.coeff);
            }
        }
        Tensor2 v = tensor2_from_map(acc);
        if (!v.empty()) diag[x] = std::move(v);
    }
    out.diagonal = std::move(diag);
    out.finalize();
    return out;
}

Presentation Presentation::with_trivial_weighting(const WeightGroup& g) const {
    Presentation out = *this;
    out.group = g;
    for (auto& b : out.basis) b.weight = g.zero();
    out.finalize();
    return out;
}

std::string Presentation::describe(const Element& x) const {
    if (x.coords.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x.coords) {
        if (!first) os << " + ";
        if (!c.is_one()) os << c.str() << "*";
        os << basis[i].id;
        first = false;
    }
    return os.str();
}

Element add(const Element& a, const Element& b) {
    if (a.owner != b.owner) throw Error(ErrorCode::OWNER_MISMATCH, "add: different owners");
    Element out = a;
    sparse_axpy(out.coords, b.coords, Rational(1));
    return out;
}

Element sub(const Element& a, const Element& b) {
    if (a.owner != b.owner) throw Error(ErrorCode::OWNER_MISMATCH, "sub: different owners");
    Element out = a;
    sparse_axpy(out.coords, b.coords, Rational(-1));
    return out;
}

Element scale(const Rational& c, Element a) {
    sparse_scale(a.coords, c);
    return a;
}

namespace {

struct Validator {
    Presentation& p;
    ValidationReport rep;

    void check(const std::string& axiom, bool pass, const std::string& witness) {
        rep.checks.push_back({axiom, pass, pass ? "" : witness});
    }

    // Finds the first violation, if any, and records the check.
    template <typename F>
    void scan(const std::string& axiom, F&& f) {
        std::string witness;
        bool ok = f(witness);
        check(axiom, ok, witness);
    }

    std::string pair_witness(int32_t a, int32_t b) {
        return p.basis[a].id + ", " + p.basis[b].id;
    }

    bool tensors_equal(const Tensor2& x, const Tensor2& y) {
        std::map<std::pair<int32_t, int32_t>, Rational> acc;
        for (const auto& t : x) tensor2_add(acc, t.a, t.b, t.coeff);
        for (const auto& t : y) tensor2_add(acc, t.a, t.b, -t.coeff);
        return acc.empty();
    }

    void run_structure() {
        scan("unit-degree-weight", [&](std::string& w) {
            if (p.unit.empty()) {
                w = "unit is zero";
                return false;
            }
            for (const auto& [i, c] : p.unit) {
                if (p.basis[i].degree != -p.degree_d || !p.basis[i].weight.is_zero()) {
                    w = "unit coordinate on " + p.basis[i].id;
                    return false;
                }
            }
            return true;
        });
        scan("degree-additivity", [&](std::string& w) {
            for (int32_t a = 0; a < p.dim(); ++a)
                for (int32_t b = 0; b < p.dim(); ++b)
                    for (const auto& [x, c] : p.mult_basis(a, b))
                        if (p.basis[x].degree != p.basis[a].degree + p.basis[b].degree + p.degree_d) {
                            w = pair_witness(a, b) + " -> " + p.basis[x].id;
                            return false;
                        }
            return true;
        });
        scan("weight-additivity", [&](std::string& w) {
            for (int32_t a = 0; a < p.dim(); ++a)
                for (int32_t b = 0; b < p.dim(); ++b)
                    for (const auto& [x, c] : p.mult_basis(a, b))
                        if (p.basis[x].weight !=
                            p.group.add(p.basis[a].weight, p.basis[b].weight)) {
                            w = pair_witness(a, b) + " -> " + p.basis[x].id;
                            return false;
                        }
            return true;
        });
        scan("unit-neutral", [&](std::string& w) {
            Element one = p.unit_element();
            for (int32_t b = 0; b < p.dim(); ++b) {
                Element eb = p.element(SparseVec{{b, Rational(1)}});
                if (p.multiply(one, eb).coords != eb.coords ||
                    p.multiply(eb, one).coords != eb.coords) {
                    w = p.basis[b].id;
                    return false;
                }
            }
            return true;
        });
        scan("koszul-commutativity", [&](std::string& w) {
            for (int32_t a = 0; a < p.dim(); ++a)
                for (int32_t b = a; b < p.dim(); ++b) {
                    SparseVec rhs = p.mult_basis(b, a);
                    if (p.odd(a) && p.odd(b)) sparse_scale(rhs, Rational(-1));
                    if (p.mult_basis(a, b) != rhs) {
                        w = pair_witness(a, b);
                        return false;
                    }
                }
            return true;
        });
        scan("associativity", [&](std::string& w) {
            for (int32_t a = 0; a < p.dim(); ++a)
                for (int32_t b = 0; b < p.dim(); ++b) {
                    Element ea = p.element(SparseVec{{a, Rational(1)}});
                    Element eb = p.element(SparseVec{{b, Rational(1)}});
                    Element ab = p.multiply(ea, eb);
                    for (int32_t c = 0; c < p.dim(); ++c) {
                        Element ec = p.element(SparseVec{{c, Rational(1)}});
                        Element lhs = p.multiply(ab, ec);
                        Element rhs = p.multiply(ea, p.multiply(eb, ec));
                        if (lhs.coords != rhs.coords) {
                            w = p.basis[a].id + ", " + p.basis[b].id + ", " + p.basis[c].id;
                            return false;
                        }
                    }
                }
            return true;
        });
    }

    void run_integral() {
        scan("integral-support", [&](std::string& w) {
            for (const auto& [i, c] : *p.integral)
                if (p.basis[i].degree != p.degree_d || !p.basis[i].weight.is_zero()) {
                    w = p.basis[i].id;
                    return false;
                }
            return true;
        });
        scan("perfect-pairing", [&](std::string& w) {
            for (const Weight& wt : p.weights_present()) {
                try {
                    p.dual_basis(wt);
                } catch (const Error&) {
                    w = "weight " + wt.str();
                    return false;
                }
            }
            return true;
        });
    }

    void run_coalgebra(const std::unordered_map<int32_t, Tensor2>& delta, int op_degree,
                       const std::string& prefix) {
        scan(prefix + "-degree-weight", [&](std::string& w) {
            for (const auto& [x, terms] : delta)
                for (const auto& t : terms) {
                    if (p.basis[t.a].degree + p.basis[t.b].degree !=
                        p.basis[x].degree + op_degree) {
                        w = p.basis[x].id;
                        return false;
                    }
                    if (p.group.add(p.basis[t.a].weight, p.basis[t.b].weight) != p.basis[x].weight) {
                        w = p.basis[x].id;
                        return false;
                    }
                }
            return true;
        });
        auto delta_of = [&](int32_t x) -> const Tensor2& {
            static const Tensor2 empty;
            auto it = delta.find(x);
            return it == delta.end() ? empty : it->second;
        };
        scan(prefix + "-coassociativity", [&](std::string& w) {
            for (int32_t x = 0; x < p.dim(); ++x) {
                std::map<std::tuple<int32_t, int32_t, int32_t>, Rational> l, r;
                for (const auto& t : delta_of(x)) {
                    for (const auto& u : delta_of(t.a)) {
                        auto& s = l[{u.a, u.b, t.b}];
                        s += t.coeff * u.coeff;
                        if (s.is_zero()) l.erase({u.a, u.b, t.b});
                    }
                    for (const auto& u : delta_of(t.b)) {
                        auto& s = r[{t.a, u.a, u.b}];
                        s += t.coeff * u.coeff;
                        if (s.is_zero()) r.erase({t.a, u.a, u.b});
                    }
                }
                if (l != r) {
                    w = p.basis[x].id;
                    return false;
                }
            }
            return true;
        });
        scan(prefix + "-cocommutativity", [&](std::string& w) {
            for (int32_t x = 0; x < p.dim(); ++x) {
                Tensor2 flip;
                for (const auto& t : delta_of(x)) {
                    Rational c = t.coeff;
                    if (p.odd(t.a) && p.odd(t.b)) c = -c;
                    flip.push_back({t.b, t.a, c});
                }
                if (!tensors_equal(delta_of(x), flip)) {
                    w = p.basis[x].id;
                    return false;
                }
            }
            return true;
        });
    }

    void run_diagonal() {
        run_coalgebra(*p.diagonal, p.degree_d, "diagonal");
        scan("diagonal-module-property", [&](std::string& w) {
            for (int32_t x = 0; x < p.dim(); ++x)
                for (int32_t y = 0; y < p.dim(); ++y) {
                    Element ex = p.element(SparseVec{{x, Rational(1)}});
                    Element ey = p.element(SparseVec{{y, Rational(1)}});
                    Tensor2 lhs = p.diagonal_full(p.multiply(ex, ey));
                    std::map<std::pair<int32_t, int32_t>, Rational> acc;
                    for (const auto& t : p.diagonal_full(ey)) {
                        Element xa = p.multiply(ex, p.element(SparseVec{{t.a, Rational(1)}}));
                        for (const auto& [u, cu] : xa.coords) tensor2_add(acc, u, t.b, cu * t.coeff);
                    }
                    if (!tensors_equal(lhs, tensor2_from_map(acc))) {
                        w = pair_witness(x, y);
                        return false;
                    }
                }
            return true;
        });
    }

    void run_hopf() {
        run_coalgebra(p.hopf->delta, -p.degree_d, "hopf-delta");
        auto eps = [&](const Element& x) {
            Rational r;
            for (const auto& [i, c] : x.coords)
                if (const Rational* v = sparse_find(p.hopf->epsilon, i)) r += c * *v;
            return r;
        };
        auto delta_elem = [&](const Element& x) {
            std::map<std::pair<int32_t, int32_t>, Rational> acc;
            for (const auto& [i, c] : x.coords) {
                auto it = p.hopf->delta.find(i);
                if (it == p.hopf->delta.end()) continue;
                for (const auto& t : it->second) tensor2_add(acc, t.a, t.b, c * t.coeff);
            }
            return acc;
        };
        scan("hopf-counit", [&](std::string& w) {
            for (int32_t x = 0; x < p.dim(); ++x) {
                Element ex = p.element(SparseVec{{x, Rational(1)}});
                SparseVec left, right;
                for (const auto& [k, c] : delta_elem(ex)) {
                    Element ea = p.element(SparseVec{{k.first, Rational(1)}});
                    Element eb = p.element(SparseVec{{k.second, Rational(1)}});
                    sparse_add_term(left, k.second, c * eps(ea));
                    sparse_add_term(right, k.first, c * eps(eb));
                }
                if (left != ex.coords || right != ex.coords) {
                    w = p.basis[x].id;
                    return false;
                }
            }
            return true;
        });
        scan("hopf-delta-multiplicative", [&](std::string& w) {
            // delta(1) = 1 (x) 1
            std::map<std::pair<int32_t, int32_t>, Rational> one;
            for (const auto& [i, ci] : p.unit)
                for (const auto& [j, cj] : p.unit) tensor2_add(one, i, j, ci * cj);
            if (delta_elem(p.unit_element()) != one) {
                w = "unit";
                return false;
            }
            for (int32_t x = 0; x < p.dim(); ++x)
                for (int32_t y = 0; y < p.dim(); ++y) {
                    Element ex = p.element(SparseVec{{x, Rational(1)}});
                    Element ey = p.element(SparseVec{{y, Rational(1)}});
                    auto lhs = delta_elem(p.multiply(ex, ey));
                    std::map<std::pair<int32_t, int32_t>, Rational> rhs;
                    auto dx = delta_elem(ex);
                    auto dy = delta_elem(ey);
                    for (const auto& [ka, ca] : dx)
                        for (const auto& [kb, cb] : dy) {
                            // (a (x) b)(a' (x) b') = +/- aa' (x) bb'
                            Rational c = ca * cb;
                            if (p.odd(ka.second) && p.odd(kb.first)) c = -c;
                            for (const auto& [u, cu] : p.mult_basis(ka.first, kb.first))
                                for (const auto& [v, cv] : p.mult_basis(ka.second, kb.second))
                                    tensor2_add(rhs, u, v, c * cu * cv);
                        }
                    if (lhs != rhs) {
                        w = pair_witness(x, y);
                        return false;
                    }
                }
            return true;
        });
        scan("hopf-epsilon-multiplicative", [&](std::string& w) {
            if (eps(p.unit_element()) != Rational(1)) {
                w = "unit";
                return false;
            }
            for (int32_t x = 0; x < p.dim(); ++x)
                for (int32_t y = 0; y < p.dim(); ++y) {
                    Element ex = p.element(SparseVec{{x, Rational(1)}});
                    Element ey = p.element(SparseVec{{y, Rational(1)}});
                    if (eps(p.multiply(ex, ey)) != eps(ex) * eps(ey)) {
                        w = pair_witness(x, y);
                        return false;
                    }
                }
            return true;
        });
    }
};

} // namespace

ValidationReport validate(Presentation& pres) {
    if (!pres.finalized()) pres.finalize();
    Validator v{pres, {}};
    v.run_structure();
    if (pres.integral) v.run_integral();
    if (pres.diagonal) v.run_diagonal();
    if (pres.hopf) v.run_hopf();
    pres.validated_ = v.rep.usable();
    return v.rep;
}

void validate_or_throw(Presentation& pres) {
    ValidationReport rep = validate(pres);
    if (const CheckResult* f = rep.first_failure())
        throw Error(ErrorCode::REJECTED, f->axiom + " (witness: " + f->witness + ")");
}

} // namespace hilbfrob
