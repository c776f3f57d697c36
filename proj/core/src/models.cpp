#include "hilbfrob/models.hpp"

#include <map>
#include <mutex>

#include "hilbfrob/errors.hpp"

namespace hilbfrob {
namespace models {

namespace {

Presentation make_toy_sphere() {
    Presentation p;
    p.name = "toy-sphere";
    p.note = "two-class model: 1 in degree -2, point class p in degree 2, int p = 1";
    p.degree_d = 2;
    p.group = WeightGroup::integers_mod_period(1);
    p.basis = {
        {"1", -2, p.group.zero(), {{-1, -1}}},
        {"p", 2, p.group.zero(), {{1, 1}}},
    };
    p.finalize();
    int one = 0, pt = 1;
    p.unit = {{one, Rational(1)}};
    p.set_mult_sym(one, one, one, Rational(1));
    p.set_mult_sym(one, pt, pt, Rational(1));
    p.integral = SparseVec{{pt, Rational(1)}};
    p.finalize();
    return p.derive_diagonal_from_integral();
}

Presentation make_point() {
    Presentation p;
    p.name = "point";
    p.note = "one-dimensional algebra of degree 0; Fock weight spaces count partitions";
    p.degree_d = 0;
    p.group = WeightGroup::integers_mod_period(1);
    p.basis = {{"1", 0, p.group.zero(), {{0, 0}}}};
    p.finalize();
    p.unit = {{0, Rational(1)}};
    p.set_mult(0, 0, 0, Rational(1));
    p.integral = SparseVec{{0, Rational(1)}};
    p.finalize();
    return p.derive_diagonal_from_integral();
}

Presentation make_k3() {
    Presentation p;
    p.name = "k3";
    p.note =
        "24-dimensional model with identity intersection form on t1..t22; bidegrees track the "
        "K3 Hodge diamond and are generating-function metadata only (t1*t1 = v is not "
        "bidegree-additive)";
    p.degree_d = 2;
    p.group = WeightGroup::integers_mod_period(1);
    Weight z = p.group.zero();
    p.basis.push_back({"1", -2, z, {{-1, -1}}});
    for (int i = 1; i <= 22; ++i) {
        std::pair<int, int> bide{0, 0};
        if (i == 1) bide = {1, -1};
        if (i == 22) bide = {-1, 1};
        p.basis.push_back({"t" + std::to_string(i), 0, z, bide});
    }
    p.basis.push_back({"v", 2, z, {{1, 1}}});
    p.finalize();
    int one = p.index_of("1"), v = p.index_of("v");
    p.unit = {{one, Rational(1)}};
    for (int32_t b = 0; b < p.dim(); ++b) {
        if (b != one) p.set_mult_sym(one, b, b, Rational(1));
    }
    p.set_mult(one, one, one, Rational(1));
    for (int i = 1; i <= 22; ++i) {
        int ti = p.index_of("t" + std::to_string(i));
        p.set_mult(ti, ti, v, Rational(1));
    }
    p.integral = SparseVec{{v, Rational(1)}};
    p.finalize();
    return p.derive_diagonal_from_integral();
}

// Subsets of {1..4} in (size, lex) order give the exterior-algebra basis.
std::string subset_id(unsigned mask) {
    if (mask == 0) return "1";
    std::string s = "a";
    for (int i = 0; i < 4; ++i)
        if (mask & (1u << i)) s += std::to_string(i + 1);
    return s;
}

int shuffle_sign(unsigned s, unsigned t) {
    // (-1)^{#{(i,j): i in s, j in t, i > j}}
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        if (s & (1u << i))
            for (int j = 0; j < i; ++j)
                if (t & (1u << j)) ++inv;
    return (inv & 1) ? -1 : 1;
}

Presentation make_abelian() {
    Presentation p;
    p.name = "abelian";
    p.note =
        "exterior algebra on four odd generators a1..a4 (degree -1); Hopf structure with "
        "primitive generators; trivially weighted, re-weightable over (Z/n)^4 for the Kummer "
        "build";
    p.degree_d = 2;
    p.group = WeightGroup::integers_mod_period(1);
    Weight z = p.group.zero();
    std::vector<unsigned> masks;
    for (unsigned size = 0; size <= 4; ++size)
        for (unsigned m = 0; m < 16; ++m)
            if (__builtin_popcount(m) == static_cast<int>(size)) masks.push_back(m);
    for (unsigned m : masks) {
        int deg = __builtin_popcount(m) - 2;
        int pu = __builtin_popcount(m & 0b0011); // a1, a2 are (1,0)-classes
        int qu = __builtin_popcount(m & 0b1100); // a3, a4 are (0,1)-classes
        p.basis.push_back({subset_id(m), deg, z, {{pu - 1, qu - 1}}});
    }
    p.finalize();
    std::map<unsigned, int32_t> idx;
    for (unsigned m : masks) idx[m] = p.index_of(subset_id(m));
    p.unit = {{idx[0], Rational(1)}};
    for (unsigned s : masks)
        for (unsigned t : masks) {
            if (s & t) continue;
            p.set_mult(idx[s], idx[t], idx[s | t], Rational(shuffle_sign(s, t)));
        }
    p.integral = SparseVec{{idx[0b1111], Rational(1)}};
    p.finalize();
    Presentation q = p.derive_diagonal_from_integral();

    // Hopf data: generators are primitive, delta extends as an algebra map.
    HopfData h;
    h.epsilon = {{q.index_of("1"), Rational(1)}};
    for (unsigned m : masks) {
        // delta(a_m) = prod_{i in m} (a_i (x) 1 + 1 (x) a_i), in increasing i.
        std::map<std::pair<int32_t, int32_t>, Rational> acc;
        acc[{idx[0], idx[0]}] = Rational(1);
        for (int i = 0; i < 4; ++i) {
            if (!(m & (1u << i))) continue;
            unsigned gen = 1u << i;
            std::map<std::pair<int32_t, int32_t>, Rational> next;
            for (const auto& [key, c] : acc) {
                // (A (x) B) * (a_i (x) 1): sign (-1)^{|B|}
                unsigned A = 0, B = 0;
                for (unsigned mm : masks) {
                    if (idx[mm] == key.first) A = mm;
                    if (idx[mm] == key.second) B = mm;
                }
                if (!(A & gen)) {
                    int sgn = shuffle_sign(A, gen) * ((__builtin_popcount(B) & 1) ? -1 : 1);
                    auto& slot = next[{idx[A | gen], key.second}];
                    slot += c * Rational(sgn);
                    if (slot.is_zero()) next.erase({idx[A | gen], key.second});
                }
                if (!(B & gen)) {
                    int sgn = shuffle_sign(B, gen);
                    auto& slot = next[{key.first, idx[B | gen]}];
                    slot += c * Rational(sgn);
                    if (slot.is_zero()) next.erase({key.first, idx[B | gen]});
                }
            }
            acc = std::move(next);
        }
        Tensor2 terms;
        for (const auto& [key, c] : acc) terms.push_back({key.first, key.second, c});
        if (!terms.empty()) h.delta[idx[m]] = std::move(terms);
    }
    q.hopf = std::move(h);
    q.finalize();
    return q;
}

Presentation make_enriques() {
    Presentation p;
    p.name = "enriques-z2";
    p.note =
        "Z/2-weighted model of an Enriques surface with its order-2 local system: weight 0 "
        "carries the untwisted diamond (1,10,1), weight L the twisted row (1,10,1) in middle "
        "degree. Identity pairings; bidegrees of u1/u12 are generating-function metadata only";
    p.degree_d = 2;
    p.group = WeightGroup::finite_abelian({2});
    Weight w0 = p.group.zero();
    Weight wL = p.group.reduce({1});
    p.basis.push_back({"1", -2, w0, {{-1, -1}}});
    for (int i = 1; i <= 10; ++i) p.basis.push_back({"t" + std::to_string(i), 0, w0, {{0, 0}}});
    p.basis.push_back({"v", 2, w0, {{1, 1}}});
    for (int a = 1; a <= 12; ++a) {
        std::pair<int, int> bide{0, 0};
        if (a == 1) bide = {1, -1};
        if (a == 12) bide = {-1, 1};
        p.basis.push_back({"u" + std::to_string(a), 0, wL, bide});
    }
    p.finalize();
    int one = p.index_of("1"), v = p.index_of("v");
    p.unit = {{one, Rational(1)}};
    p.set_mult(one, one, one, Rational(1));
    for (int32_t b = 0; b < p.dim(); ++b)
        if (b != one) p.set_mult_sym(one, b, b, Rational(1));
    for (int i = 1; i <= 10; ++i) {
        int ti = p.index_of("t" + std::to_string(i));
        p.set_mult(ti, ti, v, Rational(1));
    }
    for (int a = 1; a <= 12; ++a) {
        int ua = p.index_of("u" + std::to_string(a));
        p.set_mult(ua, ua, v, Rational(1));
    }
    p.integral = SparseVec{{v, Rational(1)}};
    p.finalize();
    return p.derive_diagonal_from_integral();
}

std::map<std::string, ModelEntry> build_catalog() {
    std::map<std::string, ModelEntry> cat;
    auto put = [&](Presentation pres) {
        validate_or_throw(pres);
        std::string key = pres.name;
        std::string doc = pres.note;
        cat.emplace(std::move(key), ModelEntry{std::move(pres), std::move(doc)});
    };
    put(make_toy_sphere());
    put(make_point());
    put(make_k3());
    put(make_abelian());
    put(make_enriques());
    return cat;
}

const std::map<std::string, ModelEntry>& catalog() {
    static const std::map<std::string, ModelEntry> cat = build_catalog();
    return cat;
}

} // namespace

const ModelEntry& model(const std::string& name) {
    const auto& cat = catalog();
    auto it = cat.find(name);
    if (it == cat.end()) throw Error(ErrorCode::UNKNOWN_MODEL, "no model named '" + name + "'");
    return it->second;
}

std::vector<std::string> model_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : catalog()) names.push_back(k);
    return names;
}

Presentation abelian_with_torsion_weights(int n) {
    Presentation p =
        model("abelian").pres.with_trivial_weighting(WeightGroup::finite_abelian({n, n, n, n}));
    validate_or_throw(p);
    return p;
}

Presentation variant_toy() {
    Presentation p;
    p.name = "variant-toy";
    p.note = "toy sphere with a middle class t (t*t = p); carries a nonzero canonical class";
    p.degree_d = 2;
    p.group = WeightGroup::integers_mod_period(1);
    Weight z = p.group.zero();
    p.basis = {
        {"1", -2, z, {{-1, -1}}},
        {"t", 0, z, {{0, 0}}},
        {"p", 2, z, {{1, 1}}},
    };
    p.finalize();
    int one = 0, t = 1, pt = 2;
    p.unit = {{one, Rational(1)}};
    p.set_mult(one, one, one, Rational(1));
    p.set_mult_sym(one, t, t, Rational(1));
    p.set_mult_sym(one, pt, pt, Rational(1));
    p.set_mult(t, t, pt, Rational(1));
    p.integral = SparseVec{{pt, Rational(1)}};
    p.finalize();
    Presentation q = p.derive_diagonal_from_integral();
    validate_or_throw(q);
    return q;
}

} // namespace models
} // namespace hilbfrob
