#include "hilbfrob/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "hilbfrob/fock.hpp"
#include "hilbfrob/hilbert_algebra.hpp"
#include "hilbfrob/kummer.hpp"
#include "hilbfrob/models.hpp"
#include "hilbfrob/series.hpp"

namespace hilbfrob {

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome ok(const std::string& detail) { return {true, detail}; }
Outcome fail(const std::string& detail) { return {false, detail}; }

Outcome criterion_axioms() {
    for (const auto& name : models::model_names()) {
        Presentation p = models::model(name).pres;
        ValidationReport rep = validate(p);
        if (const CheckResult* f = rep.first_failure())
            return fail(name + ": " + f->axiom + " (" + f->witness + ")");
    }
    return ok("all catalog models validate");
}

Outcome criterion_heisenberg(int jobs) {
    long long cases = 0;
    for (const char* name : {"toy-sphere", "abelian"}) {
        FockSpace fs(models::model(name).pres);
        CommutatorCheckOptions opt;
        opt.max_weight = 6;
        opt.max_level = 3;
        opt.jobs = jobs;
        auto reports = commutator_check(fs, "heisenberg", opt);
        if (!reports[0].pass) return fail(std::string(name) + ": " + reports[0].witness);
        cases += reports[0].cases;
    }
    return ok(std::to_string(cases) + " commutators checked exactly");
}

Outcome criterion_virasoro() {
    FockSpace fs(models::model("toy-sphere").pres);
    CommutatorCheckOptions opt;
    opt.max_weight = 5;
    opt.max_level = 3;
    auto reports = commutator_check(fs, "virasoro", opt);
    if (!reports[0].pass) return fail("toy-sphere: " + reports[0].witness);
    long long cases = reports[0].cases;
    // euler closed form on toy-sphere and k3, |n| <= 6
    for (const char* name : {"toy-sphere", "k3"}) {
        FockSpace efs(models::model(name).pres);
        CommutatorCheckOptions eopt;
        eopt.max_level = 6;
        auto er = commutator_check(efs, "euler", eopt);
        if (!er[0].pass) return fail(std::string(name) + ": " + er[0].witness);
        cases += er[0].cases;
    }
    return ok(std::to_string(cases) + " brackets and euler-form values checked");
}

Outcome criterion_boundary() {
    long long cases = 0;
    {
        FockSpace fs(models::model("toy-sphere").pres);
        CommutatorCheckOptions opt;
        opt.max_weight = 5;
        opt.max_level = 3;
        auto reports = commutator_check(fs, "lehn", opt);
        if (!reports[0].pass) return fail("toy-sphere (K = 0): " + reports[0].witness);
        cases += reports[0].cases;
    }
    {
        Presentation vt = models::variant_toy();
        FockSpace fs(vt);
        CommutatorCheckOptions opt;
        opt.max_weight = 5;
        opt.max_level = 3;
        opt.k_class = scale(Rational(2), vt.element_of("t"));
        auto reports = commutator_check(fs, "lehn", opt);
        if (!reports[0].pass) return fail("variant toy (K = 2t): " + reports[0].witness);
        cases += reports[0].cases;
    }
    return ok(std::to_string(cases) + " boundary relations checked");
}

Outcome criterion_dimension_triangle(long long budget) {
    struct Scale {
        const char* model;
        int max_n;
    };
    for (const Scale& s : {Scale{"k3", 3}, Scale{"toy-sphere", 5}}) {
        const Presentation& H = models::model(s.model).pres;
        HodgeSeries series = hilbert_series(levels_for_twist(H, H.group.zero(), s.max_n), s.max_n);
        auto fock = fock_dimensions(H, H.group.zero(), s.max_n);
        for (int n = 0; n <= s.max_n; ++n) {
            HilbertAlgebra A = HilbertAlgebra::build(H, n, budget);
            std::map<int, long long> hdims;
            for (const auto& inv : A.invariants()) hdims[inv.degree]++;
            if (hdims != fock[n])
                return fail(std::string(s.model) + " n=" + std::to_string(n) +
                            ": H^[n] dims differ from fock dims");
            if (series.coeff[n].by_degree() != fock[n])
                return fail(std::string(s.model) + " n=" + std::to_string(n) +
                            ": series coefficient differs from fock dims");
        }
    }
    // b2(Hilb^2 K3) = 23: shifted degree -2 entry of the z^2 coefficient
    const Presentation& k3 = models::model("k3").pres;
    HodgeSeries s2 = hilbert_series(levels_for_twist(k3, k3.group.zero(), 2), 2);
    long long b2 = s2.coeff[2].by_degree().at(-2);
    if (b2 != 23) return fail("b2(Hilb^2 K3) = " + std::to_string(b2) + ", expected 23");
    return ok("H^[n] = fock = series per degree (k3 n<=3, toy n<=5); b2(Hilb^2 K3) = 23");
}

Outcome ring_axioms_all_triples(const HilbertAlgebra& A, const std::string& label) {
    const int d = A.dim();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const SparseVec& ij = A.product_invariant(i, j);
            // graded commutativity
            SparseVec ji = A.product_invariant(j, i);
            if ((A.invariants()[i].degree & 1) && (A.invariants()[j].degree & 1))
                sparse_scale(ji, Rational(-1));
            if (ij != ji)
                return fail(label + ": commutativity fails at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
            for (int k = 0; k < d; ++k) {
                SparseVec lhs = A.product_coords(ij, SparseVec{{k, Rational(1)}});
                SparseVec rhs =
                    A.product_coords(SparseVec{{i, Rational(1)}}, A.product_invariant(j, k));
                if (lhs != rhs)
                    return fail(label + ": associativity fails at (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    }
    return ok("");
}

Outcome ring_axioms_random_triples(const HilbertAlgebra& A, const std::string& label, int count,
                                   std::mt19937_64& rng) {
    const int d = A.dim();
    for (int t = 0; t < count; ++t) {
        int i = static_cast<int>(rng() % d);
        int j = static_cast<int>(rng() % d);
        int k = static_cast<int>(rng() % d);
        SparseVec lhs = A.product_coords(A.product_invariant(i, j), SparseVec{{k, Rational(1)}});
        SparseVec rhs =
            A.product_coords(SparseVec{{i, Rational(1)}}, A.product_invariant(j, k));
        if (lhs != rhs)
            return fail(label + ": associativity fails at (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
        SparseVec ij = A.product_invariant(i, j);
        SparseVec ji = A.product_invariant(j, i);
        if ((A.invariants()[i].degree & 1) && (A.invariants()[j].degree & 1))
            sparse_scale(ji, Rational(-1));
        if (ij != ji)
            return fail(label + ": commutativity fails at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    }
    return ok("");
}

Outcome unit_neutrality(const HilbertAlgebra& A, const std::string& label) {
    for (int j = 0; j < A.dim(); ++j) {
        SparseVec ej{{j, Rational(1)}};
        if (A.product_coords(A.unit_coords(), ej) != ej ||
            A.product_coords(ej, A.unit_coords()) != ej)
            return fail(label + ": unit not neutral at " + std::to_string(j));
    }
    return ok("");
}

Outcome criterion_ring_axioms(long long budget, unsigned long long seed) {
    long long triples = 0;
    for (int n = 0; n <= 3; ++n) {
        HilbertAlgebra A = HilbertAlgebra::build(models::model("toy-sphere").pres, n, budget);
        Outcome o = ring_axioms_all_triples(A, "toy n=" + std::to_string(n));
        if (!o.pass) return o;
        o = unit_neutrality(A, "toy n=" + std::to_string(n));
        if (!o.pass) return o;
        triples += static_cast<long long>(A.dim()) * A.dim() * A.dim();
    }
    {
        HilbertAlgebra A = HilbertAlgebra::build(models::model("enriques-z2").pres, 2, budget);
        Outcome o = ring_axioms_all_triples(A, "enriques n=2");
        if (!o.pass) return o;
        o = unit_neutrality(A, "enriques n=2");
        if (!o.pass) return o;
        triples += static_cast<long long>(A.dim()) * A.dim() * A.dim();
    }
    std::mt19937_64 rng(seed);
    {
        HilbertAlgebra A = HilbertAlgebra::build(models::model("k3").pres, 2, budget);
        Outcome o = ring_axioms_random_triples(A, "k3 n=2", 200, rng);
        if (!o.pass) return o;
        o = unit_neutrality(A, "k3 n=2");
        if (!o.pass) return o;
        triples += 200;
    }
    {
        HilbertAlgebra A = HilbertAlgebra::build(models::model("toy-sphere").pres, 4, budget);
        Outcome o = ring_axioms_random_triples(A, "toy n=4", 200, rng);
        if (!o.pass) return o;
        o = unit_neutrality(A, "toy n=4");
        if (!o.pass) return o;
        triples += 200;
    }
    return ok(std::to_string(triples) + " associativity triples, exact");
}

Outcome criterion_kummer(long long budget) {
    {
        Presentation H = models::abelian_with_torsion_weights(1);
        KummerAlgebra K = kummer_build(H, 1, budget);
        if (K.dim() != 1 || K.degrees[0] != -H.degree_d)
            return fail("K^[1] is not one-dimensional in degree -d");
    }
    {
        Presentation H = models::abelian_with_torsion_weights(2);
        KummerAlgebra K = kummer_build(H, 2, budget);
        std::vector<int> vec;
        auto dims = K.dims_by_degree();
        for (int d = -4; d <= 0; ++d) vec.push_back(dims.count(d) ? dims[d] : 0);
        if (K.dim() != 24 || vec != std::vector<int>{1, 0, 22, 0, 1}) {
            std::ostringstream os;
            os << "abelian n=2 dims: total " << K.dim() << ", profile";
            for (int v : vec) os << " " << v;
            return fail(os.str());
        }
        LerayReport rep = leray_dimension_check(H, 2, K);
        if (!rep.pass) return fail("leray identity fails at n=2");
    }
    {
        Presentation H = models::abelian_with_torsion_weights(3);
        KummerAlgebra K = kummer_build(H, 3, budget);
        LerayReport rep = leray_dimension_check(H, 3, K);
        for (const auto& row : rep.rows)
            if (row.fock_side != row.kummer_side)
                return fail("leray identity fails at n=3, degree " + std::to_string(row.degree) +
                            ": " + std::to_string(row.fock_side) + " vs " +
                            std::to_string(row.kummer_side));
    }
    return ok("K^[1] = Q; abelian n=2 dims (1,0,22,0,1), total 24; leray exact at n=2,3");
}

Outcome criterion_cy_covers() {
    const Presentation& H = models::model("enriques-z2").pres;
    HodgeSeries s = cover_series(H, 3);
    for (int n = 2; n <= 3; ++n) {
        for (int i = -n; i <= n; ++i) {
            long long v = 0;
            auto it = s.coeff[n].coeffs.find({i, -n});
            if (it != s.coeff[n].coeffs.end()) v = it->second;
            long long expect = (i == -n || i == n) ? 1 : 0;
            if (v != expect)
                return fail("cover z^" + std::to_string(n) + " entry (" + std::to_string(i) + "," +
                            std::to_string(-n) + ") = " + std::to_string(v) + ", expected " +
                            std::to_string(expect));
        }
    }
    return ok("(k,0)-corners are 1 at k in {0,2n}, 0 between, for n = 2,3");
}

Outcome criterion_twisted_levels() {
    const Presentation& H = models::model("enriques-z2").pres;
    Weight L = H.group.reduce({1});
    HodgePolynomial row = hodge_polynomial_of_weight(H, L);
    std::map<std::pair<int, int>, long long> expect{{{1, -1}, 1}, {{0, 0}, 10}, {{-1, 1}, 1}};
    if (row.coeffs != expect) return fail("weight-L Hodge row is not (1,10,1)");
    // the level data feeding criterion 8 is 2-periodic: odd levels twisted,
    // even levels untwisted
    LevelData levels = levels_for_twist(H, L, 4);
    if (!(levels[1] == row && levels[3] == row))
        return fail("odd levels do not carry the twisted row");
    HodgePolynomial diamond = hodge_polynomial_of_weight(H, H.group.zero());
    if (!(levels[2] == diamond && levels[4] == diamond))
        return fail("even levels do not carry the untwisted diamond");
    return ok("weight-L row (1,10,1); period-2 level data feeds the cover series");
}

} // namespace

bool run_selftest(const SelftestOptions& opt,
                  const std::function<void(const CriterionResult&)>& on_result) {
    struct Item {
        int number;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Item> items = {
        {1, "axioms: validate passes for all catalog models", [&] { return criterion_axioms(); }},
        {2, "heisenberg relations (toy-sphere, abelian; weight <= 6, levels <= 3)",
         [&] { return criterion_heisenberg(opt.jobs); }},
        {3, "virasoro bracket with central term; euler form closed vs general",
         [&] { return criterion_virasoro(); }},
        {4, "boundary operator: order independence and both commutation laws",
         [&] { return criterion_boundary(); }},
        {5, "dimension triangle: H^[n] = fock = series, per degree",
         [&] { return criterion_dimension_triangle(opt.budget); }},
        {6, "ring axioms of H^[n]: associativity, commutativity, unit",
         [&] { return criterion_ring_axioms(opt.budget, opt.seed); }},
        {7, "kummer: K^[1] = Q; abelian dims (1,0,22,0,1); leray at n = 2,3",
         [&] { return criterion_kummer(opt.budget); }},
        {8, "calabi-yau covers: corner rows of the enriques cover series",
         [&] { return criterion_cy_covers(); }},
        {9, "twisted levels: enriques weight-L row (1,10,1), period-2 levels",
         [&] { return criterion_twisted_levels(); }},
    };
    bool all = true;
    for (const auto& item : items) {
        if (!opt.criteria.empty() &&
            std::find(opt.criteria.begin(), opt.criteria.end(), item.number) == opt.criteria.end())
            continue;
        CriterionResult res;
        res.number = item.number;
        res.title = item.title;
        auto t0 = std::chrono::steady_clock::now();
        try {
            Outcome o = item.run();
            res.pass = o.pass;
            res.detail = o.detail;
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && res.pass;
        if (on_result) on_result(res);
    }
    return all;
}

} // namespace hilbfrob
