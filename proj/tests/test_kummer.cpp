#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilbfrob/kummer.hpp"
#include "hilbfrob/models.hpp"

using namespace hilbfrob;

TEST_CASE("phi: identity at n = 1, primitives at n = 2, homomorphism") {
    const Presentation& H = models::model("abelian").pres;
    // n = 1: phi = id
    for (int32_t b = 0; b < H.dim(); ++b) {
        HilbertElement x = phi(H, H.element(SparseVec{{b, Rational(1)}}), 1);
        REQUIRE(x.terms.size() == 1);
        CHECK(x.terms[0].first.labels == std::vector<int32_t>{b});
        CHECK(x.terms[0].second.is_one());
    }
    // n = 2: phi(a_i) = a_i (x) 1 + 1 (x) a_i
    HilbertElement p2 = phi(H, H.element_of("a1"), 2);
    REQUIRE(p2.terms.size() == 2);
    for (const auto& [v, c] : p2.terms) {
        CHECK(v.sigma.is_identity());
        CHECK(c.is_one());
    }
    // homomorphism phi(xy) = phi(x) phi(y) on all basis pairs, n = 2
    for (int32_t x = 0; x < H.dim(); ++x)
        for (int32_t y = 0; y < H.dim(); ++y) {
            Element ex = H.element(SparseVec{{x, Rational(1)}});
            Element ey = H.element(SparseVec{{y, Rational(1)}});
            HilbertElement lhs = phi(H, H.multiply(ex, ey), 2);
            HilbertElement rhs = product(phi(H, ex, 2), phi(H, ey, 2));
            INFO(H.basis[x].id, " * ", H.basis[y].id);
            CHECK(lhs == rhs);
        }
    // phi(1) is the unit of H^[n]
    HilbertAlgebra A = HilbertAlgebra::build(H, 2);
    CHECK(A.to_invariant_coords(phi(H, H.unit_element(), 2)) == A.unit_coords());
    // weight-0 image
    for (const auto& [v, c] : p2.terms) CHECK(v.L.is_zero());
    CHECK_THROWS_AS(phi(models::model("toy-sphere").pres,
                        models::model("toy-sphere").pres.unit_element(), 2),
                    Error);
}

TEST_CASE("K^[1] is the rationals") {
    Presentation H = models::abelian_with_torsion_weights(1);
    KummerAlgebra K = kummer_build(H, 1);
    CHECK(K.dim() == 1);
    CHECK(K.degrees[0] == -H.degree_d);
    CHECK(K.unit == SparseVec{{0, Rational(1)}});
    CHECK(K.mult[0][0] == SparseVec{{0, Rational(1)}});
}

TEST_CASE("abelian Kummer surface: graded dimensions (1,0,22,0,1) and total 24") {
    Presentation H = models::abelian_with_torsion_weights(2);
    KummerAlgebra K = kummer_build(H, 2);
    CHECK(K.dim() == 24);
    auto dims = K.dims_by_degree();
    CHECK(dims == std::map<int, int>{{-4, 1}, {-2, 22}, {0, 1}});
    // as a dims vector over the support -4..0: (1, 0, 22, 0, 1)
    std::vector<int> vec;
    for (int d = -4; d <= 0; ++d) vec.push_back(dims.count(d) ? dims[d] : 0);
    CHECK(vec == std::vector<int>{1, 0, 22, 0, 1});
    // weight support: H_n(L) is nonzero only when every orbit size kills L
    for (int r = 0; r < K.dim(); ++r) {
        if (!K.twists[r].is_zero()) CHECK(K.degrees[r] == -2);
    }
}

TEST_CASE("leray identity per degree at n = 1, 2, 3") {
    for (int n = 1; n <= 3; ++n) {
        Presentation H = models::abelian_with_torsion_weights(n);
        KummerAlgebra K = kummer_build(H, n);
        LerayReport rep = leray_dimension_check(H, n, K);
        INFO("n = ", n);
        for (const auto& row : rep.rows) {
            INFO("degree ", row.degree, ": fock ", row.fock_side, " vs ", row.kummer_side);
            CHECK(row.fock_side == row.kummer_side);
        }
        CHECK(rep.pass);
        // total: sum_L dim Fock_L(n) = dim H * dim K
        long long fock_total = 0;
        for (const auto& row : rep.rows) fock_total += row.fock_side;
        CHECK(fock_total == 16LL * K.dim());
    }
}

TEST_CASE("kummer quotient is well defined on cosets") {
    Presentation H = models::abelian_with_torsion_weights(2);
    HilbertAlgebra A = HilbertAlgebra::build(H, 2);
    KummerAlgebra K = kummer_build(A);
    // representatives r, s and ideal elements i, j: (r+i)(s+j) = rs mod ideal
    std::mt19937_64 rng(5);
    std::vector<SparseVec> ideal_rows;
    for (const auto& [piv, row] : K.ideal->rows()) {
        SparseVec r = row;
        sparse_add_term(r, piv, Rational(1));
        ideal_rows.push_back(r);
    }
    REQUIRE_FALSE(ideal_rows.empty());
    for (int trial = 0; trial < 10; ++trial) {
        int r = static_cast<int>(rng() % K.dim());
        int s = static_cast<int>(rng() % K.dim());
        SparseVec rc{{K.rep_invariants[r], Rational(1)}};
        SparseVec sc{{K.rep_invariants[s], Rational(1)}};
        SparseVec ri = rc, sj = sc;
        sparse_axpy(ri, ideal_rows[rng() % ideal_rows.size()], Rational(3));
        sparse_axpy(sj, ideal_rows[rng() % ideal_rows.size()], Rational(-2));
        SparseVec lhs = K.reduce_invariant(A.product_coords(ri, sj));
        CHECK(lhs == K.mult[r][s]);
    }
}

TEST_CASE("the ideal is homogeneous in degree and twist") {
    Presentation H = models::abelian_with_torsion_weights(2);
    HilbertAlgebra A = HilbertAlgebra::build(H, 2);
    KummerAlgebra K = kummer_build(A);
    for (const auto& [piv, row] : K.ideal->rows()) {
        int deg = A.invariants()[piv].degree;
        Weight L = A.invariants()[piv].L;
        for (const auto& [k, c] : row) {
            CHECK(A.invariants()[k].degree == deg);
            CHECK(A.invariants()[k].L == L);
        }
    }
}

TEST_CASE("kummer export round-trips through validate") {
    Presentation H = models::abelian_with_torsion_weights(2);
    KummerAlgebra K = kummer_build(H, 2);
    Presentation Q = K.export_presentation();
    CHECK(Q.degree_d == 4);
    ValidationReport rep = validate(Q);
    for (const auto& c : rep.checks) {
        INFO(c.axiom, ": ", c.witness);
        CHECK(c.pass);
    }
    CHECK(rep.usable());
}

TEST_CASE("kummer unit is the image of the Hilbert unit and is neutral") {
    Presentation H = models::abelian_with_torsion_weights(2);
    KummerAlgebra K = kummer_build(H, 2);
    REQUIRE(K.unit.size() == 1);
    int u = K.unit[0].first;
    CHECK(K.unit[0].second.is_one());
    for (int j = 0; j < K.dim(); ++j) {
        CHECK(K.mult[u][j] == SparseVec{{j, Rational(1)}});
        CHECK(K.mult[j][u] == SparseVec{{j, Rational(1)}});
    }
}
