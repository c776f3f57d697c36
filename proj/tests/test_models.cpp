#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbfrob/models.hpp"

using namespace hilbfrob;

TEST_CASE("catalog names and unknown model") {
    auto names = models::model_names();
    CHECK(names == std::vector<std::string>{"abelian", "enriques-z2", "k3", "point", "toy-sphere"});
    CHECK_THROWS_AS(models::model("torus"), Error);
}

TEST_CASE("every catalog model validates") {
    for (const auto& name : models::model_names()) {
        Presentation p = models::model(name).pres;
        ValidationReport rep = validate(p);
        INFO(name);
        for (const auto& c : rep.checks) {
            INFO(c.axiom, ": ", c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("abelian model: dimension 16, zero euler class, Hopf data") {
    const Presentation& p = models::model("abelian").pres;
    CHECK(p.dim() == 16);
    CHECK(p.euler_class().is_zero());
    REQUIRE(p.hopf.has_value());
    // a_i primitive
    int a1 = p.index_of("a1"), one = p.index_of("1");
    auto it = p.hopf->delta.find(a1);
    REQUIRE(it != p.hopf->delta.end());
    REQUIRE(it->second.size() == 2);
    for (const auto& t : it->second) {
        CHECK(((t.a == a1 && t.b == one) || (t.a == one && t.b == a1)));
        CHECK(t.coeff.is_one());
    }
}

TEST_CASE("enriques-z2 weight spaces and Hodge rows") {
    const Presentation& p = models::model("enriques-z2").pres;
    Weight w0 = p.group.zero();
    Weight wL = p.group.reduce({1});
    CHECK(p.basis_of_weight(w0).size() == 12);
    CHECK(p.basis_of_weight(wL).size() == 12);
    // weight-L Hodge row (1, 10, 1) at shifted bidegrees (1,-1), (0,0), (-1,1)
    std::map<std::pair<int, int>, int> row;
    for (int32_t b : p.basis_of_weight(wL)) row[*p.basis[b].bidegree]++;
    CHECK(row[{1, -1}] == 1);
    CHECK(row[{0, 0}] == 10);
    CHECK(row[{-1, 1}] == 1);
    // untwisted diamond (1, 10, 1) on the diagonal
    std::map<std::pair<int, int>, int> diag;
    for (int32_t b : p.basis_of_weight(w0)) diag[*p.basis[b].bidegree]++;
    CHECK(diag[{-1, -1}] == 1);
    CHECK(diag[{0, 0}] == 10);
    CHECK(diag[{1, 1}] == 1);
}

TEST_CASE("abelian torsion re-weighting") {
    Presentation p = models::abelian_with_torsion_weights(2);
    CHECK(p.group.size() == 16);
    CHECK(p.basis_of_weight(p.group.zero()).size() == 16);
    CHECK(p.validated());
}

TEST_CASE("variant toy carries a middle class with t*t = p") {
    Presentation p = models::variant_toy();
    Element t = p.element_of("t");
    CHECK(p.multiply(t, t).coords == SparseVec{{p.index_of("p"), Rational(1)}});
    CHECK(p.pair(t, t) == Rational(1));
}
