#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbfrob/models.hpp"
#include "hilbfrob/orbit_tensor.hpp"

using namespace hilbfrob;

namespace {

std::vector<Weight> zeros(const Presentation& H, size_t k) {
    return std::vector<Weight>(k, H.group.zero());
}

} // namespace

TEST_CASE("nabla along a bijection is the identity") {
    const Presentation& H = models::model("toy-sphere").pres;
    OrbitTensor x =
        OrbitTensor::monomial(H, zeros(H, 2), {H.index_of("1"), H.index_of("p")});
    OrbitTensor y = nabla(x, {0, 1}, zeros(H, 2));
    REQUIRE(y.terms.size() == 1);
    CHECK(y.terms[0].labels == x.terms[0].labels);
    CHECK(y.terms[0].coeff.is_one());
}

TEST_CASE("nabla merges: units multiply to the unit, top classes to zero") {
    const Presentation& H = models::model("toy-sphere").pres;
    OrbitTensor ones = OrbitTensor::monomial(H, zeros(H, 2), {H.index_of("1"), H.index_of("1")});
    OrbitTensor merged = nabla(ones, {0, 0}, zeros(H, 1));
    REQUIRE(merged.terms.size() == 1);
    CHECK(merged.terms[0].labels[0] == H.index_of("1"));

    OrbitTensor pp = OrbitTensor::monomial(H, zeros(H, 2), {H.index_of("p"), H.index_of("p")});
    CHECK(nabla(pp, {0, 0}, zeros(H, 1)).is_zero());
}

TEST_CASE("nabla respects weight additivity") {
    const Presentation& H = models::model("enriques-z2").pres;
    Weight L = H.group.reduce({1});
    OrbitTensor x = OrbitTensor::monomial(H, {L, L}, {H.index_of("u1"), H.index_of("u1")});
    // fibre weights add to 0 = L + L
    OrbitTensor y = nabla(x, {0, 0}, {H.group.zero()});
    REQUIRE(y.terms.size() == 1);
    CHECK(y.terms[0].labels[0] == H.index_of("v"));
    // a wrong target weight is rejected
    CHECK_THROWS_AS(nabla(x, {0, 0}, {L}), Error);
}

TEST_CASE("delta_map along a bijection is the identity") {
    const Presentation& H = models::model("toy-sphere").pres;
    OrbitTensor x = OrbitTensor::monomial(H, zeros(H, 2), {H.index_of("p"), H.index_of("1")});
    OrbitTensor y = delta_map(x, {0, 1}, zeros(H, 2));
    REQUIRE(y.terms.size() == 1);
    CHECK(y.terms[0].labels == x.terms[0].labels);
    CHECK(y.terms[0].coeff.is_one());
}

TEST_CASE("delta_map splits the unit into the dual tensor") {
    const Presentation& H = models::model("toy-sphere").pres;
    OrbitTensor one = OrbitTensor::monomial(H, zeros(H, 1), {H.index_of("1")});
    OrbitTensor y = delta_map(one, {0, 0}, zeros(H, 2));
    // 1 (x) p + p (x) 1
    REQUIRE(y.terms.size() == 2);
    for (const auto& t : y.terms) CHECK(t.coeff.is_one());
}

TEST_CASE("delta_map coassociativity: two split orders agree") {
    for (const char* name : {"toy-sphere", "abelian", "k3"}) {
        const Presentation& H = models::model(name).pres;
        for (int32_t b : H.basis_of_weight(H.group.zero())) {
            OrbitTensor x = OrbitTensor::monomial(H, zeros(H, 1), {b});
            // split 1 -> 3 directly
            OrbitTensor direct = delta_map(x, {0, 0, 0}, zeros(H, 3));
            // split 1 -> 2, then the first leg -> 2
            OrbitTensor two = delta_map(x, {0, 0}, zeros(H, 2));
            // splitting slot 0 of a 2-slot tensor into slots {0,1} (slot 1 maps
            // to the new slot 2): block map {0, 0, 1}
            OrbitTensor three = delta_map(two, {0, 0, 1}, zeros(H, 3));
            INFO(name, " basis ", H.basis[b].id);
            std::map<std::vector<int32_t>, Rational> lhs, rhs;
            for (const auto& t : direct.terms)
                lhs[{t.labels.begin(), t.labels.end()}] = t.coeff;
            for (const auto& t : three.terms)
                rhs[{t.labels.begin(), t.labels.end()}] = t.coeff;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("pointwise product interleaves Koszul signs") {
    const Presentation& H = models::model("abelian").pres;
    OrbitTensor a = OrbitTensor::monomial(H, zeros(H, 2), {H.index_of("a1"), H.index_of("a2")});
    OrbitTensor b = OrbitTensor::monomial(H, zeros(H, 2), {H.index_of("a3"), H.index_of("a4")});
    OrbitTensor prod = pointwise_product(a, b);
    REQUIRE(prod.terms.size() == 1);
    // (a1 (x) a2)(a3 (x) a4) = -(a1 a3) (x) (a2 a4) = -(a13 (x) a24)
    CHECK(prod.terms[0].labels[0] == H.index_of("a13"));
    CHECK(prod.terms[0].labels[1] == H.index_of("a24"));
    CHECK(prod.terms[0].coeff == Rational(-1));
}
