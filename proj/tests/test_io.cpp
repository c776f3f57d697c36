#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "hilbfrob/io.hpp"
#include "hilbfrob/kummer.hpp"
#include "hilbfrob/models.hpp"

using namespace hilbfrob;

namespace {

bool same_presentation(const Presentation& a, const Presentation& b) {
    return presentation_to_json(a) == presentation_to_json(b);
}

} // namespace

TEST_CASE("presentation json round trip for every model") {
    for (const auto& name : models::model_names()) {
        const Presentation& p = models::model(name).pres;
        Presentation q = presentation_from_json(presentation_to_json(p));
        INFO(name);
        CHECK(same_presentation(p, q));
        ValidationReport rep = validate(q);
        CHECK(rep.usable());
    }
}

TEST_CASE("file round trip") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "hilbfrob_test_model.json";
    save_presentation_file(models::model("enriques-z2").pres, tmp.string());
    Presentation q = load_presentation_file(tmp.string());
    CHECK(same_presentation(models::model("enriques-z2").pres, q));
    fs::remove(tmp);
    CHECK_THROWS_AS(load_presentation_file("/nonexistent/path.json"), Error);
}

TEST_CASE("kummer export serializes and revalidates") {
    Presentation H = models::abelian_with_torsion_weights(2);
    KummerAlgebra K = kummer_build(H, 2);
    Presentation Q = K.export_presentation();
    Presentation R = presentation_from_json(presentation_to_json(Q));
    CHECK(same_presentation(Q, R));
    ValidationReport rep = validate(R);
    CHECK(rep.usable());
}

TEST_CASE("element and hilbert element serialization") {
    const Presentation& p = models::model("toy-sphere").pres;
    Element x = add(p.unit_element(), scale(Rational(3, 2), p.element_of("p")));
    Element y = element_from_json(p, element_to_json(p, x));
    CHECK(x.coords == y.coords);

    HilbertElement h;
    h.owner = &p;
    h.n = 3;
    HilbertBasisVector v;
    v.L = p.group.zero();
    v.sigma = Permutation::from_cycles("(1 2)", 3);
    v.labels = {p.index_of("1"), p.index_of("p")};
    h.add_term(v, Rational(-2, 5));
    HilbertElement h2 = hilbert_element_from_json(p, 3, hilbert_element_to_json(h));
    CHECK(h == h2);
}

TEST_CASE("fock vectors serialize as (level, basis) factor lists") {
    const Presentation& p = models::model("toy-sphere").pres;
    FockSpace fs(p);
    FockVector v = fs.q(2, p.element_of("p"), fs.q(1, p.unit_element(), fs.vacuum()));
    nlohmann::json j = fock_vector_to_json(p, v);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["coeff"] == "1");
    REQUIRE(j[0]["factors"].size() == 2);
    CHECK(j[0]["factors"][0][0] == 1);
    CHECK(j[0]["factors"][0][1] == "1");
    CHECK(j[0]["factors"][1][0] == 2);
    CHECK(j[0]["factors"][1][1] == "p");
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(presentation_from_json(nlohmann::json{{"format", "something-else"}}), Error);
    const Presentation& p = models::model("toy-sphere").pres;
    nlohmann::json bad = nlohmann::json::array(
        {{{"sigma", "(1 2)"}, {"labels", {{"1", "nope"}}}, {"coeff", "1"}}});
    CHECK_THROWS_AS(hilbert_element_from_json(p, 2, bad), Error);
}
