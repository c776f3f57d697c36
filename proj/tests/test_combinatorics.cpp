#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbfrob/permutation.hpp"

using namespace hilbfrob;

TEST_CASE("cycle notation round trip") {
    Permutation p = Permutation::from_cycles("(1 2 3)(4 5)", 5);
    CHECK(p(0) == 1);
    CHECK(p(1) == 2);
    CHECK(p(2) == 0);
    CHECK(p(3) == 4);
    CHECK(p(4) == 3);
    CHECK(p.cycle_str() == "(1 2 3)(4 5)");
    CHECK(Permutation::from_cycles("()", 3) == Permutation::identity(3));
    CHECK(Permutation::identity(4).cycle_str() == "()");
    CHECK_THROWS(Permutation::from_cycles("(1 7)", 3));
}

TEST_CASE("orbits") {
    auto p = orbits(Permutation::from_cycles("(1 2 3)(4 5)", 5));
    CHECK(p.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});
    auto q = orbits(Permutation::identity(3));
    CHECK(q.blocks.size() == 3);
    auto r = orbits(Permutation::from_cycles("(1 2)", 4));
    CHECK(r.blocks == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
}

TEST_CASE("joint orbits") {
    auto j1 = joint_orbits(Permutation::from_cycles("(1 2)", 3), Permutation::from_cycles("(2 3)", 3));
    CHECK(j1.blocks == std::vector<std::vector<int>>{{0, 1, 2}});
    auto j2 = joint_orbits(Permutation::identity(3), Permutation::identity(3));
    CHECK(j2.blocks.size() == 3);
    auto j3 = joint_orbits(Permutation::from_cycles("(1 2)", 4), Permutation::from_cycles("(3 4)", 4));
    CHECK(j3.blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(joint_orbits(Permutation::identity(2), Permutation::identity(3)), Error);
}

TEST_CASE("orbit surjection") {
    Permutation s3 = Permutation::from_cycles("(1 2 3)", 3);
    Permutation t = Permutation::from_cycles("(1 2)", 3);
    auto f = orbit_surjection(orbits(s3), joint_orbits(s3, t));
    CHECK(f == std::vector<int>{0});
    auto g = orbit_surjection(orbits(t), joint_orbits(s3, t));
    CHECK(g == std::vector<int>{0, 0});
    // identity refinement
    auto h = orbit_surjection(orbits(t), orbits(t));
    CHECK(h == std::vector<int>{0, 1});
    CHECK_THROWS_AS(orbit_surjection(joint_orbits(s3, t), orbits(t)), Error);
}

TEST_CASE("graph defect examples") {
    Permutation id5 = Permutation::identity(5);
    auto g0 = graph_defect(id5, id5);
    CHECK(g0 == std::vector<int>(5, 0));

    Permutation c3 = Permutation::from_cycles("(1 2 3)", 3);
    CHECK(graph_defect(c3, c3) == std::vector<int>{1});

    Permutation t2 = Permutation::from_cycles("(1 2)", 2);
    CHECK(graph_defect(t2, t2) == std::vector<int>{0});
}

TEST_CASE("graph defect properties on all pairs, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        auto perms = enumerate_sn(n);
        for (const auto& s : perms)
            for (const auto& t : perms) {
                auto joint = joint_orbits(s, t);
                auto gst = graph_defect(s, t);
                auto gts = graph_defect(t, s);
                REQUIRE(gst.size() == joint.blocks.size());
                for (size_t b = 0; b < gst.size(); ++b) {
                    // non-negative integers (integrality is enforced by the
                    // formula's /2; recheck parity directly)
                    int size = static_cast<int>(joint.blocks[b].size());
                    auto count = [&](const Permutation& p) {
                        auto fine = orbits(p);
                        std::vector<bool> seen(fine.blocks.size(), false);
                        int c = 0;
                        for (int x : joint.blocks[b])
                            if (!seen[fine.block_of[x]]) {
                                seen[fine.block_of[x]] = true;
                                ++c;
                            }
                        return c;
                    };
                    int num = size + 2 - count(s) - count(t) - count(s.compose(t));
                    REQUIRE(num % 2 == 0);
                    REQUIRE(gst[b] >= 0);
                    REQUIRE(gst[b] == gts[b]);
                }
            }
    }
}

TEST_CASE("graph defect depends only on simultaneous conjugacy") {
    auto perms4 = enumerate_sn(4);
    Permutation s = Permutation::from_cycles("(1 2 3)", 4);
    Permutation t = Permutation::from_cycles("(2 3 4)", 4);
    auto base_joint = joint_orbits(s, t);
    auto base = graph_defect(s, t);
    for (const auto& pi : perms4) {
        Permutation s2 = s.conjugate_by(pi);
        Permutation t2 = t.conjugate_by(pi);
        auto j2 = joint_orbits(s2, t2);
        auto g2 = graph_defect(s2, t2);
        for (size_t b = 0; b < base.size(); ++b) {
            int img = j2.block_of[pi(base_joint.blocks[b][0])];
            REQUIRE(g2[img] == base[b]);
        }
    }
}

TEST_CASE("joint orbits is the partition join") {
    auto perms = enumerate_sn(4);
    for (const auto& s : perms)
        for (const auto& t : perms) {
            auto j = joint_orbits(s, t);
            CHECK(j == joint_orbits(t, s));
            // refines-coarser relations hold
            CHECK_NOTHROW(orbit_surjection(orbits(s), j));
            CHECK_NOTHROW(orbit_surjection(orbits(t), j));
            CHECK_NOTHROW(orbit_surjection(orbits(s.compose(t)), j));
            // idempotent
            CHECK(joint_orbits(s, s) == orbits(s));
        }
}

TEST_CASE("enumerate, cycle type, conjugators") {
    CHECK(enumerate_sn(3).size() == 6);
    CHECK_THROWS_AS(enumerate_sn(7), Error);
    CHECK(cycle_type(Permutation::from_cycles("(1 2)(3 4 5)", 5)) == std::vector<int>{3, 2});
    auto pi = conjugators(Permutation::from_cycles("(1 2)", 3), Permutation::from_cycles("(2 3)", 3));
    REQUIRE(pi.has_value());
    CHECK(Permutation::from_cycles("(1 2)", 3).conjugate_by(*pi) ==
          Permutation::from_cycles("(2 3)", 3));
    CHECK_FALSE(conjugators(Permutation::from_cycles("(1 2)", 3),
                            Permutation::from_cycles("(1 2 3)", 3))
                    .has_value());
}

TEST_CASE("koszul sign") {
    CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
    CHECK(koszul_sign({1, 0}, {2, 1}) == 1);
    CHECK(koszul_sign({1, 2, 0}, {1, 1, 1}) == 1);
    CHECK(koszul_sign({2, 1, 0}, {1, 1, 1}) == -1);
    CHECK(koszul_sign({0, 1, 2}, {1, 1, 1}) == 1);
    // negative odd degrees count as odd
    CHECK(koszul_sign({1, 0}, {-1, -1}) == -1);
}
