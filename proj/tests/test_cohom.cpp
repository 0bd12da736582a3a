#include "helpers.hpp"

#include <fdp/verify.hpp>

#include <random>

using namespace fdp;

TEST_CASE("cohomology on X: worked values") {
    for (const auto& name : {"kulikov", "burniat4", "burniat4n"}) {
        const Surface& s = test_registry().get(name);
        CHECK(cohomology_x(s.cov, s.y, {Vec(s.cov.lat_y.rank, 0), s.cov.group.zero_t()}) ==
              CohomDims{1, 0, 0});
        CHECK(cohomology_x(s.cov, s.y, s.canonical) == CohomDims{0, 0, 1});
    }
    const Surface& kul = test_registry().get("kulikov");
    LineBundleX twok{{6, -2, -2, -2}, {0, 0, 1}};  // 2 K_X
    CHECK(cohomology_x(kul.cov, kul.y, twok) == CohomDims{7, 0, 0});

    // Campedelli: O(D1) (x) g4^* has a single section
    const Surface& cam = test_registry().get("campedelli");
    DivisorExprX d1;
    d1.add("D1", 1);
    CHECK(cohomology_expr(cam.cov, cam.y, d1, {1, 0, 0}) == CohomDims{1, 0, 0});
}

TEST_CASE("acyclic sets: appendix rows by both methods") {
    const Surface& s = test_registry().get("kulikov");
    auto lifted = lift_numerical(s.cov, s.numerical_preset("default"));
    for (const auto& row : golden::kKulikovAcyclic) {
        Vec d = vec_sub(lifted[row.i], lifted[row.j]);
        auto want = sorted_copy(row.taus);
        CHECK(acyclic_set(s.cov, s.y, s.semigroup(), s.canonical, d, AcyclicMethod::both) == want);
    }
}

TEST_CASE("acyclic set of a numerically non-acyclic class is empty") {
    const Surface& s = test_registry().get("kulikov");
    CHECK(acyclic_set(s.cov, s.y, s.semigroup(), s.canonical, Vec(4, 0)).empty());
}

TEST_CASE("ext groups") {
    const Surface& s = test_registry().get("kulikov");
    auto coll = s.collection_preset("paper");
    CHECK(ext_groups(s.cov, s.y, coll[2], coll[2]) == CohomDims{1, 0, 0});
    CHECK(ext_groups(s.cov, s.y, coll[0], coll[1]) == CohomDims{0, 0, 2});
    CHECK(ext_groups(s.cov, s.y, coll[1], coll[4]) == CohomDims{0, 2, 3});
    // difference-bundle invariance: tensoring both sides by M changes nothing
    std::mt19937 rng(5);
    for (int k = 0; k < 20; ++k) {
        Vec m(4);
        for (auto& x : m) x = std::uniform_int_distribution<Int>(-2, 2)(rng);
        Vec t(3);
        for (auto& x : t) x = std::uniform_int_distribution<Int>(0, 2)(rng);
        LineBundleX a{vec_add(coll[1].deg, m), s.cov.group.add_t(coll[1].tors, t)};
        LineBundleX b{vec_add(coll[4].deg, m), s.cov.group.add_t(coll[4].tors, t)};
        CHECK(ext_groups(s.cov, s.y, a, b) == CohomDims{0, 2, 3});
    }
}

TEST_CASE("ext table of the single structure sheaf") {
    const Surface& s = test_registry().get("kulikov");
    TwistedCollection one = {{Vec(4, 0), s.cov.group.zero_t()}};
    auto t = ext_table(s.cov, s.y, one, s.canonical);
    REQUIRE(t.n == 1);
    CHECK(t.at(0, 0) == CohomDims{1, 0, 0});
    CHECK(t.at(0, 1) == CohomDims{0, 0, 7});  // Ext(O, O(-K)) = h^{2-*}(2K)
    CHECK(t.at(1, 0) == CohomDims{0, 0, 1});  // Ext(O(-K), O) = h^*(K) reversed
    CHECK(t.at(1, 1) == CohomDims{1, 0, 0});
    CHECK(t.in_extension(0, 1));
    CHECK(!t.in_extension(0, 0));
}

TEST_CASE("ext table of the paper collection") {
    const Surface& s = test_registry().get("kulikov");
    auto coll = s.collection_preset("paper");
    auto t = ext_table(s.cov, s.y, coll, s.canonical);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) CHECK(t.at(i, i + j) == golden::kKulikovTable2[i][j]);
    // vanishing backwards inside the collection
    for (size_t j = 0; j < 6; ++j)
        for (size_t i = j + 1; i < 6; ++i) CHECK(t.at(i, j).is_zero());
}

TEST_CASE("Serre duality and Riemann-Roch on X") {
    std::mt19937 rng(9);
    for (const auto& name : {"kulikov", "burniat4n"}) {
        const Surface& s = test_registry().get(name);
        for (int k = 0; k < 60; ++k) {
            Vec d(s.cov.lat_y.rank);
            for (auto& x : d) x = std::uniform_int_distribution<Int>(-3, 3)(rng);
            Vec t(s.cov.group.t_rank());
            for (size_t i = 0; i < t.size(); ++i)
                t[i] = std::uniform_int_distribution<Int>(
                    0, s.cov.group.orders[s.cov.group.g_rank + i] - 1)(rng);
            CohomDims a = cohomology_x(s.cov, s.y, {d, t});
            CHECK(a.euler() == s.cov.lat_x().euler_char(d));
            LineBundleX dual{vec_sub(s.canonical.deg, d), s.cov.group.sub_t(s.canonical.tors, t)};
            CohomDims b = cohomology_x(s.cov, s.y, dual);
            CHECK(a == CohomDims{b.h2, b.h1, b.h0});
        }
    }
}
