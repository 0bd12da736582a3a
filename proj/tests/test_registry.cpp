#include "helpers.hpp"

#include <filesystem>
#include <fstream>

using namespace fdp;

TEST_CASE("builtins load and validate") {
    const auto& reg = test_registry();
    auto names = reg.names();
    for (const auto& n : {"burniat4", "burniat4n", "campedelli", "kulikov"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK(reg.get("kulikov").has_isometry);
    CHECK(!reg.get("campedelli").has_isometry);
    CHECK(reg.get("campedelli").meta.k2 == 2);
    CHECK(reg.get("kulikov").meta.k2 == 6);
    CHECK(reg.get("kulikov").meta.h1_tx == 1);
    CHECK(reg.get("kulikov").meta.h2_tx == 3);
    CHECK_THROWS_AS(reg.get("nonexistent"), error);
    CHECK_THROWS_AS(reg.get("campedelli").semigroup(), error);
}

TEST_CASE("serialization round-trip") {
    const Surface& s = test_registry().get("kulikov");
    std::string text = serialize_surface(s);
    Surface again = load_surface(json::parse(text));
    CHECK(serialize_surface(again) == text);
    CHECK(again.canonical == s.canonical);
    CHECK(again.components == s.components);
}

TEST_CASE("shipped surface files equal the builtins") {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(FDP_SOURCE_DIR) / "surfaces";
    REQUIRE(fs::exists(dir));
    int found = 0;
    for (const auto& ent : fs::directory_iterator(dir)) {
        if (ent.path().extension() != ".surface") continue;
        std::ifstream in(ent.path());
        json doc = json::parse(in);
        const Surface& builtin = test_registry().get(doc.at("name").get<std::string>());
        CHECK(doc == builtin.doc);
        ++found;
    }
    CHECK(found == 4);
}

TEST_CASE("template files refuse to load") {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(FDP_SOURCE_DIR) / "surfaces";
    int found = 0;
    for (const auto& ent : fs::directory_iterator(dir)) {
        if (ent.path().extension() != ".template") continue;
        std::ifstream in(ent.path());
        json doc = json::parse(in);
        CHECK_THROWS_AS(load_surface(doc), validation_error);
        ++found;
    }
    CHECK(found == 3);
}

TEST_CASE("validation failures") {
    json base = test_registry().get("kulikov").doc;

    SUBCASE("schema") {
        json bad = base;
        bad["schema"] = 2;
        CHECK_THROWS_AS(load_surface(bad), validation_error);
    }
    SUBCASE("psi breaks the blowup formula") {
        json bad = base;
        bad["branches"][6]["psi"] = {1, 1, 0, 0, 0};  // E1
        CHECK_THROWS_AS(load_surface(bad), validation_error);
    }
    SUBCASE("wrong declared torsion") {
        json bad = base;
        bad["declared"]["torsion"]["D2"] = {0, 0, 1};
        CHECK_THROWS_AS(load_surface(bad), validation_error);
    }
    SUBCASE("wrong declared canonical") {
        json bad = base;
        bad["declared"]["canonical"]["torsion"] = {1, 1, 1};
        CHECK_THROWS_AS(load_surface(bad), validation_error);
    }
    SUBCASE("wrong K^2") {
        json bad = base;
        bad["meta"]["k2"] = 5;
        CHECK_THROWS_AS(load_surface(bad), validation_error);
    }
    SUBCASE("basis not unimodular") {
        json bad = base;
        bad["basis_x"][0]["expr"] = {{"E1", 1}};  // duplicate of e1: Gram degenerates
        CHECK_THROWS_AS(load_surface(bad), validation_error);
    }
    SUBCASE("relation fails") {
        json bad = base;
        bad["relations"] = {{"D1", "D2"}};
        CHECK_THROWS_AS(load_surface(bad), validation_error);
    }
    SUBCASE("ample not positive on a negative curve") {
        json bad = base;
        bad["ample_y"] = {1, -1, 0, 0};
        CHECK_THROWS_AS(load_surface(bad), validation_error);
    }
    SUBCASE("opposite roots declared") {
        json bad = test_registry().get("burniat4n").doc;
        bad["neg_roots"] = {{1, -1, 0, 0, -1, -1}, {-1, 1, 0, 0, 1, 1}};
        CHECK_THROWS_AS(load_surface(bad), validation_error);
    }
    SUBCASE("psi order differs from its G-projection order") {
        json bad = base;
        bad["branches"][0]["psi"] = {0, 0, 1, 0, 0};  // projects to zero in G
        CHECK_THROWS_AS(load_surface(bad), validation_error);
    }
}
