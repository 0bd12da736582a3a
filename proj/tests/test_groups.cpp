#include <fdp/groups.hpp>

#include <doctest.h>

#include <random>

using namespace fdp;

namespace {

// brute-force order: add x to itself until zero
Int order_brute(const FinAbGroup& g, const Vec& x) {
    Vec acc = g.reduce(x);
    Int m = 1;
    while (!vec_is_zero(acc)) {
        acc = g.add(acc, g.reduce(x));
        ++m;
    }
    return m;
}

}  // namespace

TEST_CASE("element_order") {
    FinAbGroup z3five({3, 3, 3, 3, 3}, 2);
    CHECK(z3five.element_order(z3five.zero()) == 1);
    CHECK(z3five.element_order({1, 0, 0, 0, 0}) == 3);  // Psi(Delta_1) = g_1

    FinAbGroup z2z4({2, 4}, 2);
    CHECK(z2z4.element_order({1, 2}) == 2);
    CHECK(z2z4.element_order({1, 1}) == 4);
    CHECK(z2z4.element_order({0, 2}) == 2);

    FinAbGroup mixed({2, 3, 4}, 1);
    for (const auto& x : FinAbGroup::tuples(mixed.orders))
        CHECK(mixed.element_order(x) == order_brute(mixed, x));

    for (const auto& x : FinAbGroup::tuples(z2z4.orders))
        CHECK(z2z4.exponent() % z2z4.element_order(x) == 0);

    CHECK_THROWS_AS(z2z4.element_order({1, 2, 3}), error);
}

TEST_CASE("char_eval matches the worked rows") {
    FinAbGroup g({3, 3, 3, 3, 3}, 2);
    // trivial character
    for (const auto& x : {Vec{1, 0, 0, 0, 0}, Vec{2, 1, 0, 0, 2}})
        CHECK(g.char_eval(g.zero(), x) == 0);
    // chi = (1,0) + tau = [1,0,2] on Psi(Delta_1) = g_1
    Vec chi_tau = {1, 0, 1, 0, 2};
    CHECK(g.char_eval(chi_tau, {1, 0, 0, 0, 0}) == 1);
    // chi = (2,2) + tau on Psi(Delta_2) = g_1 + g_3
    Vec chi22 = {2, 2, 1, 0, 2};
    CHECK(g.char_eval(chi22, {1, 0, 1, 0, 0}) == 0);
}

TEST_CASE("pairing is bilinear in Q/Z") {
    FinAbGroup g({2, 3, 4}, 2);
    std::mt19937 rng(7);
    auto rnd = [&] {
        Vec v(3);
        for (size_t i = 0; i < 3; ++i)
            v[i] = std::uniform_int_distribution<Int>(0, g.orders[i] - 1)(rng);
        return v;
    };
    Int L = g.exponent();
    auto val = [&](const Vec& chi, const Vec& x) {
        // char_eval(chi, x) / ord(x), scaled to increments of 1/L
        return g.char_eval(chi, x) * (L / g.element_order(x));
    };
    for (int k = 0; k < 200; ++k) {
        Vec c1 = rnd(), c2 = rnd(), x = rnd(), y = rnd();
        CHECK(posmod(val(c1, x) + val(c2, x), L) == val(g.add(c1, c2), x));
        CHECK(posmod(val(c1, x) + val(c1, y), L) == val(c1, g.add(x, y)));
    }
}

TEST_CASE("split embedding and projections") {
    FinAbGroup g({3, 3, 3, 3, 3}, 2);
    CHECK(g.t_rank() == 3);
    CHECK(g.embed_g({1, 2}) == Vec{1, 2, 0, 0, 0});
    CHECK(g.embed_t({1, 0, 2}) == Vec{0, 0, 1, 0, 2});
    CHECK(g.proj_g({1, 2, 1, 0, 2}) == Vec{1, 2});
    CHECK(g.proj_t({1, 2, 1, 0, 2}) == Vec{1, 0, 2});
    CHECK(g.g_characters().size() == 9);
    CHECK(g.t_elements().size() == 27);
    // lexicographic order of characters
    auto chars = g.g_characters();
    CHECK(chars[0] == Vec{0, 0});
    CHECK(chars[3] == Vec{1, 0});
    CHECK(std::is_sorted(chars.begin(), chars.end()));
}

TEST_CASE("group construction validates") {
    CHECK_THROWS_AS(FinAbGroup({1, 2}, 1), validation_error);
    CHECK_THROWS_AS(FinAbGroup({2, 2}, 3), validation_error);
}
