#include <doctest.h>

#include "lgspin/statespace.hpp"

using namespace lgspin;

namespace {
const char* kChain5 = "x1^2*x2+x2^3*x3+x3^5*x4+x4^10*x5+x5^11";
const char* kD5 = "x1^2*x2+x2^4";
const char* kLoop4 = "x1^2*x2+x2^3*x3+x3^2*x4+x4^3*x1";
}

TEST_CASE("broad sets") {
    auto w = analyze(kChain5);
    auto j = grading_element(w);
    CHECK(broad_set(pow(j, 2)).empty());
    CHECK(broad_set(identity_symmetry(5)) == std::vector<int>{0, 1, 2, 3, 4});
    auto d5 = analyze(kD5);
    CHECK(broad_set(identity_symmetry(2)) == std::vector<int>{0, 1});
    CHECK(broad_set(pow(grading_element(d5), 4)) == std::vector<int>{1});  // (1/2, 0)
}

TEST_CASE("decorations") {
    SUBCASE("chains have a unique admissible decoration per sector") {
        auto w = analyze(kChain5);
        for (const auto& g : enumerate_group(w, 5000)) {
            auto ds = decorations(w, g);
            CHECK(ds.size() == 1);
            // the unique decoration crosses exactly the broad vertices at an
            // even distance from the tail
            for (int j = 0; j < w.n(); ++j) {
                bool crossed = ds[0].dec.is_crossed(j);
                bool want = g.g[j] == 0 && (w.n() - (j + 1)) % 2 == 0;
                CHECK(crossed == want);
            }
        }
    }
    SUBCASE("D5 identity: tail crossed, head uncrossed, balanced") {
        auto w = analyze(kD5);
        auto ds = decorations(w, identity_symmetry(2));
        REQUIRE(ds.size() == 1);
        CHECK(ds[0].dec.crossed == 0b10u);
        CHECK_FALSE(ds[0].zero_flag);
        CHECK(is_balanced(w, ds[0].dec));
    }
    SUBCASE("five-chain identity is admissible but unbalanced") {
        auto w = analyze(kChain5);
        auto ds = decorations(w, identity_symmetry(5));
        REQUIRE(ds.size() == 1);
        CHECK(ds[0].dec.crossed == 0b10101u);  // alternating from the tail
        CHECK(ds[0].zero_flag);
    }
    SUBCASE("even loop identity carries two balanced decorations") {
        auto w = analyze(kLoop4);
        auto ds = decorations(w, identity_symmetry(4));
        REQUIRE(ds.size() == 2);
        CHECK(ds[0].dec.crossed == 0b0101u);
        CHECK(ds[1].dec.crossed == 0b1010u);
        CHECK_FALSE(ds[0].zero_flag);
        CHECK_FALSE(ds[1].zero_flag);
        CHECK_THROWS_AS(unique_state(w, identity_symmetry(4)), DomainError);
    }
    SUBCASE("odd loop identity has no admissible decoration") {
        auto w = analyze("x1^2*x2+x2^2*x3+x3^2*x1");
        CHECK(decorations(w, identity_symmetry(3)).empty());
    }
    SUBCASE("broad Fermat vertex is crossed and unbalanced") {
        auto w = analyze("x^3");
        auto ds = decorations(w, identity_symmetry(1));
        REQUIRE(ds.size() == 1);
        CHECK(ds[0].dec.crossed == 1u);
        CHECK(ds[0].zero_flag);
    }
}

TEST_CASE("degree") {
    auto w = analyze(kChain5);
    auto j = grading_element(w);
    CHECK(degree(w, unique_state(w, pow(j, 2))) == 2);
    CHECK(degree(w, unique_state(w, j)) == 0);
    SUBCASE("degree duality over the full group") {
        Rat twice_c = w.central_charge() * Rat(2);
        for (const auto& g : enumerate_group(w)) {
            auto here = decorations(w, g);
            if (here.empty() || here[0].zero_flag) continue;
            auto there = decorations(w, inv(g));
            REQUIRE(!there.empty());
            if (there[0].zero_flag) continue;
            CHECK(degree(w, here[0]) + degree(w, there[0]) == twice_c);
        }
    }
    SUBCASE("degree duality on D5 and the even loop") {
        for (const char* text : {kD5, kLoop4}) {
            auto v = analyze(text);
            Rat twice_c = v.central_charge() * Rat(2);
            for (const auto& g : enumerate_group(v))
                for (const auto& e : decorations(v, g)) {
                    if (e.zero_flag) continue;
                    for (const auto& f : decorations(v, inv(g))) {
                        if (f.zero_flag) continue;
                        CHECK(degree(v, e) + degree(v, f) == twice_c);
                    }
                }
        }
    }
}

TEST_CASE("pairing") {
    auto w = analyze(kChain5);
    auto j = grading_element(w);
    SUBCASE("narrow pairs give 1") {
        auto e = unique_state(w, pow(j, 2));
        auto f = unique_state(w, pow(j, 9));
        CHECK(pairing(w, e, f) == 1);
    }
    SUBCASE("sector mismatch gives 0") {
        auto e = unique_state(w, pow(j, 2));
        auto f = unique_state(w, pow(j, 3));
        CHECK(pairing(w, e, f) == 0);
    }
    SUBCASE("D5 broad self-pairing") {
        auto d5 = analyze(kD5);
        auto id = unique_state(d5, identity_symmetry(2));
        CHECK(pairing(d5, id, id) == -2);
    }
    SUBCASE("symmetry and Gram block structure") {
        auto d5 = analyze(kD5);
        std::vector<BasisState> basis;
        for (const auto& g : enumerate_group(d5))
            for (const auto& e : decorations(d5, g))
                if (!e.zero_flag) basis.push_back(e);
        for (const auto& a : basis)
            for (const auto& b : basis) {
                CHECK(pairing(d5, a, b) == pairing(d5, b, a));
                if (!(b.gamma() == inv(a.gamma()))) CHECK(pairing(d5, a, b) == 0);
            }
        // every state pairs non-trivially with some state of the inverse sector
        for (const auto& a : basis) {
            bool hit = false;
            for (const auto& b : basis) hit = hit || pairing(d5, a, b) != 0;
            CHECK(hit);
        }
    }
    SUBCASE("even loop identity block") {
        auto l = analyze(kLoop4);
        auto ds = decorations(l, identity_symmetry(4));
        auto minus = ds[0], plus = ds[1];  // crossed evens=0b1010 is ds[1]
        CHECK(pairing(l, ds[0], ds[1]) == 1);
        CHECK(pairing(l, minus, minus) == 9);  // (-a2)(-a4) over uncrossed evens
        CHECK(pairing(l, plus, plus) == 4);
    }
}

TEST_CASE("dual") {
    auto w = analyze(kChain5);
    auto j = grading_element(w);
    SUBCASE("narrow dual is the inverse-sector state") {
        auto e = unique_state(w, pow(j, 2));
        auto d = dual(w, e);
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms.begin()->first.gamma() == pow(j, 9));
        CHECK(d.terms.begin()->second == 1);
        CHECK(pairing(w, d, e) == 1);
    }
    SUBCASE("D5 broad dual matches the closed formula") {
        auto d5 = analyze(kD5);
        auto id = unique_state(d5, identity_symmetry(2));
        auto d = dual(d5, id);
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms.begin()->second == rat(-1, 2));  // (-1/a_1), broad j=1 has N-j odd
        CHECK(pairing(d5, d, id) == 1);
    }
    SUBCASE("pairing normalization across sectors") {
        for (const char* text : {kD5, kLoop4}) {
            auto v = analyze(text);
            for (const auto& g : enumerate_group(v))
                for (const auto& e : decorations(v, g)) {
                    if (e.zero_flag) continue;
                    auto d = dual(v, e);
                    CHECK(pairing(v, d, e) == 1);
                    // and zero against the other basis states of the sector
                    for (const auto& f : decorations(v, g)) {
                        if (f.zero_flag || f == e) continue;
                        CHECK(pairing(v, d, f) == 0);
                    }
                }
        }
    }
    SUBCASE("chain closed formula: product of (-1/a_j) over broad N-j odd") {
        auto d = analyze("x1^3*x2+x2^3*x3+x3^4");  // weights?
        for (const auto& g : enumerate_group(d))
            for (const auto& e : decorations(d, g)) {
                if (e.zero_flag) continue;
                auto dv = dual(d, e);
                REQUIRE(dv.terms.size() == 1);
                Rat expect(1);
                for (int v = 0; v < d.n(); ++v)
                    if (g.g[v] == 0 && (d.n() - (v + 1)) % 2 == 1) expect *= rat(-1, d.a(v));
                CHECK(dv.terms.begin()->second == expect);
                CHECK(dv.terms.begin()->first.gamma() == inv(g));
            }
    }
    SUBCASE("zero states have no dual") {
        auto f = analyze("x^3");
        auto ds = decorations(f, identity_symmetry(1));
        CHECK_THROWS_AS(dual(f, ds[0]), DomainError);
    }
}
