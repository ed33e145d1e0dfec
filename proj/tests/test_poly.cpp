#include <doctest.h>

#include "lgspin/poly.hpp"

using namespace lgspin;

namespace {
const char* kChain5 = "x1^2*x2 + x2^3*x3 + x3^5*x4 + x4^10*x5 + x5^11";
const char* kD5 = "x1^2*x2 + x2^4";
}

TEST_CASE("parse: five-variable chain") {
    ExponentMatrix e = parse_polynomial(kChain5);
    REQUIRE(e.n == 5);
    std::vector<std::vector<long long>> want{{2, 1, 0, 0, 0},
                                             {0, 3, 1, 0, 0},
                                             {0, 0, 5, 1, 0},
                                             {0, 0, 0, 10, 1},
                                             {0, 0, 0, 0, 11}};
    CHECK(e.m == want);
}

TEST_CASE("parse: single Fermat and bare variables") {
    ExponentMatrix e = parse_polynomial("x^3");
    REQUIRE(e.n == 1);
    CHECK(e.m[0][0] == 3);
    ExponentMatrix f = parse_polynomial("x^3 + y^4");
    CHECK(f.m == std::vector<std::vector<long long>>{{3, 0}, {0, 4}});
}

TEST_CASE("parse: D5 chain") {
    ExponentMatrix e = parse_polynomial(kD5);
    CHECK(e.m == std::vector<std::vector<long long>>{{2, 1}, {0, 4}});
}

TEST_CASE("parse: rows align to the leading variable regardless of text order") {
    ExponentMatrix e = parse_polynomial("x2^4 + x1^2*x2");
    CHECK(e.m == std::vector<std::vector<long long>>{{2, 1}, {0, 4}});
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_polynomial("x1^2*x2 + x2^3 + x1*x2"), DomainError);  // #mono != #vars
    CHECK_THROWS_AS(parse_polynomial("x1*x2 + x2^2"), DomainError);            // diagonal < 2
    CHECK_THROWS_AS(parse_polynomial("x + y^2"), DomainError);                 // diagonal < 2
    CHECK_THROWS_AS(parse_polynomial("x1^2*x2^2"), DomainError);               // not x^a*y
    CHECK_THROWS_AS(parse_polynomial("x1^2*x2*x3 + x2^2 + x3^2"), DomainError);  // 3 variables
    CHECK_THROWS_AS(parse_polynomial("x1^2 + 2*x2^2"), DomainError);           // coefficient
    CHECK_THROWS_AS(parse_polynomial("x1 ^"), DomainError);                    // syntax
    CHECK_THROWS_AS(parse_polynomial("x1^2*x3 + x2^2*x3 + x3^2"), DomainError);  // in-degree 2
    CHECK_THROWS_AS(parse_polynomial("x1 + x2^2"), DomainError);
}

TEST_CASE("weights") {
    SUBCASE("five-chain") {
        auto ws = weight_system(parse_polynomial(kChain5));
        CHECK(ws.weights == std::vector<long long>{4, 3, 2, 1, 1});
        CHECK(ws.degree == 11);
    }
    SUBCASE("Fermat") {
        auto ws = weight_system(parse_polynomial("x^7"));
        CHECK(ws.weights == std::vector<long long>{1});
        CHECK(ws.degree == 7);
    }
    SUBCASE("D5") {
        auto ws = weight_system(parse_polynomial(kD5));
        CHECK(ws.weights == std::vector<long long>{3, 2});
        CHECK(ws.degree == 8);
    }
    SUBCASE("matrix relation E q = 1") {
        for (const char* text : {kChain5, kD5, "x^3+y^4", "x1^2*x2+x2^2*x1"}) {
            ExponentMatrix e = parse_polynomial(text);
            auto ws = weight_system(e);
            for (int i = 0; i < e.n; ++i) {
                Rat acc(0);
                for (int j = 0; j < e.n; ++j) acc += rat_of(e.m[i][j]) * ws.charges[j];
                CHECK(acc == 1);
            }
        }
    }
}

TEST_CASE("decomposition") {
    SUBCASE("five-chain") {
        auto d = decompose(parse_polynomial(kChain5));
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0].kind == AtomicComponent::Kind::Chain);
        CHECK(d.components[0].exps == std::vector<long long>{2, 3, 5, 10, 10});
    }
    SUBCASE("two Fermats") {
        auto d = decompose(parse_polynomial("x^3 + y^4"));
        REQUIRE(d.components.size() == 2);
        CHECK(d.components[0].kind == AtomicComponent::Kind::Fermat);
        CHECK(d.components[0].exps == std::vector<long long>{2});
        CHECK(d.components[1].exps == std::vector<long long>{3});
    }
    SUBCASE("symmetric loop") {
        auto d = decompose(parse_polynomial("x1^2*x2 + x2^2*x1"));
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0].kind == AtomicComponent::Kind::Loop);
        CHECK(d.components[0].exps == std::vector<long long>{2, 2});
    }
    SUBCASE("round trip through re-serialization") {
        for (const char* text :
             {kChain5, kD5, "x^3+y^4", "x1^2*x2+x2^2*x1", "x1^2*x2+x2^3*x3+x3^2*x4+x4^3*x1"}) {
            ExponentMatrix e = parse_polynomial(text);
            ExponentMatrix back = parse_polynomial(to_text(e));
            CHECK(back.m == e.m);
        }
    }
}

TEST_CASE("graph maps") {
    InvertiblePolynomial w = analyze(kChain5);
    CHECK(w.t(0) == 1);
    CHECK(w.t(4) == 4);
    CHECK(w.s(0) == -1);
    CHECK(w.s(1) == 0);
    for (int j = 0; j < w.n(); ++j)
        if (w.t(j) != j) CHECK(w.s(w.t(j)) == j);
    // W = sum_j x_j^{a_j} x_{t(j)} reproduces the matrix
    for (int j = 0; j < w.n(); ++j) {
        std::vector<long long> row(w.n(), 0);
        row[j] += w.a(j);
        row[w.t(j)] += 1;
        CHECK(row == w.E.m[j]);
    }
}

TEST_CASE("mirror") {
    SUBCASE("transpose and involution") {
        for (const char* text : {kChain5, kD5, "x1^2*x2+x2^2*x1", "x^3+y^4"}) {
            ExponentMatrix e = parse_polynomial(text);
            ExponentMatrix m = mirror(e);
            for (int i = 0; i < e.n; ++i)
                for (int j = 0; j < e.n; ++j) CHECK(m.m[i][j] == e.m[j][i]);
            CHECK(mirror(m).m == e.m);
        }
    }
    SUBCASE("D5 mirror polynomial") {
        ExponentMatrix m = mirror(parse_polynomial(kD5));
        CHECK(m.m == std::vector<std::vector<long long>>{{2, 0}, {1, 4}});
        CHECK(to_text(m) == "x1^2 + x1*x2^4");
    }
}

TEST_CASE("Calabi-Yau flag and central charge") {
    InvertiblePolynomial c5 = analyze(kChain5);
    CHECK(c5.is_calabi_yau());
    CHECK(c5.central_charge() == 3);
    InvertiblePolynomial f = analyze("x^3");
    CHECK_FALSE(f.is_calabi_yau());
    InvertiblePolynomial d5 = analyze(kD5);
    CHECK_FALSE(d5.is_calabi_yau());
    InvertiblePolynomial c3 = analyze("x1^2*x2+x2^2*x3+x3^3");
    CHECK(c3.is_calabi_yau());
    CHECK(c3.central_charge() == 1);
}

TEST_CASE("excluded monomial shapes are flagged, not rejected") {
    CHECK(analyze("x1^3*x2 + x2^2").excluded_shape);     // x^a y + y^2
    CHECK(analyze("x1^3*x2 + x2^2*x1").excluded_shape);  // x^a y + y^2 x
    CHECK(analyze("x1^2*x2 + x2^2*x1").excluded_shape);
    CHECK_FALSE(analyze(kD5).excluded_shape);
    CHECK_FALSE(analyze(kChain5).excluded_shape);
    CHECK_FALSE(analyze("x1^3*x2+x2^3*x1").excluded_shape);
}
