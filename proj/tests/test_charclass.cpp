#include <doctest.h>

#include <random>

#include "lgspin/charclass.hpp"

using namespace lgspin;

namespace {
const char* kChain5 = "x1^2*x2+x2^3*x3+x3^5*x4+x4^10*x5+x5^11";

// independent expansion of (e^z - 1)^k / k! up to the given order
PowerSeries exp_minus_one_pow(int k, int order) {
    PowerSeries base = exp_series(Rat(1), order) - exp_series(Rat(0), order);
    base.c[0] = 0;  // e^z - 1
    PowerSeries r(order);
    r.c[0] = 1;
    for (int i = 0; i < k; ++i) r = r * base;
    Rat kf(1);
    for (int i = 2; i <= k; ++i) kf *= i;
    return r * (Rat(1) / kf);
}
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(12) == rat(-691, 2730));
    SUBCASE("generating function z/(e^z - 1) to order 12") {
        int ord = 12;
        // (e^z-1)/z
        PowerSeries den(ord);
        Rat f(1);
        for (int m = 0; m <= ord; ++m) {
            f = (m == 0) ? Rat(1) : f / Rat(m + 1) * Rat(1);
            den.c[m] = Rat(1);
            for (int i = 1; i <= m + 1; ++i) den.c[m] /= Rat(i);
        }
        PowerSeries bern(ord);
        Rat fact(1);
        for (int m = 0; m <= ord; ++m) {
            if (m) fact *= m;
            bern.c[m] = bernoulli(m) / fact;
        }
        PowerSeries prod = bern * den;
        CHECK(prod.c[0] == 1);
        for (int m = 1; m <= ord; ++m) CHECK(prod.c[m] == 0);
    }
}

TEST_CASE("gamma numbers") {
    SUBCASE("edge values") {
        CHECK(gamma_number(0, 1) == 0);
        CHECK(gamma_number(3, 5) == 0);
        for (int l = 0; l <= 10; ++l) CHECK(gamma_number(l, l) == 1);
        CHECK(gamma_number(4, 2) == 7);
    }
    SUBCASE("generating function to order 10") {
        for (int k = 0; k <= 6; ++k) {
            PowerSeries gen = exp_minus_one_pow(k, 10);
            Rat fact(1);
            for (int l = 0; l <= 10; ++l) {
                if (l) fact *= l;
                CHECK(Rat(gamma_number(l, k)) == gen.c[l] * fact);
            }
            fact = 1;
        }
    }
}

TEST_CASE("s_l values and identities") {
    SUBCASE("s_l(0) = B_l / l") {
        for (int l = 1; l <= 8; ++l) CHECK(s_l(Rat(0), l) == bernoulli(l) / Rat(l));
    }
    SUBCASE("pole at 1") { CHECK_THROWS_AS(s_l(Rat(1), 2), DomainError); }
    SUBCASE("exp(-s(y,x)) = (e^y - x)/(e^y - 1) * y as truncated series") {
        const int ord = 10;
        for (Rat x : {rat(1, 3), rat(-1, 1), rat(2, 1), rat(1, 2)}) {
            // lhs: (1-x) * exp(-sum_{l>=1} s_l(x) y^l / l!)
            PowerSeries arg(ord);
            Rat fact(1);
            for (int l = 1; l <= ord; ++l) {
                fact *= l;
                arg.c[l] = -s_l(x, l) / fact;
            }
            PowerSeries lhs = PowerSeries::exp_of(arg) * (Rat(1) - x);
            // rhs: (e^y - x) / ((e^y - 1)/y)
            PowerSeries num = exp_series(Rat(1), ord);
            num.c[0] -= x;
            PowerSeries den(ord);
            for (int m = 0; m <= ord; ++m) {
                den.c[m] = Rat(1);
                for (int i = 1; i <= m + 1; ++i) den.c[m] /= Rat(i);
            }
            // divide num by den (den has unit constant term)
            PowerSeries q(ord);
            for (int m = 0; m <= ord; ++m) {
                Rat acc = num.c[m];
                for (int i = 1; i <= m; ++i) acc -= den.c[i] * q.c[m - i];
                q.c[m] = acc;
            }
            for (int m = 0; m <= ord; ++m) CHECK(lhs.c[m] == q.c[m]);
        }
    }
    SUBCASE("first expansion identity: 1 - x e^y") {
        const int ord = 10;
        for (Rat x : {rat(1, 3), rat(-1, 1), rat(2, 1)}) {
            Rat X = x / (Rat(1) - x);
            PowerSeries arg(ord);
            Rat fact(1);
            for (int l = 1; l <= ord; ++l) {
                fact *= l;
                Rat sum(0);
                Rat Xk(1);
                Rat kf(1);
                for (int k = 1; k <= l; ++k) {
                    Xk *= X;
                    if (k > 1) kf *= (k - 1);
                    sum += kf * Xk * Rat(gamma_number(l, k));
                }
                arg.c[l] = -sum / fact;
            }
            PowerSeries lhs = PowerSeries::exp_of(arg) * (Rat(1) - x);
            PowerSeries rhs = exp_series(Rat(0), ord) - exp_series(Rat(1), ord) * x;
            for (int m = 0; m <= ord; ++m) CHECK(lhs.c[m] == rhs.c[m]);
        }
    }
    SUBCASE("second expansion identity: y/(1-e^{-y})") {
        const int ord = 10;
        PowerSeries arg(ord);
        Rat fact(1);
        for (int l = 1; l <= ord; ++l) {
            fact *= l;
            arg.c[l] = -(bernoulli(l) / Rat(l)) / fact;
        }
        PowerSeries lhs = PowerSeries::exp_of(arg);
        // (1 - e^{-y})/y has coefficients (-1)^m / (m+1)!
        PowerSeries den(ord);
        Rat sign(1);
        for (int m = 0; m <= ord; ++m) {
            den.c[m] = Rat(1);
            for (int i = 1; i <= m + 1; ++i) den.c[m] /= Rat(i);
            if (m % 2) den.c[m] = -den.c[m];
        }
        PowerSeries prod = lhs * den;
        CHECK(prod.c[0] == 1);
        for (int m = 1; m <= ord; ++m) CHECK(prod.c[m] == 0);
    }
    SUBCASE("s_1 at 1/2 against the closed form") {
        // s_1(x) = B_1 + (-1) * (x/(1-x)) * gamma(1,1) = -1/2 - x/(1-x)
        CHECK(s_l(rat(1, 2), 1) == rat(-3, 2));
    }
}

TEST_CASE("eps series") {
    const int top = 8;
    SUBCASE("binomial expansions") {
        auto lam = EpsSeries::lambda_pow(3, top);  // (1+eps)^{-3}
        CHECK(lam.coeff(0) == 1);
        CHECK(lam.coeff(1) == -3);
        CHECK(lam.coeff(2) == 6);
        auto oml = EpsSeries::one_minus_lambda(3, top);
        CHECK(oml.valuation() == 1);
        CHECK(oml.coeff(1) == 3);
    }
    SUBCASE("inverse and products") {
        auto a = EpsSeries::one_minus_lambda(2, top);
        auto b = a.inverse();
        auto prod = a * b;
        CHECK(prod.coeff(0) == 1);
        for (int e = 1; e <= prod.top(); ++e) CHECK(prod.coeff(e) == 0);
    }
    SUBCASE("(1 - lambda^{k'})/(1 - lambda^{k}) tends to k'/k") {
        auto num = EpsSeries::one_minus_lambda(-6, top);
        auto den = EpsSeries::one_minus_lambda(2, top);
        CHECK((num * den.inverse()).limit_at_zero() == -3);
    }
    SUBCASE("x/(1-x) matches s_l inputs") {
        auto x = EpsSeries::x_over_one_minus_x(1, top);
        // lambda/(1-lambda) = (1-eps-...)/eps: leading coefficient 1/eps
        CHECK(x.valuation() == -1);
        CHECK(x.coeff(-1) == 1);
    }
    SUBCASE("negative valuation blocks the limit") {
        auto x = EpsSeries::x_over_one_minus_x(2, top);
        CHECK_THROWS_AS(x.limit_at_zero(), DomainError);
    }
}

TEST_CASE("F_class") {
    const int kmax = 4;
    SUBCASE("no positive-degree symbols: pure scalar") {
        RatPoly f = F_class(1, rat(1, 3), 2, 0);
        REQUIRE(f.terms.size() == 1);
        CHECK(f.terms.begin()->first.degree() == 0);
        CHECK(f.terms.begin()->second == rat(9, 4));  // (1 - 1/3)^{-2}
    }
    SUBCASE("rank-one root form to degree 4") {
        // For ch_l = alpha^l / l! (a line bundle with root alpha = ch[1][1]),
        // exp(sum_{l>=0} s_l(x) ch_l) must match ((e^a - x)/((e^a - 1)) a)^{-1}
        // times ... equivalently its inverse equals the deformed Euler factor.
        Rat x = rat(1, 3);
        const int ord = kmax;
        // build F with ch[1][l] substituted by alpha^l / l!: compose by degree
        RatPoly f = F_class(1, x, 1, kmax);
        // collapse ch[1][l] -> alpha^l/l!: the result is a univariate series in alpha
        PowerSeries got(ord);
        for (const auto& [mono, coef] : f.terms) {
            int deg = 0;
            Rat factor(1);
            for (const auto& [jl, p] : mono.f) {
                deg += jl.second * p;
                Rat fl(1);
                for (int i = 2; i <= jl.second; ++i) fl *= i;
                factor *= pow_rat(Rat(1) / fl, p);
            }
            if (deg <= ord) got.c[deg] += coef * factor;
        }
        // expected: inverse of (e^a - x)/(e^a - 1) * a
        PowerSeries num = exp_series(Rat(1), ord);
        num.c[0] -= x;
        PowerSeries den(ord);
        for (int m = 0; m <= ord; ++m) {
            den.c[m] = Rat(1);
            for (int i = 1; i <= m + 1; ++i) den.c[m] /= Rat(i);
        }
        PowerSeries euler(ord);  // num/den
        for (int m = 0; m <= ord; ++m) {
            Rat acc = num.c[m];
            for (int i = 1; i <= m; ++i) acc -= den.c[i] * euler.c[m - i];
            euler.c[m] = acc;
        }
        PowerSeries prod = got * euler;
        CHECK(prod.c[0] == 1);
        for (int m = 1; m <= ord; ++m) CHECK(prod.c[m] == 0);
    }
    SUBCASE("multiplicativity under Chern-character addition") {
        // exp is additive: F for ch = ch(B) - ch(A) equals F(B) * F(A)^{-1};
        // verified by cancelling a factor against its K-theory negation
        Rat x = rat(2, 5);
        RatPoly fa = F_class(1, x, 3, kmax);
        RatPoly fb = F_class(1, x, -3, kmax, Rat(-1));
        RatPoly prod = fa * fb;
        REQUIRE(prod.terms.size() >= 1);
        for (const auto& [mono, coef] : prod.terms) {
            if (mono.degree() == 0)
                CHECK(coef == 1);
            else
                CHECK(coef == 0);
        }
    }
}

TEST_CASE("limit_class") {
    auto w = analyze(kChain5);
    auto j = grading_element(w);
    SUBCASE("degree-0 part of the three-point class") {
        auto t = tuple_of(w, {pow(j, 3), pow(j, 3), pow(j, 6)});
        auto sn = numerics(w, t);
        auto k = lambda_assignment(w, t, sn);
        auto lim = limit_class(sn, k, 2);
        REQUIRE(!lim.by_degree.empty());
        auto d0 = lim.by_degree[0];
        REQUIRE(d0.terms.size() == 1);
        CHECK(d0.terms.begin()->second == -2);
        CHECK(lim.degvir == 0);
    }
    SUBCASE("degrees below degvir vanish") {
        auto t = tuple_of(w, {pow(j, 2), pow(j, 2), pow(j, 2), pow(j, 2), pow(j, 6)});
        auto sn = numerics(w, t);
        auto k = lambda_assignment(w, t, sn);
        CHECK(sn.degvir == 2);
        auto lim = limit_class(sn, k, 3);
        for (const auto& [mono, coef] : lim.by_degree[0].terms) CHECK(coef == 0);
        for (const auto& [mono, coef] : lim.by_degree[1].terms) CHECK(coef == 0);
        bool nonzero2 = false;
        for (const auto& [mono, coef] : lim.by_degree[2].terms) nonzero2 = nonzero2 || coef != 0;
        CHECK(nonzero2);
    }
}

TEST_CASE("correlator3") {
    auto w = analyze(kChain5);
    auto j = grading_element(w);
    auto st = [&](int k) { return unique_state(w, pow(j, k)); };
    SUBCASE("chain three-point value") {
        CHECK(correlator3(w, st(3), st(3), st(6)) == -2);
    }
    SUBCASE("symmetry") {
        CHECK(correlator3(w, st(3), st(6), st(3)) == -2);
        CHECK(correlator3(w, st(6), st(3), st(3)) == -2);
    }
    SUBCASE("pairing as a three-point number, sampled") {
        auto els = enumerate_group(w);
        std::mt19937 rng(5);
        auto unit = st(1);
        for (int trial = 0; trial < 100; ++trial) {
            auto g = els[rng() % els.size()];
            auto e = decorations(w, g)[0];
            auto f = decorations(w, inv(g))[0];
            if (e.zero_flag || f.zero_flag) continue;
            CHECK(correlator3(w, e, f, unit) == pairing(w, e, f));
        }
    }
    SUBCASE("vanishing iff positive virtual degree") {
        auto els = enumerate_group(w);
        std::mt19937 rng(17);
        auto jst = st(1);
        int nonzero_seen = 0, zero_seen = 0;
        for (int trial = 0; trial < 400; ++trial) {
            auto g1 = els[rng() % els.size()];
            auto g2 = els[rng() % els.size()];
            auto g3 = omega_last(w, {g1, g2});
            g3 = inv(g3);
            auto e1 = decorations(w, g1)[0];
            auto e2 = decorations(w, g2)[0];
            auto e3 = decorations(w, g3)[0];
            if (e1.zero_flag || e2.zero_flag || e3.zero_flag) continue;
            InsertionTuple t{{e1, e2, e3}};
            auto sn = numerics(w, t);
            Rat v;
            try {
                v = correlator3(w, e1, e2, e3);
            } catch (const DomainError&) {
                continue;  // limit formula inapplicable
            }
            if (sn.degvir > 0) {
                CHECK(v == 0);
                ++zero_seen;
            } else {
                CHECK(v != 0);
                ++nonzero_seen;
            }
        }
        CHECK(nonzero_seen > 0);
        CHECK(zero_seen > 0);
    }
}

TEST_CASE("polytope predicates") {
    SUBCASE("origin is always a member") {
        for (long long R1 : {0LL, 1LL, 5LL}) {
            std::vector<long long> R{R1, R1}, a{2, 3}, rb{4, 4};
            CHECK(polytope_member({0, 0}, {0, 0}, R, a, rb));
        }
    }
    SUBCASE("finite enumeration") {
        std::vector<long long> R{4, 2}, a{2, 3}, rb{1, 1};
        auto pts = polytope_points(R, a, rb);
        CHECK(!pts.empty());
        for (const auto& [p, q] : pts) CHECK(polytope_member(p, q, R, a, rb));
        // brute force count over a box that certainly contains the polytope
        int count = 0;
        for (long long p1 = 0; p1 <= 40; ++p1)
            for (long long q1 = 0; q1 <= 1; ++q1)
                for (long long p2 = 0; p2 <= 40; ++p2)
                    for (long long q2 = 0; q2 <= 1; ++q2)
                        if (polytope_member({p1, p2}, {q1, q2}, R, a, rb)) ++count;
        CHECK((size_t)count == pts.size());
    }
    SUBCASE("N=2 plane picture with the tail bundle removed") {
        // with A_2 = 0 the membership constraint is p1 + q1 - a1 q2 <= R1
        std::vector<long long> R{3, 10}, a{2, 2}, rb{1, 1};
        for (long long p1 = 0; p1 <= 6; ++p1)
            for (long long q1 = 0; q1 <= 1; ++q1)
                for (long long q2 = 0; q2 <= 1; ++q2) {
                    bool got = polytope_member({p1, 0}, {q1, q2}, R, a, rb);
                    bool want = p1 + q1 - a[0] * q2 <= R[0] && 0 + q2 <= R[1];
                    CHECK(got == want);
                }
    }
    SUBCASE("g_truncation enumerates the domain") {
        std::vector<long long> R{4, 2}, a{2, 3};
        auto dom = domain_of_sum(0, R, a);
        CHECK(!dom.empty());
        for (const auto& z : dom) {
            CHECK(z[1] <= R[1]);
            CHECK(z[0] - a[0] * z[1] <= R[0]);
        }
        auto g = g_truncation(0, R, a, [](int, long long) { return sym_one(2); }, 2);
        CHECK(g.size() == dom.size());
    }
}

TEST_CASE("pairing as a three-point number on mixed sums and loops") {
    // Thom-Sebastiani sum Fermat + chain: the assignment seeds each component
    for (const char* text :
         {"x1^3 + x2^2*x3 + x3^4", "x1^2*x2+x2^2*x3+x3^2*x1", "x1^3*x2+x2^3*x1"}) {
        auto w = analyze(text);
        auto unit = unique_state(w, grading_element(w));
        for (const auto& g : enumerate_group(w))
            for (const auto& e : decorations(w, g))
                for (const auto& f : decorations(w, inv(g))) {
                    Rat want = pairing(w, e, f);
                    Rat got =
                        (e.zero_flag || f.zero_flag) ? Rat(0) : correlator3(w, e, f, unit);
                    CHECK(got == want);
                }
    }
}
