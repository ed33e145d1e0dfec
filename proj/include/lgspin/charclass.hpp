#pragma once

#include <functional>
#include <map>
#include <vector>

#include "lgspin/eps_series.hpp"
#include "lgspin/spincomb.hpp"

namespace lgspin {

// B_l(0): B_1(0) = -1/2 convention (generating function z e^{xz}/(e^z - 1)).
Rat bernoulli(int l);
// gamma(l,k): coefficients of (e^z - 1)^k / k! = sum_l gamma(l,k) z^l / l!
Int gamma_number(int l, int k);
// s_l(x) for l >= 1; the l = 0 case is handled multiplicatively as (1-x)^{.}
Rat s_l(const Rat& x, int l);
// s_l evaluated at lambda_j = (1+eps)^{-k_j}, as an exact eps-Laurent series.
EpsSeries s_l_eps(int l, long long k_j, int top);

// -------- dense univariate power series over Q (tests and identities) -----

struct PowerSeries {
    std::vector<Rat> c;  // coefficients 0..order

    explicit PowerSeries(int order) : c(order + 1, Rat(0)) {}
    int order() const { return (int)c.size() - 1; }
    static PowerSeries exp_of(const PowerSeries& a);  // requires a(0) = 0
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const Rat& s) const;
    bool operator==(const PowerSeries& o) const { return c == o.c; }
};

// e^{b z} truncated
PowerSeries exp_series(const Rat& b, int order);

// -------- polynomials in the commuting symbols ch[j][l] -------------------

// A monomial: sorted (j,l) -> power; cohomological degree = sum l * power.
struct ChMono {
    std::map<std::pair<int, int>, int> f;

    int degree() const;
    friend bool operator<(const ChMono& a, const ChMono& b) { return a.f < b.f; }
    friend bool operator==(const ChMono& a, const ChMono& b) { return a.f == b.f; }
};

template <class C>
struct SymPoly {
    std::map<ChMono, C> terms;
    int max_degree = 1 << 20;  // truncation degree

    void add(const ChMono& m, const C& v);
    SymPoly<C> operator*(const SymPoly<C>& o) const;
    SymPoly<C> operator+(const SymPoly<C>& o) const;
    SymPoly<C> operator*(const C& s) const;
    SymPoly<C> part_of_degree(int k) const;
};

using RatPoly = SymPoly<Rat>;
RatPoly sym_one(int kmax);
RatPoly sym_gen(int j, int l, int kmax);  // the generator ch[j][l]

// F_j(x) = (1-x)^{-ch0_j} * exp(sum_{l>=1} s_l(x) * scale * ch[j][l]), truncated
// at kmax; scale = -1 feeds the negated Chern character (a K-theory minus).
RatPoly F_class(int j, const Rat& x, long long ch0_j, int kmax, const Rat& symbol_scale = Rat(1));

// -------- the lambda -> 1 limit engine -------------------------------------

struct GradedLimit {
    std::vector<RatPoly> by_degree;  // index k: the degree-2k part of the class
    long long degvir = 0;
};

// Limit of prod_j (1-lambda_j)^{e_j} exp( sum_{j,l>=1} s_l(lambda_j) ch[j][l] )
// at lambda -> 1, lambda_j = lambda^{k_j}; exact eps-series arithmetic.
// Asserts eps-valuation >= max(0, degvir - k) on the degree-2k part.
GradedLimit limit_class(const SpinNumerics& sn, const std::vector<long long>& lambda_exp,
                        int kmax, int eps_order = -1);

// Scalar (degree-zero) limit of prod_j (1-lambda^{k_j})^{e_j}.
Rat scalar_limit(const std::vector<long long>& lambda_exp, const std::vector<long long>& e,
                 int eps_order = -1);

// Genus-zero three-point invariant; equals the scalar virtual class.
Rat correlator3(const InvertiblePolynomial& w, const BasisState& e1, const BasisState& e2,
                const BasisState& e3);

// -------- structural polytope predicates -----------------------------------

bool polytope_member(const std::vector<long long>& p, const std::vector<long long>& q,
                     const std::vector<long long>& R, const std::vector<long long>& a,
                     const std::vector<long long>& rank_b);

// All (p, q) lattice points of the polytope (finite).
std::vector<std::pair<std::vector<long long>, std::vector<long long>>> polytope_points(
    const std::vector<long long>& R, const std::vector<long long>& a,
    const std::vector<long long>& rank_b);

// All (z_j..z_N) with z_l - a_l z_{l+1} + ... <= R_l for every j <= l <= N.
std::vector<std::vector<long long>> domain_of_sum(int j, const std::vector<long long>& R,
                                                  const std::vector<long long>& a);

// Truncated sum over the domain: x-monomials keyed by the z-vector, with a
// caller-provided symbol factor per (variable, z).
std::map<std::vector<long long>, RatPoly> g_truncation(
    int j, const std::vector<long long>& R, const std::vector<long long>& a,
    const std::function<RatPoly(int, long long)>& factor, int kmax);

}  // namespace lgspin
