#include "lgspin/charclass.hpp"

#include <algorithm>

namespace lgspin {

Rat bernoulli(int l) {
    static std::vector<Rat> cache{Rat(1)};
    while ((int)cache.size() <= l) {
        int n = (int)cache.size();
        // sum_{k=0}^{n} binom(n+1,k) B_k = 0 for n >= 1
        Rat acc(0);
        for (int k = 0; k < n; ++k) acc += Rat(binomial_int(n + 1, k)) * cache[k];
        cache.push_back(-acc / Rat(binomial_int(n + 1, n)));
    }
    return cache[l];
}

Int gamma_number(int l, int k) {
    if (l < 0 || k < 0) throw DomainError("gamma(l,k) needs l,k >= 0");
    if (k > l) return Int(0);
    if (k == 0) return Int(l == 0 ? 1 : 0);
    // Stirling numbers of the second kind
    static std::vector<std::vector<Int>> table{{Int(1)}};
    while ((int)table.size() <= l) {
        int n = (int)table.size();
        std::vector<Int> row(n + 1, Int(0));
        for (int j = 1; j <= n; ++j) {
            Int below = (j < n) ? table[n - 1][j] : Int(0);
            row[j] = Int(j) * below + table[n - 1][j - 1];
        }
        table.push_back(std::move(row));
    }
    return table[l][k];
}

Rat s_l(const Rat& x, int l) {
    if (l < 1) throw DomainError("s_l defined here for l >= 1");
    if (x == 1) throw DomainError("s_l has a pole at x = 1");
    Rat X = x / (Rat(1) - x);
    Rat acc = bernoulli(l) / Rat(l);
    Rat sum(0);
    Rat Xk(1);
    for (int k = 1; k <= l; ++k) {
        Xk *= X;
        sum += Rat(factorial_int(k - 1)) * Xk * Rat(gamma_number(l, k));
    }
    if (l % 2) acc -= sum;
    else acc += sum;
    return acc;
}

EpsSeries s_l_eps(int l, long long k_j, int top) {
    if (l < 1) throw DomainError("s_l defined here for l >= 1");
    EpsSeries X = EpsSeries::x_over_one_minus_x(k_j, top);
    EpsSeries acc = EpsSeries::constant(bernoulli(l) / Rat(l), top);
    EpsSeries Xk = EpsSeries::constant(Rat(1), top);
    for (int k = 1; k <= l; ++k) {
        Xk = Xk * X;
        Rat c = Rat(factorial_int(k - 1)) * Rat(gamma_number(l, k));
        if (l % 2) c = -c;
        acc = acc + Xk * c;
    }
    return acc;
}

// ---------------------------------------------------------------------------

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    PowerSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; i + j <= r.order(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    return r;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    PowerSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    PowerSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

PowerSeries PowerSeries::operator*(const Rat& s) const {
    PowerSeries r = *this;
    for (Rat& v : r.c) v *= s;
    return r;
}

PowerSeries PowerSeries::exp_of(const PowerSeries& a) {
    if (a.c[0] != 0) throw DomainError("exp of a series with non-zero constant term");
    PowerSeries r(a.order());
    PowerSeries term(a.order());
    term.c[0] = 1;
    r.c[0] = 1;
    for (int m = 1; m <= a.order(); ++m) {
        term = term * a;
        term = term * (Rat(1) / Rat(m));
        r = r + term;
        bool all_zero = true;
        for (const Rat& v : term.c) all_zero = all_zero && v == 0;
        if (all_zero) break;
    }
    return r;
}

PowerSeries exp_series(const Rat& b, int order) {
    PowerSeries r(order);
    Rat t(1);
    for (int i = 0; i <= order; ++i) {
        r.c[i] = t;
        t *= b / Rat(i + 1);
    }
    return r;
}

// ---------------------------------------------------------------------------

int ChMono::degree() const {
    int d = 0;
    for (const auto& [jl, p] : f) d += jl.second * p;
    return d;
}

template <class C>
void SymPoly<C>::add(const ChMono& m, const C& v) {
    if (m.degree() > max_degree) return;
    auto it = terms.find(m);
    if (it == terms.end())
        terms.emplace(m, v);
    else
        it->second = it->second + v;
}

template <class C>
SymPoly<C> SymPoly<C>::operator*(const SymPoly<C>& o) const {
    SymPoly<C> r;
    r.max_degree = std::min(max_degree, o.max_degree);
    for (const auto& [ma, ca] : terms)
        for (const auto& [mb, cb] : o.terms) {
            ChMono m = ma;
            for (const auto& [jl, p] : mb.f) m.f[jl] += p;
            if (m.degree() > r.max_degree) continue;
            r.add(m, ca * cb);
        }
    return r;
}

template <class C>
SymPoly<C> SymPoly<C>::operator+(const SymPoly<C>& o) const {
    SymPoly<C> r = *this;
    r.max_degree = std::min(max_degree, o.max_degree);
    for (const auto& [m, v] : o.terms) r.add(m, v);
    return r;
}

template <class C>
SymPoly<C> SymPoly<C>::operator*(const C& s) const {
    SymPoly<C> r;
    r.max_degree = max_degree;
    for (const auto& [m, v] : terms) r.add(m, v * s);
    return r;
}

template <class C>
SymPoly<C> SymPoly<C>::part_of_degree(int k) const {
    SymPoly<C> r;
    r.max_degree = max_degree;
    for (const auto& [m, v] : terms)
        if (m.degree() == k) r.add(m, v);
    return r;
}

template struct SymPoly<Rat>;
template struct SymPoly<EpsSeries>;

RatPoly sym_one(int kmax) {
    RatPoly p;
    p.max_degree = kmax;
    p.add(ChMono{}, Rat(1));
    return p;
}

RatPoly sym_gen(int j, int l, int kmax) {
    RatPoly p;
    p.max_degree = kmax;
    ChMono m;
    m.f[{j, l}] = 1;
    p.add(m, Rat(1));
    return p;
}

RatPoly F_class(int j, const Rat& x, long long ch0_j, int kmax, const Rat& symbol_scale) {
    if (x == 1) throw DomainError("F_class has a pole at x = 1");
    Rat scalar = pow_rat(Rat(1) - x, -ch0_j);
    // exp of the linear polynomial sum_{l>=1} s_l(x) ch[j][l]
    RatPoly lin;
    lin.max_degree = kmax;
    for (int l = 1; l <= kmax; ++l) {
        ChMono m;
        m.f[{j, l}] = 1;
        lin.add(m, s_l(x, l) * symbol_scale);
    }
    RatPoly r = sym_one(kmax);
    RatPoly term = sym_one(kmax);
    for (int m = 1; m <= kmax; ++m) {
        term = term * lin;
        term = term * (Rat(1) / Rat(m));
        if (term.terms.empty()) break;
        r = r + term;
    }
    return r * scalar;
}

GradedLimit limit_class(const SpinNumerics& sn, const std::vector<long long>& lambda_exp,
                        int kmax, int eps_order) {
    const int N = sn.N;
    long long degvir = sn.degvir;
    if (eps_order < 0) eps_order = (int)degvir + kmax + 4;

    // scalar prefactor prod_j (1 - lambda^{k_j})^{e_j}
    EpsSeries pre = EpsSeries::constant(Rat(1), eps_order);
    for (int j = 0; j < N; ++j) {
        long long e = sn.minus_ch0[j] + sn.r[j];
        if (e == 0) continue;
        pre = pre * EpsSeries::one_minus_lambda(lambda_exp[j], eps_order).pow_int(e);
    }

    // exp of sum_{j,l} s_l(lambda_j) ch[j][l] as a symbol polynomial with
    // eps-series coefficients
    SymPoly<EpsSeries> lin;
    lin.max_degree = kmax;
    for (int j = 0; j < N; ++j)
        for (int l = 1; l <= kmax; ++l) {
            ChMono m;
            m.f[{j + 1, l}] = 1;
            lin.add(m, s_l_eps(l, lambda_exp[j], eps_order));
        }
    SymPoly<EpsSeries> expo;
    expo.max_degree = kmax;
    expo.add(ChMono{}, EpsSeries::constant(Rat(1), eps_order));
    SymPoly<EpsSeries> term = expo;
    for (int m = 1; m <= kmax; ++m) {
        term = term * lin;
        term = term * EpsSeries::constant(Rat(1) / Rat(m), eps_order);
        if (term.terms.empty()) break;
        expo = expo + term;
    }

    GradedLimit out;
    out.degvir = degvir;
    out.by_degree.assign(kmax + 1, RatPoly{});
    for (auto& p : out.by_degree) p.max_degree = kmax;
    for (const auto& [mono, coeff] : expo.terms) {
        EpsSeries total = coeff * pre;
        int k = mono.degree();
        if (!total.is_zero() && total.valuation() < degvir - k)
            throw DomainError("eps-valuation below degvir - " + std::to_string(k) +
                              " in the degree-" + std::to_string(2 * k) +
                              " part: input data violates polynomiality of the deformed class");
        // below degvir the coefficient is exactly zero; at and above it this is
        // the eps^0 coefficient, which equals the limit once actual Chern data
        // (satisfying the geometric relations) is substituted for the symbols
        out.by_degree[k].add(mono, total.is_zero() ? Rat(0) : total.coeff(0));
    }
    return out;
}

Rat scalar_limit(const std::vector<long long>& lambda_exp, const std::vector<long long>& e,
                 int eps_order) {
    long long degvir = 0;
    for (long long v : e) degvir += v;
    if (eps_order < 0) eps_order = (int)std::max<long long>(degvir, 0) + 4;
    EpsSeries pre = EpsSeries::constant(Rat(1), eps_order);
    for (size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        pre = pre * EpsSeries::one_minus_lambda(lambda_exp[j], eps_order).pow_int(e[j]);
    }
    return pre.limit_at_zero();
}

Rat correlator3(const InvertiblePolynomial& w, const BasisState& e1, const BasisState& e2,
                const BasisState& e3) {
    if (e1.zero_flag || e2.zero_flag || e3.zero_flag) return Rat(0);
    InsertionTuple t{{e1, e2, e3}};
    SpinNumerics sn = numerics(w, t);
    std::vector<long long> k = lambda_assignment(w, t, sn);
    std::vector<long long> e(w.n());
    for (int j = 0; j < w.n(); ++j) e[j] = sn.minus_ch0[j] + sn.r[j];
    return scalar_limit(k, e);
}

// ---------------------------------------------------------------------------

bool polytope_member(const std::vector<long long>& p, const std::vector<long long>& q,
                     const std::vector<long long>& R, const std::vector<long long>& a,
                     const std::vector<long long>& rank_b) {
    const int N = (int)a.size();
    for (int j = 0; j < N; ++j) {
        if (p[j] < 0 || q[j] < 0) return false;
        if (q[j] > rank_b[j]) return false;
    }
    for (int j = 0; j < N; ++j) {
        long long acc = p[j] + q[j];
        long long coef = 1;
        for (int k = j + 1; k < N; ++k) {
            coef *= -a[k - 1];
            acc += coef * (p[k] + q[k]);
        }
        if (acc > R[j]) return false;
    }
    return true;
}

std::vector<std::vector<long long>> domain_of_sum(int j, const std::vector<long long>& R,
                                                  const std::vector<long long>& a) {
    const int N = (int)a.size();
    std::vector<std::vector<long long>> out;
    std::vector<long long> z(N - j, 0);
    // enumerate z_{N-1} down to z_j with the alternating bound; T_l tracks
    // z_l - a_l z_{l+1} + ... for the already-chosen suffix
    auto rec = [&](auto&& self, int l, long long t_next) -> void {
        // t_next = T_{l+1}; constraint z_l - a_l * T_{l+1} <= R_l
        long long bound = R[l] + a[l] * t_next;
        if (l + 1 == N) bound = R[l];  // T_{N+1} := 0
        if (bound < 0) return;
        for (long long v = 0; v <= bound; ++v) {
            z[l - j] = v;
            long long t_here = v - (l + 1 == N ? 0 : a[l] * t_next);
            if (l == j)
                out.push_back(z);
            else
                self(self, l - 1, t_here);
        }
    };
    rec(rec, N - 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::vector<long long>, std::vector<long long>>> polytope_points(
    const std::vector<long long>& R, const std::vector<long long>& a,
    const std::vector<long long>& rank_b) {
    const int N = (int)a.size();
    std::vector<std::pair<std::vector<long long>, std::vector<long long>>> out;
    for (const auto& z : domain_of_sum(0, R, a)) {
        // split each z_j into p_j + q_j with q_j <= rank_b[j]
        std::vector<std::pair<std::vector<long long>, std::vector<long long>>> partial{
            {std::vector<long long>{}, std::vector<long long>{}}};
        for (int j = 0; j < N; ++j) {
            std::vector<std::pair<std::vector<long long>, std::vector<long long>>> next;
            for (long long q = 0; q <= std::min(z[j], rank_b[j]); ++q)
                for (const auto& [ps, qs] : partial) {
                    auto p2 = ps;
                    auto q2 = qs;
                    p2.push_back(z[j] - q);
                    q2.push_back(q);
                    next.emplace_back(std::move(p2), std::move(q2));
                }
            partial = std::move(next);
        }
        for (auto& pq : partial) out.push_back(std::move(pq));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::vector<long long>, RatPoly> g_truncation(
    int j, const std::vector<long long>& R, const std::vector<long long>& a,
    const std::function<RatPoly(int, long long)>& factor, int kmax) {
    std::map<std::vector<long long>, RatPoly> out;
    for (const auto& z : domain_of_sum(j, R, a)) {
        RatPoly prod = sym_one(kmax);
        for (int k = 0; k < (int)z.size(); ++k) prod = prod * factor(j + k, z[k]);
        out.emplace(z, std::move(prod));
    }
    return out;
}

}  // namespace lgspin
