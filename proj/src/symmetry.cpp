#include "lgspin/symmetry.hpp"

#include <algorithm>
#include <set>

namespace lgspin {

bool DiagonalSymmetry::is_identity() const {
    for (const Rat& x : g)
        if (x != 0) return false;
    return true;
}

bool operator==(const DiagonalSymmetry& a, const DiagonalSymmetry& b) { return a.g == b.g; }
bool operator!=(const DiagonalSymmetry& a, const DiagonalSymmetry& b) { return !(a == b); }

bool operator<(const DiagonalSymmetry& a, const DiagonalSymmetry& b) {
    for (int j = 0; j < a.n() && j < b.n(); ++j) {
        int c = cmp(a.g[j], b.g[j]);
        if (c != 0) return c < 0;
    }
    return a.n() < b.n();
}

DiagonalSymmetry identity_symmetry(int n) { return DiagonalSymmetry{std::vector<Rat>(n, Rat(0))}; }

DiagonalSymmetry mul(const DiagonalSymmetry& a, const DiagonalSymmetry& b) {
    DiagonalSymmetry r;
    r.g.reserve(a.n());
    for (int j = 0; j < a.n(); ++j) r.g.push_back(frac_part(a.g[j] + b.g[j]));
    return r;
}

DiagonalSymmetry inv(const DiagonalSymmetry& a) {
    DiagonalSymmetry r;
    r.g.reserve(a.n());
    for (int j = 0; j < a.n(); ++j) r.g.push_back(frac_part(-a.g[j]));
    return r;
}

DiagonalSymmetry pow(const DiagonalSymmetry& a, long long k) {
    DiagonalSymmetry r;
    r.g.reserve(a.n());
    for (int j = 0; j < a.n(); ++j) r.g.push_back(frac_part(Rat((long)k) * a.g[j]));
    return r;
}

long long order(const DiagonalSymmetry& a) {
    Int l(1);
    for (const Rat& x : a.g) l = lcm_int(l, Int(x.get_den()));
    return to_ll(l);
}

bool is_member(const InvertiblePolynomial& w, const DiagonalSymmetry& a) {
    if (a.n() != w.n()) return false;
    for (int i = 0; i < w.n(); ++i) {
        Rat s(0);
        for (int j = 0; j < w.n(); ++j) s += rat_of(w.E.m[i][j]) * a.g[j];
        if (!is_integer(s)) return false;
    }
    return true;
}

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
    const int n = (int)m.size();
    auto nonzero_below = [&](int t) {
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j)
                if (m[i][j] != 0) return std::pair<int, int>{i, j};
        return std::pair<int, int>{-1, -1};
    };
    for (int t = 0; t < n; ++t) {
        auto [pi, pj] = nonzero_below(t);
        if (pi < 0) break;
        std::swap(m[t], m[pi]);
        for (int i = 0; i < n; ++i) std::swap(m[i][t], m[i][pj]);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < n; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (int j = t; j < n; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[i], m[t]);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                for (int i = t; i < n; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (int i = t; i < n; ++i) std::swap(m[i][j], m[i][t]);
                    dirty = true;
                }
            }
            if (!dirty) {
                // the pivot must divide the whole trailing block
                for (int i = t + 1; i < n && !dirty; ++i)
                    for (int j = t + 1; j < n && !dirty; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (int k = t; k < n; ++k) m[t][k] += m[i][k];
                            dirty = true;
                        }
            }
        }
    }
    std::vector<Int> d;
    for (int t = 0; t < n; ++t) {
        Int v = abs(m[t][t]);
        if (v != 0) d.push_back(v);
    }
    return d;
}

SymmetryGroup aut_group(const InvertiblePolynomial& w) {
    const int n = w.n();
    SymmetryGroup g;
    g.order = abs(det(w.E));

    std::vector<std::vector<Int>> et(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) et[i][j] = int_of(w.E.m[j][i]);
    auto d = smith_diagonal(std::move(et));
    long long r = 1;
    for (const Int& v : d)
        if (v > 1) {
            g.invariant_factors.push_back(to_ll(v));
            r = to_ll(lcm_int(int_of(r), v));
        }
    std::sort(g.invariant_factors.begin(), g.invariant_factors.end());
    g.exponent_r = r;

    // columns of E^{-1} mod Z: column k solves E x = e_k
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = rat_of(w.E.m[i][j]);
    for (int k = 0; k < n; ++k) {
        std::vector<Rat> b(n, Rat(0));
        b[k] = 1;
        std::vector<Rat> x = solve_linear(A, b);
        DiagonalSymmetry s;
        for (Rat& xi : x) s.g.push_back(frac_part(xi));
        if (!s.is_identity()) g.generators.push_back(std::move(s));
    }
    return g;
}

DiagonalSymmetry grading_element(const InvertiblePolynomial& w) {
    DiagonalSymmetry j;
    for (const Rat& q : w.charges()) j.g.push_back(frac_part(q));
    return j;
}

std::vector<DiagonalSymmetry> enumerate_group(const InvertiblePolynomial& w, long long cap) {
    SymmetryGroup g = aut_group(w);
    if (g.order > int_of(cap))
        throw DomainError("group order " + g.order.get_str() + " exceeds the enumeration cap " +
                          std::to_string(cap));
    std::set<DiagonalSymmetry> seen;
    seen.insert(identity_symmetry(w.n()));
    std::vector<DiagonalSymmetry> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<DiagonalSymmetry> next;
        for (const auto& el : frontier)
            for (const auto& gen : g.generators) {
                DiagonalSymmetry cand = mul(el, gen);
                if (seen.insert(cand).second) next.push_back(std::move(cand));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};  // std::set iterates in lexicographic order
}

std::vector<DiagonalSymmetry> sl_subgroup(const InvertiblePolynomial& w, long long cap) {
    std::vector<DiagonalSymmetry> out;
    for (auto& el : enumerate_group(w, cap)) {
        Rat s(0);
        for (const Rat& x : el.g) s += x;
        if (is_integer(s)) out.push_back(el);
    }
    return out;
}

}  // namespace lgspin
