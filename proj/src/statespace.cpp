#include "lgspin/statespace.hpp"

#include <algorithm>

namespace lgspin {

bool operator==(const BasisState& a, const BasisState& b) {
    return a.zero_flag == b.zero_flag && a.dec.crossed == b.dec.crossed &&
           a.dec.gamma == b.dec.gamma;
}

bool operator<(const BasisState& a, const BasisState& b) {
    if (a.dec.gamma != b.dec.gamma) return a.dec.gamma < b.dec.gamma;
    if (a.dec.crossed != b.dec.crossed) return a.dec.crossed < b.dec.crossed;
    return a.zero_flag < b.zero_flag;
}

void StateVector::add(const BasisState& e, const Rat& c) {
    if (e.zero_flag || c == 0) return;
    Rat& slot = terms[e];
    slot += c;
    if (slot == 0) terms.erase(e);
}

StateVector& StateVector::operator+=(const StateVector& o) {
    for (const auto& [e, c] : o.terms) add(e, c);
    return *this;
}

StateVector& StateVector::operator*=(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [e, v] : terms) v *= c;
    return *this;
}

uint32_t broad_mask(const DiagonalSymmetry& gamma) {
    uint32_t m = 0;
    for (int j = 0; j < gamma.n(); ++j)
        if (gamma.g[j] == 0) m |= (1u << j);
    return m;
}

std::vector<int> broad_set(const DiagonalSymmetry& gamma) {
    std::vector<int> s;
    for (int j = 0; j < gamma.n(); ++j)
        if (gamma.g[j] == 0) s.push_back(j);
    return s;
}

bool is_admissible(const InvertiblePolynomial& w, const Decoration& d) {
    uint32_t broad = broad_mask(d.gamma);
    if (d.crossed & ~broad) return false;  // only broad vertices carry crosses
    for (int j = 0; j < w.n(); ++j) {
        if (!((broad >> j) & 1u)) continue;
        int tj = w.t(j);
        if (d.is_crossed(j)) {
            if (tj != j && d.is_crossed(tj)) return false;
        } else {
            if (!d.is_crossed(tj)) return false;
        }
    }
    return true;
}

bool is_balanced(const InvertiblePolynomial& w, const Decoration& d) {
    uint32_t broad = broad_mask(d.gamma);
    for (const auto& comp : w.decomposition.components) {
        int crossed = 0, uncrossed = 0;
        for (int j : comp.vars) {
            if (!((broad >> j) & 1u)) continue;
            (d.is_crossed(j) ? crossed : uncrossed)++;
        }
        if (crossed != uncrossed) return false;
    }
    return true;
}

std::vector<BasisState> decorations(const InvertiblePolynomial& w, const DiagonalSymmetry& gamma) {
    if (!is_member(w, gamma)) throw DomainError("symmetry is not a diagonal automorphism of W");
    uint32_t broad = broad_mask(gamma);
    std::vector<BasisState> out;
    // iterate subsets of the broad mask in ascending bitmask order
    uint32_t sub = 0;
    while (true) {
        Decoration d{gamma, sub};
        if (is_admissible(w, d)) out.push_back(BasisState{d, !is_balanced(w, d)});
        if (sub == broad) break;
        sub = (sub - broad) & broad;  // next subset
    }
    std::sort(out.begin(), out.end(), [](const BasisState& a, const BasisState& b) {
        return a.dec.crossed < b.dec.crossed;
    });
    return out;
}

BasisState unique_state(const InvertiblePolynomial& w, const DiagonalSymmetry& gamma) {
    auto all = decorations(w, gamma);
    if (all.empty()) throw DomainError("sector has no admissible decoration");
    if (all.size() > 1)
        throw DomainError("sector has several admissible decorations; specify the crossed set");
    return all[0];
}

Rat degree(const InvertiblePolynomial& w, const BasisState& e) {
    const auto& g = e.gamma();
    Rat d(0);
    int card = 0;
    for (int j = 0; j < w.n(); ++j) {
        if (g.g[j] == 0) ++card;
        d += g.g[j] - w.charges()[j];
    }
    return Rat(card) + Rat(2) * d;
}

Rat pairing(const InvertiblePolynomial& w, const BasisState& e1, const BasisState& e2) {
    if (e1.zero_flag || e2.zero_flag) return Rat(0);
    if (e2.gamma() != inv(e1.gamma())) return Rat(0);
    uint32_t broad = broad_mask(e1.gamma());
    Rat p(1);
    for (int j = 0; j < w.n(); ++j) {
        if (!((broad >> j) & 1u)) continue;
        if (e1.dec.is_crossed(j) || e2.dec.is_crossed(j)) continue;
        p *= rat_of(-w.a(j));
    }
    return p;
}

Rat pairing(const InvertiblePolynomial& w, const StateVector& v, const BasisState& e) {
    Rat p(0);
    for (const auto& [s, c] : v.terms) p += c * pairing(w, s, e);
    return p;
}

StateVector dual(const InvertiblePolynomial& w, const BasisState& e) {
    if (e.zero_flag) throw DomainError("unbalanced decoration labels the zero state; it has no dual");
    auto here = decorations(w, e.gamma());
    auto there = decorations(w, inv(e.gamma()));
    std::vector<BasisState> basis_here, basis_there;
    for (auto& s : here)
        if (!s.zero_flag) basis_here.push_back(s);
    for (auto& s : there)
        if (!s.zero_flag) basis_there.push_back(s);
    int pos = -1;
    for (int i = 0; i < (int)basis_here.size(); ++i)
        if (basis_here[i] == e) pos = i;
    if (pos < 0) throw DomainError("state is not a basis state of its sector");

    const int m = (int)basis_here.size();
    if ((int)basis_there.size() != m) throw DomainError("pairing block is not square");
    // G[i][k] = (e_there[i], e_here[k]); solve G x = delta_pos
    std::vector<std::vector<Rat>> G(m, std::vector<Rat>(m));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) G[i][k] = pairing(w, basis_there[i], basis_here[k]);
    // want dual = sum_i x_i e_there[i] with pairing(dual, e_here[k]) = delta[k==pos]
    // i.e. sum_i x_i G[i][k] = delta -> G^T x = delta
    std::vector<std::vector<Rat>> Gt(m, std::vector<Rat>(m));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) Gt[i][k] = G[k][i];
    std::vector<Rat> rhs(m, Rat(0));
    rhs[pos] = 1;
    std::vector<Rat> x = solve_linear(Gt, rhs);
    StateVector out;
    for (int i = 0; i < m; ++i) out.add(basis_there[i], x[i]);
    return out;
}

}  // namespace lgspin
