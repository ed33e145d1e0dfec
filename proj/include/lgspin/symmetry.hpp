#pragma once

#include <vector>

#include "lgspin/poly.hpp"
#include "lgspin/rational.hpp"

namespace lgspin {

// A diagonal symmetry gamma = diag(e^{2 pi i G_1}, ..., e^{2 pi i G_N}),
// stored as the exact exponent vector G with components reduced into [0,1).
struct DiagonalSymmetry {
    std::vector<Rat> g;

    int n() const { return (int)g.size(); }
    bool is_identity() const;
    bool broad_at(int j) const { return g[j] == 0; }
};

bool operator==(const DiagonalSymmetry& a, const DiagonalSymmetry& b);
bool operator!=(const DiagonalSymmetry& a, const DiagonalSymmetry& b);
bool operator<(const DiagonalSymmetry& a, const DiagonalSymmetry& b);  // lexicographic

DiagonalSymmetry identity_symmetry(int n);
DiagonalSymmetry mul(const DiagonalSymmetry& a, const DiagonalSymmetry& b);
DiagonalSymmetry inv(const DiagonalSymmetry& a);
DiagonalSymmetry pow(const DiagonalSymmetry& a, long long k);
long long order(const DiagonalSymmetry& a);  // lcm of component denominators
bool is_member(const InvertiblePolynomial& w, const DiagonalSymmetry& a);

struct SymmetryGroup {
    Int order;
    std::vector<long long> invariant_factors;  // ascending, each dividing the next, > 1
    std::vector<DiagonalSymmetry> generators;  // columns of E^{-1} mod Z
    long long exponent_r;                      // smallest l with gamma^l = 1 for all gamma
};

SymmetryGroup aut_group(const InvertiblePolynomial& w);
DiagonalSymmetry grading_element(const InvertiblePolynomial& w);

// All group elements, sorted lexicographically; throws when |Aut| exceeds cap.
std::vector<DiagonalSymmetry> enumerate_group(const InvertiblePolynomial& w,
                                              long long cap = 1000000);
// Elements with sum of exponents integral (determinant-1 subgroup).
std::vector<DiagonalSymmetry> sl_subgroup(const InvertiblePolynomial& w,
                                          long long cap = 1000000);

// Smith normal form diagonal of an integer matrix (non-zero entries, ascending
// divisibility). Exposed for tests.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m);

}  // namespace lgspin
