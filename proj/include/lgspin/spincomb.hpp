#pragma once

#include <vector>

#include "lgspin/statespace.hpp"

namespace lgspin {

// A genus-zero tuple of insertions, each an admissible decorated sector.
struct InsertionTuple {
    std::vector<BasisState> ins;

    int n() const { return (int)ins.size(); }
};

InsertionTuple tuple_of(const InvertiblePolynomial& w,
                        const std::vector<DiagonalSymmetry>& gammas);

// Per-variable combinatorial data of a tuple. Two chi-style counts appear:
//  - minus_ch0[j]   : -Ch0 of the pushforward of L_j on the n-pointed
//                     component of the tuple itself (enters degvir),
//  - minus_ch0_R[j] : -Ch0 of the pushforward of the twisted L^R_j on the
//                     (n+1)-pointed component with the extra insertion
//                     omega(tuple)^{-1} (the I-function bookkeeping).
struct SpinNumerics {
    int n = 0;
    int N = 0;
    std::vector<std::vector<Rat>> GammaR;  // [i][j]
    DiagonalSymmetry omega;
    std::vector<Rat> omegaR;
    std::vector<long long> DR;
    std::vector<long long> minus_ch0_R;
    std::vector<long long> minus_ch0;
    std::vector<int> r;  // crossed-point count per variable
    long long degvir = 0;
};

// 1 when the insertion is crossed at x_j (and, for the canonical chain
// decoration, exactly when N-j is even and the entry is broad), else Gamma_j.
Rat gamma_R(const InvertiblePolynomial& w, int j, const BasisState& insertion);

// The unique symmetry making the extended (n+1)-tuple satisfy the selection
// rule: omega_j = gamma_j(1)...gamma_j(n) * exp(2 pi i q_j (1-n)).
DiagonalSymmetry omega_last(const InvertiblePolynomial& w,
                            const std::vector<DiagonalSymmetry>& gammas);

bool selection_ok(const InvertiblePolynomial& w, const std::vector<DiagonalSymmetry>& gammas,
                  int genus = 0);

SpinNumerics numerics(const InvertiblePolynomial& w, const InsertionTuple& tuple,
                      bool require_selection = true);

// Sufficient concavity test: the weight divides the degree and every broad
// point of x_j is crossed.
bool concave(const InvertiblePolynomial& w, int j, const InsertionTuple& tuple);

// lambda-exponent assignment: k_j = 1 at seeds, k_{t(j)} = -a_j k_j along
// non-concave edges. For 3-point tuples the concavity test is sharpened to
// the exact cohomological criterion (the moduli space has no boundary there).
// Throws when some connected component has no concave seed.
std::vector<long long> lambda_assignment(const InvertiblePolynomial& w,
                                         const InsertionTuple& tuple);
std::vector<long long> lambda_assignment(const InvertiblePolynomial& w,
                                         const InsertionTuple& tuple, const SpinNumerics& sn);

// Global chain assignment k_j = (-a_1)...(-a_{j-1}), used by the twisted
// I-function route.
std::vector<long long> chain_lambda_exponents(const InvertiblePolynomial& w);

}  // namespace lgspin
