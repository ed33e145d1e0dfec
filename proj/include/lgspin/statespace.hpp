#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lgspin/symmetry.hpp"

namespace lgspin {

// A decoration of the polynomial graph for the sector gamma: a subset of the
// broad vertices, stored as a bitmask. Admissibility: every uncrossed broad
// vertex is followed by a crossed one, every crossed vertex by itself or by an
// uncrossed one.
struct Decoration {
    DiagonalSymmetry gamma;
    uint32_t crossed = 0;

    bool is_crossed(int j) const { return (crossed >> j) & 1u; }
};

// Basis label of the state space. zero_flag marks admissible but unbalanced
// decorations, whose basis vector is the zero vector by convention.
struct BasisState {
    Decoration dec;
    bool zero_flag = false;

    const DiagonalSymmetry& gamma() const { return dec.gamma; }
};

bool operator==(const BasisState& a, const BasisState& b);
bool operator<(const BasisState& a, const BasisState& b);

// Exact linear combination of basis states (the rescaled broad-sector basis
// with all rescaling constants set to 1). Zero-flag states never appear.
struct StateVector {
    std::map<BasisState, Rat> terms;

    void add(const BasisState& e, const Rat& c);
    StateVector& operator+=(const StateVector& o);
    StateVector& operator*=(const Rat& c);
    bool is_zero() const { return terms.empty(); }
};

uint32_t broad_mask(const DiagonalSymmetry& gamma);
std::vector<int> broad_set(const DiagonalSymmetry& gamma);

bool is_admissible(const InvertiblePolynomial& w, const Decoration& d);
bool is_balanced(const InvertiblePolynomial& w, const Decoration& d);

// All admissible decorations of gamma as basis states (crossed mask
// ascending), with zero_flag set on the unbalanced ones.
std::vector<BasisState> decorations(const InvertiblePolynomial& w, const DiagonalSymmetry& gamma);

// The single admissible decoration when it is unique (always for chain
// polynomials and for narrow sectors); throws if absent or ambiguous.
BasisState unique_state(const InvertiblePolynomial& w, const DiagonalSymmetry& gamma);

Rat degree(const InvertiblePolynomial& w, const BasisState& e);
Rat pairing(const InvertiblePolynomial& w, const BasisState& e1, const BasisState& e2);
Rat pairing(const InvertiblePolynomial& w, const StateVector& v, const BasisState& e);

// Dual basis vector: pairing(dual(e), e) = 1 and 0 against the other basis
// states. Computed from the (gamma, gamma^{-1}) Gram block; on chains this is
// the closed-form multiple of the state of gamma^{-1}.
StateVector dual(const InvertiblePolynomial& w, const BasisState& e);

}  // namespace lgspin
