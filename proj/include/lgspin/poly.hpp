#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgspin/rational.hpp"

namespace lgspin {

// Square matrix of monomial exponents of an invertible polynomial
// W = sum_j x_j^{a_j} x_{t(j)}. Rows are kept owner-aligned: row j is the
// monomial whose leading variable is x_j. Validation enforces:
//   - as many monomials as variables, integer determinant != 0,
//   - each row of the shape x_j^{a_j} x_{t(j)} (at most two non-zero entries),
//   - every diagonal entry >= 2.
struct ExponentMatrix {
    int n = 0;
    std::vector<std::vector<long long>> m;

    long long at(int row, int col) const { return m[row][col]; }
};

struct WeightSystem {
    std::vector<long long> weights;  // coprime positive integers
    long long degree = 0;
    std::vector<Rat> charges;  // w_j / d
};

struct AtomicComponent {
    enum class Kind { Fermat, Chain, Loop };
    Kind kind;
    std::vector<int> vars;        // 0-based variable indices, in arrow order
    std::vector<long long> exps;  // a-values; Fermat(a) means monomial x^{a+1},
                                  // Chain(..., a_c) means tail monomial x_c^{a_c+1}
};

struct AtomicDecomposition {
    std::vector<AtomicComponent> components;  // ordered by smallest member index
};

// t/s maps of the polynomial graph; s(k) = -1 encodes "-infinity".
struct PolyGraph {
    std::vector<int> t;
    std::vector<int> s;
    std::vector<long long> a;
};

const char* kind_name(AtomicComponent::Kind k);

ExponentMatrix make_exponent_matrix(int n, std::vector<std::vector<long long>> rows);
ExponentMatrix parse_polynomial(const std::string& text);
Int det(const ExponentMatrix& e);
WeightSystem weight_system(const ExponentMatrix& e);
AtomicDecomposition decompose(const ExponentMatrix& e);
PolyGraph poly_graph(const ExponentMatrix& e);
ExponentMatrix mirror(const ExponentMatrix& e);
std::string to_text(const ExponentMatrix& e);

// Everything derived from one parse, shared by the downstream modules.
struct InvertiblePolynomial {
    std::string text;
    ExponentMatrix E;
    WeightSystem ws;
    AtomicDecomposition decomposition;
    PolyGraph graph;
    std::vector<int> comp_of;  // variable -> component index
    // true when W contains monomials x^a y + y^2 or x^a y + y^2 x; such inputs
    // parse fine but correlator extraction refuses them (the broad-sector
    // rescaling they would need is not available).
    bool excluded_shape = false;

    int n() const { return E.n; }
    long long degree() const { return ws.degree; }
    const std::vector<Rat>& charges() const { return ws.charges; }
    long long a(int j) const { return graph.a[j]; }
    int t(int j) const { return graph.t[j]; }
    int s(int j) const { return graph.s[j]; }

    bool is_calabi_yau() const;
    Rat central_charge() const;  // sum_j (1 - 2 q_j)
    bool is_chain() const;       // single chain component
};

InvertiblePolynomial analyze(const std::string& text);
InvertiblePolynomial analyze(const ExponentMatrix& e);

}  // namespace lgspin
