#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lgspin/charclass.hpp"

namespace lgspin {

// Multivariate power series with exact rational coefficients, truncated at a
// total order. Variables are the coordinates of the chosen parameter states.
struct ParamSeries {
    int nvars = 0;
    int max_order = 0;
    std::map<std::vector<unsigned>, Rat> c;

    static ParamSeries zero(int nvars, int max_order);
    static ParamSeries constant(const Rat& v, int nvars, int max_order);
    static ParamSeries variable(int i, int nvars, int max_order);

    bool is_zero() const { return c.empty(); }
    Rat coeff(const std::vector<unsigned>& key) const;
    Rat constant_term() const;
    void add(const std::vector<unsigned>& key, const Rat& v);

    ParamSeries operator+(const ParamSeries& o) const;
    ParamSeries operator-(const ParamSeries& o) const;
    ParamSeries operator*(const ParamSeries& o) const;
    ParamSeries operator*(const Rat& s) const;
    ParamSeries divide_by_unit(const ParamSeries& o) const;
    // division allowing a common power of the single variable (nvars == 1)
    ParamSeries divide_univariate(const ParamSeries& o) const;
    // substitute variable i -> subs[i] (each with zero constant term)
    ParamSeries compose(const std::vector<ParamSeries>& subs) const;
};

// Inverse of a system tau_i = u_i + (higher order): returns sigma with
// tau(sigma(s)) = s through the truncation order.
std::vector<ParamSeries> invert_map(const std::vector<ParamSeries>& tau);

// Element of the Givental space: finite z-Laurent object whose coefficients
// are state vectors with ParamSeries scalars.
struct ZSeries {
    int nvars = 0;
    int max_order = 0;
    std::map<int, std::map<BasisState, ParamSeries>> z;  // z-power -> state -> scalar

    void add(int zpow, const BasisState& e, const ParamSeries& v);
};

// Scalar data of one I-function tuple: the product of the per-variable
// factors, its z-power, and the output sector.
struct TupleTerm {
    Rat coeff;
    long long zpow = 0;
    DiagonalSymmetry omega;
};

TupleTerm tuple_term(const InvertiblePolynomial& w, const std::vector<BasisState>& ins);

struct BigIOptions {
    int n_max = 6;
    int threads = 1;
};

// Big I-function over the span of the parameter states (chain polynomials).
ZSeries big_I(const InvertiblePolynomial& w, const std::vector<BasisState>& params,
              const BigIOptions& opt);

// Small I-function I(t,-z) evaluated coefficientwise from the closed formula.
ZSeries small_I(const InvertiblePolynomial& w, int t_order);

// Applies the weighted hypergeometric annihilator; true iff every coefficient
// vanishes through t^order.
bool pf_check(const InvertiblePolynomial& w, const ZSeries& I, int order);

struct SplitI {
    ParamSeries omega0;                                    // scalar along the unit sector
    std::vector<std::map<BasisState, ParamSeries>> parts;  // omega_1, omega_2, ...
};

SplitI split_I(const InvertiblePolynomial& w, const ZSeries& I);

struct MirrorData {
    std::vector<BasisState> params;
    std::vector<ParamSeries> tau;       // mirror map components, aligned with params
    std::vector<ParamSeries> tau_inv;   // inverse map
    std::map<BasisState, ParamSeries> j_zminus1;  // z^{-1} part of J after the mirror map
};

MirrorData mirror_map_and_J(const InvertiblePolynomial& w, const std::vector<BasisState>& params,
                            const ZSeries& I);

struct CorrelatorTarget {
    std::map<BasisState, int> insertions;  // multiset of parameter states
    BasisState last;
};

struct CorrelatorValue {
    Rat value;
    bool broad_final = false;
};

std::vector<CorrelatorValue> extract_correlators(const InvertiblePolynomial& w,
                                                 const std::vector<BasisState>& params,
                                                 const std::vector<CorrelatorTarget>& targets,
                                                 const BigIOptions& opt);

// Default parameter set: every degree-2 narrow state whose sector lies in the
// subgroup generated by the seeds and the grading element. The mirror map of
// a big I-function over these states stays inside their span.
std::vector<BasisState> default_parameter_states(const InvertiblePolynomial& w,
                                                 const std::vector<BasisState>& seeds,
                                                 long long cap = 100000);

// Twisted-I oracle: evaluates the per-tuple factor product exactly in the
// ring of z-Laurent series graded by eps-order (lambda = (1+eps)^{-1},
// lambda_j = lambda^{(-a_1)...(-a_{j-1})}), takes the eps -> 0 slice and
// compares it against the closed-form factor product of the same tuple.
struct OracleReport {
    bool match = false;
    Rat expected_coeff;
    long long expected_zpow = 0;
    std::string detail;
};

OracleReport twisted_I_oracle(const InvertiblePolynomial& w, const std::vector<BasisState>& ins);

}  // namespace lgspin
