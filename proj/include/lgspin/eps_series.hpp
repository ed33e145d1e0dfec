#pragma once

#include <vector>

#include "lgspin/rational.hpp"

namespace lgspin {

// Exact truncated Laurent series in eps, where lambda = (1+eps)^{-1}.
// Coefficients are tracked for exponents lo..hi (inclusive); hi is the
// truncation order and shrinks under multiplication of shifted windows.
class EpsSeries {
public:
    EpsSeries() = default;  // exact zero

    static EpsSeries zero() { return EpsSeries(); }
    static EpsSeries constant(const Rat& v, int top);
    static EpsSeries monomial(const Rat& v, int exponent, int top);
    // (1+eps)^k for any integer k
    static EpsSeries one_plus_eps_pow(long long k, int top);
    // lambda = (1+eps)^{-k}
    static EpsSeries lambda_pow(long long k, int top) { return one_plus_eps_pow(-k, top); }
    // 1 - lambda^k ... vanishes identically when k = 0
    static EpsSeries one_minus_lambda(long long k, int top);
    // lambda/(1-lambda) = 1/((1+eps)^k - 1) for lambda = (1+eps)^{-k}, k != 0
    static EpsSeries x_over_one_minus_x(long long k, int top);

    bool is_zero() const { return c_.empty(); }
    int valuation() const;  // throws on exact zero
    int top() const { return hi_; }
    Rat coeff(int exponent) const;

    EpsSeries operator-() const;
    EpsSeries operator+(const EpsSeries& o) const;
    EpsSeries operator-(const EpsSeries& o) const;
    EpsSeries operator*(const EpsSeries& o) const;
    EpsSeries operator*(const Rat& s) const;
    EpsSeries inverse() const;
    EpsSeries pow_int(long long e) const;

    // eps^0 coefficient, legal only when the valuation is >= 0
    Rat limit_at_zero() const;

private:
    int lo_ = 0;
    int hi_ = -1;        // window top; meaningful also for the zero series
    std::vector<Rat> c_;  // c_[i] is the coefficient of eps^{lo_+i}

    void trim();
    friend EpsSeries make_series(int lo, int hi, std::vector<Rat> c);
};

EpsSeries make_series(int lo, int hi, std::vector<Rat> c);

}  // namespace lgspin
