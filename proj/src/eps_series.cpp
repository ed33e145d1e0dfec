#include "lgspin/eps_series.hpp"

#include <algorithm>
#include <limits>

namespace lgspin {

namespace {
constexpr int kExactTop = 1 << 28;  // window top of the exact zero series
}

EpsSeries make_series(int lo, int hi, std::vector<Rat> c) {
    EpsSeries s;
    s.lo_ = lo;
    s.hi_ = hi;
    s.c_ = std::move(c);
    s.trim();
    return s;
}

void EpsSeries::trim() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        return;
    }
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + lead);
        lo_ += (int)lead;
    }
    while (!c_.empty() && c_.back() == 0 && lo_ + (int)c_.size() - 1 > hi_) c_.pop_back();
}

EpsSeries EpsSeries::constant(const Rat& v, int top) {
    if (v == 0) {
        EpsSeries z;
        z.hi_ = kExactTop;
        return z;
    }
    return make_series(0, top, {v});
}

EpsSeries EpsSeries::monomial(const Rat& v, int exponent, int top) {
    if (v == 0) return constant(Rat(0), top);
    return make_series(exponent, top, {v});
}

EpsSeries EpsSeries::one_plus_eps_pow(long long k, int top) {
    std::vector<Rat> c;
    c.reserve(top + 1);
    for (int i = 0; i <= top; ++i) c.emplace_back(binomial_int(k, i));
    return make_series(0, top, std::move(c));
}

EpsSeries EpsSeries::one_minus_lambda(long long k, int top) {
    if (k == 0) return constant(Rat(0), top);
    return constant(Rat(1), top) - lambda_pow(k, top);
}

EpsSeries EpsSeries::x_over_one_minus_x(long long k, int top) {
    if (k == 0) throw DomainError("x/(1-x) undefined for the trivial exponent");
    return (one_plus_eps_pow(k, top) - constant(Rat(1), top)).inverse();
}

int EpsSeries::valuation() const {
    if (c_.empty()) throw DomainError("valuation of a series that vanishes through its tracked window");
    return lo_;
}

Rat EpsSeries::coeff(int exponent) const {
    if (exponent > hi_) throw DomainError("coefficient beyond tracked order");
    if (exponent < lo_ || exponent >= lo_ + (int)c_.size()) return Rat(0);
    return c_[exponent - lo_];
}

EpsSeries EpsSeries::operator-() const {
    EpsSeries r = *this;
    for (Rat& v : r.c_) v = -v;
    return r;
}

EpsSeries EpsSeries::operator+(const EpsSeries& o) const {
    if (c_.empty()) {
        EpsSeries r = o;
        r.hi_ = std::min(hi_, o.hi_);
        r.trim();
        return r;
    }
    if (o.c_.empty()) {
        EpsSeries r = *this;
        r.hi_ = std::min(hi_, o.hi_);
        r.trim();
        return r;
    }
    int lo = std::min(lo_, o.lo_);
    int hi = std::min(hi_, o.hi_);
    if (hi < lo) throw DomainError("series windows do not overlap");
    std::vector<Rat> c(hi - lo + 1, Rat(0));
    for (int e = lo; e <= hi; ++e) {
        if (e >= lo_ && e < lo_ + (int)c_.size()) c[e - lo] += c_[e - lo_];
        if (e >= o.lo_ && e < o.lo_ + (int)o.c_.size()) c[e - lo] += o.c_[e - o.lo_];
    }
    return make_series(lo, hi, std::move(c));
}

EpsSeries EpsSeries::operator-(const EpsSeries& o) const { return *this + (-o); }

EpsSeries EpsSeries::operator*(const EpsSeries& o) const {
    if (c_.empty() || o.c_.empty()) {
        EpsSeries z;
        z.hi_ = kExactTop;
        if (!(c_.empty() && hi_ == kExactTop) && !(o.c_.empty() && o.hi_ == kExactTop))
            z.hi_ = std::min(hi_ + (o.c_.empty() ? 0 : o.lo_), o.hi_ + (c_.empty() ? 0 : lo_));
        return z;
    }
    int lo = lo_ + o.lo_;
    int hi = std::min(hi_ + o.lo_, o.hi_ + lo_);
    if (hi < lo) throw DomainError("series windows do not overlap in product");
    std::vector<Rat> c(hi - lo + 1, Rat(0));
    for (int i = 0; i < (int)c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < (int)o.c_.size(); ++j) {
            int e = lo_ + i + o.lo_ + j;
            if (e > hi) break;
            c[e - lo] += c_[i] * o.c_[j];
        }
    }
    return make_series(lo, hi, std::move(c));
}

EpsSeries EpsSeries::operator*(const Rat& s) const {
    if (s == 0) return constant(Rat(0), hi_);
    EpsSeries r = *this;
    for (Rat& v : r.c_) v *= s;
    return r;
}

EpsSeries EpsSeries::inverse() const {
    if (c_.empty()) throw DomainError("cannot invert a series that vanishes through its tracked window");
    const int v = lo_;
    const int top = hi_ - 2 * v;  // exponents of the inverse known through here
    const int len = top + v + 1;  // coefficients of eps^{-v}..eps^{top}
    if (len <= 0) throw DomainError("window too small to invert");
    std::vector<Rat> b(len, Rat(0));
    b[0] = Rat(1) / c_[0];
    for (int m = 1; m < len; ++m) {
        Rat acc(0);
        for (int i = 1; i <= m && i < (int)c_.size(); ++i) acc += c_[i] * b[m - i];
        b[m] = -acc / c_[0];
    }
    return make_series(-v, top, std::move(b));
}

EpsSeries EpsSeries::pow_int(long long e) const {
    if (e == 0) return constant(Rat(1), hi_);
    EpsSeries base = e > 0 ? *this : inverse();
    unsigned long long n = e > 0 ? (unsigned long long)e : (unsigned long long)(-e);
    EpsSeries acc = base;
    --n;
    while (n) {
        acc = acc * base;
        --n;
    }
    return acc;
}

Rat EpsSeries::limit_at_zero() const {
    if (c_.empty()) {
        if (hi_ < 0) throw DomainError("limit beyond tracked order");
        return Rat(0);
    }
    if (lo_ < 0)
        throw DomainError("negative eps-valuation: the lambda -> 1 limit diverges");
    if (hi_ < 0) throw DomainError("limit beyond tracked order");
    return coeff(0);
}

}  // namespace lgspin
