#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgspin {

using Rat = mpq_class;
using Int = mpz_class;

// Error for violated mathematical preconditions (inapplicable hypotheses,
// non-invertible inputs, ...). The message names the violated condition so
// the CLI can surface it verbatim.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// gmpxx has no long long constructors; funnel through long (LP64)
inline Int int_of(long long v) { return Int((long)v); }
inline Rat rat_of(long long v) { return Rat((long)v); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// fractional part in [0,1)
inline Rat frac_part(const Rat& x) {
    Rat f = x - Rat(floor_rat(x));
    f.canonicalize();
    return f;
}

inline long long to_ll(const Int& z) {
    if (!z.fits_slong_p()) throw DomainError("integer overflow: value does not fit in a machine word");
    return z.get_si();
}

inline long long to_ll(const Rat& x) {
    if (!is_integer(x)) throw DomainError("expected an integer rational");
    return to_ll(Int(x.get_num()));
}

inline Rat pow_rat(const Rat& x, long long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? x : Rat(1) / x;
    unsigned long long n = e > 0 ? (unsigned long long)e : (unsigned long long)(-e);
    Rat acc(1);
    while (n) {
        if (n & 1ULL) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

// "p/q" with q omitted when 1; exact, never floating point
inline std::string rat_str(const Rat& x) {
    if (is_integer(x)) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int num(s);
            Rat r(num);
            r.canonicalize();
            return r;
        }
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational '" + s + "'");
    }
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int g, l;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g == 0) return Int(0);
    l = a / g * b;
    return abs(l);
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int binomial_int(long long n, long long k) {
    if (k < 0) return Int(0);
    Int b;
    if (n >= 0) {
        if (k > n) return Int(0);
        mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
        return b;
    }
    // binomial(n,k) = (-1)^k binomial(k-n-1, k) for n < 0
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)(k - n - 1), (unsigned long)k);
    return (k % 2) ? Int(-b) : b;
}

inline Int factorial_int(long long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), (unsigned long)n);
    return f;
}

// Solve A x = b exactly by Gaussian elimination; A square non-singular.
inline std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    const size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) throw DomainError("singular linear system");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat f = A[r][col] / A[col][col];
            for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

}  // namespace lgspin
