#include "lgspin/spincomb.hpp"

namespace lgspin {

InsertionTuple tuple_of(const InvertiblePolynomial& w,
                        const std::vector<DiagonalSymmetry>& gammas) {
    InsertionTuple t;
    for (const auto& g : gammas) t.ins.push_back(unique_state(w, g));
    return t;
}

Rat gamma_R(const InvertiblePolynomial& w, int j, const BasisState& insertion) {
    (void)w;
    if (insertion.dec.is_crossed(j)) return Rat(1);
    return insertion.gamma().g[j];
}

DiagonalSymmetry omega_last(const InvertiblePolynomial& w,
                            const std::vector<DiagonalSymmetry>& gammas) {
    const int n = (int)gammas.size();
    DiagonalSymmetry o;
    for (int j = 0; j < w.n(); ++j) {
        Rat s = w.charges()[j] * Rat(1 - n);
        for (const auto& g : gammas) s += g.g[j];
        o.g.push_back(frac_part(s));
    }
    return o;
}

bool selection_ok(const InvertiblePolynomial& w, const std::vector<DiagonalSymmetry>& gammas,
                  int genus) {
    const long exp = 2 * genus - 2 + (long)gammas.size();
    for (int j = 0; j < w.n(); ++j) {
        Rat s(0);
        for (const auto& g : gammas) s += g.g[j];
        s -= Rat(exp) * w.charges()[j];
        if (!is_integer(s)) return false;
    }
    return true;
}

namespace {

// -Ch0(Rpi_* L) on a genus-zero component with the given point data:
// chi = deg|L| + 1 with deg|L| = q*(2g-2+n) - sum_i Gamma_i, so
// -Ch0 = -1 - q*(n-2) + sum_i Gamma_i. Gamma entries may use the
// representative 1 instead of 0 (crossed points), which twists L down.
long long minus_ch0_genus0(const Rat& q, const std::vector<Rat>& gammas) {
    Rat v = Rat(-1) - q * Rat((long)gammas.size() - 2);
    for (const Rat& g : gammas) v += g;
    if (!is_integer(v)) throw DomainError("selection rule violated: non-integral Euler characteristic");
    return to_ll(v);
}

}  // namespace

SpinNumerics numerics(const InvertiblePolynomial& w, const InsertionTuple& tuple,
                      bool require_selection) {
    const int n = tuple.n();
    const int N = w.n();
    std::vector<DiagonalSymmetry> gammas;
    for (const auto& e : tuple.ins) gammas.push_back(e.gamma());
    if (require_selection && !selection_ok(w, gammas))
        throw DomainError("selection rule violated: the product of the insertions is not the required power of the grading element");

    SpinNumerics sn;
    sn.n = n;
    sn.N = N;
    sn.omega = omega_last(w, gammas);
    sn.GammaR.assign(n, std::vector<Rat>(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) sn.GammaR[i][j] = gamma_R(w, j, tuple.ins[i]);

    sn.omegaR.resize(N);
    for (int j = 0; j < N; ++j) {
        bool even = ((N - (j + 1)) % 2) == 0;
        if (even && sn.omega.g[j] == 0)
            sn.omegaR[j] = Rat(1);
        else
            sn.omegaR[j] = sn.omega.g[j];
    }

    sn.DR.resize(N);
    sn.minus_ch0_R.resize(N);
    sn.minus_ch0.resize(N);
    sn.r.resize(N);
    sn.degvir = 0;
    for (int j = 0; j < N; ++j) {
        const Rat q = w.charges()[j];
        // sum form of D^R
        Rat sum = q - sn.omegaR[j];
        for (int i = 0; i < n; ++i) sum += sn.GammaR[i][j] - q;
        if (!is_integer(sum)) throw DomainError("D^R is not an integer; inconsistent multiplicities");
        sn.DR[j] = to_ll(sum);
        // floor form must agree
        Rat acc = q;
        for (int i = 0; i < n; ++i) acc += sn.GammaR[i][j] - q;
        long long floor_form = to_ll(floor_rat(acc)) - to_ll(floor_rat(sn.omegaR[j]));
        if (floor_form != sn.DR[j])
            throw DomainError("internal: the two D^R expressions disagree");

        int sign = ((N - (j + 1)) % 2 == 0) ? 1 : -1;
        sn.minus_ch0_R[j] = sn.DR[j] + (sn.omega.g[j] == 0 ? sign : 0);
        // independent chi computation on the extended (n+1)-tuple
        {
            std::vector<Rat> pts;
            for (int i = 0; i < n; ++i) pts.push_back(sn.GammaR[i][j]);
            Rat om = sn.omega.g[j];
            Rat last = (om == 0) ? Rat(0) : Rat(1) - om;  // Gamma of omega^{-1}
            bool even = ((N - (j + 1)) % 2) == 0;
            if (even && om == 0) last = Rat(1);
            pts.push_back(last);
            long long chi = minus_ch0_genus0(q, pts);
            if (chi != sn.minus_ch0_R[j])
                throw DomainError("internal: Ch0 relation violated");
        }

        sn.r[j] = 0;
        std::vector<Rat> plain;
        for (int i = 0; i < n; ++i) {
            if (tuple.ins[i].dec.is_crossed(j)) ++sn.r[j];
            plain.push_back(gammas[i].g[j]);
        }
        if (require_selection) {
            sn.minus_ch0[j] = minus_ch0_genus0(q, plain);
            sn.degvir += sn.minus_ch0[j] + sn.r[j];
        } else {
            sn.minus_ch0[j] = 0;
        }
    }
    return sn;
}

bool concave(const InvertiblePolynomial& w, int j, const InsertionTuple& tuple) {
    if (w.degree() % w.ws.weights[j] != 0) return false;
    for (const auto& e : tuple.ins)
        if (e.gamma().g[j] == 0 && !e.dec.is_crossed(j)) return false;
    return true;
}

std::vector<long long> lambda_assignment(const InvertiblePolynomial& w,
                                         const InsertionTuple& tuple) {
    return lambda_assignment(w, tuple, numerics(w, tuple));
}

std::vector<long long> lambda_assignment(const InvertiblePolynomial& w,
                                         const InsertionTuple& tuple, const SpinNumerics& sn) {
    const int N = w.n();
    std::vector<bool> conc(N);
    for (int j = 0; j < N; ++j) conc[j] = concave(w, j, tuple);
    for (const auto& comp : w.decomposition.components) {
        bool has = false;
        for (int v : comp.vars) has = has || conc[v];
        if (has) continue;
        // With three marked points the moduli space has no boundary and
        // concavity is the exact cohomological test -Ch0(Rpi_* L^R_j) >= 0;
        // fall back to it when the sufficient test leaves the component
        // without a seed.
        if (sn.n == 3) {
            for (int v : comp.vars)
                if (sn.minus_ch0[v] + sn.r[v] >= 0) {
                    conc[v] = true;
                    has = true;
                }
        }
        if (!has)
            throw DomainError(
                "no concave variable in a connected component of the graph; the limit formula "
                "for the virtual class does not apply");
    }
    // k_j = 1 unless j has a non-concave predecessor p (t(p) = j, p != j),
    // in which case k_j = -a_p k_p; acyclic by the seed condition.
    std::vector<long long> k(N, 0);
    std::vector<int> state(N, 0);
    auto assign = [&](auto&& self, int j) -> long long {
        if (state[j] == 1) throw DomainError("cyclic non-concave assignment");
        if (state[j] == 2) return k[j];
        state[j] = 1;
        int p = w.s(j);
        long long val = 1;
        if (p >= 0 && !conc[p]) {
            long long kp = self(self, p);
            val = -w.a(p) * kp;
            if (val > (1LL << 40) || val < -(1LL << 40)) throw DomainError("lambda exponent overflow");
        }
        k[j] = val;
        state[j] = 2;
        return val;
    };
    for (int j = 0; j < N; ++j) assign(assign, j);
    return k;
}

std::vector<long long> chain_lambda_exponents(const InvertiblePolynomial& w) {
    if (!w.is_chain()) throw DomainError("global lambda exponents are defined for chain polynomials");
    std::vector<long long> k(w.n());
    long long acc = 1;
    const auto& comp = w.decomposition.components[0];
    for (size_t i = 0; i < comp.vars.size(); ++i) {
        k[comp.vars[i]] = acc;
        acc *= -w.a(comp.vars[i]);
    }
    return k;
}

}  // namespace lgspin
