#include "lgspin/givental.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

namespace lgspin {

// ---------------------------------------------------------------------------
// ParamSeries

ParamSeries ParamSeries::zero(int nvars, int max_order) {
    ParamSeries p;
    p.nvars = nvars;
    p.max_order = max_order;
    return p;
}

ParamSeries ParamSeries::constant(const Rat& v, int nvars, int max_order) {
    ParamSeries p = zero(nvars, max_order);
    if (v != 0) p.c.emplace(std::vector<unsigned>(nvars, 0), v);
    return p;
}

ParamSeries ParamSeries::variable(int i, int nvars, int max_order) {
    ParamSeries p = zero(nvars, max_order);
    std::vector<unsigned> key(nvars, 0);
    key[i] = 1;
    p.c.emplace(std::move(key), Rat(1));
    return p;
}

namespace {
unsigned total(const std::vector<unsigned>& key) {
    unsigned t = 0;
    for (unsigned v : key) t += v;
    return t;
}
}  // namespace

Rat ParamSeries::coeff(const std::vector<unsigned>& key) const {
    auto it = c.find(key);
    return it == c.end() ? Rat(0) : it->second;
}

Rat ParamSeries::constant_term() const { return coeff(std::vector<unsigned>(nvars, 0)); }

void ParamSeries::add(const std::vector<unsigned>& key, const Rat& v) {
    if (v == 0 || total(key) > (unsigned)max_order) return;
    Rat& slot = c[key];
    slot += v;
    if (slot == 0) c.erase(key);
}

namespace {
void purge_above_order(ParamSeries& p) {
    for (auto it = p.c.begin(); it != p.c.end();) {
        unsigned t = 0;
        for (unsigned v : it->first) t += v;
        it = (t > (unsigned)p.max_order) ? p.c.erase(it) : std::next(it);
    }
}
}  // namespace

ParamSeries ParamSeries::operator+(const ParamSeries& o) const {
    ParamSeries r = *this;
    r.max_order = std::min(max_order, o.max_order);
    purge_above_order(r);
    for (const auto& [k, v] : o.c) r.add(k, v);
    return r;
}

ParamSeries ParamSeries::operator-(const ParamSeries& o) const {
    ParamSeries r = *this;
    r.max_order = std::min(max_order, o.max_order);
    purge_above_order(r);
    for (const auto& [k, v] : o.c) r.add(k, -v);
    return r;
}

ParamSeries ParamSeries::operator*(const ParamSeries& o) const {
    ParamSeries r = zero(nvars, std::min(max_order, o.max_order));
    for (const auto& [ka, va] : c) {
        unsigned ta = total(ka);
        for (const auto& [kb, vb] : o.c) {
            if (ta + total(kb) > (unsigned)r.max_order) continue;
            std::vector<unsigned> k(nvars);
            for (int i = 0; i < nvars; ++i) k[i] = ka[i] + kb[i];
            r.add(k, va * vb);
        }
    }
    return r;
}

ParamSeries ParamSeries::operator*(const Rat& s) const {
    ParamSeries r = zero(nvars, max_order);
    if (s == 0) return r;
    for (const auto& [k, v] : c) r.c.emplace(k, v * s);
    return r;
}

ParamSeries ParamSeries::divide_by_unit(const ParamSeries& o) const {
    Rat c0 = o.constant_term();
    if (c0 == 0) throw DomainError("division by a series without unit constant term");
    // o = c0 (1 - q), 1/o = (1/c0) sum q^m
    ParamSeries q = (ParamSeries::constant(c0, o.nvars, o.max_order) - o) * (Rat(1) / c0);
    ParamSeries inv = ParamSeries::constant(Rat(1) / c0, o.nvars, o.max_order);
    ParamSeries qm = ParamSeries::constant(Rat(1) / c0, o.nvars, o.max_order);
    for (int m = 1; m <= o.max_order; ++m) {
        qm = qm * q;
        if (qm.is_zero()) break;
        inv = inv + qm;
    }
    return *this * inv;
}

ParamSeries ParamSeries::divide_univariate(const ParamSeries& o) const {
    if (nvars != 1 || o.nvars != 1) throw DomainError("valuation division is univariate");
    if (o.is_zero()) throw DomainError("division by zero series");
    unsigned v = o.c.begin()->first[0];
    if (v == 0) return divide_by_unit(o);
    ParamSeries num = zero(1, max_order);
    for (const auto& [k, val] : c) {
        if (k[0] < v) throw DomainError("division leaves the power-series ring");
        num.c.emplace(std::vector<unsigned>{k[0] - v}, val);
    }
    ParamSeries den = zero(1, o.max_order);
    for (const auto& [k, val] : o.c) den.c.emplace(std::vector<unsigned>{k[0] - v}, val);
    return num.divide_by_unit(den);
}

ParamSeries ParamSeries::compose(const std::vector<ParamSeries>& subs) const {
    if ((int)subs.size() != nvars) throw DomainError("composition arity mismatch");
    for (const auto& s : subs)
        if (s.constant_term() != 0) throw DomainError("composition requires zero constant terms");
    const int out_vars = subs.empty() ? nvars : subs[0].nvars;
    const int ord = max_order;
    // memoized powers of each substituted series
    std::vector<std::vector<ParamSeries>> pw(nvars);
    for (int i = 0; i < nvars; ++i) pw[i].push_back(ParamSeries::constant(Rat(1), out_vars, ord));
    auto power = [&](int i, unsigned e) -> const ParamSeries& {
        while (pw[i].size() <= e) pw[i].push_back(pw[i].back() * subs[i]);
        return pw[i][e];
    };
    ParamSeries r = zero(out_vars, ord);
    for (const auto& [k, v] : c) {
        ParamSeries term = ParamSeries::constant(v, out_vars, ord);
        for (int i = 0; i < nvars; ++i)
            if (k[i]) term = term * power(i, k[i]);
        r = r + term;
    }
    return r;
}

std::vector<ParamSeries> invert_map(const std::vector<ParamSeries>& tau) {
    const int n = (int)tau.size();
    if (n == 0) return {};
    const int ord = tau[0].max_order;
    for (int i = 0; i < n; ++i) {
        std::vector<unsigned> ei(n, 0);
        ei[i] = 1;
        if (tau[i].coeff(ei) != 1)
            throw DomainError("mirror map linear part is not the identity; cannot invert");
    }
    // h_i := tau_i - u_i has order >= 2; iterate sigma <- s - h(sigma)
    std::vector<ParamSeries> h(n);
    for (int i = 0; i < n; ++i) h[i] = tau[i] - ParamSeries::variable(i, n, ord);
    std::vector<ParamSeries> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = ParamSeries::variable(i, n, ord);
    for (int round = 0; round < ord; ++round) {
        std::vector<ParamSeries> next(n);
        for (int i = 0; i < n; ++i) next[i] = ParamSeries::variable(i, n, ord) - h[i].compose(sigma);
        if (std::equal(next.begin(), next.end(), sigma.begin(),
                       [](const ParamSeries& a, const ParamSeries& b) { return a.c == b.c; }))
            break;
        sigma = std::move(next);
    }
    return sigma;
}

void ZSeries::add(int zpow, const BasisState& e, const ParamSeries& v) {
    if (e.zero_flag || v.is_zero()) return;
    auto& slot = z[zpow];
    auto it = slot.find(e);
    if (it == slot.end())
        slot.emplace(e, v);
    else {
        it->second = it->second + v;
        if (it->second.is_zero()) slot.erase(it);
    }
    if (z[zpow].empty()) z.erase(zpow);
}

// ---------------------------------------------------------------------------
// Tuple factors

TupleTerm tuple_term(const InvertiblePolynomial& w, const std::vector<BasisState>& ins) {
    InsertionTuple t{ins};
    SpinNumerics sn = numerics(w, t, /*require_selection=*/false);
    const int N = w.n();
    TupleTerm out;
    out.omega = sn.omega;
    out.coeff = Rat(1);
    out.zpow = 1 - sn.n;
    bool pending = false;
    for (int j = 0; j < N; ++j) {
        out.zpow += sn.DR[j];
        const Rat& x = sn.omegaR[j];
        if (sn.DR[j] >= 1) {
            long long mstart = 0;
            if (pending) {
                if (x != 0) throw DomainError("internal: convention pair expects omega^R = 0");
                mstart = 1;
                pending = false;
            }
            for (long long m = mstart; m <= sn.DR[j] - 1; ++m) out.coeff *= x + Rat((long)m);
        } else if (pending) {
            throw DomainError("internal: D^R_{j+1} >= 1 must follow a singular pair");
        }
        if (sn.DR[j] <= -1) {
            long long mstart = 1;
            if (x == 1) {
                out.coeff *= rat_of(-w.a(j));
                mstart = 2;
                pending = true;
            }
            for (long long m = mstart; m <= -sn.DR[j]; ++m) out.coeff /= x - Rat((long)m);
        }
    }
    if (pending) throw DomainError("internal: singular pair left open at the last variable");
    return out;
}

// ---------------------------------------------------------------------------
// Big and small I-functions

namespace {

void enumerate_multisets(int nparams, int n_max,
                         const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> counts(nparams, 0);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == nparams) {
            visit(counts);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            counts[idx] = c;
            self(self, idx + 1, left - c);
        }
        counts[idx] = 0;
    };
    rec(rec, 0, n_max);
}

}  // namespace

ZSeries big_I(const InvertiblePolynomial& w, const std::vector<BasisState>& params,
              const BigIOptions& opt) {
    if (!w.is_chain()) throw DomainError("the big I-function closed form applies to chain polynomials");
    const int P = (int)params.size();

    std::vector<std::vector<unsigned>> multisets;
    enumerate_multisets(P, opt.n_max, [&](const std::vector<unsigned>& m) { multisets.push_back(m); });

    struct Piece {
        std::vector<unsigned> key;
        Rat coeff;
        long long zpow;
        BasisState state;
        bool dead = false;
    };
    std::vector<Piece> pieces(multisets.size());

    auto work = [&](size_t lo, size_t hi) {
        for (size_t idx = lo; idx < hi; ++idx) {
            const auto& counts = multisets[idx];
            Piece& pc = pieces[idx];
            pc.key = counts;
            std::vector<BasisState> ins;
            int n = 0;
            for (int p = 0; p < P; ++p)
                for (unsigned c = 0; c < counts[p]; ++c) {
                    ins.push_back(params[p]);
                    ++n;
                }
            TupleTerm tt = tuple_term(w, ins);
            if (tt.coeff == 0) {
                pc.dead = true;
                continue;
            }
            auto states = decorations(w, tt.omega);
            if (states.size() != 1) throw DomainError("output sector decoration is not unique");
            pc.state = states[0];
            if (pc.state.zero_flag) {
                pc.dead = true;
                continue;
            }
            Rat denom(1);
            for (unsigned c : counts)
                if (c > 1) denom *= Rat(factorial_int(c));
            pc.coeff = tt.coeff / denom;
            if (n % 2 == 0) pc.coeff = -pc.coeff;  // (-1)^{n+1}
            pc.zpow = tt.zpow;
        }
    };

    int threads = std::max(1, opt.threads);
    if (threads == 1 || multisets.size() < 16) {
        work(0, multisets.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (multisets.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            size_t lo = t * chunk, hi = std::min(multisets.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    ZSeries out;
    out.nvars = P;
    out.max_order = opt.n_max;
    for (const auto& pc : pieces) {
        if (pc.dead || pc.coeff == 0) continue;
        if (pc.zpow > std::numeric_limits<int>::max() / 4) throw DomainError("z-power overflow");
        ParamSeries mono = ParamSeries::zero(P, opt.n_max);
        mono.add(pc.key, pc.coeff);
        out.add((int)pc.zpow, pc.state, mono);
    }
    return out;
}

ZSeries small_I(const InvertiblePolynomial& w, int t_order) {
    if (!w.is_chain()) throw DomainError("the small I-function applies to chain polynomials");
    const int N = w.n();
    ZSeries out;
    out.nvars = 1;
    out.max_order = t_order;
    DiagonalSymmetry grj = grading_element(w);
    Rat fact(1);  // (k-1)!
    for (int k = 1; k <= t_order; ++k) {
        if (k > 1) fact *= Rat(k - 1);
        DiagonalSymmetry sector = pow(grj, k);
        auto states = decorations(w, sector);
        if (states.size() != 1) throw DomainError("chain sector decoration is not unique");
        if (states[0].zero_flag) continue;
        Rat num(1);
        long long znum = 0;
        for (int j = 0; j < N && num != 0; ++j) {
            Rat target = w.charges()[j] * Rat(k);
            Rat b = frac_part(target);
            bool odd = ((N - (j + 1)) % 2) != 0;
            if (b == 0) {
                // delta_j = -1 on odd positions lets b = 0 in, killing the term
                if (odd) {
                    num = 0;
                    break;
                }
                b = 1;
            }
            for (; b < target; b += 1) {
                num *= b;
                ++znum;
            }
        }
        if (num == 0) continue;
        ParamSeries mono = ParamSeries::zero(1, t_order);
        mono.add({(unsigned)k}, -num / fact);
        out.add((int)(1 + znum - (k - 1)), states[0], mono);
    }
    return out;
}

bool pf_check(const InvertiblePolynomial& w, const ZSeries& I, int order) {
    if (I.nvars != 1) throw DomainError("Picard-Fuchs check expects a single-parameter series");
    const long long d = w.degree();
    // gather coefficients, keyed by t-exponent
    using Slice = std::map<std::pair<int, BasisState>, Rat>;
    std::map<int, Slice> by_t;
    for (const auto& [zp, states] : I.z)
        for (const auto& [e, series] : states)
            for (const auto& [key, v] : series.c) by_t[(int)key[0]][{zp, e}] += v;

    for (int m = 0; m <= order; ++m) {
        Slice lhs;  // t^d prod_j prod_{c=0}^{w_j-1} (q_j t d/dt + c) applied, coefficient at t^m
        if (m >= d) {
            auto it = by_t.find(m - (int)d);
            if (it != by_t.end()) {
                Rat factor(1);
                for (int j = 0; j < w.n(); ++j)
                    for (long long c = 0; c < w.ws.weights[j]; ++c)
                        factor *= w.charges()[j] * Rat((long)(m - d)) + Rat((long)c);
                for (const auto& [k, v] : it->second)
                    if (factor != 0) lhs[k] += factor * v;
            }
        }
        Slice rhs;
        {
            auto it = by_t.find(m);
            if (it != by_t.end()) {
                Rat factor(1);
                for (long long c = 1; c <= d; ++c) factor *= Rat((long)(m - c));
                for (const auto& [k, v] : it->second)
                    if (factor != 0) rhs[k] += factor * v;
            }
        }
        for (const auto& [k, v] : lhs)
            if (v != rhs[k]) return false;
        for (const auto& [k, v] : rhs)
            if (v != lhs[k]) return false;
    }
    return true;
}

SplitI split_I(const InvertiblePolynomial& w, const ZSeries& I) {
    SplitI s;
    DiagonalSymmetry grj = grading_element(w);
    BasisState unit = unique_state(w, grj);
    int min_z = 1;
    for (const auto& [zp, _] : I.z) min_z = std::min(min_z, zp);
    // omega_m = (-1)^{m-1} C_{1-m}
    auto c_part = [&](int zp) -> std::map<BasisState, ParamSeries> {
        auto it = I.z.find(zp);
        if (it == I.z.end()) return {};
        return it->second;
    };
    {
        auto top = c_part(1);
        for (const auto& [e, v] : top)
            if (!(e == unit)) throw DomainError("z^1 part of the I-function is not along the unit sector");
        auto it = top.find(unit);
        if (it == top.end()) throw DomainError("z^1 part of the I-function vanishes");
        s.omega0 = it->second * Rat(-1);
    }
    for (int m = 1; 1 - m >= min_z; ++m) {
        auto part = c_part(1 - m);
        std::map<BasisState, ParamSeries> om;
        for (const auto& [e, v] : part) om.emplace(e, (m % 2 == 1) ? v : v * Rat(-1));
        s.parts.push_back(std::move(om));
    }
    return s;
}

MirrorData mirror_map_and_J(const InvertiblePolynomial& w, const std::vector<BasisState>& params,
                            const ZSeries& I) {
    SplitI s = split_I(w, I);
    MirrorData md;
    md.params = params;
    if (s.omega0.constant_term() == 0)
        throw DomainError("leading coefficient of omega_0 vanishes; cannot normalize");
    if (s.parts.empty()) throw DomainError("I-function has no z^0 part");

    // tau components must live on the parameter states
    const auto& omega1 = s.parts[0];
    for (const auto& [e, v] : omega1) {
        bool found = false;
        for (const auto& p : params) found = found || (p == e);
        if (!found)
            throw DomainError("mirror map leaves the parameter span; enlarge the parameter set");
    }
    for (const auto& p : params) {
        auto it = omega1.find(p);
        ParamSeries comp = (it == omega1.end()) ? ParamSeries::zero(I.nvars, I.max_order)
                                                : it->second.divide_by_unit(s.omega0);
        md.tau.push_back(std::move(comp));
    }
    md.tau_inv = invert_map(md.tau);

    if (s.parts.size() < 2)
        throw DomainError("truncation order leaves no z^{-1} part; raise the tuple-length bound");
    for (const auto& [e, v] : s.parts[1])
        md.j_zminus1.emplace(e, v.divide_by_unit(s.omega0).compose(md.tau_inv));
    return md;
}

std::vector<CorrelatorValue> extract_correlators(const InvertiblePolynomial& w,
                                                 const std::vector<BasisState>& params,
                                                 const std::vector<CorrelatorTarget>& targets,
                                                 const BigIOptions& opt) {
    if (w.excluded_shape)
        throw DomainError(
            "polynomial contains a monomial pattern x^a y + y^2 or x^a y + y^2 x; correlator "
            "extraction is not available for it");
    for (const auto& p : params) {
        if (broad_mask(p.gamma()) != 0)
            throw DomainError("parameter states must be narrow");
        if (degree(w, p) != 2) throw DomainError("parameter states must have degree 2");
    }
    ZSeries I = big_I(w, params, opt);
    MirrorData md = mirror_map_and_J(w, params, I);

    std::vector<CorrelatorValue> out;
    for (const auto& tgt : targets) {
        // coefficient of the target monomial in pairing(J_{z^-1}, e_last),
        // times the product of multiplicities factorials
        std::vector<unsigned> key(params.size(), 0);
        for (const auto& [st, mult] : tgt.insertions) {
            bool found = false;
            for (size_t i = 0; i < params.size(); ++i)
                if (params[i] == st) {
                    key[i] += (unsigned)mult;
                    found = true;
                }
            if (!found) throw DomainError("target insertion is not a parameter state");
        }
        Rat acc(0);
        for (const auto& [e, series] : md.j_zminus1) {
            Rat pr = pairing(w, e, tgt.last);
            if (pr == 0) continue;
            acc += pr * series.coeff(key);
        }
        Rat mults(1);
        for (const auto& [st, mult] : tgt.insertions) mults *= Rat(factorial_int(mult));
        CorrelatorValue cv;
        cv.value = acc * mults;
        cv.broad_final = broad_mask(tgt.last.gamma()) != 0;
        out.push_back(cv);
    }
    return out;
}

std::vector<BasisState> default_parameter_states(const InvertiblePolynomial& w,
                                                 const std::vector<BasisState>& seeds,
                                                 long long cap) {
    std::set<DiagonalSymmetry> sub;
    std::vector<DiagonalSymmetry> gens{grading_element(w)};
    for (const auto& s : seeds) gens.push_back(s.gamma());
    sub.insert(identity_symmetry(w.n()));
    std::vector<DiagonalSymmetry> frontier(sub.begin(), sub.end());
    while (!frontier.empty()) {
        if ((long long)sub.size() > cap)
            throw DomainError("parameter subgroup exceeds the enumeration cap; pass the parameter states explicitly");
        std::vector<DiagonalSymmetry> next;
        for (const auto& el : frontier)
            for (const auto& g : gens) {
                auto cand = mul(el, g);
                if (sub.insert(cand).second) next.push_back(std::move(cand));
            }
        frontier = std::move(next);
    }
    std::vector<BasisState> out;
    for (const auto& g : sub) {
        if (broad_mask(g) != 0) continue;
        BasisState st = unique_state(w, g);
        if (st.zero_flag) continue;
        if (degree(w, st) != 2) continue;
        out.push_back(st);
    }
    return out;  // set iteration order is lexicographic
}

// ---------------------------------------------------------------------------
// Twisted-I oracle: bivariate series with z-Laurent layers per eps-order.

namespace {

// layers[k] is the z-Laurent coefficient of eps^k
struct Bivar {
    std::map<int, EpsSeries> layers;  // reuses the exact-Laurent machinery in z
    int etop = 0;                     // eps window top (inclusive)

    static Bivar from_layer(int k, EpsSeries zs, int etop) {
        Bivar b;
        b.etop = etop;
        if (!zs.is_zero()) b.layers.emplace(k, std::move(zs));
        return b;
    }

    Bivar mul(const Bivar& o) const {
        Bivar r;
        r.etop = std::min(etop, o.etop);
        for (const auto& [ka, va] : layers)
            for (const auto& [kb, vb] : o.layers) {
                int k = ka + kb;
                if (k > r.etop) continue;
                EpsSeries prod = va * vb;
                auto it = r.layers.find(k);
                if (it == r.layers.end())
                    r.layers.emplace(k, std::move(prod));
                else
                    it->second = it->second + prod;
            }
        for (auto it = r.layers.begin(); it != r.layers.end();)
            it = it->second.is_zero() ? r.layers.erase(it) : std::next(it);
        return r;
    }

    Bivar inverse() const {
        if (layers.empty()) throw DomainError("cannot invert the zero bivariate series");
        const int v = layers.begin()->first;  // lowest eps-order
        const EpsSeries& lead = layers.begin()->second;
        EpsSeries lead_inv = lead.inverse();
        Bivar r;
        r.etop = etop - 2 * v;
        // B_{-v} = lead^{-1}; B_{-v+m} = -lead^{-1} sum_{i=1..m} A_{v+i} B_{-v+m-i}
        std::map<int, EpsSeries> B;
        B[-v] = lead_inv;
        for (int m = 1; -v + m <= r.etop; ++m) {
            EpsSeries acc;  // zero
            bool any = false;
            for (int i = 1; i <= m; ++i) {
                auto ai = layers.find(v + i);
                auto bj = B.find(-v + m - i);
                if (ai == layers.end() || bj == B.end()) continue;
                EpsSeries t = ai->second * bj->second;
                acc = any ? acc + t : t;
                any = true;
            }
            if (any) {
                EpsSeries val = (acc * lead_inv) * Rat(-1);
                if (!val.is_zero()) B[-v + m] = std::move(val);
            }
        }
        r.layers = std::move(B);
        return r;
    }
};

// exp(b z) - 1  truncated at z-order ztop (as a z-Laurent with window [1..ztop])
EpsSeries exp_bz_minus_1(const Rat& b, int ztop) {
    std::vector<Rat> c;
    Rat t = b;
    for (int m = 1; m <= ztop; ++m) {
        c.push_back(t);
        t *= b / Rat(m + 1);
    }
    return make_series(1, ztop, std::move(c));
}

// (e^{bz}-1)/(bz) truncated, a unit z-power series
EpsSeries exp_ratio(const Rat& b, int ztop) {
    std::vector<Rat> c;
    Rat t(1);
    for (int m = 0; m <= ztop; ++m) {
        c.push_back(t);
        t *= b / Rat(m + 2);
    }
    return make_series(0, ztop, std::move(c));
}

// the factor exp(-s(b z, lambda_j)) = (e^{bz} - lambda_j)/(e^{bz} - 1) * bz
// for b != 0, and (1 - lambda_j) for b = 0
Bivar oracle_factor(const Rat& b, long long kj, int etop, int ztop) {
    if (b == 0) {
        Bivar r;
        r.etop = etop;
        // 1 - (1+eps)^{-kj}: layer i >= 1 is -binom(-kj, i)
        for (int i = 1; i <= etop; ++i) {
            Rat coef = -Rat(binomial_int(-kj, i));
            if (coef != 0) r.layers.emplace(i, EpsSeries::constant(coef, ztop));
        }
        return r;
    }
    // numerator e^{bz} - lambda_j: layer 0 = e^{bz}-1, layer i = -binom(-kj,i)
    Bivar num;
    num.etop = etop;
    num.layers.emplace(0, exp_bz_minus_1(b, ztop));
    for (int i = 1; i <= etop; ++i) {
        Rat coef = -Rat(binomial_int(-kj, i));
        if (coef != 0) num.layers.emplace(i, EpsSeries::constant(coef, ztop));
    }
    // divide by (e^{bz}-1)/(bz), an eps-free unit power series in z
    EpsSeries den_inv = exp_ratio(b, ztop).inverse();
    Bivar r;
    r.etop = etop;
    for (const auto& [k, v] : num.layers) r.layers.emplace(k, v * den_inv);
    return r;
}

}  // namespace

OracleReport twisted_I_oracle(const InvertiblePolynomial& w, const std::vector<BasisState>& ins) {
    OracleReport rep;
    if (!w.is_chain()) throw DomainError("the twisted-I oracle applies to chain polynomials");
    InsertionTuple t{ins};
    SpinNumerics sn = numerics(w, t, /*require_selection=*/false);
    TupleTerm expected = tuple_term(w, ins);
    rep.expected_coeff = expected.coeff;
    rep.expected_zpow = expected.zpow - (1 - sn.n);  // factor product alone, no prefactor

    std::vector<long long> kexp = chain_lambda_exponents(w);

    // collect the factors
    struct Fac {
        Rat b;
        long long k;
        bool inverse;
    };
    std::vector<Fac> facs;
    long long inv_count = 0, pos_z = 0;
    for (int j = 0; j < w.n(); ++j) {
        if (sn.DR[j] >= 1) {
            for (long long m = 0; m < sn.DR[j]; ++m) facs.push_back({sn.omegaR[j] + Rat((long)m), kexp[j], false});
            pos_z += sn.DR[j];
        } else if (sn.DR[j] <= -1) {
            for (long long m = 1; m <= -sn.DR[j]; ++m) facs.push_back({sn.omegaR[j] - Rat((long)m), kexp[j], true});
            inv_count += -sn.DR[j];
        }
    }

    const int etop = (int)inv_count + 6;
    const int ztop = (int)(pos_z + 2 * inv_count) + 6;

    Bivar prod;
    prod.etop = etop;
    prod.layers.emplace(0, EpsSeries::constant(Rat(1), ztop));
    for (const auto& f : facs) {
        Bivar fac = oracle_factor(f.b, f.k, etop, ztop);
        if (f.inverse) fac = fac.inverse();
        prod = prod.mul(fac);
    }

    // convergence: no layer below eps-order 0
    for (const auto& [k, v] : prod.layers)
        if (k < 0 && !v.is_zero()) {
            rep.match = false;
            rep.detail = "negative eps-order survives: limit diverges";
            return rep;
        }
    // the eps^0 layer must be the single monomial expected_coeff * z^{expected_zpow}
    EpsSeries slice;
    auto it = prod.layers.find(0);
    if (it != prod.layers.end()) slice = it->second;
    std::ostringstream detail;
    bool ok = true;
    if (slice.is_zero()) {
        ok = expected.coeff == 0;
        if (!ok) detail << "slice vanishes but closed form is non-zero";
    } else {
        int lo = slice.valuation();
        int hi = slice.top();
        if (rep.expected_zpow < lo || rep.expected_zpow > hi) {
            ok = false;
            detail << "expected z-power outside the computed window";
        } else {
            for (int p = lo; p <= hi && ok; ++p) {
                Rat want = (p == rep.expected_zpow) ? expected.coeff : Rat(0);
                if (slice.coeff(p) != want) {
                    ok = false;
                    detail << "slice mismatch at z^" << p << ": got " << rat_str(slice.coeff(p))
                           << ", want " << rat_str(want);
                }
            }
        }
    }
    rep.match = ok;
    rep.detail = detail.str();
    return rep;
}

}  // namespace lgspin
