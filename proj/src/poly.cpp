#include "lgspin/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace lgspin {

const char* kind_name(AtomicComponent::Kind k) {
    switch (k) {
        case AtomicComponent::Kind::Fermat: return "fermat";
        case AtomicComponent::Kind::Chain: return "chain";
        case AtomicComponent::Kind::Loop: return "loop";
    }
    return "?";
}

Int det(const ExponentMatrix& e) {
    // fraction-free would do; sizes are tiny, use rational elimination
    std::vector<std::vector<Rat>> a(e.n, std::vector<Rat>(e.n));
    for (int i = 0; i < e.n; ++i)
        for (int j = 0; j < e.n; ++j) a[i][j] = rat_of(e.m[i][j]);
    Rat d(1);
    for (int c = 0; c < e.n; ++c) {
        int piv = c;
        while (piv < e.n && a[piv][c] == 0) ++piv;
        if (piv == e.n) return Int(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (int r = c + 1; r < e.n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (int k = c; k < e.n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    if (!is_integer(d)) throw DomainError("internal: integer matrix with non-integer determinant");
    return Int(d.get_num());
}

namespace {

// Identify each row as x_owner^a * x_target (target == owner for pure powers)
// and reorder rows so that row j is owned by variable j.
struct RowShape {
    int owner;
    int target;
    long long a;  // exponent of the owner variable in the monomial
};

RowShape classify_row(const std::vector<long long>& row, int row_number) {
    std::vector<int> nz;
    for (int j = 0; j < (int)row.size(); ++j)
        if (row[j] != 0) nz.push_back(j);
    if (nz.empty()) throw DomainError("monomial " + std::to_string(row_number + 1) + " is empty");
    if (nz.size() > 2)
        throw DomainError("monomial " + std::to_string(row_number + 1) +
                          " involves more than two variables (not of the shape x^a*y)");
    if (nz.size() == 1) return RowShape{nz[0], nz[0], row[nz[0]]};
    int u = nz[0], v = nz[1];
    bool u_owner = row[u] >= 2 && row[v] == 1;
    bool v_owner = row[v] >= 2 && row[u] == 1;
    if (u_owner) return RowShape{u, v, row[u]};
    if (v_owner) return RowShape{v, u, row[v]};
    throw DomainError("monomial " + std::to_string(row_number + 1) +
                      " is not of the shape x^a*y (one exponent must be 1, the other >= 2)");
}

ExponentMatrix validate(int n, std::vector<std::vector<long long>> rows) {
    if (n <= 0) throw DomainError("empty polynomial");
    if (n > 32) throw DomainError("at most 32 variables are supported");
    if ((int)rows.size() != n)
        throw DomainError("number of monomials (" + std::to_string(rows.size()) +
                          ") differs from number of variables (" + std::to_string(n) + ")");
    for (auto& r : rows) {
        if ((int)r.size() != n) throw DomainError("ragged exponent matrix");
        for (long long v : r)
            if (v < 0) throw DomainError("negative exponent");
    }
    // owner alignment
    std::vector<std::vector<long long>> aligned(n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        RowShape sh = classify_row(rows[i], i);
        if (seen[sh.owner])
            throw DomainError("variable x" + std::to_string(sh.owner + 1) +
                              " leads two monomials; exponent matrix is not invertible-polynomial shaped");
        seen[sh.owner] = true;
        aligned[sh.owner] = rows[i];
    }
    ExponentMatrix e{n, std::move(aligned)};
    for (int j = 0; j < n; ++j)
        if (e.m[j][j] < 2)
            throw DomainError("diagonal entry " + std::to_string(e.m[j][j]) + " at variable x" +
                              std::to_string(j + 1) + " is smaller than 2");
    // at most one arrow enters each vertex, else the graph leaves the
    // Fermat/chain/loop grammar
    for (int k = 0; k < n; ++k) {
        int indeg = 0;
        for (int j = 0; j < n; ++j)
            if (j != k && e.m[j][k] != 0) ++indeg;
        if (indeg > 1)
            throw DomainError("variable x" + std::to_string(k + 1) +
                              " is fed by two monomials; structure outside the Fermat/chain/loop grammar");
    }
    if (det(e) == 0) throw DomainError("exponent matrix has zero determinant; weights are not uniquely defined");
    return e;
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw DomainError("syntax error at position " + std::to_string(pos) + ": " + msg);
    }

    long long parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected an unsigned integer");
        long long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1LL << 40)) fail("exponent too large");
            ++pos;
        }
        return v;
    }

    // var := 'x' uint | 'x' | 'y' | 'z'   (key: indexed name or -1/-2/-3 for bare x/y/z)
    long long parse_var() {
        skip_ws();
        if (pos >= s.size()) fail("expected a variable");
        char c = s[pos];
        if (c == 'x') {
            ++pos;
            if (pos < s.size() && std::isdigit((unsigned char)s[pos])) return parse_uint();
            return -1;
        }
        if (c == 'y') {
            ++pos;
            return -2;
        }
        if (c == 'z') {
            ++pos;
            return -3;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    // term := factor ('*' factor)*; factor := var ('^' uint)?
    std::map<long long, long long> parse_term() {
        std::map<long long, long long> exps;
        while (true) {
            long long var = parse_var();
            long long e = 1;
            if (eat('^')) e = parse_uint();
            exps[var] += e;
            if (!eat('*')) break;
        }
        return exps;
    }

    std::vector<std::map<long long, long long>> parse_poly() {
        std::vector<std::map<long long, long long>> terms;
        terms.push_back(parse_term());
        while (eat('+')) terms.push_back(parse_term());
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return terms;
    }
};

}  // namespace

ExponentMatrix make_exponent_matrix(int n, std::vector<std::vector<long long>> rows) {
    return validate(n, std::move(rows));
}

ExponentMatrix parse_polynomial(const std::string& text) {
    Parser p(text);
    auto terms = p.parse_poly();

    std::set<long long> vars;
    bool bare = false, indexed = false;
    for (auto& t : terms)
        for (auto& [v, e] : t) {
            vars.insert(v);
            (v < 0 ? bare : indexed) = true;
        }
    if (bare && indexed) throw DomainError("cannot mix bare variables x,y,z with indexed variables x1,x2,...");

    // bare x < y < z maps to keys -1 < -2 < -3: order by -key; indexed by key
    std::vector<long long> order(vars.begin(), vars.end());
    std::sort(order.begin(), order.end(), [&](long long a, long long b) {
        if (bare) return -a < -b;
        return a < b;
    });
    std::map<long long, int> index;
    for (int i = 0; i < (int)order.size(); ++i) index[order[i]] = i;

    int n = (int)order.size();
    std::vector<std::vector<long long>> rows;
    for (auto& t : terms) {
        std::vector<long long> row(n, 0);
        for (auto& [v, e] : t) row[index[v]] = e;
        rows.push_back(std::move(row));
    }
    return validate(n, std::move(rows));
}

WeightSystem weight_system(const ExponentMatrix& e) {
    std::vector<std::vector<Rat>> A(e.n, std::vector<Rat>(e.n));
    std::vector<Rat> b(e.n, Rat(1));
    for (int i = 0; i < e.n; ++i)
        for (int j = 0; j < e.n; ++j) A[i][j] = rat_of(e.m[i][j]);
    std::vector<Rat> q = solve_linear(A, b);
    Int L(1);
    for (auto& qi : q) {
        if (qi <= 0) throw DomainError("charge q_" + std::to_string((&qi - q.data()) + 1) +
                                       " is not positive; input is not quasi-homogeneous with positive weights");
        L = lcm_int(L, Int(qi.get_den()));
    }
    WeightSystem ws;
    ws.degree = to_ll(L);
    Int g(0);
    std::vector<Int> w(e.n);
    for (int j = 0; j < e.n; ++j) {
        w[j] = Int(q[j].get_num()) * (L / Int(q[j].get_den()));
        g = gcd_int(g, w[j]);
    }
    if (g != 1) throw DomainError("weights are not coprime");
    for (int j = 0; j < e.n; ++j) {
        ws.weights.push_back(to_ll(w[j]));
        ws.charges.push_back(q[j]);
    }
    return ws;
}

PolyGraph poly_graph(const ExponentMatrix& e) {
    PolyGraph g;
    g.t.assign(e.n, -1);
    g.s.assign(e.n, -1);
    g.a.assign(e.n, 0);
    for (int j = 0; j < e.n; ++j) {
        int target = j;
        for (int k = 0; k < e.n; ++k)
            if (k != j && e.m[j][k] != 0) target = k;
        g.t[j] = target;
        g.a[j] = (target == j) ? e.m[j][j] - 1 : e.m[j][j];
    }
    for (int j = 0; j < e.n; ++j)
        if (g.t[j] != j) g.s[g.t[j]] = j;
    return g;
}

AtomicDecomposition decompose(const ExponentMatrix& e) {
    PolyGraph g = poly_graph(e);
    AtomicDecomposition dec;
    std::vector<bool> used(e.n, false);
    for (int start = 0; start < e.n; ++start) {
        if (used[start]) continue;
        // walk back to the head of the component containing `start`
        int head = start;
        {
            std::set<int> visited;
            while (g.s[head] != -1 && !visited.count(head)) {
                visited.insert(head);
                head = g.s[head];
            }
        }
        // follow t from the head
        std::vector<int> path;
        std::set<int> on_path;
        int v = head;
        while (!on_path.count(v)) {
            path.push_back(v);
            on_path.insert(v);
            if (g.t[v] == v) break;  // chain tail / Fermat
            v = g.t[v];
        }
        AtomicComponent comp;
        if (g.t[path.back()] == path.back()) {
            comp.kind = path.size() == 1 ? AtomicComponent::Kind::Fermat : AtomicComponent::Kind::Chain;
        } else {
            // t wrapped around onto the path; a genuine loop starts at its head
            if (g.t[path.back()] != path.front())
                throw DomainError("graph structure outside the Fermat/chain/loop grammar");
            comp.kind = AtomicComponent::Kind::Loop;
        }
        comp.vars = path;
        for (int j : path) comp.exps.push_back(g.a[j]);
        for (int j : path) used[j] = true;
        dec.components.push_back(std::move(comp));
    }
    std::sort(dec.components.begin(), dec.components.end(),
              [](const AtomicComponent& x, const AtomicComponent& y) {
                  return *std::min_element(x.vars.begin(), x.vars.end()) <
                         *std::min_element(y.vars.begin(), y.vars.end());
              });
    return dec;
}

ExponentMatrix mirror(const ExponentMatrix& e) {
    std::vector<std::vector<long long>> t(e.n, std::vector<long long>(e.n));
    for (int i = 0; i < e.n; ++i)
        for (int j = 0; j < e.n; ++j) t[j][i] = e.m[i][j];
    return validate(e.n, std::move(t));
}

std::string to_text(const ExponentMatrix& e) {
    std::ostringstream os;
    for (int i = 0; i < e.n; ++i) {
        if (i) os << " + ";
        bool first = true;
        for (int j = 0; j < e.n; ++j) {
            if (e.m[i][j] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << "x" << (j + 1);
            if (e.m[i][j] > 1) os << "^" << e.m[i][j];
        }
    }
    return os.str();
}

bool InvertiblePolynomial::is_calabi_yau() const {
    long long sum = 0;
    for (long long w : ws.weights) sum += w;
    return sum == ws.degree;
}

Rat InvertiblePolynomial::central_charge() const {
    Rat c(0);
    for (const Rat& q : ws.charges) c += Rat(1) - Rat(2) * q;
    return c;
}

bool InvertiblePolynomial::is_chain() const {
    return decomposition.components.size() == 1 &&
           decomposition.components[0].kind != AtomicComponent::Kind::Loop;
}

InvertiblePolynomial analyze(const ExponentMatrix& e) {
    InvertiblePolynomial w;
    w.E = e;
    w.text = to_text(e);
    w.ws = weight_system(e);
    w.graph = poly_graph(e);
    w.decomposition = decompose(e);
    w.comp_of.assign(e.n, -1);
    for (int c = 0; c < (int)w.decomposition.components.size(); ++c)
        for (int v : w.decomposition.components[c].vars) w.comp_of[v] = c;
    w.excluded_shape = false;
    for (const auto& comp : w.decomposition.components) {
        if (comp.kind == AtomicComponent::Kind::Chain && comp.exps.back() == 1)
            w.excluded_shape = true;  // tail monomial x_c^2 preceded by x^a x_c
        if (comp.kind == AtomicComponent::Kind::Loop && comp.vars.size() == 2 &&
            (comp.exps[0] == 2 || comp.exps[1] == 2))
            w.excluded_shape = true;  // x^a y + y^2 x
    }
    return w;
}

InvertiblePolynomial analyze(const std::string& text) { return analyze(parse_polynomial(text)); }

}  // namespace lgspin
