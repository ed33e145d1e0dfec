#include "lgspin/json_io.hpp"

#include <sstream>

namespace lgspin {

Json to_json(const ExponentMatrix& e) {
    Json rows = Json::array();
    for (const auto& r : e.m) rows.push_back(r);
    return rows;
}

Json to_json(const InvertiblePolynomial& w) {
    Json j;
    j["matrix"] = to_json(w.E);
    j["weights"] = w.ws.weights;
    j["degree"] = w.ws.degree;
    Json dec = Json::array();
    for (const auto& comp : w.decomposition.components) {
        Json c;
        c["kind"] = kind_name(comp.kind);
        c["vars"] = Json::array();
        for (int v : comp.vars) c["vars"].push_back(v + 1);
        c["exps"] = comp.exps;
        dec.push_back(c);
    }
    j["decomposition"] = dec;
    j["calabi_yau"] = w.is_calabi_yau();
    j["central_charge"] = rat_str(w.central_charge());
    j["excluded_shape"] = w.excluded_shape;
    return j;
}

Json to_json(const DiagonalSymmetry& g) {
    Json v = Json::array();
    for (const Rat& x : g.g) v.push_back(rat_str(x));
    return Json{{"gamma", v}};
}

Json to_json(const SymmetryGroup& g) {
    Json j;
    j["order"] = g.order.get_str();
    j["invariant_factors"] = g.invariant_factors;
    j["exponent_r"] = g.exponent_r;
    Json gens = Json::array();
    for (const auto& x : g.generators) gens.push_back(to_json(x)["gamma"]);
    j["generators"] = gens;
    return j;
}

Json state_json(const InvertiblePolynomial& w, const BasisState& e) {
    Json j;
    j["gamma"] = to_json(e.gamma())["gamma"];
    Json crossed = Json::array();
    for (int v = 0; v < w.n(); ++v)
        if (e.dec.is_crossed(v)) crossed.push_back(v + 1);
    j["crossed"] = crossed;
    j["zero"] = e.zero_flag;
    if (!e.zero_flag) j["degree"] = rat_str(degree(w, e));
    return j;
}

Json to_json(const SpinNumerics& sn, const std::vector<long long>& lambda_exp) {
    Json j;
    j["DR"] = sn.DR;
    j["minus_ch0"] = sn.minus_ch0_R;
    j["minus_ch0_untwisted"] = sn.minus_ch0;
    j["r"] = sn.r;
    j["degvir"] = sn.degvir;
    j["lambda_exponents"] = lambda_exp;
    return j;
}

Json zseries_json(const ZSeries& s, const std::vector<std::string>& var_names,
                  const InvertiblePolynomial& w) {
    Json terms = Json::array();
    for (const auto& [zp, states] : s.z)
        for (const auto& [e, series] : states)
            for (const auto& [key, v] : series.c) {
                Json t;
                if (s.nvars == 1) {
                    t["t_exp"] = key[0];
                } else {
                    Json exps;
                    for (int i = 0; i < s.nvars; ++i) exps[var_names[i]] = key[i];
                    t["exps"] = exps;
                }
                t["z_exp"] = zp;
                t["state"] = state_json(w, e);
                t["coeff"] = rat_str(v);
                terms.push_back(t);
            }
    return terms;
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

}  // namespace

BasisState parse_state(const InvertiblePolynomial& w, const std::string& token_in) {
    std::string token = strip(token_in);
    std::optional<uint32_t> crossed;
    auto lb = token.find('[');
    if (lb != std::string::npos) {
        if (token.back() != ']') throw DomainError("malformed crossed suffix in '" + token + "'");
        std::string inner = token.substr(lb + 1, token.size() - lb - 2);
        uint32_t mask = 0;
        std::stringstream ss(inner);
        std::string part;
        while (std::getline(ss, part, ',')) {
            part = strip(part);
            if (part.empty()) continue;
            int v = std::stoi(part);
            if (v < 1 || v > w.n()) throw DomainError("crossed index out of range in '" + token + "'");
            mask |= 1u << (v - 1);
        }
        crossed = mask;
        token = strip(token.substr(0, lb));
    }

    DiagonalSymmetry g;
    if (token == "id" || token == "e" || token == "1") {
        g = identity_symmetry(w.n());
    } else if (token == "j") {
        g = grading_element(w);
    } else if (token.rfind("j^", 0) == 0) {
        long long k = std::stoll(token.substr(2));
        g = pow(grading_element(w), k);
    } else if (!token.empty() && token.front() == '(' && token.back() == ')') {
        std::stringstream ss(token.substr(1, token.size() - 2));
        std::string part;
        while (std::getline(ss, part, ',')) g.g.push_back(frac_part(parse_rat(strip(part))));
        if (g.n() != w.n()) throw DomainError("symmetry vector has wrong length in '" + token + "'");
        if (!is_member(w, g)) throw DomainError("'" + token + "' is not a diagonal automorphism of W");
    } else {
        throw DomainError("cannot parse state '" + token + "'");
    }

    if (!crossed) return unique_state(w, g);
    for (const auto& st : decorations(w, g))
        if (st.dec.crossed == *crossed) return st;
    throw DomainError("crossed set in '" + token_in + "' is not an admissible decoration");
}

std::vector<BasisState> parse_states(const InvertiblePolynomial& w, const std::string& csv) {
    std::vector<BasisState> out;
    std::string cur;
    int depth = 0;
    for (char c : csv) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            if (!strip(cur).empty()) out.push_back(parse_state(w, cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!strip(cur).empty()) out.push_back(parse_state(w, cur));
    return out;
}

}  // namespace lgspin
