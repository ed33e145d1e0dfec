#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "lgspin/cache.hpp"
#include "lgspin/json_io.hpp"

using namespace lgspin;

namespace {

struct Options {
    std::string poly;
    int order = 30;
    int n_max = 6;
    int threads = 1;
    std::string params = "";
    std::string insertions = "";
    std::string last = "";
    std::string left = "", right = "";
    bool json = false;
    bool gram = false;
    std::string cache_dir;
    bool no_cache = false;
    long long cap = 1000000;
};

std::string matrix_desc(const InvertiblePolynomial& w) {
    std::ostringstream os;
    for (const auto& r : w.E.m) {
        for (long long v : r) os << v << ",";
        os << ";";
    }
    return os.str();
}

std::string state_desc(const BasisState& e) {
    std::ostringstream os;
    os << "(";
    for (const Rat& x : e.gamma().g) os << rat_str(x) << ",";
    os << ")[" << e.dec.crossed << "]";
    return os.str();
}

ResultCache make_cache(const Options& opt) {
    if (opt.no_cache) return ResultCache{};
    std::string dir = opt.cache_dir;
    if (dir.empty()) {
        const char* env = std::getenv("LGSPIN_CACHE_DIR");
        if (env) dir = env;
    }
    if (dir.empty()) return ResultCache{};
    return ResultCache{dir};
}

int run_classify(const Options& opt) {
    InvertiblePolynomial w = analyze(opt.poly);
    Json j = to_json(w);
    if (opt.json) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "polynomial: " << w.text << "\n";
    std::cout << "kind:";
    for (const auto& c : w.decomposition.components) {
        std::cout << " " << kind_name(c.kind) << "(";
        for (size_t i = 0; i < c.exps.size(); ++i) std::cout << (i ? "," : "") << c.exps[i];
        std::cout << ")";
    }
    std::cout << "\nweights: (";
    for (size_t i = 0; i < w.ws.weights.size(); ++i) std::cout << (i ? "," : "") << w.ws.weights[i];
    std::cout << ")\ndegree: " << w.ws.degree << "\n";
    std::cout << "calabi_yau: " << (w.is_calabi_yau() ? "true" : "false") << "\n";
    std::cout << "central_charge: " << rat_str(w.central_charge()) << "\n";
    if (w.excluded_shape)
        std::cout << "note: contains x^a*y + y^2 or x^a*y + y^2*x; correlator extraction refuses "
                     "this input\n";
    return 0;
}

int run_aut(const Options& opt) {
    InvertiblePolynomial w = analyze(opt.poly);
    SymmetryGroup g = aut_group(w);
    Json j = to_json(g);
    j["grading_element"] = to_json(grading_element(w))["gamma"];
    Json sl = Json::array();
    if (g.order <= int_of(opt.cap))
        for (const auto& el : sl_subgroup(w, opt.cap)) sl.push_back(to_json(el)["gamma"]);
    j["sl_subgroup"] = sl;
    if (opt.json) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "order: " << g.order.get_str() << "\n";
    std::cout << "invariant_factors:";
    for (long long f : g.invariant_factors) std::cout << " " << f;
    std::cout << "\nexponent_r: " << g.exponent_r << "\n";
    std::cout << "sl_subgroup_size: " << sl.size() << "\n";
    return 0;
}

int run_states(const Options& opt) {
    InvertiblePolynomial w = analyze(opt.poly);
    Json arr = Json::array();
    int count = 0;
    for (const auto& g : enumerate_group(w, opt.cap))
        for (const auto& st : decorations(w, g)) {
            if (st.zero_flag) continue;
            arr.push_back(state_json(w, st));
            ++count;
        }
    if (opt.json) {
        std::cout << Json{{"basis_size", count}, {"states", arr}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "basis_size: " << count << "\n";
    return 0;
}

int run_pairing(const Options& opt) {
    InvertiblePolynomial w = analyze(opt.poly);
    if (opt.gram) {
        std::vector<BasisState> basis;
        for (const auto& g : enumerate_group(w, opt.cap))
            for (const auto& st : decorations(w, g))
                if (!st.zero_flag) basis.push_back(st);
        Json rows = Json::array();
        for (const auto& a : basis) {
            Json row = Json::array();
            for (const auto& b : basis) row.push_back(rat_str(pairing(w, a, b)));
            rows.push_back(row);
        }
        Json j{{"basis_size", basis.size()}, {"gram", rows}};
        std::cout << (opt.json ? j.dump(2) : j.dump()) << "\n";
        return 0;
    }
    BasisState a = parse_state(w, opt.left);
    BasisState b = parse_state(w, opt.right);
    Rat v = pairing(w, a, b);
    if (opt.json)
        std::cout << Json{{"value", rat_str(v)}}.dump() << "\n";
    else
        std::cout << rat_str(v) << "\n";
    return 0;
}

int run_correlator3(const Options& opt) {
    InvertiblePolynomial w = analyze(opt.poly);
    auto states = parse_states(w, opt.insertions);
    if (states.size() != 3) throw DomainError("correlator3 needs exactly three insertions");
    InsertionTuple t{{states[0], states[1], states[2]}};
    SpinNumerics sn = numerics(w, t);
    Rat v = correlator3(w, states[0], states[1], states[2]);
    if (opt.json) {
        Json j = to_json(sn, lambda_assignment(w, t, sn));
        j["value"] = rat_str(v);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << rat_str(v) << "\n";
    }
    return 0;
}

int run_ifunction(const Options& opt, bool big) {
    InvertiblePolynomial w = analyze(opt.poly);
    ResultCache cache = make_cache(opt);
    std::ostringstream keyd;
    keyd << "ifunction;" << matrix_desc(w) << ";big=" << big << ";order=" << opt.order
         << ";n_max=" << opt.n_max << ";params=" << opt.params << ";json=" << opt.json;
    if (auto hit = cache.load(keyd.str())) {
        std::cout << *hit;
        return 0;
    }
    std::ostringstream out;
    if (big) {
        auto params = parse_states(w, opt.params);
        if (params.empty()) throw DomainError("--big requires --params");
        BigIOptions bo;
        bo.n_max = opt.n_max;
        bo.threads = opt.threads;
        ZSeries I = big_I(w, params, bo);
        std::vector<std::string> names;
        for (const auto& p : params) names.push_back(state_desc(p));
        out << zseries_json(I, names, w).dump(opt.json ? 2 : -1) << "\n";
    } else {
        ZSeries I = small_I(w, opt.order);
        out << zseries_json(I, {"t"}, w).dump(opt.json ? 2 : -1) << "\n";
    }
    cache.store(keyd.str(), out.str());
    std::cout << out.str();
    return 0;
}

int run_pfcheck(const Options& opt) {
    InvertiblePolynomial w = analyze(opt.poly);
    ResultCache cache = make_cache(opt);
    std::ostringstream keyd;
    keyd << "pfcheck;" << matrix_desc(w) << ";order=" << opt.order << ";json=" << opt.json;
    if (auto hit = cache.load(keyd.str())) {
        std::cout << *hit;
        return 0;
    }
    ZSeries I = small_I(w, opt.order);
    bool ok = pf_check(w, I, opt.order);
    std::ostringstream out;
    if (opt.json)
        out << Json{{"annihilated", ok}, {"order", opt.order}, {"calabi_yau", w.is_calabi_yau()}}.dump()
            << "\n";
    else
        out << "annihilated: " << (ok ? "true" : "false") << "\n";
    cache.store(keyd.str(), out.str());
    std::cout << out.str();
    return 0;
}

int run_jfunction(const Options& opt) {
    InvertiblePolynomial w = analyze(opt.poly);
    ResultCache cache = make_cache(opt);
    std::ostringstream keyd;
    keyd << "jfunction;" << matrix_desc(w) << ";order=" << opt.order << ";json=" << opt.json;
    if (auto hit = cache.load(keyd.str())) {
        std::cout << *hit;
        return 0;
    }
    ZSeries I = small_I(w, opt.order);
    SplitI s = split_I(w, I);
    Json j;
    {
        Json om0;
        for (const auto& [key, v] : s.omega0.c) om0[std::to_string(key[0])] = rat_str(v);
        j["omega0"] = om0;
    }
    Json pieces = Json::array();
    for (size_t m = 0; m < s.parts.size(); ++m) {
        Json piece = Json::array();
        for (const auto& [e, series] : s.parts[m]) {
            ParamSeries div = series.divide_univariate(s.omega0);
            Json entry;
            entry["state"] = state_json(w, e);
            Json coeffs;
            for (const auto& [key, v] : div.c) coeffs[std::to_string(key[0])] = rat_str(v);
            entry["coeffs"] = coeffs;
            piece.push_back(entry);
        }
        pieces.push_back(piece);
    }
    j["j_pieces_over_omega0"] = pieces;
    std::ostringstream out;
    out << j.dump(opt.json ? 2 : -1) << "\n";
    cache.store(keyd.str(), out.str());
    std::cout << out.str();
    return 0;
}

int run_correlator(const Options& opt) {
    InvertiblePolynomial w = analyze(opt.poly);
    ResultCache cache = make_cache(opt);
    std::ostringstream keyd;
    keyd << "correlator;" << matrix_desc(w) << ";n_max=" << opt.n_max << ";ins=" << opt.insertions
         << ";last=" << opt.last << ";params=" << opt.params << ";json=" << opt.json;
    if (auto hit = cache.load(keyd.str())) {
        std::cout << *hit;
        return 0;
    }
    auto ins = parse_states(w, opt.insertions);
    if (ins.empty()) throw DomainError("--insertions is required");
    if (opt.last.empty()) throw DomainError("--last is required");
    BasisState last = parse_state(w, opt.last);

    std::vector<BasisState> params;
    if (!opt.params.empty())
        params = parse_states(w, opt.params);
    else
        params = default_parameter_states(w, ins);
    CorrelatorTarget tgt;
    for (const auto& st : ins) tgt.insertions[st]++;
    tgt.last = last;
    BigIOptions bo;
    bo.n_max = opt.n_max;
    bo.threads = opt.threads;
    auto vals = extract_correlators(w, params, {tgt}, bo);
    Json j{{"value", rat_str(vals[0].value)}};
    if (vals[0].broad_final)
        j["note"] = "broad final insertion: value is in the rescaled broad-sector basis";
    std::ostringstream out;
    out << j.dump(opt.json ? 2 : -1) << "\n";
    cache.store(keyd.str(), out.str());
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact genus-zero quantum-singularity calculator for invertible polynomials"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--poly", opt.poly, "polynomial, e.g. \"x1^2*x2+x2^4\"")->required();
        sub->add_flag("--json", opt.json, "full JSON output");
        sub->add_option("--cache-dir", opt.cache_dir, "result cache directory");
        sub->add_flag("--no-cache", opt.no_cache, "disable the result cache");
        sub->add_option("--threads", opt.threads, "worker threads for tuple enumeration");
        sub->add_option("--cap", opt.cap, "group enumeration cap");
    };

    auto* classify = app.add_subcommand("classify", "parse and classify the polynomial");
    add_common(classify);
    auto* aut = app.add_subcommand("aut", "diagonal symmetry group");
    add_common(aut);
    auto* states = app.add_subcommand("states", "state-space basis");
    add_common(states);
    auto* pairing_cmd = app.add_subcommand("pairing", "state-space pairing");
    add_common(pairing_cmd);
    pairing_cmd->add_option("--left", opt.left, "left state");
    pairing_cmd->add_option("--right", opt.right, "right state");
    pairing_cmd->add_flag("--gram", opt.gram, "emit the dense Gram matrix");
    auto* c3 = app.add_subcommand("correlator3", "genus-zero three-point invariant");
    add_common(c3);
    c3->add_option("--insertions", opt.insertions, "three insertions, e.g. \"j^3,j^3,j^6\"")->required();
    auto* ifun = app.add_subcommand("ifunction", "I-function coefficients");
    add_common(ifun);
    ifun->add_option("--order", opt.order, "t-order");
    ifun->add_option("--n-max", opt.n_max, "tuple-length truncation for --big");
    ifun->add_option("--params", opt.params, "parameter states for --big");
    bool big_flag = false;
    ifun->add_flag("--big", big_flag, "big I-function over the parameter states");
    auto* pf = app.add_subcommand("pfcheck", "Picard-Fuchs annihilation check");
    add_common(pf);
    pf->add_option("--order", opt.order, "t-order of the check");
    auto* jf = app.add_subcommand("jfunction", "J-function pieces via the mirror map");
    add_common(jf);
    jf->add_option("--order", opt.order, "t-order");
    auto* corr = app.add_subcommand("correlator", "correlator by series inversion");
    add_common(corr);
    corr->add_option("--insertions", opt.insertions, "insertions, e.g. \"j^2,j^2,j^2,j^2\"")->required();
    corr->add_option("--last", opt.last, "final insertion, e.g. \"j^6\"")->required();
    corr->add_option("--n-max", opt.n_max, "tuple-length truncation");
    corr->add_option("--params", opt.params, "parameter states (defaults to the insertions)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return run_classify(opt);
        if (aut->parsed()) return run_aut(opt);
        if (states->parsed()) return run_states(opt);
        if (pairing_cmd->parsed()) return run_pairing(opt);
        if (c3->parsed()) return run_correlator3(opt);
        if (ifun->parsed()) return run_ifunction(opt, big_flag);
        if (pf->parsed()) return run_pfcheck(opt);
        if (jf->parsed()) return run_jfunction(opt);
        if (corr->parsed()) return run_correlator(opt);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
