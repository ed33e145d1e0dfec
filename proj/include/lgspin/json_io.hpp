#pragma once

#include <json.hpp>

#include "lgspin/givental.hpp"

namespace lgspin {

using Json = nlohmann::ordered_json;

Json to_json(const ExponentMatrix& e);
Json to_json(const InvertiblePolynomial& w);
Json to_json(const DiagonalSymmetry& g);
Json to_json(const SymmetryGroup& g);
Json state_json(const InvertiblePolynomial& w, const BasisState& e);
Json to_json(const SpinNumerics& sn, const std::vector<long long>& lambda_exp);
Json zseries_json(const ZSeries& s, const std::vector<std::string>& var_names,
                  const InvertiblePolynomial& w);

// Parse a symmetry/state token: "j^3", "j", "id", "(1/35,33/35,...)"; an
// optional suffix "[1,3]" picks the crossed variables (1-based).
BasisState parse_state(const InvertiblePolynomial& w, const std::string& token);
std::vector<BasisState> parse_states(const InvertiblePolynomial& w, const std::string& csv);

}  // namespace lgspin
