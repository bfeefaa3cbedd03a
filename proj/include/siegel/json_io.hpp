#ifndef SIEGEL_JSON_IO_HPP
#define SIEGEL_JSON_IO_HPP

#include <json.hpp>

#include "siegel/arith.hpp"
#include "siegel/intmat.hpp"
#include "siegel/lattice.hpp"

namespace siegel {

using nlohmann::json;

json to_json(const Int& x);
json to_json(const Rat& q);  // "num/den"
json to_json(const IMat& m);
json to_json(const QMat& m);  // rational entries as "num/den" strings
json to_json(const arith::ExactScalar& s);  // {"a","b","p"}
json to_json(const arith::GaussExpr& g);
json to_json(const lat::Sublattice& s);

Int int_from_json(const json& j);
Rat rat_from_json(const json& j);
IMat imat_from_json(const json& j);
arith::ExactScalar scalar_from_json(const json& j);

// CLI shorthand: "2I3", "diag:2,2,4", or inline JSON [[...]]
IMat parse_gram(const std::string& text);

}  // namespace siegel

#endif
