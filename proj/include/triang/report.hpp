#ifndef TRIANG_REPORT_HPP
#define TRIANG_REPORT_HPP

#include <json.hpp>

#include "triang/lie.hpp"
#include "triang/parse.hpp"
#include "triang/witness.hpp"

namespace triang {

// JSON encodings of results. Automorphisms and derivations are embedded in
// their text formats; exact rationals are strings such as "-3/2".

nlohmann::json to_json(const TriangularAutomorphism& phi);
nlohmann::json to_json(const TriangularDerivation& d);
nlohmann::json to_json(const GroupWord& word);
nlohmann::json to_json(const FuzzReport& report);
nlohmann::json to_json(const DepthReport& report);
nlohmann::json to_json(const UnipotentReport& report);
nlohmann::json to_json(const CounterexampleReport& report);

// dimension, basis, lower_central_series, derived_series, nilpotency_class
nlohmann::json lie_report(const LieBasis& basis);

}  // namespace triang

#endif  // TRIANG_REPORT_HPP
