#pragma once

#include "nsg/identity.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/smooth.hpp"
#include "nsg/sylvester.hpp"

#include <json.hpp>

namespace nsg {

// Big integers and rationals are emitted as decimal strings so consumers
// never truncate at 64 bits.

nlohmann::json to_json(const NumericalSemigroup& s);
nlohmann::json to_json(const GapSet& g);
nlohmann::json to_json(const AperySet& a);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const HilbertSeries& h);
nlohmann::json to_json(const SmoothAnalysis& a);
nlohmann::json to_json(const DigitRepresentation& d, std::int64_t n);
nlohmann::json to_json(const SylvesterReport& r);

} // namespace nsg
