#pragma once

#include <gitfan/chowring.hpp>
#include <gitfan/groupdata.hpp>
#include <gitfan/polycone.hpp>
#include <gitfan/stability.hpp>

#include <json.hpp>

namespace gitfan::io {

using Json = nlohmann::ordered_json;

// Integers are written as decimal strings, polynomials as lists of
// [exponent, numerator, denominator] sorted by exponent.

Json to_json(const Integer& v);
Json to_json(const LatVec& v);
Json to_json(const std::vector<LatVec>& vs);
Json to_json(const Poly& p);
Json to_json(const RatCone& c);
Json to_json(const Fan& f);
Json to_json(const UnstableComponent& c);
Json to_json(const Chamber& c);
Json to_json(const GITFan& f);
Json to_json(const InvariantPresentation& p);
Json to_json(const PicardPresentation& p);
Json to_json(const HMCertificate& c);
Json columns_json(const WeightSystem& ws);

Integer integer_from(const Json& j);
LatVec latvec_from(const Json& j);
std::vector<LatVec> latvecs_from(const Json& j);
Poly poly_from(const Json& j, std::size_t nvars);
RatCone cone_from(const Json& j);
Fan fan_from(const Json& j);
UnstableComponent component_from(const Json& j, std::size_t rank);
Chamber chamber_from(const Json& j, std::size_t rank);
GITFan gitfan_from(const Json& j, std::size_t rank);
InvariantPresentation presentation_from(const Json& j, std::size_t rank);
PicardPresentation picard_from(const Json& j);

const char* name(Tristate t);
const char* name(Variant v);
const char* name(Verdict v);

}  // namespace gitfan::io
