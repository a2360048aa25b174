#pragma once

#include "fankit/decomposition.hpp"
#include "fankit/extremal.hpp"
#include "fankit/oracle.hpp"
#include "fankit/packing.hpp"

#include <json.hpp>

#include <string>

namespace fankit {

using json = nlohmann::json;

/// Integral values become JSON integers; anything else a shortest round-trip decimal string.
json exact_number(double x);

void to_json(json& j, const FanSpec& s);
void to_json(json& j, const FanCopy& f);
void from_json(const json& j, FanCopy& f);
void to_json(json& j, const Packing& p);
void to_json(json& j, const PackingSearch& s);
void to_json(json& j, const PhiResult& r);
void to_json(json& j, const ExtremalValue& v);
void to_json(json& j, const Constants& c);
void to_json(json& j, const Partition& p);
void to_json(json& j, const BalanceReport& b);
void to_json(json& j, const ClaimCheck& c);
void to_json(json& j, const DecompositionReport& r);
void to_json(json& j, const ExResult& r);
void to_json(json& j, const SearchReport& r);
void from_json(const json& j, SearchReport& r);

/// Graph with vertices filled by part and the edges of each fan drawn bold in its own colour.
std::string to_dot(const Graph& g, const DecompositionReport& r);

} // namespace fankit
