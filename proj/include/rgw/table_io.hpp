#pragma once

#include <string>

#include <json.hpp>

#include "rgw/numeric.hpp"
#include "rgw/tqft.hpp"

namespace rgw {

// JSON forms used by the CLI and by table files on disk. Table files look
// like  {"target": {...}, "entries": [{"d":..,"chi":..,"profile":[[..]],
// "num":..,"den":..}, ...]}. Rational components are emitted as JSON
// integers when they fit in 64 bits and as decimal strings otherwise; both
// forms are accepted on input.

nlohmann::ordered_json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& num, const nlohmann::json& den);

nlohmann::ordered_json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::ordered_json profile_to_json(const Profile& p);
Profile profile_from_json(const nlohmann::json& j, int degree);

nlohmann::ordered_json target_to_json(const TargetCurve& t);
TargetCurve target_from_json(const nlohmann::json& j);

nlohmann::ordered_json table_to_json(const InvariantTable& t);
InvariantTable table_from_json(const nlohmann::json& j);

InvariantTable load_table(const std::string& path);
void save_table(const InvariantTable& t, const std::string& path);

}  // namespace rgw
