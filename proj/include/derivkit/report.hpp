#pragma once

#include <json.hpp>

#include "derivkit/characterize.hpp"
#include "derivkit/stability.hpp"

namespace derivkit {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

// JSON payloads. All rationals render as "p/q" text (q omitted when 1);
// keys are emitted sorted, so equal values serialize byte-identically.
nlohmann::json to_json(const OrderVerdict& v);
nlohmann::json to_json(const LinearSplit& s);
nlohmann::json to_json(const PolyDecomposition& d);
nlohmann::json to_json(const RecoveryResult& r);

nlohmann::json make_run_report(const std::string& command, nlohmann::json inputs,
                               nlohmann::json result, std::uint64_t seed);

}  // namespace derivkit
