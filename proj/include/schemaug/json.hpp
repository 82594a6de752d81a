#pragma once

#include <json.hpp>

namespace schemaug {

// ordered_json keeps object members in insertion order, so emitted records
// have a stable documented field layout and byte-identical re-runs.
using Json = nlohmann::ordered_json;

}  // namespace schemaug
