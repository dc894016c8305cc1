#pragma once

#include "esp/collision.hpp"
#include "esp/verifier.hpp"

#include <json.hpp>

namespace esp {

nlohmann::ordered_json to_json(const CollisionPair& pair);

/// Report document. With include_run_info = false the timing and worker
/// fields are omitted, leaving only content that is deterministic across
/// runs, modes and worker counts.
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_run_info = true);

}  // namespace esp
