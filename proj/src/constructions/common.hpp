#pragma once

#include "oddminor/constructions.hpp"

namespace oddminor::detail {

/// Throws ModelInputError unless `m` verifies on `g`.
void require_valid(const Graph& g, const OddExpansionModel& m, const char* role);

/// Throws ConsistencyError unless `m` verifies on `host` with every connector stored.
void require_passes(const Graph& host, const OddExpansionModel& m, const char* what);

}  // namespace oddminor::detail
