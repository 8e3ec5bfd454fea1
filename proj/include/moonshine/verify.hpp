#pragma once

#include <cstdint>

#include "moonshine/qseries.hpp"
#include "moonshine/report.hpp"

namespace moonshine {

/// Weights of the order-8, p = 2 combination, classes 8A / 4C / 2B through
/// the power map, the combined series, and the q^2 coefficient -256 that
/// forces H^1(g, V_3) != 0. `order` is the truncation (>= 4).
VerificationReport verify_counterexample(const qseries::MTTable &table, std::int64_t order);

/// Hauptmodul combination for g in 15A (N = 15) or 21A (N = 21) and a prime
/// p | N: checks the weight list and emits the combined series. The
/// vanishing of H^1(g, V) itself is recorded as cited.
VerificationReport worked_relations(std::int64_t group_order, std::int64_t p, const qseries::MTTable &table,
                                    std::int64_t order);

} // namespace moonshine
