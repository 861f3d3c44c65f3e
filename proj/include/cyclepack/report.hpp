#pragma once

// JSON reports. Object keys come out sorted (nlohmann::json's default map),
// cycles keep discovery order, so reports diff cleanly.

#include <json.hpp>

#include "cyclepack/errors.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/solver.hpp"

namespace cyclepack {

nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const Packing& packing);
nlohmann::json to_json(const SolverError& error);

/// Full solve report: "conditions", "triangles", "quadrilaterals", "trace"
/// (list of [stage, m_value]), "lemma_calls" when requested, and "status"
/// ("ok" or "error", with details under "error").
nlohmann::json partition_report(const ConditionReport& conditions, const Packing* packing,
                                const SolveTrace& trace, const SolverError* error,
                                bool include_calls = false);

}  // namespace cyclepack
