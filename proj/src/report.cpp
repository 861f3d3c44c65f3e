#include "cyclepack/report.hpp"

namespace cyclepack {

namespace {

nlohmann::json cycles_json(const std::vector<Cycle>& cycles) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cycles) out.push_back(c.vertices());
  return out;
}

}  // namespace

nlohmann::json to_json(const ConditionReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["r"] = report.r;
  j["s"] = report.s;
  if (report.sigma2.is_infinite()) j["sigma2"] = "infinite";
  else j["sigma2"] = report.sigma2.value();
  j["order_ok"] = report.order_ok;
  j["sigma_ok"] = report.sigma_ok;
  j["ratio_ok"] = report.ratio_ok;
  return j;
}

nlohmann::json to_json(const Packing& packing) {
  nlohmann::json j;
  j["triangles"] = cycles_json(packing.triangles);
  j["quadrilaterals"] = cycles_json(packing.quadrilaterals);
  j["remainder"] = packing.remainder.members();
  return j;
}

nlohmann::json to_json(const SolverError& error) {
  nlohmann::json j;
  j["stage"] = error.stage();
  j["kind"] = error.kind();
  j["message"] = error.what();
  j["ledger"] = nlohmann::json::object();
  for (const auto& [key, value] : error.ledger()) j["ledger"][key] = value;
  return j;
}

nlohmann::json partition_report(const ConditionReport& conditions, const Packing* packing,
                                const SolveTrace& trace, const SolverError* error,
                                bool include_calls) {
  nlohmann::json j;
  j["conditions"] = to_json(conditions);
  j["triangles"] = packing ? cycles_json(packing->triangles) : nlohmann::json::array();
  j["quadrilaterals"] = packing ? cycles_json(packing->quadrilaterals) : nlohmann::json::array();
  j["trace"] = nlohmann::json::array();
  for (const auto& p : trace.potentials)
    j["trace"].push_back({static_cast<int>(p.stage), p.m_value});
  if (include_calls) {
    j["lemma_calls"] = nlohmann::json::array();
    for (const auto& call : trace.calls) {
      j["lemma_calls"].push_back({{"lemma", call.lemma},
                                  {"cycle", (call.on_quadrilateral ? "Q" : "T") +
                                                std::to_string(call.cycle_index)},
                                  {"measured", call.measured},
                                  {"threshold", call.threshold}});
    }
  }
  if (error) {
    j["status"] = "error";
    j["error"] = to_json(*error);
  } else {
    j["status"] = "ok";
  }
  return j;
}

}  // namespace cyclepack
