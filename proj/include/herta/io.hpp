#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "herta/analysis.hpp"
#include "herta/event_model.hpp"
#include "herta/simulator.hpp"
#include "herta/types.hpp"

namespace herta {

// Insertion-ordered JSON keeps every report byte-deterministic.
using ojson = nlohmann::ordered_json;

// Task-set document, version "1". Priorities are normalized to
// smaller-is-higher on load; serialization always emits the normalized form.
TaskSet parse_taskset(const std::string& text);
TaskSet load_taskset(const std::string& path);
ojson taskset_doc(const TaskSet& ts);
std::string serialize_taskset(const TaskSet& ts);

ojson validation_report(const TaskSet& ts, Tick horizon);
ojson feasibility_report(const TaskSet& ts, FeasibilityMode mode, const FeasibilityReport& rep);
ojson rta_report(const TaskSet& ts, const RtaResult& res);
ojson sim_report(const TaskSet& ts, const SchedulerPredicate& p, const SimTrace& trace);
ojson compare_report(const TaskSet& ts, const EdfBoundsTable& table);

std::string rta_csv(const TaskSet& ts, const RtaResult& res);
std::string trace_csv(const TaskSet& ts, const SimTrace& trace);

enum class CurveFunction { EventBound, RequestBound, DemandBound };

struct CurvePoint {
    Tick t = 0;
    Tick value = 0;
};

// Staircase sample points: one row per counted impulse (cumulative count or
// cumulative execution) inside the masked window, for the demand bound one
// row per distinct absolute deadline.
std::vector<CurvePoint> curve_points(const TaskSet& ts, std::optional<std::size_t> task_pos, CurveFunction f,
                                     EndpointMode left, EndpointMode right, Tick horizon);
std::string curve_csv(const std::vector<CurvePoint>& pts);

std::string dump_report(const ojson& report);

}  // namespace herta
