#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "herta/event_model.hpp"
#include "herta/predicates.hpp"
#include "herta/types.hpp"

namespace herta {

struct SimSegment {
    std::size_t task_pos = 0;
    std::int64_t job_index = 0;
    Tick start = 0;
    Tick end = 0;
};

struct SimCompletion {
    std::size_t task_pos = 0;
    std::int64_t job_index = 0;
    Tick release = 0;
    Tick finish = 0;
    Tick abs_deadline = 0;
    Tick response() const { return finish - release; }
    bool missed() const { return finish > abs_deadline; }
};

// A job cut off by the horizon. It cannot finish before the cut, so a
// deadline at or before the horizon is already missed.
struct SimPending {
    std::size_t task_pos = 0;
    std::int64_t job_index = 0;
    Tick release = 0;
    Tick abs_deadline = 0;
    Tick remaining = 0;
};

struct SimTrace {
    Tick horizon = 0;
    std::vector<SimSegment> segments;      // coalesced, chronological
    std::vector<SimCompletion> completions;  // completion order
    std::vector<std::pair<Tick, Tick>> idle;
    std::vector<SimPending> pending;
};

struct MissRecord {
    std::size_t task_pos = 0;
    std::int64_t job_index = 0;
    Tick abs_deadline = 0;
    std::optional<Tick> finish;  // empty: still pending at the cut
};

// Event-driven preemptive uniprocessor replay of the dispatch order. Only
// strict-total-order predicates are accepted; EDF_FREE has genuine ties and
// is rejected with PredicateNotTotalError.
SimTrace simulate(const TaskSet& ts, const SchedulerPredicate& p, Tick horizon);

std::vector<MissRecord> misses(const SimTrace& trace);

struct ResponseSummary {
    std::map<std::pair<std::size_t, std::int64_t>, Tick> by_job;
    std::vector<std::optional<Tick>> worst;  // per task position
};

// Per-job and per-task-worst responses of a fully drained trace. Throws
// IncompleteJobError when any job is still pending at the horizon.
ResponseSummary measured_responses(const SimTrace& trace, const TaskSet& ts);

}  // namespace herta
