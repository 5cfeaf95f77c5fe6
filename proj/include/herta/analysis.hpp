#pragma once

#include <optional>
#include <vector>

#include "herta/bounds.hpp"
#include "herta/event_model.hpp"
#include "herta/predicates.hpp"
#include "herta/types.hpp"

namespace herta {

// Queued execution that beats the victim and is still unserved at t.
// Standard backlog: max over window starts s of arrivals[s,t) - (t-s),
// never negative; the maximum sits on 0 or an interfering release.
Tick remaining_load(const SchedulerPredicate& p, const Job& victim, Tick t, const TaskSet& ts);

// Backlog at a (all jobs count) plus everything requested in [a, b),
// normalized by the interval length. Kept as the raw fraction.
Frac average_load(const TaskSet& ts, Tick a, Tick b);

enum class FeasibilityMode { Edf, Static, Hierarchical };

struct FeasibilityWitness {
    Tick t = 0;
    std::size_t task_pos = 0;
    Tick demand = 0;  // left-hand side that exceeded t
};

struct FeasibilityReport {
    bool feasible = true;
    Frac utilization{0, 1};
    bool utilization_exceeded = false;  // verdict by utilization alone, no scan ran
    std::optional<FeasibilityWitness> witness;
    Tick horizon = 0;
};

// Processor-demand test. EDF checks the summed demand at absolute
// deadlines; static adds the higher-priority request bound over [0,t] both
// ends closed and checks per task; hierarchical splits per priority band
// (equal band contributes deadline-shifted demand, higher bands the request
// bound). A checkpoint binds a task only once it has due demand there.
FeasibilityReport feasibility(const TaskSet& ts, FeasibilityMode mode);

// Least fixed point of w = backlog + own execution + interference in
// [release, release + w). Empty result: the window exceeded the horizon
// plus the largest deadline and the iteration was declared divergent.
std::optional<Tick> response_time(const SchedulerPredicate& p, const Job& victim, const TaskSet& ts);

struct JobResponse {
    Job job;
    Tick remaining = 0;  // backlog at release
    std::optional<Tick> response;
    bool met() const { return response && *response <= job.rel_deadline; }
};

struct TaskWorst {
    std::int64_t jobs = 0;
    bool diverged = false;
    std::optional<Tick> response;  // max finite response seen
    bool all_met = true;
};

struct RtaResult {
    SchedulerPredicate predicate;
    Tick horizon = 0;
    std::vector<JobResponse> jobs;   // jobs_in order
    std::vector<TaskWorst> worst;    // per task position

    bool any_diverged() const;
    bool all_met() const;
};

// Response-time analysis of every job released in [0, analysis horizon).
RtaResult rta_all(const TaskSet& ts, const SchedulerPredicate& p);

struct EdfBoundsRow {
    std::size_t task_pos = 0;
    TaskWorst tie_broken;  // EDF with FIFO tie resolution
    TaskWorst free_choice;  // EDF_FREE over-approximation
    bool free_strictly_larger = false;
    bool bound_respected = true;  // tie-broken <= free-choice
};

struct EdfBoundsTable {
    Tick horizon = 0;
    std::vector<EdfBoundsRow> rows;
};

EdfBoundsTable compare_edf_bounds(const TaskSet& ts);

}  // namespace herta
