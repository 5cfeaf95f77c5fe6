#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "herta/types.hpp"

namespace herta {

// One impulse train <period, offset>_count: impulses at offset + n*period
// for n = 0 .. count-1. No period means a single one-shot event; no count
// means the train never stops.
struct EventTuple {
    Tick offset = 0;
    std::optional<Tick> period;
    std::optional<std::int64_t> count;

    bool unbounded() const { return !count.has_value(); }
    bool one_shot() const { return !period.has_value(); }

    friend bool operator==(const EventTuple&, const EventTuple&) = default;
};

// Ordered list of tuples; the impulse multiset is the union of the trains.
using EventSpectrum = std::vector<EventTuple>;

struct Task {
    std::string id;
    EventSpectrum spectrum;       // non-empty
    std::vector<Tick> wcet;       // frame execution times, cycled by impulse index
    std::vector<Tick> bcet;       // informational, entrywise <= wcet
    std::vector<Tick> deadlines;  // relative deadlines, cycled like wcet
    std::int64_t priority = 0;    // smaller number = higher priority

    Tick exec_at(std::int64_t n) const { return wcet[static_cast<std::size_t>(n % static_cast<std::int64_t>(wcet.size()))]; }
    Tick deadline_at(std::int64_t n) const {
        return deadlines[static_cast<std::size_t>(n % static_cast<std::int64_t>(deadlines.size()))];
    }
    Tick max_deadline() const;
};

struct TaskSet {
    std::vector<Task> tasks;
};

struct Job {
    std::size_t task_pos = 0;   // position in the task set, final dispatch tie-break
    std::int64_t index = 0;     // release-order index within the task
    Tick release = 0;
    Tick exec = 0;
    Tick rel_deadline = 0;
    Tick abs_deadline = 0;
    std::int64_t priority = 0;  // copied from the task

    bool same_job(const Job& o) const { return task_pos == o.task_pos && index == o.index; }
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> infos;
    bool valid() const { return violations.empty(); }
};

// Index range of a tuple's impulses inside a closed span.
struct TupleHits {
    std::int64_t first = 0;
    std::int64_t last = -1;
    bool any() const { return first <= last; }
    std::int64_t count() const { return any() ? last - first + 1 : 0; }
};

TupleHits tuple_hits(const EventTuple& tu, ClosedSpan span);

// Throw SemanticError on any structural invariant breach.
void check_tuple(const EventTuple& tu, const std::string& where);
void check_task(const Task& t, const std::string& where);
void check_task_set(const TaskSet& ts);

// Materialized impulse instants of a spectrum in the masked range, ascending.
std::vector<Tick> impulses(const EventSpectrum& s, Tick lo, Tick hi, EndpointMode left, EndpointMode right);

// Hierarchical event density: every impulse of one operand spawns a copy of
// the other. Throws CompositionUnboundedError when a tuple pair is
// unbounded on both sides.
EventSpectrum compose(const EventSpectrum& outer, const EventSpectrum& inner);

// Lazy variant: unbounded trains are first clipped to the horizon.
EventSpectrum compose(const EventSpectrum& outer, const EventSpectrum& inner, Tick horizon);

// Structural checks plus a brute-force subadditivity scan of the event count
// up to the horizon. Reports, never throws.
ValidationReport validate_spectrum(const EventSpectrum& s, Tick horizon);

// lcm of the periods of unbounded tuples (0 when there are none).
Tick hyper_period(const TaskSet& ts);

// Analysis horizon: the hyper-period, floored by the last absolute deadline
// any bounded tuple can produce.
Tick analysis_horizon(const TaskSet& ts);

// All jobs of one task released in [lo, hi), release-ordered, with correct
// task-level indices. Frame execution/deadline cycle by the impulse's index
// within its own tuple so closed-form bounds and enumeration agree.
std::vector<Job> task_jobs_in(const Task& t, std::size_t task_pos, Tick lo, Tick hi);

// All jobs of the set released in [0, horizon), ordered by (release, task
// position, index).
std::vector<Job> jobs_in(const TaskSet& ts, Tick horizon);

}  // namespace herta
