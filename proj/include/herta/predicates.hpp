#pragma once

#include <string>
#include <vector>

#include "herta/event_model.hpp"
#include "herta/types.hpp"

namespace herta {

// Order relations realized as products of unit steps (theta_up(0) = 1,
// theta_down(0) = 0). Equality is the discrete Kronecker delta.
enum class Relation { Eq, Le, Ge, Lt, Gt };

bool heaviside_rel(std::int64_t x, std::int64_t y, Relation r);

enum class SchedulerKind {
    StaticPriority,  // fixed task priority, smaller number wins
    StaticDms,       // fixed priority from the job's relative deadline
    EdfFifo,         // absolute deadline, FIFO on ties
    EdfFree,         // absolute deadline only; over-approximation, not an order
    Hierarchical,    // task priority bands, EDF-FIFO inside a band
};

struct SchedulerPredicate {
    SchedulerKind kind = SchedulerKind::EdfFifo;

    // EDF_FREE treats equal deadlines as mutual interference, so it bounds
    // every tie resolution instead of picking one.
    bool strict_total_order() const { return kind != SchedulerKind::EdfFree; }
    const char* name() const;
    std::vector<std::string> tie_chain() const;
};

// True when the candidate job can take the processor from (or hold it
// against) the victim under the predicate's dispatch order.
bool interferes(const SchedulerPredicate& p, const Job& victim, const Job& candidate);

// Total execution of jobs other than the victim released in
// [window_start, window_start + window_len) that interfere with it.
Tick interference_request_bound(const SchedulerPredicate& p, const Job& victim, const TaskSet& ts,
                                Tick window_start, Tick window_len);

}  // namespace herta
