#include "herta/predicates.hpp"

namespace herta {

static bool theta_up(std::int64_t v) { return v >= 0; }
static bool theta_down(std::int64_t v) { return v > 0; }

bool heaviside_rel(std::int64_t x, std::int64_t y, Relation r) {
    switch (r) {
        case Relation::Eq:
            return theta_up(x - y) && theta_up(y - x);
        case Relation::Le:
            return theta_up(y - x);
        case Relation::Ge:
            return theta_up(x - y);
        case Relation::Lt:
            return theta_down(y - x);
        case Relation::Gt:
            return theta_down(x - y);
    }
    return false;
}

const char* SchedulerPredicate::name() const {
    switch (kind) {
        case SchedulerKind::StaticPriority:
            return "static_priority";
        case SchedulerKind::StaticDms:
            return "static_dms";
        case SchedulerKind::EdfFifo:
            return "edf_fifo";
        case SchedulerKind::EdfFree:
            return "edf_free";
        case SchedulerKind::Hierarchical:
            return "hierarchical";
    }
    return "?";
}

std::vector<std::string> SchedulerPredicate::tie_chain() const {
    switch (kind) {
        case SchedulerKind::StaticPriority:
            return {"priority", "request_time", "task_order", "job_index"};
        case SchedulerKind::StaticDms:
            return {"rel_deadline", "request_time", "task_order", "job_index"};
        case SchedulerKind::EdfFifo:
            return {"abs_deadline", "request_time", "task_order", "job_index"};
        case SchedulerKind::EdfFree:
            return {"abs_deadline_le"};
        case SchedulerKind::Hierarchical:
            return {"priority", "abs_deadline", "request_time", "task_order", "job_index"};
    }
    return {};
}

// Strict lexicographic order on (key, request time, task position, index).
// The trailing index keeps the relation total even when one task releases
// two jobs at the same instant from different tuples.
static bool before(std::int64_t key_c, std::int64_t key_v, const Job& cand, const Job& vict) {
    if (!heaviside_rel(key_c, key_v, Relation::Eq)) return heaviside_rel(key_c, key_v, Relation::Lt);
    if (cand.release != vict.release) return heaviside_rel(cand.release, vict.release, Relation::Lt);
    if (cand.task_pos != vict.task_pos) return cand.task_pos < vict.task_pos;
    return cand.index < vict.index;
}

bool interferes(const SchedulerPredicate& p, const Job& victim, const Job& candidate) {
    if (candidate.same_job(victim)) return false;
    switch (p.kind) {
        case SchedulerKind::StaticPriority:
            return before(candidate.priority, victim.priority, candidate, victim);
        case SchedulerKind::StaticDms:
            return before(candidate.rel_deadline, victim.rel_deadline, candidate, victim);
        case SchedulerKind::EdfFifo:
            return before(candidate.abs_deadline, victim.abs_deadline, candidate, victim);
        case SchedulerKind::EdfFree:
            return heaviside_rel(candidate.abs_deadline, victim.abs_deadline, Relation::Le);
        case SchedulerKind::Hierarchical:
            if (candidate.priority != victim.priority)
                return heaviside_rel(candidate.priority, victim.priority, Relation::Lt);
            return before(candidate.abs_deadline, victim.abs_deadline, candidate, victim);
    }
    return false;
}

Tick interference_request_bound(const SchedulerPredicate& p, const Job& victim, const TaskSet& ts,
                                Tick window_start, Tick window_len) {
    if (window_len <= 0) return 0;
    const Tick end = checked_add(window_start, window_len);
    Tick sum = 0;
    for (std::size_t pos = 0; pos < ts.tasks.size(); ++pos)
        for (const Job& j : task_jobs_in(ts.tasks[pos], pos, window_start, end))
            if (interferes(p, victim, j)) sum = checked_add(sum, j.exec);
    return sum;
}

}  // namespace herta
