#include "herta/simulator.hpp"

#include <algorithm>
#include <string>

namespace herta {

namespace {

struct Active {
    const Job* job;
    Tick remaining;
};

// The running job must beat every other pending job. A strict total order
// makes the single-pass maximum unique; the verify pass catches predicates
// that are not.
std::size_t pick_running(const SchedulerPredicate& p, const std::vector<Active>& act) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < act.size(); ++i)
        if (interferes(p, *act[best].job, *act[i].job)) best = i;
    for (std::size_t i = 0; i < act.size(); ++i)
        if (i != best && !interferes(p, *act[i].job, *act[best].job))
            throw PredicateNotTotalError(std::string("dispatch tie under ") + p.name() +
                                         ": no unique running job");
    return best;
}

}  // namespace

SimTrace simulate(const TaskSet& ts, const SchedulerPredicate& p, Tick horizon) {
    if (horizon < 1) throw HorizonError("simulation horizon must be >= 1");
    if (!p.strict_total_order())
        throw PredicateNotTotalError(std::string(p.name()) +
                                     " is an analysis over-approximation, not a dispatch order");

    const std::vector<Job> jobs = jobs_in(ts, horizon);
    SimTrace trace;
    trace.horizon = horizon;

    auto emit = [&trace](const Job& j, Tick from, Tick to) {
        if (!trace.segments.empty()) {
            SimSegment& last = trace.segments.back();
            if (last.task_pos == j.task_pos && last.job_index == j.index && last.end == from) {
                last.end = to;
                return;
            }
        }
        trace.segments.push_back({j.task_pos, j.index, from, to});
    };

    std::vector<Active> active;
    std::size_t next = 0;
    Tick now = 0;
    while (true) {
        while (next < jobs.size() && jobs[next].release == now) {
            active.push_back({&jobs[next], jobs[next].exec});
            ++next;
        }
        if (active.empty()) {
            if (next >= jobs.size()) break;
            trace.idle.emplace_back(now, jobs[next].release);
            now = jobs[next].release;
            continue;
        }
        const std::size_t run = pick_running(p, active);
        const Job& rj = *active[run].job;
        const Tick next_release = next < jobs.size() ? jobs[next].release : kTickMax;
        const Tick finish = checked_add(now, active[run].remaining);
        const Tick stop = std::min(next_release, finish);
        if (stop > horizon) {
            // every release lies below the horizon, so nothing is left unadmitted
            if (now < horizon) {
                emit(rj, now, horizon);
                active[run].remaining -= horizon - now;
            }
            now = horizon;
            break;
        }
        emit(rj, now, stop);
        active[run].remaining -= stop - now;
        now = stop;
        if (active[run].remaining == 0) {
            trace.completions.push_back({rj.task_pos, rj.index, rj.release, now, rj.abs_deadline});
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(run));
        }
    }
    for (const Active& a : active)
        trace.pending.push_back({a.job->task_pos, a.job->index, a.job->release, a.job->abs_deadline, a.remaining});
    return trace;
}

std::vector<MissRecord> misses(const SimTrace& trace) {
    std::vector<MissRecord> out;
    for (const SimCompletion& c : trace.completions)
        if (c.missed()) out.push_back({c.task_pos, c.job_index, c.abs_deadline, c.finish});
    for (const SimPending& pj : trace.pending)
        if (pj.abs_deadline <= trace.horizon) out.push_back({pj.task_pos, pj.job_index, pj.abs_deadline, {}});
    return out;
}

ResponseSummary measured_responses(const SimTrace& trace, const TaskSet& ts) {
    if (!trace.pending.empty()) {
        std::string msg = "jobs still pending at horizon " + std::to_string(trace.horizon) + ":";
        for (const SimPending& pj : trace.pending)
            msg += " " + ts.tasks[pj.task_pos].id + "#" + std::to_string(pj.job_index) + " (remaining " +
                   std::to_string(pj.remaining) + ")";
        throw IncompleteJobError(msg);
    }
    ResponseSummary sum;
    sum.worst.resize(ts.tasks.size());
    for (const SimCompletion& c : trace.completions) {
        sum.by_job[{c.task_pos, c.job_index}] = c.response();
        auto& w = sum.worst[c.task_pos];
        if (!w || *w < c.response()) w = c.response();
    }
    return sum;
}

}  // namespace herta
