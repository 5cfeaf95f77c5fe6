#include "herta/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace herta {

namespace {

// max over s in {0} union releases of sum(exec released in [s,t)) - (t-s),
// clamped at 0. arrivals: (release, exec) pairs, releases < t.
Tick backlog_scan(std::vector<std::pair<Tick, Tick>>& arrivals, Tick t) {
    std::sort(arrivals.begin(), arrivals.end());
    Tick best = 0;
    Tick suffix = 0;
    for (auto it = arrivals.rbegin(); it != arrivals.rend(); ++it) {
        suffix += it->second;
        best = std::max(best, suffix - (t - it->first));
    }
    if (!arrivals.empty()) best = std::max(best, suffix - t);  // s = 0
    return best;
}

Tick divergence_bound(const TaskSet& ts) {
    // Busy windows of a schedulable set fit into one hyper-period plus the
    // carried-in execution, so anything past that slack cannot converge.
    Tick maxd = 0;
    Tick carry = 0;
    for (const Task& t : ts.tasks) {
        maxd = std::max(maxd, t.max_deadline());
        carry = checked_add(carry, *std::max_element(t.wcet.begin(), t.wcet.end()));
    }
    return checked_add(checked_add(analysis_horizon(ts), maxd), carry);
}

std::optional<Tick> fixed_point(const SchedulerPredicate& p, const Job& victim, const TaskSet& ts, Tick rl,
                                Tick bound) {
    Tick w = checked_add(rl, victim.exec);
    while (w <= bound) {
        const Tick next =
            checked_add(checked_add(rl, victim.exec), interference_request_bound(p, victim, ts, victim.release, w));
        if (next == w) return w;
        w = next;
    }
    return std::nullopt;
}

}  // namespace

Tick remaining_load(const SchedulerPredicate& p, const Job& victim, Tick t, const TaskSet& ts) {
    std::vector<std::pair<Tick, Tick>> arrivals;
    for (std::size_t pos = 0; pos < ts.tasks.size(); ++pos)
        for (const Job& j : task_jobs_in(ts.tasks[pos], pos, 0, t))
            if (interferes(p, victim, j)) arrivals.emplace_back(j.release, j.exec);
    return backlog_scan(arrivals, t);
}

Frac average_load(const TaskSet& ts, Tick a, Tick b) {
    if (a < 0 || b <= a) throw Error("average-load interval must satisfy 0 <= a < b");
    std::vector<std::pair<Tick, Tick>> arrivals;
    for (std::size_t pos = 0; pos < ts.tasks.size(); ++pos)
        for (const Job& j : task_jobs_in(ts.tasks[pos], pos, 0, a)) arrivals.emplace_back(j.release, j.exec);
    Tick load = backlog_scan(arrivals, a);
    for (const Task& t : ts.tasks)
        load = checked_add(load, request_bound(t, b, HeavisideMask::closed_open(a, b)));
    return Frac(load, b - a);
}

FeasibilityReport feasibility(const TaskSet& ts, FeasibilityMode mode) {
    FeasibilityReport rep;
    const Tick horizon = analysis_horizon(ts);
    rep.horizon = horizon;
    if (ts.tasks.empty() || horizon == 0) return rep;

    rep.utilization = average_load(ts, 0, horizon);
    if (rep.utilization > Frac(1, 1)) {
        rep.feasible = false;
        rep.utilization_exceeded = true;
        return rep;
    }

    // Per task: deadline-sorted and release-sorted cumulative execution, so
    // each checkpoint evaluates with two binary searches. Releases exactly
    // at the horizon still matter for the closed-closed request bound.
    const std::size_t n = ts.tasks.size();
    std::vector<std::vector<std::pair<Tick, Tick>>> by_deadline(n), by_release(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        std::vector<Job> js = task_jobs_in(ts.tasks[pos], pos, 0, checked_add(horizon, 1));
        auto& bd = by_deadline[pos];
        auto& br = by_release[pos];
        for (const Job& j : js) {
            if (j.abs_deadline <= horizon && j.release < horizon) bd.emplace_back(j.abs_deadline, j.exec);
            br.emplace_back(j.release, j.exec);
        }
        std::sort(bd.begin(), bd.end());
        for (std::size_t i = 1; i < bd.size(); ++i) bd[i].second += bd[i - 1].second;
        for (std::size_t i = 1; i < br.size(); ++i) br[i].second += br[i - 1].second;
    }
    auto cumulative_at = [](const std::vector<std::pair<Tick, Tick>>& v, Tick t) -> Tick {
        auto it = std::upper_bound(v.begin(), v.end(), std::make_pair(t, kTickMax));
        return it == v.begin() ? 0 : std::prev(it)->second;
    };

    std::set<Tick> points;
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (const auto& [d, cum] : by_deadline[pos]) points.insert(d);
        if (mode != FeasibilityMode::Edf)
            for (const auto& [r, cum] : by_release[pos]) points.insert(r);
    }

    auto level = [&](std::size_t pos) -> std::int64_t {
        return mode == FeasibilityMode::Edf ? 0 : ts.tasks[pos].priority;
    };
    for (const Tick t : points) {
        for (std::size_t pos = 0; pos < n; ++pos) {
            Tick demand = 0;
            if (mode == FeasibilityMode::Static) {
                demand = cumulative_at(by_deadline[pos], t);
            } else {
                for (std::size_t other = 0; other < n; ++other)
                    if (level(other) == level(pos)) demand += cumulative_at(by_deadline[other], t);
            }
            if (demand == 0) continue;  // nothing due yet, checkpoint not binding
            Tick lhs = demand;
            for (std::size_t other = 0; other < n; ++other)
                if (level(other) < level(pos)) lhs += cumulative_at(by_release[other], t);
            if (lhs > t) {
                rep.feasible = false;
                rep.witness = FeasibilityWitness{t, pos, lhs};
                return rep;
            }
        }
    }
    return rep;
}

std::optional<Tick> response_time(const SchedulerPredicate& p, const Job& victim, const TaskSet& ts) {
    const Tick rl = remaining_load(p, victim, victim.release, ts);
    return fixed_point(p, victim, ts, rl, divergence_bound(ts));
}

bool RtaResult::any_diverged() const {
    for (const TaskWorst& w : worst)
        if (w.diverged) return true;
    return false;
}

bool RtaResult::all_met() const {
    for (const TaskWorst& w : worst)
        if (!w.all_met) return false;
    return true;
}

RtaResult rta_all(const TaskSet& ts, const SchedulerPredicate& p) {
    RtaResult res;
    res.predicate = p;
    res.horizon = analysis_horizon(ts);
    res.worst.resize(ts.tasks.size());
    const Tick bound = divergence_bound(ts);
    for (const Job& j : jobs_in(ts, res.horizon)) {
        JobResponse jr;
        jr.job = j;
        jr.remaining = remaining_load(p, j, j.release, ts);
        jr.response = fixed_point(p, j, ts, jr.remaining, bound);

        TaskWorst& w = res.worst[j.task_pos];
        ++w.jobs;
        if (!jr.response) {
            w.diverged = true;
            w.all_met = false;
        } else {
            if (!w.response || *w.response < *jr.response) w.response = *jr.response;
            if (!jr.met()) w.all_met = false;
        }
        res.jobs.push_back(std::move(jr));
    }
    return res;
}

EdfBoundsTable compare_edf_bounds(const TaskSet& ts) {
    const RtaResult fifo = rta_all(ts, {SchedulerKind::EdfFifo});
    const RtaResult free_rta = rta_all(ts, {SchedulerKind::EdfFree});
    EdfBoundsTable table;
    table.horizon = fifo.horizon;
    for (std::size_t pos = 0; pos < ts.tasks.size(); ++pos) {
        EdfBoundsRow row;
        row.task_pos = pos;
        row.tie_broken = fifo.worst[pos];
        row.free_choice = free_rta.worst[pos];
        const TaskWorst& tb = row.tie_broken;
        const TaskWorst& fc = row.free_choice;
        if (fc.diverged) {
            row.free_strictly_larger = !tb.diverged;
            row.bound_respected = true;  // an unbounded bound dominates everything
        } else if (tb.diverged) {
            row.free_strictly_larger = false;
            row.bound_respected = false;
        } else if (tb.response && fc.response) {
            row.free_strictly_larger = *fc.response > *tb.response;
            row.bound_respected = *tb.response <= *fc.response;
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace herta
