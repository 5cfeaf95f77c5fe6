#include "herta/bounds.hpp"

#include <numeric>

namespace herta {

ClosedSpan counting_span(const HeavisideMask& m, Tick t) {
    if (t < m.hi) return as_closed(m.lo, m.left, t, EndpointMode::Closed);
    return as_closed(m.lo, m.left, m.hi, m.right);
}

std::int64_t event_bound(const EventSpectrum& s, Tick t, const HeavisideMask& m) {
    const ClosedSpan span = counting_span(m, t);
    std::int64_t n = 0;
    for (const EventTuple& tu : s) n += tuple_hits(tu, span).count();
    return n;
}

ClassicCounts classic_counts(Tick p, Tick t) {
    // deliberately plain integer arithmetic, no shared code with event_bound
    return {(t + p - 1) / p, t / p, t / p + 1};
}

// Sum of w[(first + j) mod |w|] for j = 0 .. cnt-1 without looping over cnt.
static Tick cycled_sum(const std::vector<Tick>& w, std::int64_t first, std::int64_t cnt) {
    const auto m = static_cast<std::int64_t>(w.size());
    Tick cycle = 0;
    for (Tick c : w) cycle = checked_add(cycle, c);
    Tick sum = checked_mul(cnt / m, cycle);
    for (std::int64_t j = 0; j < cnt % m; ++j)
        sum = checked_add(sum, w[static_cast<std::size_t>((first + j) % m)]);
    return sum;
}

Tick request_bound(const Task& t, Tick at, const HeavisideMask& m) {
    const ClosedSpan span = counting_span(m, at);
    Tick sum = 0;
    for (const EventTuple& tu : t.spectrum) {
        const TupleHits h = tuple_hits(tu, span);
        if (h.any()) sum = checked_add(sum, cycled_sum(t.wcet, h.first, h.count()));
    }
    return sum;
}

Tick task_demand(const Task& t, std::size_t task_pos, Tick at) {
    Tick sum = 0;
    for (const Job& j : task_jobs_in(t, task_pos, 0, at))  // deadline >= 1, so release < at
        if (j.abs_deadline <= at) sum += j.exec;
    return sum;
}

Tick task_demand_shifted(const Task& t, Tick at) {
    const Tick d = t.deadlines.front();
    if (at < d) return 0;
    return request_bound(t, at - d, HeavisideMask::unbounded());
}

Tick demand_bound(const TaskSet& ts, Tick at) {
    Tick sum = 0;
    for (std::size_t pos = 0; pos < ts.tasks.size(); ++pos)
        sum = checked_add(sum, task_demand(ts.tasks[pos], pos, at));
    return sum;
}

}  // namespace herta
