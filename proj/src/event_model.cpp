#include "herta/event_model.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

namespace herta {

Tick Task::max_deadline() const {
    return *std::max_element(deadlines.begin(), deadlines.end());
}

TupleHits tuple_hits(const EventTuple& tu, ClosedSpan span) {
    if (!span.nonempty()) return {};
    const Tick a = tu.offset;
    if (tu.one_shot() || *tu.period == 0) {
        if (a < span.lo || a > span.hi) return {};
        return {0, tu.count.value_or(1) - 1};
    }
    const Tick p = *tu.period;
    if (span.hi < a) return {};
    std::int64_t first = 0;
    if (span.lo > a) first = (span.lo - a + p - 1) / p;
    std::int64_t last = (span.hi - a) / p;
    if (!tu.unbounded()) last = std::min<std::int64_t>(last, *tu.count - 1);
    if (last < first) return {};
    return {first, last};
}

void check_tuple(const EventTuple& tu, const std::string& where) {
    if (tu.offset < 0) throw SemanticError(where + ": offset must be >= 0");
    if (tu.period && *tu.period < 0) throw SemanticError(where + ": period must be >= 0");
    if (tu.count && *tu.count < 1) throw SemanticError(where + ": count must be >= 1");
    if (tu.one_shot() && (tu.unbounded() || *tu.count != 1))
        throw SemanticError(where + ": a tuple without a period carries exactly one event");
    if (tu.period && *tu.period == 0 && (tu.unbounded() || *tu.count != 1))
        throw SemanticError(where + ": zero period is only valid for a single event");
    if (tu.unbounded() && *tu.period < 1)
        throw SemanticError(where + ": an unbounded tuple needs period >= 1");
}

void check_task(const Task& t, const std::string& where) {
    if (t.id.empty()) throw SemanticError(where + ": empty task id");
    if (t.spectrum.empty()) throw SemanticError(where + ": empty event spectrum");
    for (std::size_t i = 0; i < t.spectrum.size(); ++i)
        check_tuple(t.spectrum[i], where + ".tuples[" + std::to_string(i) + "]");
    if (t.wcet.empty()) throw SemanticError(where + ": wcet vector is empty");
    for (Tick c : t.wcet)
        if (c < 1) throw SemanticError(where + ": wcet entries must be >= 1");
    if (t.deadlines.empty()) throw SemanticError(where + ": deadline vector is empty");
    for (Tick d : t.deadlines)
        if (d < 1) throw SemanticError(where + ": deadline entries must be >= 1");
    if (!t.bcet.empty()) {
        if (t.bcet.size() != t.wcet.size())
            throw SemanticError(where + ": bcet and wcet vectors differ in length");
        for (std::size_t i = 0; i < t.bcet.size(); ++i)
            if (t.bcet[i] < 0 || t.bcet[i] > t.wcet[i])
                throw SemanticError(where + ": bcet entries must lie in [0, wcet]");
    }
}

void check_task_set(const TaskSet& ts) {
    for (std::size_t i = 0; i < ts.tasks.size(); ++i) {
        const Task& t = ts.tasks[i];
        check_task(t, "tasks[" + std::to_string(i) + "]");
        for (std::size_t j = 0; j < i; ++j)
            if (ts.tasks[j].id == t.id) throw SemanticError("duplicate task id: " + t.id);
    }
}

std::vector<Tick> impulses(const EventSpectrum& s, Tick lo, Tick hi, EndpointMode left, EndpointMode right) {
    const ClosedSpan span = as_closed(lo, left, hi, right);
    std::vector<Tick> out;
    for (const EventTuple& tu : s) {
        const TupleHits h = tuple_hits(tu, span);
        const Tick p = tu.period.value_or(0);
        for (std::int64_t n = h.first; n <= h.last; ++n)
            out.push_back(checked_add(tu.offset, checked_mul(n, p)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

EventSpectrum compose(const EventSpectrum& outer, const EventSpectrum& inner) {
    EventSpectrum out;
    for (const EventTuple& o : outer) {
        for (const EventTuple& i : inner) {
            const EventTuple* driver = &o;  // the finite side spawns the copies
            const EventTuple* train = &i;
            if (driver->unbounded()) std::swap(driver, train);
            if (driver->unbounded())
                throw CompositionUnboundedError(
                    "composing two unbounded trains would yield unbounded event density");
            const Tick step = driver->period.value_or(0);
            for (std::int64_t n = 0; n < *driver->count; ++n) {
                EventTuple copy = *train;
                copy.offset = checked_add(checked_add(driver->offset, train->offset), checked_mul(n, step));
                out.push_back(copy);
            }
        }
    }
    return out;
}

// Clip an unbounded train to its impulses below the horizon.
static EventTuple clipped(const EventTuple& tu, Tick horizon) {
    if (!tu.unbounded()) return tu;
    EventTuple c = tu;
    const TupleHits h = tuple_hits(tu, as_closed(0, EndpointMode::Closed, horizon, EndpointMode::Open));
    c.count = std::max<std::int64_t>(h.count(), 1);  // keep the tuple well formed even past the horizon
    return c;
}

EventSpectrum compose(const EventSpectrum& outer, const EventSpectrum& inner, Tick horizon) {
    EventSpectrum o = outer, i = inner;
    for (EventTuple& tu : o) tu = clipped(tu, horizon);
    for (EventTuple& tu : i) tu = clipped(tu, horizon);
    return compose(o, i);
}

ValidationReport validate_spectrum(const EventSpectrum& s, Tick horizon) {
    ValidationReport rep;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const EventTuple& tu = s[i];
        const std::string where = "tuples[" + std::to_string(i) + "]";
        try {
            check_tuple(tu, where);
        } catch (const SemanticError& e) {
            rep.violations.push_back(e.what());
        }
    }
    if (!rep.violations.empty() || horizon < 1 || s.empty()) return rep;

    // Subadditivity scan of N(x) = events in [0, x). Quadratic in the
    // horizon, so a large request is capped and the cap is reported.
    Tick scan = horizon;
    constexpr Tick kScanCap = 10000;
    if (scan > kScanCap) {
        scan = kScanCap;
        rep.infos.push_back("subadditivity scan capped at horizon " + std::to_string(kScanCap));
    }
    const Tick top = scan * 2;
    std::vector<std::int64_t> n_before(static_cast<std::size_t>(top) + 1, 0);
    for (Tick v : impulses(s, 0, top, EndpointMode::Closed, EndpointMode::Open))
        if (v + 1 <= top) ++n_before[static_cast<std::size_t>(v) + 1];
    for (std::size_t x = 1; x < n_before.size(); ++x) n_before[x] += n_before[x - 1];

    bool super_ok = true;
    std::optional<std::pair<Tick, Tick>> sub_witness;
    for (Tick a = 0; a <= scan; ++a) {
        for (Tick b = a; b <= scan; ++b) {
            const std::int64_t lhs = n_before[static_cast<std::size_t>(a + b)];
            const std::int64_t rhs = n_before[static_cast<std::size_t>(a)] + n_before[static_cast<std::size_t>(b)];
            if (lhs > rhs && !sub_witness) sub_witness = {a, b};
            if (lhs < rhs) super_ok = false;
        }
    }
    if (sub_witness) {
        const auto [a, b] = *sub_witness;
        const std::string w = "count[0," + std::to_string(a + b) + ") > count[0," + std::to_string(a) +
                              ") + count[0," + std::to_string(b) + ")";
        if (super_ok)
            rep.infos.push_back("superadditive (minimal-density) stream: " + w);
        else
            rep.violations.push_back("event count is not subadditive: " + w);
    }
    return rep;
}

Tick hyper_period(const TaskSet& ts) {
    Tick l = 0;
    for (const Task& t : ts.tasks)
        for (const EventTuple& tu : t.spectrum)
            if (tu.unbounded()) {
                const Tick p = *tu.period;
                l = (l == 0) ? p : checked_mul(l / std::gcd(l, p), p);
            }
    return l;
}

Tick analysis_horizon(const TaskSet& ts) {
    Tick h = hyper_period(ts);
    for (const Task& t : ts.tasks) {
        for (const EventTuple& tu : t.spectrum) {
            if (tu.unbounded()) continue;
            const Tick last = checked_add(tu.offset, checked_mul(*tu.count - 1, tu.period.value_or(0)));
            h = std::max(h, checked_add(last, t.max_deadline()));
        }
    }
    return h;
}

std::vector<Job> task_jobs_in(const Task& t, std::size_t task_pos, Tick lo, Tick hi) {
    struct Rel {
        Tick r;
        std::size_t tuple;
        std::int64_t n;
    };
    const ClosedSpan span = as_closed(lo, EndpointMode::Closed, hi, EndpointMode::Open);
    std::vector<Rel> rels;
    for (std::size_t j = 0; j < t.spectrum.size(); ++j) {
        const EventTuple& tu = t.spectrum[j];
        const TupleHits h = tuple_hits(tu, span);
        const Tick p = tu.period.value_or(0);
        for (std::int64_t n = h.first; n <= h.last; ++n)
            rels.push_back({checked_add(tu.offset, checked_mul(n, p)), j, n});
    }
    std::sort(rels.begin(), rels.end(), [](const Rel& a, const Rel& b) {
        return std::tie(a.r, a.tuple, a.n) < std::tie(b.r, b.tuple, b.n);
    });

    std::vector<Job> jobs;
    jobs.reserve(rels.size());
    for (const Rel& rel : rels) {
        // Task-level index: rank of this release among all releases of the
        // task since time 0 (simultaneous cross-tuple releases rank by
        // tuple position).
        std::int64_t rank = rel.n;
        for (std::size_t j = 0; j < t.spectrum.size(); ++j) {
            if (j == rel.tuple) continue;
            rank += tuple_hits(t.spectrum[j], as_closed(0, EndpointMode::Closed, rel.r, EndpointMode::Open)).count();
            if (j < rel.tuple && tuple_hits(t.spectrum[j], {rel.r, rel.r}).any()) ++rank;
        }
        Job job;
        job.task_pos = task_pos;
        job.index = rank;
        job.release = rel.r;
        job.exec = t.exec_at(rel.n);
        job.rel_deadline = t.deadline_at(rel.n);
        job.abs_deadline = checked_add(rel.r, job.rel_deadline);
        job.priority = t.priority;
        jobs.push_back(job);
    }
    return jobs;
}

std::vector<Job> jobs_in(const TaskSet& ts, Tick horizon) {
    std::vector<Job> out;
    if (horizon <= 0) return out;
    for (std::size_t pos = 0; pos < ts.tasks.size(); ++pos) {
        std::vector<Job> js = task_jobs_in(ts.tasks[pos], pos, 0, horizon);
        out.insert(out.end(), js.begin(), js.end());
    }
    std::sort(out.begin(), out.end(), [](const Job& a, const Job& b) {
        return std::tie(a.release, a.task_pos, a.index) < std::tie(b.release, b.task_pos, b.index);
    });
    return out;
}

}  // namespace herta
