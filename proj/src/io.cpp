#include "herta/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace herta {

using njson = nlohmann::json;

namespace {

const njson& need(const njson& o, const char* key, const std::string& where) {
    if (!o.is_object()) throw SemanticError(where + ": expected an object");
    auto it = o.find(key);
    if (it == o.end()) throw SemanticError(where + ": missing field '" + key + "'");
    return *it;
}

std::int64_t as_int(const njson& v, const std::string& where) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(kTickMax))
        throw SemanticError(where + ": integer out of range");
    if (!v.is_number_integer()) throw SemanticError(where + ": expected an integer");
    return v.get<std::int64_t>();
}

std::vector<Tick> as_tick_vector(const njson& v, const std::string& where) {
    if (!v.is_array()) throw SemanticError(where + ": expected an array");
    std::vector<Tick> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

EventTuple parse_tuple(const njson& v, const std::string& where) {
    EventTuple tu;
    tu.offset = as_int(need(v, "offset", where), where + ".offset");
    const njson& p = need(v, "period", where);
    if (!p.is_null()) tu.period = as_int(p, where + ".period");
    const njson& k = need(v, "count", where);
    if (k.is_string()) {
        if (k.get<std::string>() != "inf")
            throw SemanticError(where + ".count: expected an integer or \"inf\"");
    } else {
        tu.count = as_int(k, where + ".count");
    }
    return tu;
}

}  // namespace

TaskSet parse_taskset(const std::string& text) {
    njson doc;
    try {
        doc = njson::parse(text);
    } catch (const njson::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw SemanticError("document root must be an object");

    const njson& version = need(doc, "version", "document");
    const bool version_ok =
        (version.is_string() && version.get<std::string>() == "1") || (version.is_number_integer() && version == 1);
    if (!version_ok) throw SemanticError("document.version: expected \"1\"");

    const njson& pol = need(doc, "priority_polarity", "document");
    bool larger_is_higher = false;
    if (pol.is_string() && pol.get<std::string>() == "smaller_is_higher")
        larger_is_higher = false;
    else if (pol.is_string() && pol.get<std::string>() == "larger_is_higher")
        larger_is_higher = true;
    else
        throw SemanticError("document.priority_polarity: expected \"smaller_is_higher\" or \"larger_is_higher\"");

    const njson& tasks = need(doc, "tasks", "document");
    if (!tasks.is_array()) throw SemanticError("document.tasks: expected an array");

    TaskSet ts;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const std::string where = "tasks[" + std::to_string(i) + "]";
        const njson& tv = tasks[i];
        Task t;
        const njson& id = need(tv, "id", where);
        if (!id.is_string()) throw SemanticError(where + ".id: expected a string");
        t.id = id.get<std::string>();
        const njson& tuples = need(tv, "tuples", where);
        if (!tuples.is_array()) throw SemanticError(where + ".tuples: expected an array");
        for (std::size_t j = 0; j < tuples.size(); ++j)
            t.spectrum.push_back(parse_tuple(tuples[j], where + ".tuples[" + std::to_string(j) + "]"));
        t.wcet = as_tick_vector(need(tv, "wcet", where), where + ".wcet");
        t.bcet = tv.contains("bcet") ? as_tick_vector(tv.at("bcet"), where + ".bcet") : t.wcet;
        t.deadlines = as_tick_vector(need(tv, "deadline", where), where + ".deadline");
        t.priority = as_int(need(tv, "priority", where), where + ".priority");
        if (larger_is_higher) t.priority = -t.priority;
        ts.tasks.push_back(std::move(t));
    }
    check_task_set(ts);
    return ts;
}

TaskSet load_taskset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_taskset(buf.str());
}

ojson taskset_doc(const TaskSet& ts) {
    ojson doc;
    doc["version"] = "1";
    doc["priority_polarity"] = "smaller_is_higher";
    doc["tasks"] = ojson::array();
    for (const Task& t : ts.tasks) {
        ojson tv;
        tv["id"] = t.id;
        tv["tuples"] = ojson::array();
        for (const EventTuple& tu : t.spectrum) {
            ojson e;
            e["offset"] = tu.offset;
            if (tu.period)
                e["period"] = *tu.period;
            else
                e["period"] = nullptr;
            if (tu.count)
                e["count"] = *tu.count;
            else
                e["count"] = "inf";
            tv["tuples"].push_back(std::move(e));
        }
        tv["wcet"] = t.wcet;
        tv["bcet"] = t.bcet.empty() ? t.wcet : t.bcet;
        tv["deadline"] = t.deadlines;
        tv["priority"] = t.priority;
        doc["tasks"].push_back(std::move(tv));
    }
    return doc;
}

std::string serialize_taskset(const TaskSet& ts) { return dump_report(taskset_doc(ts)); }

ojson validation_report(const TaskSet& ts, Tick horizon) {
    ojson rep;
    rep["command"] = "validate";
    rep["horizon"] = horizon;
    rep["tasks"] = ojson::array();
    bool all_valid = true;
    for (const Task& t : ts.tasks) {
        const ValidationReport vr = validate_spectrum(t.spectrum, horizon);
        ojson tv;
        tv["id"] = t.id;
        tv["valid"] = vr.valid();
        tv["violations"] = vr.violations;
        tv["infos"] = vr.infos;
        all_valid = all_valid && vr.valid();
        rep["tasks"].push_back(std::move(tv));
    }
    rep["valid"] = all_valid;
    return rep;
}

static const char* mode_name(FeasibilityMode m) {
    switch (m) {
        case FeasibilityMode::Edf:
            return "edf";
        case FeasibilityMode::Static:
            return "static";
        case FeasibilityMode::Hierarchical:
            return "hierarchical";
    }
    return "?";
}

ojson feasibility_report(const TaskSet& ts, FeasibilityMode mode, const FeasibilityReport& rep) {
    ojson out;
    out["command"] = "feasibility";
    out["scheduler"] = mode_name(mode);
    out["horizon"] = rep.horizon;
    out["utilization"] = rep.utilization.str();
    out["feasible"] = rep.feasible;
    out["utilization_exceeded"] = rep.utilization_exceeded;
    if (rep.witness) {
        ojson w;
        w["t"] = rep.witness->t;
        w["task"] = ts.tasks[rep.witness->task_pos].id;
        w["demand"] = rep.witness->demand;
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

static ojson response_value(const std::optional<Tick>& r) {
    if (!r) return ojson("diverged");
    return ojson(*r);
}

ojson rta_report(const TaskSet& ts, const RtaResult& res) {
    ojson out;
    out["command"] = "rta";
    out["scheduler"] = res.predicate.name();
    out["tie_chain"] = res.predicate.tie_chain();
    out["upper_bound"] = res.predicate.kind == SchedulerKind::EdfFree;
    out["horizon"] = res.horizon;
    out["tasks"] = ojson::array();
    for (std::size_t pos = 0; pos < ts.tasks.size(); ++pos) {
        const TaskWorst& w = res.worst[pos];
        ojson tv;
        tv["id"] = ts.tasks[pos].id;
        if (w.diverged)
            tv["worst_response"] = "diverged";
        else if (w.response)
            tv["worst_response"] = *w.response;
        else
            tv["worst_response"] = nullptr;
        tv["all_met"] = w.all_met;
        tv["jobs"] = ojson::array();
        out["tasks"].push_back(std::move(tv));
    }
    for (const JobResponse& jr : res.jobs) {
        ojson jv;
        jv["index"] = jr.job.index;
        jv["release"] = jr.job.release;
        jv["remaining"] = jr.remaining;
        jv["response"] = response_value(jr.response);
        jv["deadline"] = jr.job.rel_deadline;
        jv["met"] = jr.met();
        out["tasks"][jr.job.task_pos]["jobs"].push_back(std::move(jv));
    }
    out["all_met"] = res.all_met();
    out["diverged"] = res.any_diverged();
    return out;
}

ojson sim_report(const TaskSet& ts, const SchedulerPredicate& p, const SimTrace& trace) {
    ojson out;
    out["command"] = "simulate";
    out["scheduler"] = p.name();
    out["horizon"] = trace.horizon;
    out["segments"] = ojson::array();
    for (const SimSegment& s : trace.segments) {
        ojson sv;
        sv["task"] = ts.tasks[s.task_pos].id;
        sv["job"] = s.job_index;
        sv["start"] = s.start;
        sv["end"] = s.end;
        out["segments"].push_back(std::move(sv));
    }
    out["completions"] = ojson::array();
    for (const SimCompletion& c : trace.completions) {
        ojson cv;
        cv["task"] = ts.tasks[c.task_pos].id;
        cv["job"] = c.job_index;
        cv["release"] = c.release;
        cv["finish"] = c.finish;
        cv["deadline"] = c.abs_deadline;
        cv["response"] = c.response();
        cv["missed"] = c.missed();
        out["completions"].push_back(std::move(cv));
    }
    out["idle"] = ojson::array();
    for (const auto& [from, to] : trace.idle) out["idle"].push_back(ojson::array({from, to}));
    out["pending"] = ojson::array();
    for (const SimPending& pj : trace.pending) {
        ojson pv;
        pv["task"] = ts.tasks[pj.task_pos].id;
        pv["job"] = pj.job_index;
        pv["release"] = pj.release;
        pv["deadline"] = pj.abs_deadline;
        pv["remaining"] = pj.remaining;
        out["pending"].push_back(std::move(pv));
    }
    out["misses"] = ojson::array();
    for (const MissRecord& m : misses(trace)) {
        ojson mv;
        mv["task"] = ts.tasks[m.task_pos].id;
        mv["job"] = m.job_index;
        mv["deadline"] = m.abs_deadline;
        if (m.finish)
            mv["finish"] = *m.finish;
        else
            mv["finish"] = nullptr;
        out["misses"].push_back(std::move(mv));
    }
    return out;
}

ojson compare_report(const TaskSet& ts, const EdfBoundsTable& table) {
    ojson out;
    out["command"] = "compare";
    out["horizon"] = table.horizon;
    out["tasks"] = ojson::array();
    bool all_ok = true;
    for (const EdfBoundsRow& row : table.rows) {
        ojson rv;
        rv["id"] = ts.tasks[row.task_pos].id;
        rv["tie_broken"] = row.tie_broken.diverged ? ojson("diverged") : response_value(row.tie_broken.response);
        rv["free_choice"] = row.free_choice.diverged ? ojson("diverged") : response_value(row.free_choice.response);
        rv["free_strictly_larger"] = row.free_strictly_larger;
        rv["bound_respected"] = row.bound_respected;
        all_ok = all_ok && row.bound_respected;
        out["tasks"].push_back(std::move(rv));
    }
    out["all_bounds_respected"] = all_ok;
    return out;
}

std::string rta_csv(const TaskSet& ts, const RtaResult& res) {
    std::ostringstream out;
    out << "task,job,release,rl,response,deadline,met\n";
    for (const JobResponse& jr : res.jobs) {
        out << ts.tasks[jr.job.task_pos].id << ',' << jr.job.index << ',' << jr.job.release << ',' << jr.remaining
            << ',';
        if (jr.response)
            out << *jr.response;
        else
            out << "diverged";
        out << ',' << jr.job.rel_deadline << ',' << (jr.met() ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string trace_csv(const TaskSet& ts, const SimTrace& trace) {
    std::ostringstream out;
    out << "task,job,start,end\n";
    for (const SimSegment& s : trace.segments)
        out << ts.tasks[s.task_pos].id << ',' << s.job_index << ',' << s.start << ',' << s.end << '\n';
    return out.str();
}

std::vector<CurvePoint> curve_points(const TaskSet& ts, std::optional<std::size_t> task_pos, CurveFunction f,
                                     EndpointMode left, EndpointMode right, Tick horizon) {
    std::vector<CurvePoint> pts;
    if (f == CurveFunction::DemandBound) {
        std::vector<Tick> deadlines;
        for (const Job& j : jobs_in(ts, horizon))
            if (j.abs_deadline <= horizon) deadlines.push_back(j.abs_deadline);
        std::sort(deadlines.begin(), deadlines.end());
        deadlines.erase(std::unique(deadlines.begin(), deadlines.end()), deadlines.end());
        for (Tick d : deadlines) pts.push_back({d, demand_bound(ts, d)});
        return pts;
    }

    const Task& task = ts.tasks.at(task_pos.value());
    // (instant, weight) of every impulse inside the masked window
    std::vector<std::pair<Tick, Tick>> hits;
    const ClosedSpan span = as_closed(0, left, horizon, right);
    for (const EventTuple& tu : task.spectrum) {
        const TupleHits h = tuple_hits(tu, span);
        const Tick p = tu.period.value_or(0);
        for (std::int64_t n = h.first; n <= h.last; ++n) {
            const Tick at = checked_add(tu.offset, checked_mul(n, p));
            hits.emplace_back(at, f == CurveFunction::EventBound ? 1 : task.exec_at(n));
        }
    }
    std::sort(hits.begin(), hits.end());
    Tick acc = 0;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        acc += hits[i].second;
        if (i + 1 < hits.size() && hits[i + 1].first == hits[i].first) continue;  // collapse ties
        pts.push_back({hits[i].first, acc});
    }
    return pts;
}

std::string curve_csv(const std::vector<CurvePoint>& pts) {
    std::ostringstream out;
    out << "t,value\n";
    for (const CurvePoint& p : pts) out << p.t << ',' << p.value << '\n';
    return out.str();
}

std::string dump_report(const ojson& report) { return report.dump(2) + "\n"; }

}  // namespace herta
