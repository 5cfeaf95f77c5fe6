#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "herta/analysis.hpp"
#include "herta/io.hpp"
#include "herta/simulator.hpp"

namespace {

herta::SchedulerPredicate predicate_from(const std::string& s) {
    using herta::SchedulerKind;
    if (s == "dms") return {SchedulerKind::StaticDms};
    if (s == "static") return {SchedulerKind::StaticPriority};
    if (s == "edf") return {SchedulerKind::EdfFifo};
    if (s == "edf-free") return {SchedulerKind::EdfFree};
    if (s == "hier") return {SchedulerKind::Hierarchical};
    throw herta::SemanticError("unknown scheduler: " + s);
}

herta::FeasibilityMode feasibility_mode_from(const std::string& s) {
    if (s == "edf") return herta::FeasibilityMode::Edf;
    if (s == "static") return herta::FeasibilityMode::Static;
    if (s == "hier") return herta::FeasibilityMode::Hierarchical;
    throw herta::SemanticError("feasibility scheduler must be edf, static or hier");
}

std::pair<herta::EndpointMode, herta::EndpointMode> mask_from(const std::string& s) {
    auto one = [](char c) {
        return c == 'u' ? herta::EndpointMode::Closed : herta::EndpointMode::Open;
    };
    if (s.size() != 2 || (s[0] != 'u' && s[0] != 'd') || (s[1] != 'u' && s[1] != 'd'))
        throw herta::SemanticError("mask must be one of uu, ud, du, dd");
    return {one(s[0]), one(s[1])};
}

std::size_t task_pos_by_id(const herta::TaskSet& ts, const std::string& id) {
    for (std::size_t pos = 0; pos < ts.tasks.size(); ++pos)
        if (ts.tasks[pos].id == id) return pos;
    throw herta::SemanticError("no task with id '" + id + "'");
}

herta::Tick pick_horizon(const herta::TaskSet& ts, std::optional<herta::Tick> flag) {
    return flag ? *flag : herta::analysis_horizon(ts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"schedulability analysis on Heaviside-masked event bounds"};
    app.require_subcommand(1);

    std::string input;
    std::string scheduler = "edf";
    std::string format = "json";
    std::string function;
    std::string mask = "ud";
    std::string task_id;
    std::optional<herta::Tick> horizon_flag;

    auto add_common = [&](CLI::App* cmd, bool with_scheduler) {
        cmd->add_option("--input", input, "task-set document (JSON)")->required();
        if (with_scheduler) cmd->add_option("--scheduler", scheduler, "scheduling policy");
        cmd->add_option("--horizon", horizon_flag, "override the analysis horizon");
        cmd->add_option("--format", format, "output format (json or csv)");
        return cmd;
    };

    CLI::App* validate = add_common(app.add_subcommand("validate", "check spectra for event-stream validity"), false);
    CLI::App* feas = add_common(app.add_subcommand("feasibility", "processor demand test"), true);
    CLI::App* rta = add_common(app.add_subcommand("rta", "per-job response-time analysis"), true);
    CLI::App* sim = add_common(app.add_subcommand("simulate", "event-driven dispatch replay"), true);
    CLI::App* cmp = add_common(app.add_subcommand("compare", "tie-broken vs free-choice EDF worst cases"), false);
    CLI::App* curves = add_common(app.add_subcommand("curves", "staircase breakpoints as CSV"), false);
    curves->add_option("--function", function, "ebf, rbf or dbf")->required();
    curves->add_option("--mask", mask, "endpoint masks, u = closed, d = open (left, right)");
    curves->add_option("--task", task_id, "task id (required for ebf/rbf)");
    sim->get_option("--format")->default_str("csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const herta::TaskSet ts = herta::load_taskset(input);
        if (format != "json" && format != "csv") throw herta::SemanticError("format must be json or csv");

        if (app.got_subcommand(validate)) {
            const herta::ojson rep = herta::validation_report(ts, pick_horizon(ts, horizon_flag));
            std::cout << herta::dump_report(rep);
            return rep["valid"].get<bool>() ? 0 : 1;
        }

        if (app.got_subcommand(feas)) {
            if (format == "csv") throw herta::SemanticError("feasibility reports are json only");
            const herta::FeasibilityMode mode = feasibility_mode_from(scheduler);
            const herta::FeasibilityReport rep = herta::feasibility(ts, mode);
            std::cout << herta::dump_report(herta::feasibility_report(ts, mode, rep));
            return rep.feasible ? 0 : 1;
        }

        if (app.got_subcommand(rta)) {
            const herta::RtaResult res = herta::rta_all(ts, predicate_from(scheduler));
            if (format == "csv")
                std::cout << herta::rta_csv(ts, res);
            else
                std::cout << herta::dump_report(herta::rta_report(ts, res));
            if (res.any_diverged()) return 3;
            return res.all_met() ? 0 : 1;
        }

        if (app.got_subcommand(sim)) {
            if (sim->get_option("--format")->count() == 0) format = "csv";
            const herta::SchedulerPredicate p = predicate_from(scheduler);
            const herta::SimTrace trace = herta::simulate(ts, p, pick_horizon(ts, horizon_flag));
            if (format == "csv")
                std::cout << herta::trace_csv(ts, trace);
            else
                std::cout << herta::dump_report(herta::sim_report(ts, p, trace));
            return herta::misses(trace).empty() ? 0 : 1;
        }

        if (app.got_subcommand(cmp)) {
            if (format == "csv") throw herta::SemanticError("compare reports are json only");
            const herta::EdfBoundsTable table = herta::compare_edf_bounds(ts);
            const herta::ojson rep = herta::compare_report(ts, table);
            std::cout << herta::dump_report(rep);
            return rep["all_bounds_respected"].get<bool>() ? 0 : 1;
        }

        if (app.got_subcommand(curves)) {
            herta::CurveFunction f;
            if (function == "ebf")
                f = herta::CurveFunction::EventBound;
            else if (function == "rbf")
                f = herta::CurveFunction::RequestBound;
            else if (function == "dbf")
                f = herta::CurveFunction::DemandBound;
            else
                throw herta::SemanticError("function must be ebf, rbf or dbf");
            std::optional<std::size_t> pos;
            if (f != herta::CurveFunction::DemandBound) {
                if (task_id.empty()) throw herta::SemanticError("ebf/rbf curves need --task");
                pos = task_pos_by_id(ts, task_id);
            }
            const auto [left, right] = mask_from(mask);
            std::cout << herta::curve_csv(herta::curve_points(ts, pos, f, left, right, pick_horizon(ts, horizon_flag)));
            return 0;
        }
    } catch (const herta::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
