#include <string>

#include <doctest.h>

#include "herta/io.hpp"

using namespace herta;

namespace {

const char* kGoldenDoc = R"({
  "version": 1,
  "priority_polarity": "smaller_is_higher",
  "tasks": [
    { "id": "t1", "tuples": [{ "offset": 0, "period": 8, "count": "inf" }],
      "wcet": [2], "deadline": [8], "priority": 1 },
    { "id": "t2", "tuples": [{ "offset": 0, "period": 16, "count": "inf" }],
      "wcet": [4], "deadline": [16], "priority": 2 },
    { "id": "t3", "tuples": [{ "offset": 0, "period": 24, "count": "inf" }],
      "wcet": [12], "deadline": [24], "priority": 3 }
  ]
})";

}  // namespace

TEST_CASE("documents round-trip through parse and serialize") {
    const TaskSet ts = parse_taskset(kGoldenDoc);
    REQUIRE(ts.tasks.size() == 3);
    CHECK(ts.tasks[0].id == "t1");
    CHECK(ts.tasks[0].spectrum[0].period == 8);
    CHECK(!ts.tasks[0].spectrum[0].count.has_value());
    CHECK(ts.tasks[2].wcet == std::vector<Tick>{12});
    CHECK(ts.tasks[2].bcet == std::vector<Tick>{12});  // defaults to wcet

    const std::string once = serialize_taskset(ts);
    const std::string twice = serialize_taskset(parse_taskset(once));
    CHECK(once == twice);
}

TEST_CASE("version is checked and may be a string") {
    CHECK_NOTHROW(parse_taskset(R"({"version":"1","priority_polarity":"smaller_is_higher","tasks":[]})"));
    CHECK_THROWS_AS(parse_taskset(R"({"version":2,"priority_polarity":"smaller_is_higher","tasks":[]})"),
                    SemanticError);
    CHECK_THROWS_AS(parse_taskset(R"({"priority_polarity":"smaller_is_higher","tasks":[]})"), SemanticError);
}

TEST_CASE("priority polarity is normalized on load") {
    const char* doc = R"({
      "version": 1,
      "priority_polarity": "larger_is_higher",
      "tasks": [
        { "id": "hi", "tuples": [{ "offset": 0, "period": 10, "count": "inf" }],
          "wcet": [1], "deadline": [10], "priority": 5 },
        { "id": "lo", "tuples": [{ "offset": 0, "period": 10, "count": "inf" }],
          "wcet": [1], "deadline": [10], "priority": 3 }
      ]
    })";
    const TaskSet ts = parse_taskset(doc);
    CHECK(ts.tasks[0].priority == -5);
    CHECK(ts.tasks[1].priority == -3);
    CHECK(ts.tasks[0].priority < ts.tasks[1].priority);  // "hi" stays the higher one

    const ojson normalized = taskset_doc(ts);
    CHECK(normalized["priority_polarity"] == "smaller_is_higher");
}

TEST_CASE("parse failures carry the offending path") {
    CHECK_THROWS_AS(parse_taskset("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_taskset("[1,2,3]"), SemanticError);

    auto message_of = [](const std::string& text) {
        try {
            parse_taskset(text);
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string();
    };

    const std::string zero_wcet = message_of(R"({
      "version": 1, "priority_polarity": "smaller_is_higher",
      "tasks": [{ "id": "z", "tuples": [{ "offset": 0, "period": 5, "count": "inf" }],
                  "wcet": [0], "deadline": [5], "priority": 1 }]
    })");
    CHECK(zero_wcet.find("tasks[0]") != std::string::npos);
    CHECK(zero_wcet.find("wcet") != std::string::npos);

    const std::string inf_oneshot = message_of(R"({
      "version": 1, "priority_polarity": "smaller_is_higher",
      "tasks": [{ "id": "z", "tuples": [{ "offset": 0, "period": null, "count": "inf" }],
                  "wcet": [1], "deadline": [5], "priority": 1 }]
    })");
    CHECK(inf_oneshot.find("tuples[0]") != std::string::npos);

    const std::string fractional = message_of(R"({
      "version": 1, "priority_polarity": "smaller_is_higher",
      "tasks": [{ "id": "z", "tuples": [{ "offset": 0, "period": 5, "count": "inf" }],
                  "wcet": [2.5], "deadline": [5], "priority": 1 }]
    })");
    CHECK(fractional.find("wcet[0]") != std::string::npos);
    CHECK(fractional.find("integer") != std::string::npos);
}

TEST_CASE("reports are byte-deterministic") {
    const TaskSet ts = parse_taskset(kGoldenDoc);
    const FeasibilityReport rep = feasibility(ts, FeasibilityMode::Edf);
    CHECK(dump_report(feasibility_report(ts, FeasibilityMode::Edf, rep)) ==
          dump_report(feasibility_report(ts, FeasibilityMode::Edf, rep)));

    const RtaResult res = rta_all(ts, {SchedulerKind::EdfFifo});
    const std::string a = dump_report(rta_report(ts, res));
    const std::string b = dump_report(rta_report(ts, rta_all(ts, {SchedulerKind::EdfFifo})));
    CHECK(a == b);
}

TEST_CASE("feasibility report fields") {
    const TaskSet ts = parse_taskset(kGoldenDoc);
    const ojson edf = feasibility_report(ts, FeasibilityMode::Edf, feasibility(ts, FeasibilityMode::Edf));
    CHECK(edf["utilization"] == "48/48");
    CHECK(edf["feasible"] == true);
    CHECK(edf["witness"].is_null());

    const ojson stat = feasibility_report(ts, FeasibilityMode::Static, feasibility(ts, FeasibilityMode::Static));
    CHECK(stat["feasible"] == false);
    CHECK(stat["witness"]["task"] == "t3");
    CHECK(stat["witness"]["t"] == 24);
    CHECK(stat["witness"]["demand"] == 28);
}

TEST_CASE("rta report and CSV") {
    const TaskSet ts = parse_taskset(kGoldenDoc);
    const RtaResult res = rta_all(ts, {SchedulerKind::StaticDms});
    const ojson rep = rta_report(ts, res);
    CHECK(rep["scheduler"] == "static_dms");
    CHECK(rep["tasks"][2]["worst_response"] == 28);
    CHECK(rep["tasks"][2]["all_met"] == false);
    CHECK(rep["all_met"] == false);
    CHECK(rep["diverged"] == false);
    CHECK(rep["tasks"][0]["jobs"].size() == 6);

    const std::string csv = rta_csv(ts, res);
    CHECK(csv.rfind("task,job,release,rl,response,deadline,met\n", 0) == 0);
    CHECK(csv.find("t3,0,0,0,28,24,false\n") != std::string::npos);
    CHECK(csv.find("t1,0,0,0,2,8,true\n") != std::string::npos);
}

TEST_CASE("simulation report and trace CSV") {
    const TaskSet ts = parse_taskset(kGoldenDoc);
    const SchedulerPredicate p{SchedulerKind::EdfFifo};
    const SimTrace tr = simulate(ts, p, 48);
    const ojson rep = sim_report(ts, p, tr);
    CHECK(rep["horizon"] == 48);
    CHECK(rep["misses"].empty());
    CHECK(rep["pending"].empty());
    CHECK(rep["segments"][0]["task"] == "t1");

    const std::string csv = trace_csv(ts, tr);
    CHECK(csv.rfind("task,job,start,end\n", 0) == 0);
    CHECK(csv.find("t1,0,0,2\n") != std::string::npos);
}

TEST_CASE("curve points golden staircases") {
    const TaskSet ts = parse_taskset(kGoldenDoc);

    const auto ud = curve_points(ts, 0, CurveFunction::EventBound, EndpointMode::Closed, EndpointMode::Open, 48);
    REQUIRE(ud.size() == 6);
    for (std::size_t i = 0; i < ud.size(); ++i) {
        CHECK(ud[i].t == static_cast<Tick>(8 * i));
        CHECK(ud[i].value == static_cast<Tick>(i + 1));
    }

    const auto uu = curve_points(ts, 0, CurveFunction::EventBound, EndpointMode::Closed, EndpointMode::Closed, 48);
    REQUIRE(uu.size() == 7);
    CHECK(uu.back().t == 48);
    CHECK(uu.back().value == 7);

    const auto du = curve_points(ts, 0, CurveFunction::EventBound, EndpointMode::Open, EndpointMode::Closed, 48);
    CHECK(du.front().t == 8);
    CHECK(du.front().value == 1);

    const auto dbf = curve_points(ts, std::nullopt, CurveFunction::DemandBound, EndpointMode::Closed,
                                  EndpointMode::Open, 48);
    REQUIRE(dbf.size() == 6);
    CHECK(dbf[0].t == 8);
    CHECK(dbf[0].value == 2);
    CHECK(dbf[2].t == 24);
    CHECK(dbf[2].value == 22);
    CHECK(dbf[5].t == 48);
    CHECK(dbf[5].value == 48);

    CHECK(curve_csv(ud) == "t,value\n0,1\n8,2\n16,3\n24,4\n32,5\n40,6\n");
}

TEST_CASE("curve points weight and collapse simultaneous releases") {
    TaskSet ts;
    Task t;
    t.id = "mf";
    t.spectrum = {EventTuple{0, 10, std::nullopt}, EventTuple{0, std::nullopt, 1}};
    t.wcet = {8, 2};
    t.deadlines = {10};
    t.priority = 1;
    ts.tasks = {t};

    const auto rbf = curve_points(ts, 0, CurveFunction::RequestBound, EndpointMode::Closed, EndpointMode::Open, 20);
    // releases 0 (frame 8), 0 (one-shot frame 8), 10 (frame 2): ties collapse
    REQUIRE(rbf.size() == 2);
    CHECK(rbf[0].t == 0);
    CHECK(rbf[0].value == 16);
    CHECK(rbf[1].t == 10);
    CHECK(rbf[1].value == 18);
}
