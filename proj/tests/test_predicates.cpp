#include <vector>

#include <doctest.h>

#include "generators.hpp"
#include "herta/predicates.hpp"

using namespace herta;

namespace {

Job job(std::size_t task_pos, std::int64_t index, Tick release, Tick rel_deadline, std::int64_t priority,
        Tick exec = 1) {
    Job j;
    j.task_pos = task_pos;
    j.index = index;
    j.release = release;
    j.exec = exec;
    j.rel_deadline = rel_deadline;
    j.abs_deadline = release + rel_deadline;
    j.priority = priority;
    return j;
}

Job random_job(testgen::Rng& rng) {
    return job(static_cast<std::size_t>(testgen::pick(rng, 0, 3)), testgen::pick(rng, 0, 5),
               testgen::pick(rng, 0, 30), testgen::pick(rng, 1, 20), testgen::pick(rng, 1, 4));
}

const SchedulerKind kOrders[] = {SchedulerKind::StaticPriority, SchedulerKind::StaticDms, SchedulerKind::EdfFifo,
                                 SchedulerKind::Hierarchical};

}  // namespace

TEST_CASE("heaviside relations on the integer grid") {
    for (std::int64_t x = -10; x <= 10; ++x) {
        for (std::int64_t y = -10; y <= 10; ++y) {
            CHECK(heaviside_rel(x, y, Relation::Eq) == (x == y));
            CHECK(heaviside_rel(x, y, Relation::Le) == (x <= y));
            CHECK(heaviside_rel(x, y, Relation::Ge) == (x >= y));
            CHECK(heaviside_rel(x, y, Relation::Lt) == (x < y));
            CHECK(heaviside_rel(x, y, Relation::Gt) == (x > y));
        }
    }
}

TEST_CASE("dispatch orders are strict and total") {
    testgen::Rng rng(testgen::seed_from_env() + 20);
    for (SchedulerKind kind : kOrders) {
        const SchedulerPredicate p{kind};
        CHECK(p.strict_total_order());
        for (int iter = 0; iter < 200; ++iter) {
            const Job a = random_job(rng);
            Job b = random_job(rng);
            CHECK(!interferes(p, a, a));
            if (a.same_job(b)) b.index += 1;
            const bool ab = interferes(p, b, a);  // a beats b
            const bool ba = interferes(p, a, b);
            CHECK(ab != ba);
        }
        // transitivity over random triples
        for (int iter = 0; iter < 200; ++iter) {
            Job a = random_job(rng), b = random_job(rng), c = random_job(rng);
            b.index += 100;  // force three distinct jobs
            c.index += 200;
            if (interferes(p, b, a) && interferes(p, c, b)) CHECK(interferes(p, c, a));
        }
    }
    CHECK(!SchedulerPredicate{SchedulerKind::EdfFree}.strict_total_order());
}

TEST_CASE("EDF ties fall back to release, task position, index") {
    const SchedulerPredicate p{SchedulerKind::EdfFifo};
    const Job victim = job(1, 3, 10, 10, 1);  // absolute deadline 20

    CHECK(interferes(p, victim, job(2, 0, 11, 8, 1)));    // deadline 19 beats 20
    CHECK(!interferes(p, victim, job(2, 0, 11, 10, 1)));  // deadline 21 loses
    CHECK(interferes(p, victim, job(2, 0, 8, 12, 1)));    // tie at 20, earlier release
    CHECK(!interferes(p, victim, job(2, 0, 12, 8, 1)));   // tie at 20, later release
    CHECK(interferes(p, victim, job(0, 0, 10, 10, 1)));   // tie, same release, earlier task
    CHECK(!interferes(p, victim, job(2, 0, 10, 10, 1)));  // tie, same release, later task
    CHECK(interferes(p, victim, job(1, 2, 10, 10, 1)));   // tie, same task, earlier index
}

TEST_CASE("EDF_FREE counts equal deadlines in both directions") {
    const SchedulerPredicate p{SchedulerKind::EdfFree};
    const Job a = job(0, 0, 0, 20, 1);
    const Job b = job(1, 0, 5, 15, 1);  // same absolute deadline 20
    CHECK(interferes(p, a, b));
    CHECK(interferes(p, b, a));
    CHECK(!interferes(p, a, job(1, 0, 5, 16, 1)));  // deadline 21 never interferes
    CHECK(interferes(p, a, job(1, 0, 5, 14, 1)));
}

TEST_CASE("static orders key on priority or relative deadline") {
    const Job victim = job(1, 0, 10, 12, 2);

    const SchedulerPredicate stat{SchedulerKind::StaticPriority};
    CHECK(interferes(stat, victim, job(2, 0, 50, 40, 1)));   // smaller priority number wins
    CHECK(!interferes(stat, victim, job(2, 0, 0, 1, 3)));    // larger loses even when released earlier
    CHECK(interferes(stat, victim, job(2, 0, 9, 40, 2)));    // tie broken by release

    const SchedulerPredicate dms{SchedulerKind::StaticDms};
    CHECK(interferes(dms, victim, job(2, 0, 50, 11, 3)));    // shorter relative deadline wins
    CHECK(!interferes(dms, victim, job(2, 0, 0, 13, 1)));
    CHECK(interferes(dms, victim, job(0, 0, 10, 12, 3)));    // full tie, earlier task position
}

TEST_CASE("hierarchical order is priority bands with EDF inside") {
    const SchedulerPredicate p{SchedulerKind::Hierarchical};
    const Job victim = job(1, 0, 10, 10, 2);  // absolute deadline 20

    CHECK(interferes(p, victim, job(2, 0, 50, 100, 1)));  // higher band always wins
    CHECK(!interferes(p, victim, job(2, 0, 0, 1, 3)));    // lower band never does
    CHECK(interferes(p, victim, job(2, 0, 15, 4, 2)));    // same band, earlier deadline
    CHECK(!interferes(p, victim, job(2, 0, 15, 6, 2)));   // same band, deadline 21
    CHECK(interferes(p, victim, job(2, 0, 5, 15, 2)));    // same band, tie at 20, earlier release
}

TEST_CASE("interference request bound over a shifted window") {
    TaskSet ts;
    auto mk = [](const char* id, Tick p, Tick c, Tick d, std::int64_t prio) {
        Task t;
        t.id = id;
        t.spectrum = {EventTuple{0, p, std::nullopt}};
        t.wcet = {c};
        t.deadlines = {d};
        t.priority = prio;
        return t;
    };
    ts.tasks = {mk("t1", 8, 2, 8, 1), mk("t2", 16, 4, 16, 2), mk("t3", 24, 12, 24, 3)};

    // second job of t3: released 24, absolute deadline 48
    const Job victim = job(2, 1, 24, 24, 3, 12);
    const SchedulerPredicate p{SchedulerKind::EdfFifo};
    CHECK(interference_request_bound(p, victim, ts, 24, 18) == 4);
    CHECK(interference_request_bound(p, victim, ts, 24, 0) == 0);
    CHECK(interference_request_bound(p, victim, ts, 24, -3) == 0);
    // t1 releases at 24 and 32 beat deadline 48; the release at 40 ties and
    // loses FIFO, t2 at 32 ties and loses as well
    CHECK(interference_request_bound(p, victim, ts, 24, 24) == 4);
}
