#pragma once

#include "herta/event_model.hpp"
#include "herta/types.hpp"

namespace herta {

// Interval mask [lo, hi] with a Heaviside step at each end: Closed keeps the
// boundary instant, Open masks it out. hi = kTickMax models a right-unbounded
// window.
struct HeavisideMask {
    Tick lo = 0;
    Tick hi = kTickMax;
    EndpointMode left = EndpointMode::Closed;
    EndpointMode right = EndpointMode::Open;

    static HeavisideMask closed_open(Tick lo, Tick hi) { return {lo, hi, EndpointMode::Closed, EndpointMode::Open}; }
    static HeavisideMask closed_closed(Tick lo, Tick hi) {
        return {lo, hi, EndpointMode::Closed, EndpointMode::Closed};
    }
    static HeavisideMask open_closed(Tick lo, Tick hi) { return {lo, hi, EndpointMode::Open, EndpointMode::Closed}; }
    static HeavisideMask open_open(Tick lo, Tick hi) { return {lo, hi, EndpointMode::Open, EndpointMode::Open}; }
    static HeavisideMask unbounded(Tick lo = 0) { return {lo, kTickMax, EndpointMode::Closed, EndpointMode::Open}; }
};

// The span actually counted when evaluating at instant t: below the mask's
// right bound the upper integration limit is closed at t; at or past the
// bound the mask's own right mode decides.
ClosedSpan counting_span(const HeavisideMask& m, Tick t);

// Number of impulses of the spectrum inside the masked window, closed form
// per tuple (never enumerates an unbounded train).
std::int64_t event_bound(const EventSpectrum& s, Tick t, const HeavisideMask& m);

// Independent oracle for the three classical staircases of a strictly
// periodic stream with offset 0.
struct ClassicCounts {
    std::int64_t half_open;  // ceil(t/p)      = events in [0, t)
    std::int64_t interior;   // floor(t/p)     = events in (0, t]
    std::int64_t closed;     // floor(t/p + 1) = events in [0, t]
};
ClassicCounts classic_counts(Tick p, Tick t);

// Counted impulses weighted by the task's frame execution times (the frame
// is picked by the impulse's index within its tuple).
Tick request_bound(const Task& t, Tick at, const HeavisideMask& m);

// Demand of one task's jobs with absolute deadline at or before t.
Tick task_demand(const Task& t, std::size_t task_pos, Tick at);

// Scalar-deadline shortcut: demand equals the request bound shifted by the
// deadline. Only valid when the deadline vector has length 1; kept as a
// second route so tests can cross-check the enumeration.
Tick task_demand_shifted(const Task& t, Tick at);

// Processor demand of the whole set at t (enumeration route). Only releases
// below t can contribute, so no horizon is needed.
Tick demand_bound(const TaskSet& ts, Tick at);

}  // namespace herta
