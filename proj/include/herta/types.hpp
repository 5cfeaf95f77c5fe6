#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace herta {

// Discrete model time. All analysis values are exact integers; negative
// ticks never appear in stored state, only transiently in comparisons.
using Tick = std::int64_t;

inline constexpr Tick kTickMax = std::numeric_limits<Tick>::max();

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
    using Error::Error;
};
struct CompositionUnboundedError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct SemanticError : Error {
    using Error::Error;
};
struct PredicateNotTotalError : Error {
    using Error::Error;
};
struct HorizonError : Error {
    using Error::Error;
};
struct IncompleteJobError : Error {
    using Error::Error;
};

// Endpoint masks. Closed keeps the boundary instant, Open drops it. The
// ordering Open < Closed matters: counts are monotone in each endpoint mode.
enum class EndpointMode { Open = 0, Closed = 1 };

// On integer time an open endpoint just shrinks the bound by one, so every
// mask combination reduces to a closed span (possibly empty).
struct ClosedSpan {
    Tick lo = 1;
    Tick hi = 0;
    bool nonempty() const { return lo <= hi; }
};

inline ClosedSpan as_closed(Tick lo, EndpointMode left, Tick hi, EndpointMode right) {
    if (left == EndpointMode::Open) {
        if (lo == kTickMax) return {};
        ++lo;
    }
    if (right == EndpointMode::Open) {
        if (hi <= 0) return {};
        --hi;
    }
    return {lo, hi};
}

inline Tick checked_add(Tick a, Tick b) {
    Tick r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("tick addition overflows: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline Tick checked_mul(Tick a, Tick b) {
    Tick r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("tick multiplication overflows: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

// Exact rational that keeps the numerator/denominator it was built from.
// Reports render the raw form (a full-utilization set prints "48/48", not
// "1/1"), so normalization only happens on request.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0

    Frac() = default;
    Frac(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw Error("fraction with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }

    static Frac whole(std::int64_t n) { return Frac(n, 1); }

    friend bool operator==(const Frac& a, const Frac& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<(const Frac& a, const Frac& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Frac& a, const Frac& b) { return a < b || a == b; }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }

    Frac reduced() const {
        std::int64_t g = std::gcd(num, den);
        return g > 1 ? Frac(num / g, den / g) : *this;
    }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace herta
