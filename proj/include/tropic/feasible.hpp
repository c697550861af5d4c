#pragma once

#include <optional>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/rational.hpp"

namespace tropic {

// One linear condition  a*x + b*y + c (> 0 | >= 0)  on the plane.
struct LinIneq2 {
    Rational a, b, c;
    bool strict = false;
};

namespace detail {

// Accumulated interval for a single variable t from conditions p*t + q (>|>=) 0.
struct Bounds1 {
    bool bad = false;
    std::optional<Rational> lo, hi;
    bool lo_open = false, hi_open = false;

    void add(const Rational& p, const Rational& q, bool strict) {
        if (p == 0) {
            if (q < 0 || (strict && q == 0)) bad = true;
        } else if (p > 0) {
            Rational v = -q / p;
            if (!lo || v > *lo) {
                lo = v;
                lo_open = strict;
            } else if (v == *lo) {
                lo_open = lo_open || strict;
            }
        } else {
            Rational v = -q / p;
            if (!hi || v < *hi) {
                hi = v;
                hi_open = strict;
            } else if (v == *hi) {
                hi_open = hi_open || strict;
            }
        }
    }

    std::optional<Rational> pick() const {
        if (bad) return std::nullopt;
        if (lo && hi) {
            if (*lo > *hi) return std::nullopt;
            if (*lo == *hi) {
                if (lo_open || hi_open) return std::nullopt;
                return *lo;
            }
            return (*lo + *hi) / 2;
        }
        if (lo) return lo_open ? *lo + 1 : *lo;
        if (hi) return hi_open ? *hi - 1 : *hi;
        return Rational(0);
    }
};

}  // namespace detail

// Exact feasibility of a system of strict/weak linear inequalities in the
// plane, by Fourier–Motzkin elimination of y.  Returns a witness point, or
// nullopt when the system has no solution.
inline std::optional<QVec> exact_feasible(const std::vector<LinIneq2>& sys) {
    struct Line {
        Rational p, q;  // y (>=|<=) p*x + q
        bool open;
    };
    std::vector<Line> lows, ups;
    detail::Bounds1 bx;
    for (const auto& t : sys) {
        if (t.b == 0)
            bx.add(t.a, t.c, t.strict);
        else if (t.b > 0)
            lows.push_back({-t.a / t.b, -t.c / t.b, t.strict});
        else
            ups.push_back({-t.a / t.b, -t.c / t.b, t.strict});
    }
    for (const auto& l : lows)
        for (const auto& u : ups) bx.add(u.p - l.p, u.q - l.q, l.open || u.open);

    auto x = bx.pick();
    if (!x) return std::nullopt;

    detail::Bounds1 by;
    for (const auto& l : lows) by.add(Rational(1), -(l.p * *x + l.q), l.open);
    for (const auto& u : ups) by.add(Rational(-1), u.p * *x + u.q, u.open);
    auto y = by.pick();
    if (!y) fail(ErrorKind::Internal, "exact_feasible: elimination lost a solution");
    return QVec{*x, *y};
}

}  // namespace tropic
