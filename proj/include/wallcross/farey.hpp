#pragma once

#include <string>
#include <vector>

#include "wallcross/error.hpp"
#include "wallcross/rational.hpp"

namespace wallcross {

// Ascending list of all reduced fractions in [0,1] with denominator <= n,
// starting 0/1 and ending 1/1.  Uses the classic next-term recurrence: from
// consecutive terms a/b, c/d the successor is (k*c-a)/(k*d-b) with
// k = floor((n+b)/d).
inline std::vector<Fraction> farey(int n) {
    if (n < 1) throw input_error("farey order must be at least 1");
    std::vector<Fraction> out;
    long long a = 0, b = 1, c = 1, d = n;
    out.emplace_back(a, b);
    while (c <= n) {
        long long k = (n + b) / d;
        long long a2 = c, b2 = d;
        c = k * c - a;
        d = k * d - b;
        a = a2;
        b = b2;
        out.emplace_back(a, b);
    }
    return out;
}

struct FareyInterval {
    Fraction lo;
    Fraction hi;

    friend bool operator==(const FareyInterval&, const FareyInterval&) = default;
};

inline std::string format_interval(const FareyInterval& cell) {
    return "[" + format_fraction(cell.lo) + ", " + format_fraction(cell.hi) + "]";
}

// Consecutive pairs of farey(n): the open cells cut out of [0,1] by all
// walls of denominator <= n.  First interval is [0, 1/n].
inline std::vector<FareyInterval> intervals(int n) {
    auto f = farey(n);
    std::vector<FareyInterval> out;
    out.reserve(f.size() - 1);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) out.push_back({f[i], f[i + 1]});
    return out;
}

}  // namespace wallcross
