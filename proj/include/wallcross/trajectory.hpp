#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wallcross/colreg.hpp"
#include "wallcross/error.hpp"
#include "wallcross/farey.hpp"
#include "wallcross/mullineux.hpp"
#include "wallcross/partition.hpp"

// A trajectory records, for a start partition of n, the partition attached to
// every Farey interval of order n: cells are visited left to right and a
// crossing rule fires at each interior wall.  Each entry except the last also
// carries the d statistic of its interval.

namespace wallcross {

struct TrajectoryEntry {
    FareyInterval interval;
    Partition partition;
    std::optional<int> d;

    friend bool operator==(const TrajectoryEntry&, const TrajectoryEntry&) = default;
};

struct Trajectory {
    int n = 0;
    Partition start;
    std::vector<TrajectoryEntry> entries;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// modulus * |irregular component|: the total size of the extracted blocks.
inline int block_weight(const Partition& p, int modulus) {
    return modulus * regular_decomposition(p, modulus).irregular.size();
}

// Sum of the parts divisible by modulus.
inline int divisible_weight(const Partition& p, int modulus) {
    int total = 0;
    for (int v : p.parts())
        if (v % modulus == 0) total += v;
    return total;
}

namespace detail {

template <class Cross, class DStat>
Trajectory run_trajectory(const Partition& start, int n, Cross&& cross, DStat&& dstat) {
    if (n < 1) throw input_error("trajectory needs n >= 1");
    if (start.size() != n) throw input_error("partition size does not match n");
    auto cells = intervals(n);
    Trajectory t{n, start, {}};
    Partition cur = start;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) cur = cross(cur, cells[i].lo);
        TrajectoryEntry e{cells[i], cur, std::nullopt};
        if (i + 1 < cells.size()) e.d = dstat(cur, cells[i].hi);
        t.entries.push_back(std::move(e));
    }
    return t;
}

}  // namespace detail

inline Trajectory trajectory_wallcross(const Partition& start, int n) {
    return detail::run_trajectory(
        start, n,
        [](const Partition& p, Fraction wall) {
            return wallcross_map(p, static_cast<int>(wall.den));
        },
        [](const Partition& p, Fraction wall) {
            return block_weight(p, static_cast<int>(wall.den));
        });
}

inline Trajectory trajectory_colreg(const Partition& start, int n) {
    return detail::run_trajectory(
        start, n,
        [](const Partition& p, Fraction wall) {
            auto res = column_regularize(p, static_cast<int>(wall.num),
                                         static_cast<int>(wall.den));
            if (!res.ok()) {
                std::vector<std::pair<int, int>> bs;
                for (const Box& b : res.boxes) bs.emplace_back(b.row, b.col);
                throw colreg_failure("slide across wall " + format_fraction(wall) +
                                         " of " + format_partition(p) +
                                         " is not a partition",
                                     std::move(bs));
            }
            return *res.partition;
        },
        [](const Partition& p, Fraction wall) {
            return block_weight(p, static_cast<int>(wall.den));
        });
}

// Crossing rule of the part-splitting algorithm: parts not divisible by the
// wall denominator stay, the divisible ones are divided out, transposed, and
// scaled back.
inline Partition split_cross(const Partition& p, int modulus) {
    std::vector<int> plain, divided;
    for (int v : p.parts()) {
        if (v % modulus == 0)
            divided.push_back(v / modulus);
        else
            plain.push_back(v);
    }
    return union_parts(Partition(std::move(plain)),
                       scale_parts(transpose(Partition(std::move(divided))), modulus));
}

inline Trajectory trajectory_first(const Partition& start, int n) {
    return detail::run_trajectory(
        start, n,
        [](const Partition& p, Fraction wall) {
            return split_cross(p, static_cast<int>(wall.den));
        },
        [](const Partition& p, Fraction wall) {
            return divisible_weight(p, static_cast<int>(wall.den));
        });
}

// Interior walls where the attached partition changes.
inline std::vector<Fraction> breaks(const Trajectory& t) {
    std::vector<Fraction> out;
    for (std::size_t i = 1; i < t.entries.size(); ++i)
        if (t.entries[i].partition != t.entries[i - 1].partition)
            out.push_back(t.entries[i].interval.lo);
    return out;
}

}  // namespace wallcross
