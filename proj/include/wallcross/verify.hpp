#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wallcross/colreg.hpp"
#include "wallcross/error.hpp"
#include "wallcross/farey.hpp"
#include "wallcross/mullineux.hpp"
#include "wallcross/partition.hpp"
#include "wallcross/rational.hpp"
#include "wallcross/trajectory.hpp"

// Exhaustive desk-scale checkers.  Each checker sweeps the partitions of one
// n, tests a family of identities, and returns a Verdict listing every
// violation found.  Sweeps never abort early: a failing partition still lets
// the rest of the sweep run, so counterexample lists are complete.  Work may
// be spread over several threads, but results are merged in enumeration
// order, so a verdict never depends on the worker count.

namespace wallcross {

struct Counterexample {
    Partition partition;  // the witness input
    std::string where;    // wall, interval, or sub-check the violation sits at
    std::string detail;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct Verdict {
    std::string claim;
    std::vector<int> n_checked;
    bool holds = true;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;  // soft observations, reported but never failed
    long long elapsed_ms = 0;
};

namespace detail {

class Stopwatch {
public:
    long long ms() const {
        auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs fn(0), ..., fn(count-1) across up to `workers` threads.  Indices are
// handed out atomically; each call writes only to its own slot, so the caller
// can merge slots in index order afterwards.  The first captured exception is
// rethrown once all threads have joined.
template <class Fn>
void for_indices(std::size_t count, int workers, Fn&& fn) {
    if (count == 0) return;
    if (workers < 1) workers = 1;
    if (static_cast<std::size_t>(workers) > count) workers = static_cast<int>(count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Per-partition result bucket for a parallel sweep.
struct SweepSlot {
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
};

inline void merge_slots(Verdict& v, std::vector<SweepSlot>& slots) {
    for (auto& s : slots) {
        for (auto& c : s.counterexamples) v.counterexamples.push_back(std::move(c));
        for (auto& note : s.notes) v.notes.push_back(std::move(note));
    }
}

inline void require_order(int n) {
    if (n < 2) throw input_error("verification needs n >= 2");
}

inline void finish(Verdict& v, const Stopwatch& clock) {
    v.holds = v.counterexamples.empty();
    v.elapsed_ms = clock.ms();
}

}  // namespace detail

// The wallcross and column-regularization trajectories of the single row (n)
// coincide entry for entry, and their shared breaks are pinned by the corner
// slopes: a break at w means the earlier partition departs at w (min
// (leg+1)/hook) and the later one arrived at w (max leg/hook); at a wall
// with no break the earlier partition's departure lies elsewhere.
inline Verdict check_main(int n) {
    detail::Stopwatch clock;
    detail::require_order(n);
    Verdict v{"main", {n}, true, {}, {}, 0};
    Partition row({n});
    Trajectory tw = trajectory_wallcross(row, n);
    Trajectory tc = trajectory_colreg(row, n);
    for (std::size_t i = 0; i < tw.entries.size(); ++i) {
        if (tw.entries[i] == tc.entries[i]) continue;
        v.counterexamples.push_back(
            {row, format_interval(tw.entries[i].interval),
             "wallcross gives " + format_partition(tw.entries[i].partition) +
                 ", column regularization gives " + format_partition(tc.entries[i].partition)});
    }
    for (std::size_t i = 1; i < tw.entries.size(); ++i) {
        Fraction wall = tw.entries[i].interval.lo;
        const Partition& prev = tw.entries[i - 1].partition;
        const Partition& next = tw.entries[i].partition;
        std::string at = "wall " + format_fraction(wall);
        SlopeStats before = slope_stats(prev);
        if (prev == next) {
            if (before.departure == wall)
                v.counterexamples.push_back(
                    {row, at,
                     format_partition(prev) + " has departure slope " + format_fraction(wall) +
                         " but did not break"});
            continue;
        }
        if (!(before.departure == wall))
            v.counterexamples.push_back(
                {row, at,
                 "break, but min (leg+1)/hook of " + format_partition(prev) + " is " +
                     format_fraction(before.departure)});
        SlopeStats after = slope_stats(next);
        if (!(after.arrival == wall))
            v.counterexamples.push_back(
                {row, at,
                 "break, but max leg/hook of " + format_partition(next) + " is " +
                     format_fraction(after.arrival)});
    }
    detail::finish(v, clock);
    return v;
}

// The single row (n) is the unique start whose wallcross trajectory keeps
// every d statistic at zero; equivalently, every other start passes through a
// partition that is irregular for its next wall.  Also cross-checks that
// d = 0 coincides with regularity at every entry.
inline Verdict check_monotone(int n, int workers = 1) {
    detail::Stopwatch clock;
    detail::require_order(n);
    Verdict v{"monotone", {n}, true, {}, {}, 0};
    auto all = partitions_of(n);
    Partition row({n});
    std::vector<detail::SweepSlot> slots(all.size());
    detail::for_indices(all.size(), workers, [&](std::size_t idx) {
        const Partition& p = all[idx];
        Trajectory t = trajectory_wallcross(p, n);
        bool all_zero = true;
        for (const TrajectoryEntry& e : t.entries) {
            if (!e.d) continue;
            bool regular = is_regular(e.partition, static_cast<int>(e.interval.hi.den));
            if ((*e.d == 0) != regular)
                slots[idx].counterexamples.push_back(
                    {p, format_interval(e.interval),
                     "d = " + std::to_string(*e.d) + " disagrees with regularity of " +
                         format_partition(e.partition)});
            if (*e.d != 0) all_zero = false;
        }
        if (all_zero != (p == row))
            slots[idx].counterexamples.push_back(
                {p, "whole trajectory",
                 all_zero ? "all d vanish for a start other than the single row"
                          : "the single-row start has a nonzero d"});
    });
    detail::merge_slots(v, slots);
    detail::finish(v, clock);
    return v;
}

namespace detail {

// Index of the unique nonempty component, or nullopt if there is not exactly
// one.
inline std::optional<int> single_component(const std::vector<Partition>& quot) {
    std::optional<int> found;
    for (std::size_t k = 0; k < quot.size(); ++k) {
        if (quot[k].empty()) continue;
        if (found) return std::nullopt;
        found = static_cast<int>(k);
    }
    return found;
}

inline std::set<std::pair<int, int>> box_set(const Partition& p) {
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.part(i); ++j) out.insert({i, j});
    return out;
}

inline Partition rectangle(int width, int height) {
    return Partition(std::vector<int>(height, width));
}

}  // namespace detail

// At each break of the (n) trajectory, crossing a/b moves boxes along a
// single ladder, preserves the b-core, and flips the unique rectangular
// quotient component: before the break it is h2 wide and h1 tall, after it
// h1 wide and h2 tall, where h1 counts the boxes sitting on the ladder and
// h2 its vacant positive positions.  Which component index carries each
// rectangle is only observed, not asserted.
inline Verdict check_quotient_corollary(int n) {
    detail::Stopwatch clock;
    detail::require_order(n);
    Verdict v{"quotient", {n}, true, {}, {}, 0};
    Trajectory t = trajectory_wallcross(Partition({n}), n);
    for (std::size_t i = 1; i < t.entries.size(); ++i) {
        const Partition& prev = t.entries[i - 1].partition;
        const Partition& next = t.entries[i].partition;
        if (prev == next) continue;
        Fraction wall = t.entries[i].interval.lo;
        int a = static_cast<int>(wall.num);
        int b = static_cast<int>(wall.den);
        std::string at = "wall " + format_fraction(wall);
        auto ce = [&](const std::string& what) { v.counterexamples.push_back({prev, at, what}); };

        if (!(core(prev, b) == core(next, b)))
            ce("cores differ across the break: " + format_partition(core(prev, b)) + " vs " +
               format_partition(core(next, b)));

        auto before = detail::box_set(prev);
        auto after = detail::box_set(next);
        std::set<int> ladders;
        for (const auto& bx : before)
            if (!after.count(bx)) ladders.insert(ladder_index({bx.first, bx.second}, a, b));
        for (const auto& bx : after)
            if (!before.count(bx)) ladders.insert(ladder_index({bx.first, bx.second}, a, b));
        if (ladders.size() != 1) {
            ce("boxes moved on " + std::to_string(ladders.size()) + " ladders");
            continue;
        }
        int index = *ladders.begin();
        auto points = ladder_points(index, a, b);
        int h1 = 0;
        for (const Box& pt : points)
            if (before.count({pt.row, pt.col})) ++h1;
        int h2 = static_cast<int>(points.size()) - h1;

        auto quot_prev = quotient(prev, b);
        auto quot_next = quotient(next, b);
        auto spot_prev = detail::single_component(quot_prev);
        auto spot_next = detail::single_component(quot_next);
        if (!spot_prev || !spot_next) {
            ce("quotient does not have exactly one nonempty component on both sides");
            continue;
        }
        if (!(quot_prev[*spot_prev] == detail::rectangle(h2, h1)))
            ce("component before the break is " + format_partition(quot_prev[*spot_prev]) +
               ", expected the " + std::to_string(h2) + " by " + std::to_string(h1) + " rectangle");
        if (!(quot_next[*spot_next] == detail::rectangle(h1, h2)))
            ce("component after the break is " + format_partition(quot_next[*spot_next]) +
               ", expected the " + std::to_string(h1) + " by " + std::to_string(h2) + " rectangle");

        int s0 = residue(points.front(), b);
        if (*spot_prev != s0 || *spot_next != (s0 + b - 1) % b)
            v.notes.push_back("n=" + std::to_string(n) + ", " + at + ": rectangles sit at components " +
                              std::to_string(*spot_prev) + " and " + std::to_string(*spot_next) +
                              "; the sliding ladder has residue " + std::to_string(s0));
    }
    detail::finish(v, clock);
    return v;
}

// Open conjecture: the d statistics of the part-splitting trajectory of λ
// match those of the wallcross trajectory of its transpose, interval by
// interval.  A violation here is a mathematical finding, not a bug; callers
// report it through a distinct exit path.
inline Verdict check_conjecture(int n, int workers = 1) {
    detail::Stopwatch clock;
    detail::require_order(n);
    Verdict v{"conjecture", {n}, true, {}, {}, 0};
    auto all = partitions_of(n);
    std::vector<detail::SweepSlot> slots(all.size());
    detail::for_indices(all.size(), workers, [&](std::size_t idx) {
        const Partition& p = all[idx];
        Trajectory split = trajectory_first(p, n);
        Trajectory cross = trajectory_wallcross(transpose(p), n);
        for (std::size_t k = 0; k < split.entries.size(); ++k) {
            if (split.entries[k].d == cross.entries[k].d) continue;
            auto show = [](const std::optional<int>& d) {
                return d ? std::to_string(*d) : std::string("-");
            };
            slots[idx].counterexamples.push_back(
                {p, format_interval(split.entries[k].interval),
                 "split trajectory has d = " + show(split.entries[k].d) +
                     ", wallcross of the transpose has d = " + show(cross.entries[k].d)});
        }
    });
    detail::merge_slots(v, slots);
    detail::finish(v, clock);
    return v;
}

// The two Mullineux transpose constructions (rim-step chain and good-box
// sequence) agree on every regular partition, and both preserve size.
inline Verdict check_mullineux_equivalence(int n, int workers = 1) {
    detail::Stopwatch clock;
    detail::require_order(n);
    Verdict v{"equivalence", {n}, true, {}, {}, 0};
    auto all = partitions_of(n);
    std::vector<detail::SweepSlot> slots(all.size());
    detail::for_indices(all.size(), workers, [&](std::size_t idx) {
        const Partition& p = all[idx];
        for (int b = 2; b <= n + 1; ++b) {
            if (!is_regular(p, b)) continue;
            Partition steps = mullineux_transpose_steps(p, b);
            Partition good = mullineux_transpose_good(p, b);
            std::string at = "b=" + std::to_string(b);
            if (!(steps == good))
                slots[idx].counterexamples.push_back(
                    {p, at,
                     "step route gives " + format_partition(steps) +
                         ", good-sequence route gives " + format_partition(good)});
            if (steps.size() != n)
                slots[idx].counterexamples.push_back(
                    {p, at, "image " + format_partition(steps) + " has the wrong size"});
        }
    });
    detail::merge_slots(v, slots);
    detail::finish(v, clock);
    return v;
}

// A regular partition is fixed by the Mullineux transpose exactly when it is
// a core.
inline Verdict check_core_fixedpoint(int n, int workers = 1) {
    detail::Stopwatch clock;
    detail::require_order(n);
    Verdict v{"core-fixedpoint", {n}, true, {}, {}, 0};
    auto all = partitions_of(n);
    std::vector<detail::SweepSlot> slots(all.size());
    detail::for_indices(all.size(), workers, [&](std::size_t idx) {
        const Partition& p = all[idx];
        for (int b = 2; b <= n + 1; ++b) {
            if (!is_regular(p, b)) continue;
            bool fixed = (mullineux_transpose_steps(p, b) == p);
            bool core_here = is_core(p, b);
            if (fixed != core_here)
                slots[idx].counterexamples.push_back(
                    {p, "b=" + std::to_string(b),
                     fixed ? "fixed by the transpose but not a core"
                           : "a core but moved by the transpose"});
        }
    });
    detail::merge_slots(v, slots);
    detail::finish(v, clock);
    return v;
}

// Column-regularization trajectories are total: every slide along the way
// lands on a partition, and every start finishes at the single column.
inline Verdict check_colreg_totality(int n, int workers = 1) {
    detail::Stopwatch clock;
    detail::require_order(n);
    Verdict v{"colreg-totality", {n}, true, {}, {}, 0};
    auto all = partitions_of(n);
    Partition column(std::vector<int>(n, 1));
    std::vector<detail::SweepSlot> slots(all.size());
    detail::for_indices(all.size(), workers, [&](std::size_t idx) {
        const Partition& p = all[idx];
        try {
            Trajectory t = trajectory_colreg(p, n);
            const Partition& last = t.entries.back().partition;
            if (!(last == column))
                slots[idx].counterexamples.push_back(
                    {p, "final interval",
                     "trajectory ends at " + format_partition(last) + " instead of the single column"});
        } catch (const colreg_failure& failure) {
            slots[idx].counterexamples.push_back({p, "trajectory", failure.what()});
        }
    });
    detail::merge_slots(v, slots);
    detail::finish(v, clock);
    return v;
}

// Grab-bag of structural identities, swept exhaustively: diagram basics,
// core/quotient bookkeeping with randomized removal orders, core facts
// (transpose closure, rim coincidence, homogeneous removable/addable words),
// regular decomposition and the stretch/scale transpose identity, good box /
// co-good box mirroring, the first-drop bounds, randomized-choice robustness
// of the good-sequence route, column-regularization walls, injectivity of
// the wallcross map, the mirror symmetry of the single-row trajectory, and
// the corner-slope growth along regular runs.  The two 100-trial randomized
// batteries run for n <= 10 and the corner-slope walk for n <= 9; everything
// else runs at every n.
inline Verdict check_lemma_properties(int n, int workers = 1, unsigned int seed = 0) {
    detail::Stopwatch clock;
    detail::require_order(n);
    Verdict v{"lemmas", {n}, true, {}, {}, 0};
    auto all = partitions_of(n);
    std::vector<detail::SweepSlot> slots(all.size());
    std::vector<Trajectory> rides(all.size());  // wallcross trajectories, reused below

    detail::for_indices(all.size(), workers, [&](std::size_t idx) {
        const Partition& p = all[idx];
        auto ce = [&](std::string where, std::string what) {
            slots[idx].counterexamples.push_back({p, std::move(where), std::move(what)});
        };
        std::mt19937 rng(seed + 0x9e3779b9u * static_cast<unsigned int>(idx + 1));

        if (!(transpose(transpose(p)) == p))
            ce("transpose", "transposing twice does not return the original");
        if (removable_boxes(p).size() + 1 != addable_boxes(p).size())
            ce("boundary", "removable count plus one differs from addable count");

        for (int b = 2; b <= n + 1; ++b) {
            std::string at = "b=" + std::to_string(b);
            CoreQuotient cq = core_quotient(p, b);
            int quotient_boxes = 0;
            for (const Partition& q : cq.quotient) quotient_boxes += q.size();
            if (p.size() != cq.core.size() + b * quotient_boxes)
                ce(at, "size identity fails: " + std::to_string(p.size()) + " vs " +
                           std::to_string(cq.core.size()) + " + " + std::to_string(b) + "*" +
                           std::to_string(quotient_boxes));
            bool fixed = (cq.core == p);
            bool flagged = is_core(p, b);
            if (flagged != fixed || flagged != (quotient_boxes == 0))
                ce(at, "core fixed-point, divisible-hook search, and quotient emptiness disagree");

            if (n <= 10) {
                for (int trial = 0; trial < 100; ++trial) {
                    Partition cur = p;
                    while (true) {
                        std::vector<Box> hits;
                        for (int i = 1; i <= cur.rows(); ++i)
                            for (int j = 1; j <= cur.part(i); ++j)
                                if (hook(cur, {i, j}) % b == 0) hits.push_back({i, j});
                        if (hits.empty()) break;
                        cur = remove_rim_ribbon(cur, hits[rng() % hits.size()]);
                    }
                    if (!(cur == cq.core)) {
                        ce(at, "randomized ribbon removal reached " + format_partition(cur) +
                                   " instead of " + format_partition(cq.core));
                        break;
                    }
                }
            }

            if (flagged) {
                if (!is_core(transpose(p), b))
                    ce(at, "transpose of a core is not a core");
                if (segmented_rim(p, b) != rim(p))
                    ce(at, "segmented rim differs from the rim on a core");
                for (int r = 0; r < b; ++r) {
                    RAWord word = ra_word(p, b, r);
                    bool removable = false, addable = false;
                    for (const RAToken& tok : word.tokens) (tok.removable ? removable : addable) = true;
                    if (removable && addable)
                        ce(at + ", residue " + std::to_string(r),
                           "a core has both removable and addable boxes of one residue");
                }
            }

            RegularDecomposition dec = regular_decomposition(p, b);
            if (!is_regular(dec.regular, b))
                ce(at, "regular component of the decomposition is not regular");
            if (!(union_parts(dec.regular, stretch(dec.irregular, b)) == p))
                ce(at, "decomposition does not reassemble the partition");
            if (!(transpose(stretch(p, b)) == scale_parts(transpose(p), b)))
                ce(at, "stretch/scale transpose identity fails");

            Partition tr = transpose(p);
            for (int r = 0; r < b; ++r) {
                auto good = good_box(p, b, r);
                auto cogood = cogood_box(tr, b, (b - r) % b);
                bool mirror = (!good && !cogood) ||
                              (good && cogood && good->row == cogood->col && good->col == cogood->row);
                if (!mirror)
                    ce(at + ", residue " + std::to_string(r),
                       "good box and the transpose's co-good box do not mirror");
            }

            if (is_regular(p, b)) {
                int drop = p.size() - mullineux_step(p, b).size();
                int phi = p.size() - strip_segmented_rim(p, b).size();
                if (phi % b == 0 && drop > p.part(1) - 1)
                    ce(at, "first drop " + std::to_string(drop) +
                               " exceeds the first part minus one (segmented rim divisible)");
                if (hook(p, {1, 1}) % b == 0 && drop > p.part(1) - 1)
                    ce(at, "first drop " + std::to_string(drop) +
                               " exceeds the first part minus one (corner hook divisible)");
                if (n <= 10) {
                    Partition expect = mullineux_transpose_good(p, b);
                    for (int trial = 0; trial < 100; ++trial) {
                        auto seq = good_sequence(p, b, [&rng](const std::vector<GoodStep>& cands) {
                            return rng() % cands.size();
                        });
                        Partition rebuilt = rebuild_from_cogood(seq.residues, b);
                        if (!(rebuilt == expect)) {
                            ce(at, "a randomized good-box choice rebuilds " + format_partition(rebuilt) +
                                       " instead of " + format_partition(expect));
                            break;
                        }
                    }
                }
            }

            for (int a = 1; a < b; ++a) {
                if (std::gcd(a, b) != 1) continue;
                Fraction wall(a, b);
                std::string wall_at = "wall " + format_fraction(wall);
                SlideResult slide = column_regularize(p, a, b);
                if (slide.ok() && slide.partition->size() != n)
                    ce(wall_at, "regularization changes the size");
                if (a == 1 && !slide.ok())
                    ce(wall_at, "column regularization with numerator one fails");
                if (n <= 10) {
                    SlopeStats stats = slope_stats(p);
                    if (stats.arrival < wall && wall < stats.departure) {
                        if (!(slide.ok() && *slide.partition == p))
                            ce(wall_at, "a wall in the open slope window moves the partition");
                        if (!is_core(p, b))
                            ce(wall_at, "a wall in the open slope window sits over a non-core");
                    }
                }
            }
        }

        rides[idx] = trajectory_wallcross(p, n);
        for (const TrajectoryEntry& e : rides[idx].entries)
            if (e.partition.size() != n)
                ce(format_interval(e.interval), "wallcross trajectory entry changes size");
        Trajectory split = trajectory_first(p, n);
        for (const TrajectoryEntry& e : split.entries)
            if (e.partition.size() != n)
                ce(format_interval(e.interval), "split trajectory entry changes size");
    });
    detail::merge_slots(v, slots);

    // Injectivity of the wallcross map for every wall denominator.
    for (int b = 2; b <= n; ++b) {
        std::map<std::vector<int>, std::size_t> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            Partition image = wallcross_map(all[i], b);
            auto [it, fresh] = seen.try_emplace(image.parts(), i);
            if (!fresh)
                v.counterexamples.push_back(
                    {all[i], "b=" + std::to_string(b),
                     "wallcross map collides with " + format_partition(all[it->second]) + " at " +
                         format_partition(image)});
        }
    }

    // Interval-by-interval injectivity of the trajectory entries.
    auto cells = intervals(n);
    for (std::size_t k = 0; k < cells.size(); ++k) {
        std::map<std::vector<int>, std::size_t> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            const Partition& entry = rides[i].entries[k].partition;
            auto [it, fresh] = seen.try_emplace(entry.parts(), i);
            if (!fresh)
                v.counterexamples.push_back(
                    {all[i], format_interval(cells[k]),
                     "trajectory entry collides with that of " + format_partition(all[it->second])});
        }
    }

    // Mirror symmetry of the single-row trajectory: reflecting the interval
    // about 1/2 transposes the partition.
    const Trajectory& rowride = rides.front();  // partitions_of lists (n) first
    std::size_t count = rowride.entries.size();
    for (std::size_t k = 0; k < count; ++k) {
        const TrajectoryEntry& here = rowride.entries[k];
        const TrajectoryEntry& there = rowride.entries[count - 1 - k];
        Fraction flipped(there.interval.hi.den - there.interval.hi.num, there.interval.hi.den);
        if (!(here.interval.lo == flipped))
            v.counterexamples.push_back(
                {all.front(), format_interval(here.interval), "Farey cells are not mirror images"});
        if (!(here.partition == transpose(there.partition)))
            v.counterexamples.push_back(
                {all.front(), format_interval(here.interval),
                 "mirror interval carries " + format_partition(there.partition) +
                     ", not the transpose of " + format_partition(here.partition)});
    }

    // Corner-slope growth along regular runs: starting from any partition
    // with at least two rows, as long as each wall is crossed from a
    // partition regular for it, the partition just after crossing a/b has
    // leg(1,1)/hook(1,1) strictly above a/b.  One-row starts genuinely
    // violate this (crossing 1/n lands on (n-1,1), whose corner slope equals
    // 1/n), so they stay out of the sweep.
    if (n <= 9) {
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (all[i].rows() < 2) continue;
            const Trajectory& ride = rides[i];
            for (std::size_t k = 1; k < ride.entries.size(); ++k) {
                Fraction wall = ride.entries[k].interval.lo;
                if (!is_regular(ride.entries[k - 1].partition, static_cast<int>(wall.den))) break;
                const Partition& after = ride.entries[k].partition;
                Fraction slope(leg(after, {1, 1}), hook(after, {1, 1}));
                if (!(wall < slope))
                    v.counterexamples.push_back(
                        {all[i], "wall " + format_fraction(wall),
                         "corner slope " + format_fraction(slope) + " of " + format_partition(after) +
                             " does not exceed the wall just crossed"});
            }
        }
    }

    detail::finish(v, clock);
    return v;
}

inline const std::vector<std::string>& known_claims() {
    static const std::vector<std::string> names{"main",        "monotone",       "quotient",
                                               "conjecture",  "equivalence",    "core-fixedpoint",
                                               "colreg-totality", "lemmas"};
    return names;
}

inline Verdict run_claim(const std::string& claim, int n, int workers = 1, unsigned int seed = 0) {
    if (claim == "main") return check_main(n);
    if (claim == "monotone") return check_monotone(n, workers);
    if (claim == "quotient") return check_quotient_corollary(n);
    if (claim == "conjecture") return check_conjecture(n, workers);
    if (claim == "equivalence") return check_mullineux_equivalence(n, workers);
    if (claim == "core-fixedpoint") return check_core_fixedpoint(n, workers);
    if (claim == "colreg-totality") return check_colreg_totality(n, workers);
    if (claim == "lemmas") return check_lemma_properties(n, workers, seed);
    throw input_error("unknown claim: " + claim);
}

// Runs one claim for every n from 2 to n_max and folds the verdicts into one.
inline Verdict run_claim_range(const std::string& claim, int n_max, int workers = 1,
                               unsigned int seed = 0) {
    if (n_max < 2) throw input_error("n-max must be at least 2");
    Verdict merged{claim, {}, true, {}, {}, 0};
    for (int n = 2; n <= n_max; ++n) {
        Verdict v = run_claim(claim, n, workers, seed);
        merged.n_checked.push_back(n);
        merged.holds = merged.holds && v.holds;
        for (auto& c : v.counterexamples) merged.counterexamples.push_back(std::move(c));
        for (auto& note : v.notes) merged.notes.push_back(std::move(note));
        merged.elapsed_ms += v.elapsed_ms;
    }
    return merged;
}

}  // namespace wallcross
