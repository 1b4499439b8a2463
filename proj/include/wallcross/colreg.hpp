#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "wallcross/error.hpp"
#include "wallcross/partition.hpp"
#include "wallcross/rational.hpp"

// Generalized column regularization: boxes slide down "ladders" -- the
// lattice lines of slope determined by a reduced wall a/b -- until every
// ladder's boxes sit at its bottom-most positive positions.

namespace wallcross {

inline void require_wall(int a, int b) {
    if (!(0 < a && a < b))
        throw input_error("wall must lie strictly between 0 and 1");
    if (std::gcd(a, b) != 1)
        throw input_error("wall must be a reduced fraction");
}

// Boxes (i,j) and (i + a, j - (b-a)) share a ladder; the index is constant
// along it and distinguishes ladders.
inline int ladder_index(Box box, int a, int b) {
    require_wall(a, b);
    return (b - a) * box.row + a * box.col;
}

namespace detail {

inline std::vector<Box> ladder_points_upto(int index, int a, int b, int max_row) {
    std::vector<Box> out;
    for (int i = 1; i <= max_row; ++i) {
        int rest = index - (b - a) * i;
        if (rest < a) break;
        if (rest % a == 0) out.push_back({i, rest / a});
    }
    return out;
}

}  // namespace detail

// Positive lattice points on the ladder of the given index, top (northeast)
// to bottom (southwest), restricted to rows <= max_row.
inline std::vector<Box> ladder_points(int index, int a, int b, int max_row) {
    require_wall(a, b);
    return detail::ladder_points_upto(index, a, b, max_row);
}

// All positive lattice points on the ladder: rows beyond (index - a)/(b - a)
// would force the column below 1, so the set is finite.
inline std::vector<Box> ladder_points(int index, int a, int b) {
    require_wall(a, b);
    return detail::ladder_points_upto(index, a, b, index);
}

// Outcome of a slide: the slid box set always, plus the partition it forms
// when it passes the Young-diagram test.
struct SlideResult {
    std::optional<Partition> partition;
    std::vector<Box> boxes;  // row-major

    bool ok() const { return partition.has_value(); }
};

// Slides each ladder's boxes to the bottom-most positive positions of that
// ladder.  The result need not be a partition; callers decide whether that
// is an error.
inline SlideResult column_regularize(const Partition& p, int a, int b) {
    require_wall(a, b);
    std::map<int, int> occupied;  // ladder index -> box count
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            occupied[(b - a) * i + a * j] += 1;

    SlideResult res;
    for (auto [index, count] : occupied) {
        auto points = detail::ladder_points_upto(index, a, b, index);
        // bottom `count` positions of this ladder
        for (std::size_t t = points.size() - count; t < points.size(); ++t)
            res.boxes.push_back(points[t]);
    }
    std::sort(res.boxes.begin(), res.boxes.end());

    // Young-diagram test: rows contiguous from 1, each row filling columns
    // 1..len, lengths weakly decreasing.
    std::vector<int> lens;
    bool young = true;
    for (const Box& bx : res.boxes) {
        if (bx.row == static_cast<int>(lens.size()) + 1)
            lens.push_back(0);
        else if (bx.row != static_cast<int>(lens.size()))
            young = false;
        if (young && bx.col != lens.back() + 1) young = false;
        if (!young) break;
        lens.back() += 1;
    }
    if (young)
        for (std::size_t i = 0; i + 1 < lens.size(); ++i)
            if (lens[i] < lens[i + 1]) young = false;
    if (young) res.partition = Partition(std::move(lens));
    return res;
}

inline bool is_fixed_by(const Partition& p, int a, int b) {
    auto res = column_regularize(p, a, b);
    return res.ok() && *res.partition == p;
}

// arrival = max leg/hook over the boxes, departure = min (leg+1)/hook: the
// walls at which the partition last moved and will next move.
struct SlopeStats {
    Fraction arrival;
    Fraction departure;
};

inline SlopeStats slope_stats(const Partition& p) {
    if (p.empty()) throw input_error("empty partition has no slope statistics");
    Partition tr = transpose(p);
    SlopeStats s{Fraction(0, 1), Fraction(1, 1)};
    bool first = true;
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.part(i); ++j) {
            int l = tr.part(j) - i;
            int h = p.part(i) - j + l + 1;
            Fraction lo(l, h), hi(l + 1, h);
            if (first || lo > s.arrival) s.arrival = lo;
            if (first || hi < s.departure) s.departure = hi;
            first = false;
        }
    return s;
}

}  // namespace wallcross
