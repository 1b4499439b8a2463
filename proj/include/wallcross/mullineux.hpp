#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "wallcross/error.hpp"
#include "wallcross/partition.hpp"

// The Mullineux transpose, computed two independent ways:
//
//   * by good sequences: record the residues of successively deleted good
//     boxes, then rebuild through co-good additions in reverse;
//   * by rim steps: repeatedly strip the segmented rim, pad, and read off
//     the size drops.
//
// Both routes come from the same involution, so mullineux_transpose can
// cross-check one against the other (see dual_check_enabled).

namespace wallcross {

//----------------------------------------------------------------------------
// removable/addable words

struct RAToken {
    bool removable = false;  // false: addable
    Box box;

    friend bool operator==(const RAToken&, const RAToken&) = default;
};

// Removable and addable boxes of one residue class, listed southwest to
// northeast (row strictly descending; the two kinds never share a row within
// a residue class).
struct RAWord {
    int res = 0;
    int modulus = 0;
    std::vector<RAToken> tokens;
};

inline RAWord ra_word(const Partition& p, int modulus, int res) {
    RAWord w{res, modulus, {}};
    auto rem = removable_boxes(p);
    auto add = addable_boxes(p);
    std::size_t ir = 0, ia = 0;
    auto keep = [&](std::vector<Box>& v, std::size_t& i) {
        while (i < v.size() && residue(v[i], modulus) != res) ++i;
        return i < v.size();
    };
    // both source lists run row-descending; merge preserves that
    for (;;) {
        bool hr = keep(rem, ir), ha = keep(add, ia);
        if (!hr && !ha) break;
        if (hr && (!ha || rem[ir].row > add[ia].row))
            w.tokens.push_back({true, rem[ir++]});
        else
            w.tokens.push_back({false, add[ia++]});
    }
    return w;
}

// Leftmost removable token surviving the iterated cancellation of adjacent
// removable-then-addable pairs.
inline std::optional<Box> good_box(const Partition& p, int modulus, int res) {
    std::vector<Box> pending;
    for (const auto& t : ra_word(p, modulus, res).tokens) {
        if (t.removable)
            pending.push_back(t.box);
        else if (!pending.empty())
            pending.pop_back();
    }
    if (pending.empty()) return std::nullopt;
    return pending.front();
}

// Rightmost removable token surviving the iterated cancellation of adjacent
// addable-then-removable pairs.
inline std::optional<Box> cogood_box(const Partition& p, int modulus, int res) {
    int pending_addable = 0;
    std::optional<Box> last;
    for (const auto& t : ra_word(p, modulus, res).tokens) {
        if (!t.removable)
            ++pending_addable;
        else if (pending_addable > 0)
            --pending_addable;
        else
            last = t.box;
    }
    return last;
}

//----------------------------------------------------------------------------
// good sequences

struct GoodStep {
    int res = 0;
    Box box;
};

// One entry per residue that currently has a good box, residue ascending.
inline std::vector<GoodStep> good_candidates(const Partition& p, int modulus) {
    std::vector<GoodStep> out;
    for (int r = 0; r < modulus; ++r)
        if (auto b = good_box(p, modulus, r)) out.push_back({r, *b});
    return out;
}

struct GoodSequence {
    std::vector<int> residues;  // first deleted box first
    std::vector<Box> boxes;
};

// Deletes good boxes down to the empty partition; `choose` picks among the
// residues currently offering one (index into the candidate list).
template <class Chooser>
GoodSequence good_sequence(const Partition& p, int modulus, Chooser&& choose) {
    GoodSequence seq;
    Partition cur = p;
    while (!cur.empty()) {
        auto cands = good_candidates(cur, modulus);
        if (cands.empty()) throw internal_error("no good box available");
        const GoodStep& step = cands[choose(static_cast<const std::vector<GoodStep>&>(cands))];
        seq.residues.push_back(step.res);
        seq.boxes.push_back(step.box);
        cur = remove_box(cur, step.box);
    }
    return seq;
}

inline GoodSequence good_sequence(const Partition& p, int modulus) {
    return good_sequence(p, modulus, [](const std::vector<GoodStep>&) { return 0; });
}

// Starting empty, re-adds boxes in reverse residue order, each time at the
// unique addable box of that residue which is co-good once added.
inline Partition rebuild_from_cogood(const std::vector<int>& residues, int modulus) {
    Partition cur;
    for (auto it = residues.rbegin(); it != residues.rend(); ++it) {
        int r = *it;
        if (r < 0 || r >= modulus) throw input_error("residue out of range");
        std::vector<Box> hits;
        for (Box b : addable_boxes(cur))
            if (residue(b, modulus) == r && cogood_box(add_box(cur, b), modulus, r) == b)
                hits.push_back(b);
        if (hits.empty())
            throw internal_error("no co-good addable box of residue " + std::to_string(r));
        if (hits.size() > 1)
            throw internal_error("ambiguous co-good addable box of residue " + std::to_string(r));
        cur = add_box(cur, hits[0]);
    }
    return cur;
}

//----------------------------------------------------------------------------
// segmented rim

// The rim cut into pieces of `modulus` boxes: a piece starts at the east end
// of a row and follows the rim walk; once it fills up in row r, the next
// piece starts fresh at the east end of row r+1, skipping whatever was left
// of row r's rim.  The final piece may be short.  Every row loses at least
// one box.
inline std::vector<std::vector<Box>> rim_pieces(const Partition& p, int modulus) {
    std::vector<std::vector<Box>> pieces;
    int rows = p.rows();
    int i = 1;
    while (i <= rows) {
        std::vector<Box> piece;
        int r = i, c = p.part(i);
        int last_row = i;  // row of the last box actually taken
        while (static_cast<int>(piece.size()) < modulus) {
            piece.push_back({r, c});
            last_row = r;
            if (r < rows && p.part(r + 1) >= c)
                ++r;
            else if (c > 1)
                --c;
            else
                break;  // southwest corner, rim exhausted
        }
        pieces.push_back(std::move(piece));
        i = last_row + 1;
    }
    return pieces;
}

inline std::vector<Box> segmented_rim(const Partition& p, int modulus) {
    std::vector<Box> out;
    for (const auto& piece : rim_pieces(p, modulus))
        out.insert(out.end(), piece.begin(), piece.end());
    return out;
}

// Removes the segmented rim.  What goes from each row is a suffix, so the
// result is again a partition.
inline Partition strip_segmented_rim(const Partition& p, int modulus) {
    std::vector<int> parts = p.parts();
    for (Box b : segmented_rim(p, modulus))
        parts[b.row - 1] = std::min(parts[b.row - 1], b.col - 1);
    try {
        return Partition(std::move(parts));
    } catch (const input_error&) {
        throw internal_error("stripped rim left a non-partition");
    }
}

//----------------------------------------------------------------------------
// step operators

// Strip the segmented rim, then hand one box back to every row but the last,
// and one more to the last row when the rim size was divisible.
inline Partition mullineux_step(const Partition& p, int modulus) {
    if (p.empty()) throw internal_error("step on the empty partition");
    Partition inner = strip_segmented_rim(p, modulus);
    int rows = p.rows();
    int rim_size = p.size() - inner.size();
    std::vector<int> parts;
    parts.reserve(rows);
    for (int i = 1; i < rows; ++i) parts.push_back(inner.part(i) + 1);
    parts.push_back(inner.part(rows) + (rim_size % modulus == 0 ? 1 : 0));
    try {
        return Partition(std::move(parts));
    } catch (const input_error&) {
        throw internal_error("step result is not a partition");
    }
}

// Iterate mullineux_step down to the empty partition; the successive size
// drops are the parts of the result.
inline Partition mullineux_transpose_steps(const Partition& p, int modulus) {
    std::vector<int> drops;
    Partition cur = p;
    while (!cur.empty()) {
        Partition next = mullineux_step(cur, modulus);
        int d = cur.size() - next.size();
        if (d <= 0) throw internal_error("step failed to shrink the partition");
        drops.push_back(d);
        cur = next;
    }
    try {
        return Partition(std::move(drops));
    } catch (const input_error&) {
        throw internal_error("step sizes are not weakly decreasing");
    }
}

inline Partition mullineux_transpose_good(const Partition& p, int modulus) {
    if (!is_regular(p, modulus))
        throw input_error("partition is not " + std::to_string(modulus) + "-regular");
    return rebuild_from_cogood(good_sequence(p, modulus).residues, modulus);
}

// The dual-route cross-check runs in debug builds, and in any build when
// WALLCROSS_DEBUG=1 is set in the environment.
inline bool dual_check_enabled() {
#ifndef NDEBUG
    return true;
#else
    static const bool on = [] {
        const char* e = std::getenv("WALLCROSS_DEBUG");
        return e != nullptr && e[0] == '1';
    }();
    return on;
#endif
}

inline Partition mullineux_transpose(const Partition& p, int modulus) {
    if (modulus < 2) throw input_error("modulus must be at least 2");
    if (!is_regular(p, modulus))
        throw input_error("partition is not " + std::to_string(modulus) + "-regular");
    Partition out = mullineux_transpose_steps(p, modulus);
    if (dual_check_enabled() && mullineux_transpose_good(p, modulus) != out)
        throw internal_error("step route and good-sequence route disagree");
    return out;
}

//----------------------------------------------------------------------------
// wall-crossing map

// Extension of the composite transpose to all partitions: the regular part
// goes through the involution (composed with transpose), the extracted
// blocks re-enter as stretched transposed columns, and the union is read
// transposed.  Restricted to regular partitions this is the plain
// mullineux_transpose.
inline Partition wallcross_map(const Partition& p, int modulus) {
    if (modulus < 2) throw input_error("modulus must be at least 2");
    auto dec = regular_decomposition(p, modulus);
    Partition from_regular = transpose(mullineux_transpose(dec.regular, modulus));
    Partition from_blocks = stretch(transpose(dec.irregular), modulus);
    return transpose(union_parts(from_regular, from_blocks));
}

}  // namespace wallcross
