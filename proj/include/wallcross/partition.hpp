#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wallcross/error.hpp"

// Integer partitions and their box combinatorics, all in exact integer
// arithmetic.
//
// Conventions used throughout:
//   * a partition is a weakly decreasing list of positive parts; the empty
//     partition is a first-class value
//   * a box is (row, col), both 1-indexed; rows grow southward, columns
//     eastward, so row 1 is the longest row
//   * residue of (row, col) modulo b is (col - row) mod b, normalized
//     to {0, .., b-1}

namespace wallcross {

struct Box {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Box&, const Box&) = default;
};

class Partition {
public:
    Partition() = default;

    // Validates: parts weakly decreasing and nonnegative; trailing zeros are
    // stripped so equal partitions compare equal.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw input_error("negative part in partition");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw input_error("non-monotone parts in partition");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int rows() const { return static_cast<int>(parts_.size()); }

    // Total number of boxes.
    int size() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    // Length of row i (1-indexed); zero beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }

    // Height of column j (1-indexed): the number of rows of length >= j.
    int col_height(int j) const {
        int h = 0;
        while (h < rows() && parts_[h] >= j) ++h;
        return h;
    }

    bool contains(Box b) const {
        return b.row >= 1 && b.col >= 1 && b.col <= part(b.row);
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

inline Partition make_partition(std::vector<int> parts) {
    return Partition(std::move(parts));
}

inline Partition transpose(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(p.empty() ? 0 : p.part(1));
    for (int j = 1; j <= p.part(1); ++j) cols.push_back(p.col_height(j));
    return Partition(std::move(cols));
}

//----------------------------------------------------------------------------
// hooks and residues

inline int arm(const Partition& p, Box b) {
    if (!p.contains(b)) throw internal_error("box outside partition");
    return p.part(b.row) - b.col;
}

inline int leg(const Partition& p, Box b) {
    if (!p.contains(b)) throw internal_error("box outside partition");
    return p.col_height(b.col) - b.row;
}

inline int hook(const Partition& p, Box b) {
    return arm(p, b) + leg(p, b) + 1;
}

inline int residue(Box b, int modulus) {
    int r = (b.col - b.row) % modulus;
    return r < 0 ? r + modulus : r;
}

//----------------------------------------------------------------------------
// removable and addable boxes, both ordered southwest to northeast
// (row strictly descending)

inline std::vector<Box> removable_boxes(const Partition& p) {
    std::vector<Box> out;
    for (int i = p.rows(); i >= 1; --i)
        if (p.part(i) > p.part(i + 1)) out.push_back({i, p.part(i)});
    return out;
}

inline std::vector<Box> addable_boxes(const Partition& p) {
    std::vector<Box> out;
    for (int i = p.rows() + 1; i >= 1; --i)
        if (i == 1 || p.part(i - 1) > p.part(i)) out.push_back({i, p.part(i) + 1});
    return out;
}

inline Partition remove_box(const Partition& p, Box b) {
    if (!p.contains(b) || b.col != p.part(b.row))
        throw internal_error("box is not removable");
    auto parts = p.parts();
    parts[b.row - 1] -= 1;
    return Partition(std::move(parts));
}

inline Partition add_box(const Partition& p, Box b) {
    if (b.col != p.part(b.row) + 1 || (b.row > 1 && p.part(b.row - 1) < b.col))
        throw internal_error("box is not addable");
    auto parts = p.parts();
    if (b.row == p.rows() + 1)
        parts.push_back(1);
    else
        parts[b.row - 1] += 1;
    return Partition(std::move(parts));
}

//----------------------------------------------------------------------------
// rim walk

// The rim is {(i,j) in the diagram : (i+1,j+1) is not}, listed along the walk
// that starts at (1, p_1) and repeatedly steps south when the box below is in
// the diagram, west otherwise.  Runs northeast to southwest.
inline std::vector<Box> rim(const Partition& p) {
    std::vector<Box> out;
    if (p.empty()) return out;
    int i = 1, j = p.part(1);
    for (;;) {
        out.push_back({i, j});
        if (i < p.rows() && p.part(i + 1) >= j)
            ++i;
        else if (j > 1)
            --j;
        else
            break;
    }
    return out;
}

// Rim of the diagram enlarged by all its addable boxes.  Every removable and
// every addable box of p lies on it.
inline std::vector<Box> boundary(const Partition& p) {
    auto parts = p.parts();
    for (auto b : addable_boxes(p)) {
        if (b.row == p.rows() + 1)
            parts.push_back(1);
        else
            parts[b.row - 1] += 1;
    }
    return rim(Partition(std::move(parts)));
}

//----------------------------------------------------------------------------
// regularity

// No part value repeated modulus or more times.
inline bool is_regular(const Partition& p, int modulus) {
    int run = 1;
    for (int i = 2; i <= p.rows(); ++i) {
        run = (p.part(i) == p.part(i - 1)) ? run + 1 : 1;
        if (run >= modulus) return false;
    }
    return true;
}

// Each part repeated `factor` times: 2 * (3,1) = (3,3,1,1).
inline Partition stretch(const Partition& p, int factor) {
    std::vector<int> parts;
    parts.reserve(p.rows() * factor);
    for (int v : p.parts())
        for (int t = 0; t < factor; ++t) parts.push_back(v);
    return Partition(std::move(parts));
}

// Each part multiplied by `factor`: (3,1) -> (6,2) at factor 2.
inline Partition scale_parts(const Partition& p, int factor) {
    std::vector<int> parts = p.parts();
    for (int& v : parts) v *= factor;
    return Partition(std::move(parts));
}

// Multiset union of parts.
inline Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

struct RegularDecomposition {
    Partition regular;    // multiplicity of every part value < modulus
    Partition irregular;  // the extracted blocks, divided by the modulus
    int modulus = 0;
};

// Split p = regular U (modulus * irregular): a part value with multiplicity
// m = q*modulus + r keeps r copies in the regular component and sends q
// copies to the irregular one.
inline RegularDecomposition regular_decomposition(const Partition& p, int modulus) {
    std::vector<int> reg, irr;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t k = i;
        while (k < parts.size() && parts[k] == parts[i]) ++k;
        int mult = static_cast<int>(k - i);
        for (int t = 0; t < mult % modulus; ++t) reg.push_back(parts[i]);
        for (int t = 0; t < mult / modulus; ++t) irr.push_back(parts[i]);
        i = k;
    }
    return {Partition(std::move(reg)), Partition(std::move(irr)), modulus};
}

//----------------------------------------------------------------------------
// cores and quotients

// Removes the rim ribbon anchored at `anchor`: the hook(anchor) rim boxes
// between the end of the anchor's arm and the end of its leg.  Always yields
// a partition.
inline Partition remove_rim_ribbon(const Partition& p, Box anchor) {
    if (!p.contains(anchor)) throw internal_error("ribbon anchor outside partition");
    int last = p.col_height(anchor.col);  // row of the leg end
    std::vector<int> parts;
    parts.reserve(p.rows());
    for (int i = 1; i < anchor.row; ++i) parts.push_back(p.part(i));
    for (int i = anchor.row + 1; i <= last; ++i) parts.push_back(p.part(i) - 1);
    parts.push_back(anchor.col - 1);
    for (int i = last + 1; i <= p.rows(); ++i) parts.push_back(p.part(i));
    return Partition(std::move(parts));
}

namespace detail {

// Northeast-most box whose hook is divisible by modulus, if any.
inline std::optional<Box> divisible_hook_box(const Partition& p, int modulus) {
    Partition tr = transpose(p);
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = p.part(i); j >= 1; --j) {
            int h = p.part(i) - j + tr.part(j) - i + 1;
            if (h % modulus == 0) return Box{i, j};
        }
    return std::nullopt;
}

}  // namespace detail

// Repeatedly removes rim ribbons of `modulus` boxes until none remains.  The
// result does not depend on the removal order; this implementation always
// removes the ribbon anchored at the northeast-most box with divisible hook.
inline Partition core(const Partition& p, int modulus) {
    Partition cur = p;
    while (auto anchor = detail::divisible_hook_box(cur, modulus))
        cur = remove_rim_ribbon(cur, *anchor);
    return cur;
}

inline bool is_core(const Partition& p, int modulus) {
    return !detail::divisible_hook_box(p, modulus).has_value();
}

// Component k collects, row by row from the top, the number of boxes in that
// row with divisible hook, for rows whose arm-end residue is k.  The counts
// along each component must come out weakly decreasing.
inline std::vector<Partition> quotient(const Partition& p, int modulus) {
    std::vector<std::vector<int>> counts(modulus);
    Partition tr = transpose(p);
    for (int i = 1; i <= p.rows(); ++i) {
        int c = 0;
        for (int j = 1; j <= p.part(i); ++j)
            if ((p.part(i) - j + tr.part(j) - i + 1) % modulus == 0) ++c;
        counts[residue({i, p.part(i)}, modulus)].push_back(c);
    }
    std::vector<Partition> out;
    out.reserve(modulus);
    for (auto& ks : counts) {
        while (!ks.empty() && ks.back() == 0) ks.pop_back();
        for (std::size_t i = 0; i + 1 < ks.size(); ++i)
            if (ks[i] < ks[i + 1])
                throw internal_error("quotient counts not weakly decreasing");
        out.push_back(Partition(std::move(ks)));
    }
    return out;
}

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;
    int modulus = 0;
};

inline CoreQuotient core_quotient(const Partition& p, int modulus) {
    return {core(p, modulus), quotient(p, modulus), modulus};
}

//----------------------------------------------------------------------------
// enumeration

// All partitions of n in lexicographically decreasing order, (n) first,
// (1,..,1) last.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw input_error("cannot partition a negative number");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur{n};
    for (;;) {
        out.push_back(Partition(cur));
        int k = static_cast<int>(cur.size()) - 1;
        while (k >= 0 && cur[k] == 1) --k;
        if (k < 0) break;
        int rest = static_cast<int>(cur.size()) - 1 - k + 1;  // freed boxes
        cur.resize(k + 1);
        cur[k] -= 1;
        while (rest > cur[k]) {
            cur.push_back(cur[k]);
            rest -= cur[k];
        }
        if (rest > 0) cur.push_back(rest);
    }
    return out;
}

//----------------------------------------------------------------------------
// text form

// "5,4,2"; "2^3,1" expands to (2,2,2,1); empty string or a lone empty-set
// sign denotes the empty partition.
inline Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty() || s == "\xE2\x88\x85") return Partition();

    std::vector<int> parts;
    std::size_t pos = 0;
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw input_error("expected a number in partition text: " + text);
        return std::atoi(s.substr(start, pos - start).c_str());
    };
    for (;;) {
        int value = read_int();
        int count = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            count = read_int();
            if (count == 0) throw input_error("zero multiplicity in partition text: " + text);
        }
        for (int t = 0; t < count; ++t) parts.push_back(value);
        if (pos == s.size()) break;
        if (s[pos] != ',') throw input_error("unexpected character in partition text: " + text);
        ++pos;
    }
    return Partition(std::move(parts));
}

inline std::string format_partition(const Partition& p) {
    if (p.empty()) return "\xE2\x88\x85";
    std::string out;
    for (int i = 0; i < p.rows(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

}  // namespace wallcross
