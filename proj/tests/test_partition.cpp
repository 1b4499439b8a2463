#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <wallcross/partition.hpp>

using wallcross::Box;
using wallcross::Partition;

TEST_CASE("constructor strips trailing zeros and keeps weakly decreasing parts", "[partition]") {
    CHECK(Partition({5, 4, 2, 0, 0}) == Partition({5, 4, 2}));
    CHECK(Partition().empty());
    CHECK(Partition({3, 3, 3}).rows() == 3);
    CHECK_THROWS_AS(Partition({2, 3}), wallcross::input_error);
    CHECK_THROWS_AS(Partition({3, -1}), wallcross::input_error);
    CHECK_THROWS_AS(Partition({0, 2}), wallcross::input_error);
}

TEST_CASE("size counts boxes and part accessors are 1-indexed", "[partition]") {
    const Partition p({5, 4, 2});
    CHECK(p.size() == 11);
    CHECK(p.rows() == 3);
    CHECK(p.part(1) == 5);
    CHECK(p.part(3) == 2);
    CHECK(p.part(4) == 0);
    CHECK(p.col_height(1) == 3);
    CHECK(p.col_height(3) == 2);
    CHECK(p.col_height(5) == 1);
    CHECK(p.col_height(6) == 0);
    CHECK(p.contains({2, 4}));
    CHECK_FALSE(p.contains({3, 3}));
    CHECK_FALSE(p.contains({0, 1}));
}

TEST_CASE("transpose flips rows and columns and is an involution", "[partition]") {
    CHECK(transpose(Partition({5, 4, 2})) == Partition({3, 3, 2, 2, 1}));
    CHECK(transpose(Partition()) == Partition());
    CHECK(transpose(Partition({1, 1, 1})) == Partition({3}));
    for (const auto& p : wallcross::partitions_of(6)) {
        CHECK(transpose(transpose(p)) == p);
    }
}

TEST_CASE("arm, leg, hook, and residue at sample boxes", "[partition]") {
    const Partition p({5, 4, 2});
    CHECK(arm(p, {1, 1}) == 4);
    CHECK(leg(p, {1, 1}) == 2);
    CHECK(hook(p, {1, 1}) == 7);
    CHECK(hook(p, {2, 3}) == 2);
    CHECK(hook(p, {3, 2}) == 1);
    CHECK(residue(Box{1, 1}, 4) == 0);
    CHECK(residue(Box{1, 5}, 4) == 0);
    CHECK(residue(Box{3, 2}, 4) == 3);
    CHECK_THROWS_AS(hook(p, Box{3, 3}), wallcross::internal_error);
}

TEST_CASE("rim walks from northeast to southwest along the border", "[partition]") {
    const std::vector<Box> expected{{1, 5}, {1, 4}, {2, 4}, {2, 3}, {2, 2}, {3, 2}, {3, 1}};
    CHECK(rim(Partition({5, 4, 2})) == expected);
    CHECK(rim(Partition({2, 1})) == std::vector<Box>{{1, 2}, {1, 1}, {2, 1}});
    CHECK(rim(Partition()).empty());
    // The rim always has first part + number of rows - 1 boxes.
    for (const auto& p : wallcross::partitions_of(7)) {
        CHECK(static_cast<int>(rim(p).size()) == p.part(1) + p.rows() - 1);
    }
}

TEST_CASE("boundary is the rim of the shape grown by its addable corners", "[partition]") {
    const std::vector<Box> expected{{1, 3}, {1, 2}, {2, 2}, {2, 1}, {3, 1}};
    CHECK(boundary(Partition({2, 1})) == expected);
    CHECK(boundary(Partition()) == std::vector<Box>{{1, 1}});
}

TEST_CASE("removable and addable corners are listed from south to north", "[partition]") {
    const Partition p({5, 4, 2});
    CHECK(removable_boxes(p) == std::vector<Box>{{3, 2}, {2, 4}, {1, 5}});
    CHECK(addable_boxes(p) == std::vector<Box>{{4, 1}, {3, 3}, {2, 5}, {1, 6}});
    CHECK(addable_boxes(Partition()) == std::vector<Box>{{1, 1}});
    for (const auto& q : wallcross::partitions_of(8)) {
        CHECK(addable_boxes(q).size() == removable_boxes(q).size() + 1);
    }
}

TEST_CASE("remove_box and add_box round-trip at every corner", "[partition]") {
    const Partition p({4, 2, 1});
    for (const Box& b : removable_boxes(p)) {
        CHECK(add_box(remove_box(p, b), b) == p);
    }
    CHECK_THROWS_AS(remove_box(p, Box{1, 1}), wallcross::internal_error);
    CHECK_THROWS_AS(add_box(p, Box{1, 1}), wallcross::internal_error);
}

TEST_CASE("is_regular detects a part repeated modulus many times", "[partition]") {
    CHECK(is_regular(Partition({2, 1}), 2));
    CHECK_FALSE(is_regular(Partition({2, 2}), 2));
    CHECK_FALSE(is_regular(Partition({1, 1, 1}), 3));
    CHECK(is_regular(Partition({1, 1}), 3));
    CHECK(is_regular(Partition(), 2));
}

TEST_CASE("stretch repeats parts and scale_parts multiplies them", "[partition]") {
    CHECK(stretch(Partition({2, 1}), 3) == Partition({2, 2, 2, 1, 1, 1}));
    CHECK(scale_parts(Partition({2, 1}), 3) == Partition({6, 3}));
    for (const auto& p : wallcross::partitions_of(5)) {
        CHECK(transpose(stretch(p, 3)) == scale_parts(transpose(p), 3));
    }
}

TEST_CASE("union_parts merges multisets of parts", "[partition]") {
    CHECK(union_parts(Partition({3, 1}), Partition({2, 1})) == Partition({3, 2, 1, 1}));
    CHECK(union_parts(Partition(), Partition({2})) == Partition({2}));
    CHECK(union_parts(Partition(), Partition()) == Partition());
}

TEST_CASE("regular_decomposition splits multiplicities by the modulus", "[partition]") {
    const auto dec = regular_decomposition(Partition({2, 2, 2, 1}), 2);
    CHECK(dec.regular == Partition({2, 1}));
    CHECK(dec.irregular == Partition({2}));
    CHECK(union_parts(dec.regular, stretch(dec.irregular, 2)) == Partition({2, 2, 2, 1}));
    // A regular partition decomposes as itself plus nothing.
    const auto trivial = regular_decomposition(Partition({3, 1}), 2);
    CHECK(trivial.regular == Partition({3, 1}));
    CHECK(trivial.irregular == Partition());
    for (const auto& p : wallcross::partitions_of(7)) {
        const auto d = regular_decomposition(p, 3);
        CHECK(union_parts(d.regular, stretch(d.irregular, 3)) == p);
        CHECK(is_regular(d.regular, 3));
    }
}

TEST_CASE("remove_rim_ribbon strips the rim segment starting at the anchor", "[partition]") {
    CHECK(remove_rim_ribbon(Partition({2, 2}), Box{1, 2}) == Partition({1, 1}));
    CHECK(remove_rim_ribbon(Partition({2, 2}), Box{2, 1}) == Partition({2}));
    // Single-box ribbon: hook at (2,4) of (5,4,2) is 1.
    CHECK(remove_rim_ribbon(Partition({5, 4, 2}), Box{2, 4}) == Partition({5, 3, 2}));
    // Three-box ribbon anchored at (1,4): removes (1,5), (1,4), (2,4).
    CHECK(remove_rim_ribbon(Partition({5, 4, 2}), Box{1, 4}) == Partition({3, 3, 2}));
}

TEST_CASE("core of 6,5,3,3,2,1,1 at modulus 4 is 4,1", "[core]") {
    const Partition p({6, 5, 3, 3, 2, 1, 1});
    CHECK(core(p, 4) == Partition({4, 1}));
    CHECK(is_core(Partition({4, 1}), 4));
    CHECK_FALSE(is_core(p, 4));
    CHECK(core(Partition({2, 2}), 2) == Partition());
    CHECK(core(Partition(), 3) == Partition());
}

TEST_CASE("quotient of 6,5,3,3,2,1,1 at modulus 4 has components 1 and 2,1", "[core]") {
    const auto cq = core_quotient(Partition({6, 5, 3, 3, 2, 1, 1}), 4);
    CHECK(cq.core == Partition({4, 1}));
    REQUIRE(cq.quotient.size() == 4);
    CHECK(cq.quotient[0] == Partition({1}));
    CHECK(cq.quotient[1] == Partition({2, 1}));
    CHECK(cq.quotient[2] == Partition());
    CHECK(cq.quotient[3] == Partition());
}

TEST_CASE("box count equals core size plus modulus times quotient size", "[core]") {
    for (int modulus : {2, 3, 4, 5}) {
        for (const auto& p : wallcross::partitions_of(8)) {
            const auto cq = core_quotient(p, modulus);
            int quotient_boxes = 0;
            for (const auto& comp : cq.quotient) quotient_boxes += comp.size();
            CHECK(p.size() == cq.core.size() + modulus * quotient_boxes);
        }
    }
}

TEST_CASE("a core has no hook divisible by the modulus", "[core]") {
    for (int modulus : {2, 3, 4}) {
        for (const auto& p : wallcross::partitions_of(7)) {
            const Partition c = core(p, modulus);
            bool divisible = false;
            for (int i = 1; i <= c.rows(); ++i) {
                for (int j = 1; j <= c.part(i); ++j) {
                    if (hook(c, {i, j}) % modulus == 0) divisible = true;
                }
            }
            CHECK_FALSE(divisible);
            CHECK(is_core(c, modulus));
        }
    }
}

TEST_CASE("partitions_of enumerates in decreasing lexicographic order", "[partition]") {
    const auto fives = wallcross::partitions_of(5);
    REQUIRE(fives.size() == 7);
    CHECK(fives.front() == Partition({5}));
    CHECK(fives.back() == Partition({1, 1, 1, 1, 1}));
    CHECK(fives[1] == Partition({4, 1}));
    CHECK(fives[3] == Partition({3, 1, 1}));
    CHECK(std::is_sorted(fives.begin(), fives.end(),
                         [](const Partition& a, const Partition& b) { return b < a; }));
    CHECK(wallcross::partitions_of(0) == std::vector<Partition>{Partition()});
    CHECK(wallcross::partitions_of(9).size() == 30);
    CHECK(wallcross::partitions_of(12).size() == 77);
    CHECK_THROWS_AS(wallcross::partitions_of(-1), wallcross::input_error);
}

TEST_CASE("parse_partition accepts comma lists with multiplicities", "[parse]") {
    CHECK(wallcross::parse_partition("5,4,2") == Partition({5, 4, 2}));
    CHECK(wallcross::parse_partition("2^2,1") == Partition({2, 2, 1}));
    CHECK(wallcross::parse_partition(" 3 , 1^3 ") == Partition({3, 1, 1, 1}));
    CHECK(wallcross::parse_partition("") == Partition());
    CHECK(wallcross::parse_partition("∅") == Partition());
    CHECK_THROWS_AS(wallcross::parse_partition("2,3"), wallcross::input_error);
    CHECK_THROWS_AS(wallcross::parse_partition("a"), wallcross::input_error);
    CHECK_THROWS_AS(wallcross::parse_partition("2^0,1"), wallcross::input_error);
    CHECK_THROWS_AS(wallcross::parse_partition("2,,1"), wallcross::input_error);
}

TEST_CASE("format_partition round-trips through parse_partition", "[parse]") {
    CHECK(wallcross::format_partition(Partition({5, 4, 2})) == "5,4,2");
    CHECK(wallcross::format_partition(Partition()) == "∅");
    for (const auto& p : wallcross::partitions_of(7)) {
        CHECK(wallcross::parse_partition(wallcross::format_partition(p)) == p);
    }
}
