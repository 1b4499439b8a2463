#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <wallcross/mullineux.hpp>

using wallcross::Box;
using wallcross::Partition;

TEST_CASE("ra_word merges removable and addable boxes of one residue southwest first",
          "[raword]") {
    const Partition p({5, 4, 2});
    const auto w0 = wallcross::ra_word(p, 4, 0);
    REQUIRE(w0.tokens.size() == 2);
    CHECK_FALSE(w0.tokens[0].removable);
    CHECK(w0.tokens[0].box == Box{3, 3});
    CHECK(w0.tokens[1].removable);
    CHECK(w0.tokens[1].box == Box{1, 5});

    const auto w2 = wallcross::ra_word(p, 4, 2);
    REQUIRE(w2.tokens.size() == 1);
    CHECK(w2.tokens[0].removable);
    CHECK(w2.tokens[0].box == Box{2, 4});
}

TEST_CASE("good box survives cancellation, cancelled residues have none", "[good]") {
    const Partition p({5, 4, 2});
    CHECK(wallcross::good_box(p, 4, 0) == Box{1, 5});
    CHECK(wallcross::good_box(p, 4, 2) == Box{2, 4});
    // residue 1 offers only addable boxes; residue 3 cancels completely
    CHECK_FALSE(wallcross::good_box(p, 4, 1).has_value());
    CHECK_FALSE(wallcross::good_box(p, 4, 3).has_value());

    const auto cands = wallcross::good_candidates(p, 4);
    REQUIRE(cands.size() == 2);
    CHECK(cands[0].res == 0);
    CHECK(cands[0].box == Box{1, 5});
    CHECK(cands[1].res == 2);
    CHECK(cands[1].box == Box{2, 4});
}

TEST_CASE("good and co-good boxes mirror each other through the transpose", "[good]") {
    CHECK(wallcross::good_box(Partition({5, 4, 2}), 4, 0) == Box{1, 5});
    CHECK(wallcross::cogood_box(Partition({3, 3, 2, 2, 1}), 4, 0) == Box{5, 1});
    for (int modulus : {2, 3, 4}) {
        for (const auto& p : wallcross::partitions_of(6)) {
            const Partition tr = transpose(p);
            for (int r = 0; r < modulus; ++r) {
                const auto g = wallcross::good_box(p, modulus, r);
                const auto c = wallcross::cogood_box(tr, modulus, (modulus - r) % modulus);
                REQUIRE(g.has_value() == c.has_value());
                if (g) {
                    CHECK(c->row == g->col);
                    CHECK(c->col == g->row);
                }
            }
        }
    }
}

TEST_CASE("segmented rim of 5,4,2 at modulus 4 has a full and a short piece", "[rim]") {
    const auto pieces = wallcross::rim_pieces(Partition({5, 4, 2}), 4);
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0] == std::vector<Box>{{1, 5}, {1, 4}, {2, 4}, {2, 3}});
    CHECK(pieces[1] == std::vector<Box>{{3, 2}, {3, 1}});
    CHECK(wallcross::strip_segmented_rim(Partition({5, 4, 2}), 4) == Partition({3, 2}));
}

TEST_CASE("segmented rim equals plain rim on a core", "[rim]") {
    CHECK(wallcross::segmented_rim(Partition({2, 1}), 2) == rim(Partition({2, 1})));
    CHECK(wallcross::segmented_rim(Partition({3, 1}), 3) == rim(Partition({3, 1})));
}

TEST_CASE("one step of the rim route on 5,4,2 at modulus 4 gives 4,3", "[step]") {
    CHECK(wallcross::mullineux_step(Partition({5, 4, 2}), 4) == Partition({4, 3}));
    CHECK(wallcross::mullineux_step(Partition({4, 3}), 4) == Partition({3, 2}));
    CHECK(wallcross::mullineux_step(Partition({3, 2}), 4) == Partition({2, 1}));
    CHECK(wallcross::mullineux_step(Partition({2, 1}), 4) == Partition({1}));
    CHECK(wallcross::mullineux_step(Partition({1}), 4) == Partition());
    CHECK_THROWS_AS(wallcross::mullineux_step(Partition(), 4), wallcross::internal_error);
}

TEST_CASE("rim route: drops of the step chain assemble the image", "[transpose]") {
    CHECK(wallcross::mullineux_transpose_steps(Partition({5, 4, 2}), 4) ==
          Partition({4, 2, 2, 2, 1}));
    CHECK(wallcross::mullineux_transpose_steps(Partition({2, 1}), 3) == Partition({1, 1, 1}));
    CHECK(wallcross::mullineux_transpose_steps(Partition({2}), 2) == Partition({1, 1}));
    CHECK(wallcross::mullineux_transpose_steps(Partition(), 2) == Partition());
    // A step that fails to shrink the partition is an internal failure; it
    // can only be reached by feeding the raw route an irregular partition.
    CHECK_THROWS_AS(wallcross::mullineux_transpose_steps(Partition({2, 2}), 2),
                    wallcross::internal_error);
}

TEST_CASE("good-sequence route agrees with the rim route on regular partitions",
          "[transpose]") {
    CHECK(wallcross::mullineux_transpose_good(Partition({5, 4, 2}), 4) ==
          Partition({4, 2, 2, 2, 1}));
    for (int modulus : {2, 3, 4}) {
        for (const auto& p : wallcross::partitions_of(7)) {
            if (!is_regular(p, modulus)) continue;
            CHECK(wallcross::mullineux_transpose_good(p, modulus) ==
                  wallcross::mullineux_transpose_steps(p, modulus));
        }
    }
}

TEST_CASE("conjugating the image yields an involution on regular partitions", "[transpose]") {
    // The composite transpose sends a regular partition to the conjugate of a
    // regular one, so the involution appears after composing with transpose.
    for (int modulus : {2, 3, 5}) {
        for (const auto& p : wallcross::partitions_of(6)) {
            if (!is_regular(p, modulus)) continue;
            const Partition image = wallcross::mullineux_transpose(p, modulus);
            CHECK(image.size() == p.size());
            const Partition m = transpose(image);
            CHECK(is_regular(m, modulus));
            CHECK(transpose(wallcross::mullineux_transpose(m, modulus)) == p);
        }
    }
}

TEST_CASE("transpose rejects irregular input and modulus below two", "[transpose]") {
    CHECK_THROWS_AS(wallcross::mullineux_transpose(Partition({2, 2}), 2),
                    wallcross::input_error);
    CHECK_THROWS_AS(wallcross::mullineux_transpose(Partition({3, 1}), 1),
                    wallcross::input_error);
    CHECK_THROWS_AS(wallcross::wallcross_map(Partition({2, 2}), 0), wallcross::input_error);
}

TEST_CASE("rebuilding from a good-residue word recovers the image", "[good]") {
    const auto seq = wallcross::good_sequence(Partition({5, 4, 2}), 4);
    REQUIRE(seq.residues.size() == 11);
    CHECK(seq.residues.front() == 0);
    CHECK(seq.boxes.front() == Box{1, 5});
    CHECK(wallcross::rebuild_from_cogood(seq.residues, 4) == Partition({4, 2, 2, 2, 1}));
    CHECK_THROWS_AS(wallcross::rebuild_from_cogood({5}, 4), wallcross::input_error);
}

TEST_CASE("the crossing map extends the transpose to irregular partitions", "[wallcross]") {
    // regular inputs go straight through the composite transpose
    CHECK(wallcross::wallcross_map(Partition({5, 4, 2}), 4) ==
          wallcross::mullineux_transpose(Partition({5, 4, 2}), 4));
    CHECK(wallcross::wallcross_map(Partition({5}), 2) == Partition({1, 1, 1, 1, 1}));
    CHECK(wallcross::wallcross_map(Partition({1, 1, 1, 1, 1}), 2) == Partition({3, 2}));
    CHECK(wallcross::wallcross_map(Partition({2, 1, 1, 1}), 2) == Partition({4, 1}));
    CHECK(wallcross::wallcross_map(Partition({2, 2, 1}), 2) == Partition({5}));
    CHECK(wallcross::wallcross_map(Partition({2, 2, 1}), 5) == Partition({2, 2, 1}));
    CHECK(wallcross::wallcross_map(Partition(), 3) == Partition());
    // size is preserved on every input
    for (int modulus : {2, 3, 4}) {
        for (const auto& p : wallcross::partitions_of(6)) {
            CHECK(wallcross::wallcross_map(p, modulus).size() == p.size());
        }
    }
}
