#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stbraid/markov.hpp"

using namespace stbraid;

TEST_CASE("conjugation") {
    BraidWord w = parse_word("p1", Flavor::PM_1n, 2);
    BraidWord a = parse_word("s1", Flavor::PM_1n, 2);
    CHECK(conjugate(w, a).str() == "s1 p1 s1^-1");

    BraidWord t = parse_word("t", Flavor::PM_1n, 1);
    CHECK(conjugate(t, t).str() == "t");

    BraidWord p = parse_word("p1", Flavor::PM_1n, 2);
    CHECK_THROWS_AS(conjugate(w, p), std::invalid_argument);
}

TEST_CASE("commuting is cyclic rotation") {
    BraidWord w = parse_word("s1 p1", Flavor::PM_1n, 2);
    CHECK(commute(w, 1).str() == "p1 s1");
    CHECK(commute(w, 0) == w);
    CHECK(commute(w, w.size()) == w);
}

TEST_CASE("stabilizations") {
    BraidWord e(Flavor::PM_1n, 1);
    CHECK(stabilize(e, +1).str() == "s1");
    CHECK(stabilize(e, +1).n == 2);

    BraidWord t = parse_word("t", Flavor::PM_1n, 1);
    BraidWord pt = pseudo_stabilize(t);
    CHECK(pt.str() == "t p1");
    CHECK(pt.n == 2);

    BraidWord twice = stabilize(stabilize(e, +1), +1);
    CHECK(twice.n == 3);
    CHECK(stats(twice).writhe == 2);

    BraidWord s = parse_word("tau1", Flavor::SM_1n, 2);
    CHECK_THROWS_AS(pseudo_stabilize(s), std::invalid_argument);
}

TEST_CASE("L-move blocks") {
    // degenerate rightmost case = real stabilization
    BraidWord e(Flavor::PM_1n, 1);
    CHECK(l_move(e, 0, 1, true).str() == "s1");
    CHECK(l_move(e, 0, 1, false).str() == "s1^-1");

    // generic block shape on 3 strands, cut at strand 1
    BraidWord w(Flavor::PM_1n, 3);
    CHECK(l_move(w, 0, 1, true).str() == "s3^-1 s2^-1 s1 s2 s3");
    CHECK(l_move(w, 0, 1, false).str() == "s3 s2 s1^-1 s2^-1 s3^-1");

    // stats: pre_degree and t-winding preserved, n increments
    BraidWord v = parse_word("t p1 s1", Flavor::PM_1n, 2);
    BraidWord lv = l_move(v, 2, 2, true);
    CHECK(lv.n == 3);
    CHECK(stats(lv).pre_degree == stats(v).pre_degree);
    CHECK(stats(lv).t_winding == stats(v).t_winding);

    // inverse removes a block
    auto back = l_move_inverse(lv);
    REQUIRE(back.has_value());
    CHECK(*back == v);
}

TEST_CASE("random walks are deterministic and replayable") {
    BraidWord w = parse_word("t s1 p2", Flavor::PM_1n, 3);
    WalkResult r1 = random_markov_walk(w, 15, 42);
    WalkResult r2 = random_markov_walk(w, 15, 42);
    CHECK(r1.word == r2.word);
    REQUIRE(r1.log.size() == r2.log.size());
    for (std::size_t i = 0; i < r1.log.size(); ++i)
        CHECK(r1.log[i].line == r2.log[i].line);

    CHECK(apply_move_log(w, r1.log) == r1.word);

    WalkResult r0 = random_markov_walk(w, 0, 7);
    CHECK(r0.word == w);
    CHECK(r0.log.empty());

    WalkResult r3 = random_markov_walk(w, 15, 43);
    CHECK(apply_move_log(w, r3.log) == r3.word);
}

TEST_CASE("walk move-set respects the flavor theorems") {
    // singular flavor never sees pseudo-stabilization
    auto kinds = default_move_kinds(Flavor::SM_1n);
    for (MoveKind k : kinds) CHECK(k != MoveKind::PseudoStab);
    CHECK(default_move_kinds(Flavor::PM_1n).size() == kinds.size() + 1);

    BraidWord s = parse_word("tau1 t", Flavor::SM_1n, 2);
    std::mt19937_64 seeds(5);
    for (int it = 0; it < 20; ++it) {
        WalkResult r = random_markov_walk(s, 10, seeds());
        for (const auto& e : r.log) CHECK(e.line.substr(0, 5) != "pstab");
    }
}

TEST_CASE("walk moves preserve the move-calculus invariants") {
    std::mt19937_64 seeds(11);
    for (int it = 0; it < 40; ++it) {
        BraidWord w = parse_word("t s1 p2 s2^-1", Flavor::PM_1n, 3);
        WalkResult r = random_markov_walk(w, 12, seeds());
        // pre-degree grows only by pseudo-stabilizations; t-winding fixed
        int pstabs = 0;
        for (const auto& e : r.log) pstabs += e.line == "pstab";
        CHECK(stats(r.word).pre_degree == stats(w).pre_degree + pstabs);
        CHECK(stats(r.word).t_winding == stats(w).t_winding);
    }
}

TEST_CASE("conjugation and commuting preserve n and writhe") {
    std::mt19937_64 seeds(13);
    BraidWord w = parse_word("t s1 s2 p1", Flavor::PM_1n, 3);
    for (int it = 0; it < 30; ++it) {
        WalkOptions opt;
        opt.allowed = {MoveKind::Conjugation, MoveKind::Commuting};
        WalkResult r = random_markov_walk(w, 8, seeds(), opt);
        CHECK(r.word.n == w.n);
        CHECK(stats(r.word).writhe == stats(w).writhe);
    }
}
