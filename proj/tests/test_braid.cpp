#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stbraid/braid.hpp"

using namespace stbraid;

namespace {

BraidWord random_word(std::mt19937_64& rng, Flavor f, int n, int len) {
    std::vector<Letter> alphabet;
    for (int i = 1; i <= n - 1; ++i) {
        alphabet.push_back(sigma(i));
        alphabet.push_back(sigma_inv(i));
        if (is_pseudo(f)) alphabet.push_back(pre(i));
        if (is_singular(f)) alphabet.push_back(tau(i));
    }
    if (is_mixed(f)) {
        alphabet.push_back(loop_t());
        alphabet.push_back(loop_t_inv());
    }
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) ls.push_back(alphabet[rng() % alphabet.size()]);
    return BraidWord(f, n, std::move(ls));
}

}  // namespace

TEST_CASE("parsing the word grammar") {
    BraidWord w = parse_word("t s1 p2 s1^-1", Flavor::PM_1n, 3);
    CHECK(w.size() == 4);
    CHECK(w.letters[0] == loop_t());
    CHECK(w.letters[2] == pre(2));
    CHECK(w.str() == "t s1 p2 s1^-1");
    CHECK_THROWS_AS(parse_word("tau1", Flavor::PM_1n, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("s5", Flavor::PM_1n, 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x", Flavor::B_n, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("p1", Flavor::B_1n, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("t", Flavor::PM_n, 2), std::invalid_argument);

    BraidWord h = parse_word_with_header("flavor=PM_1n n=3; t s1 p2");
    CHECK(h.flavor == Flavor::PM_1n);
    CHECK(h.n == 3);
    CHECK(h.header_str() == "flavor=PM_1n n=3; t s1 p2");
}

TEST_CASE("free reduction") {
    auto red = [](const std::string& s, Flavor f, int n) {
        return free_reduce(parse_word(s, f, n)).str();
    };
    CHECK(red("s1 s1^-1", Flavor::B_n, 2) == "");
    CHECK(red("t t^-1 p1", Flavor::PM_1n, 2) == "p1");
    CHECK(red("p1 s2 s2^-1 p1", Flavor::PM_n, 3) == "p1 p1");
    CHECK(red("s1 s2 s2^-1 s1^-1 t", Flavor::PM_1n, 3) == "t");
}

TEST_CASE("free reduction is confluent under random split orders") {
    // stack reduction is canonical; verify against random-order cancellation
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        BraidWord w = random_word(rng, Flavor::PM_1n, 4, 12);
        BraidWord a = free_reduce(w);
        // random order: repeatedly cancel a random adjacent pair
        std::vector<Letter> ls = w.letters;
        auto cancels = [](const Letter& x, const Letter& y) {
            return (x.kind == LetterKind::Sigma && y.kind == LetterKind::SigmaInv &&
                    x.index == y.index) ||
                   (x.kind == LetterKind::SigmaInv && y.kind == LetterKind::Sigma &&
                    x.index == y.index) ||
                   (x.kind == LetterKind::T && y.kind == LetterKind::TInv) ||
                   (x.kind == LetterKind::TInv && y.kind == LetterKind::T);
        };
        for (;;) {
            std::vector<std::size_t> hits;
            for (std::size_t i = 0; i + 1 < ls.size(); ++i)
                if (cancels(ls[i], ls[i + 1])) hits.push_back(i);
            if (hits.empty()) break;
            std::size_t at = hits[rng() % hits.size()];
            ls.erase(ls.begin() + at, ls.begin() + at + 2);
        }
        CHECK(BraidWord(w.flavor, w.n, ls) == a);
    }
}

TEST_CASE("stats") {
    WordStats s1 = stats(parse_word("s1 s1", Flavor::B_n, 2));
    CHECK(s1.writhe == 2);
    CHECK(s1.pre_degree == 0);
    CHECK(s1.permutation == std::vector<int>{0, 1});

    WordStats s2 = stats(parse_word("t s1 p2", Flavor::PM_1n, 3));
    CHECK(s2.t_winding == 1);
    CHECK(s2.pre_degree == 1);
    // strand 1 -> 3, strand 2 -> 1, strand 3 -> 2 (0-based images)
    CHECK(s2.permutation == std::vector<int>{2, 0, 1});

    WordStats s3 = stats(parse_word("p1", Flavor::PM_n, 2));
    CHECK(s3.writhe == 0);
    CHECK(s3.pre_degree == 1);
    CHECK(s3.permutation == std::vector<int>{1, 0});
}

TEST_CASE("inclusion") {
    BraidWord w = parse_word("p1", Flavor::PM_n, 2);
    BraidWord w3 = include(w, 3);
    CHECK(w3.n == 3);
    CHECK(w3.letters == w.letters);
    CHECK(include(w, 2) == w);
    CHECK_THROWS_AS(include(w3, 2), std::invalid_argument);
    auto sa = stats(w), sb = stats(w3);
    CHECK(sa.writhe == sb.writhe);
    CHECK(sa.pre_degree == sb.pre_degree);
}

TEST_CASE("mu is a letterwise isomorphism with inverse") {
    CHECK(mu(parse_word("tau1", Flavor::SM_1n, 2)).str() == "p1");
    CHECK(mu(parse_word("t", Flavor::SM_1n, 2)).str() == "t");
    CHECK(mu(parse_word("s2^-1 tau1 t", Flavor::SM_1n, 3)).str() == "s2^-1 p1 t");

    std::mt19937_64 rng(17);
    for (int it = 0; it < 300; ++it) {
        BraidWord w = random_word(rng, Flavor::SM_1n, 4, 10);
        CHECK(mu_inv(mu(w)) == w);
        BraidWord v = random_word(rng, Flavor::PM_1n, 4, 10);
        CHECK(mu(mu_inv(v)) == v);
    }
}
