#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stbraid/bracket.hpp"
#include "stbraid/markov.hpp"
#include "stbraid/relations.hpp"
#include "support/bruteforce.hpp"
#include "support/randwords.hpp"

using namespace stbraid;

namespace {

const SkeinRuleSet& rules() {
    static SkeinRuleSet r = SkeinRuleSet::standard();
    return r;
}

Laurent L(const std::string& s) { return Laurent::parse(s); }

}  // namespace

TEST_CASE("bracket values pinned by the spec examples") {
    // unknot
    CHECK(bracket_of_word(BraidWord(Flavor::PM_1n, 1), rules()) == Laurent::one());
    // essential circle
    CHECK(bracket_of_word(parse_word("t", Flavor::PM_1n, 1), rules()) == L("s"));
    // positive kink: A*delta + A^-1 = -A^3
    CHECK(bracket_of_word(parse_word("s1", Flavor::PM_1n, 2), rules()) == L("-A^3"));
    // normalized variants
    CHECK(normalized_invariant_of_word(parse_word("s1", Flavor::PM_1n, 2), rules()) ==
          Laurent::one());
    CHECK(normalized_invariant_of_word(parse_word("t", Flavor::PM_1n, 1), rules()) ==
          L("s"));
    // pre-kinked unknot equals the unknot value (PR1 at braid level)
    CHECK(normalized_invariant_of_word(parse_word("p1", Flavor::PM_1n, 2), rules()) ==
          Laurent::one());
    // writhe bookkeeping
    CHECK(diagram_writhe(closure(parse_word("s1 s1", Flavor::PM_1n, 2))) == 2);
    CHECK(diagram_writhe(closure(parse_word("p1", Flavor::PM_1n, 2))) == 0);
}

TEST_CASE("memoized evaluator equals the exhaustive state sum") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(rng() % 3);
        Flavor f = it % 4 == 0 ? Flavor::SM_1n : Flavor::PM_1n;
        if (n == 1 && it % 2) f = Flavor::PM_1n;
        BraidWord w = testing::random_word(rng, f, n, static_cast<int>(rng() % 7), 2, 2);
        MixedLinkDiagram d = closure(w);
        CHECK(pseudo_bracket(d, rules()) == testing::bruteforce_bracket(d, rules()));
    }
}

TEST_CASE("relation invariance of the word bracket") {
    std::mt19937_64 rng(37);
    int done = 0;
    while (done < 120) {
        int n = 2 + static_cast<int>(rng() % 3);
        BraidWord w = testing::random_word(rng, Flavor::PM_1n, n, 4 + static_cast<int>(rng() % 5),
                                  2, 2);
        auto rels = relation_set(Flavor::PM_1n, n);
        std::vector<std::tuple<std::size_t, std::size_t, bool>> hits;
        for (std::size_t ri = 0; ri < rels.size(); ++ri)
            for (int dir = 0; dir < 2; ++dir)
                for (std::size_t pos = 0; pos <= w.letters.size(); ++pos)
                    if (relation_matches(w, pos, rels[ri], dir == 0))
                        hits.emplace_back(ri, pos, dir == 0);
        if (hits.empty()) continue;
        auto [ri, pos, fwd] = hits[rng() % hits.size()];
        BraidWord v = apply_relation(w, pos, rels[ri], fwd);
        CHECK(bracket_of_word(w, rules()) == bracket_of_word(v, rules()));
        ++done;
    }
}

TEST_CASE("Markov move invariance of the normalized invariant") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 25; ++it) {
        int n = 2 + static_cast<int>(rng() % 2);
        BraidWord w = testing::random_word(rng, Flavor::PM_1n, n, 4, 2, 1);
        Laurent before = normalized_invariant_of_word(w, rules());
        WalkResult r = random_markov_walk(w, 6, rng());
        CHECK(normalized_invariant_of_word(r.word, rules()) == before);
    }
}

TEST_CASE("L-moves preserve the normalized invariant") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 30; ++it) {
        int n = 1 + static_cast<int>(rng() % 3);
        BraidWord w = testing::random_word(rng, Flavor::PM_1n, n, static_cast<int>(rng() % 5), 2, 1);
        Laurent before = normalized_invariant_of_word(w, rules());
        std::size_t gap = rng() % (w.letters.size() + 1);
        int strand = 1 + static_cast<int>(rng() % n);
        bool over = rng() % 2;
        CHECK(normalized_invariant_of_word(l_move(w, gap, strand, over), rules()) ==
              before);
    }
}

TEST_CASE("S^3 consistency: no t letters, no s variable") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + static_cast<int>(rng() % 2);
        BraidWord w = testing::random_word(rng, Flavor::PM_1n, n, 5, 2, 0);
        Laurent b = bracket_of_word(w, rules());
        for (const auto& [e, c] : b.terms()) CHECK(e[2] == 0);  // s exponent
        BraidWord plain = parse_word(w.str(), Flavor::PM_n, n);
        CHECK(bracket_of_word(plain, rules()) == b);
    }
}

TEST_CASE("multiplicativity over distant split unions") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 20; ++it) {
        BraidWord w1 = testing::random_word(rng, Flavor::PM_n, 2, 3, 1, 0);
        BraidWord w2 = testing::random_word(rng, Flavor::PM_n, 2, 3, 1, 0);
        MixedLinkDiagram d1 = closure(w1), d2 = closure(w2);
        MixedLinkDiagram un;
        un.events = d1.events;
        un.events.insert(un.events.end(), d2.events.begin(), d2.events.end());
        CHECK(pseudo_bracket(un, rules()) ==
              pseudo_bracket(d1, rules()) * pseudo_bracket(d2, rules()) * rules().delta);
    }
    // mixed case: the split ball sits inside the annulus
    BraidWord m = parse_word("t s1 p1", Flavor::PM_1n, 2);
    BraidWord b = parse_word("s1", Flavor::PM_n, 2);
    MixedLinkDiagram dm = closure(m), db = closure(b);
    MixedLinkDiagram un = dm;
    std::vector<MorseEvent> block = db.events;
    for (MorseEvent& e : block) e.pos += 2;
    un.events.insert(un.events.begin() + 1, block.begin(), block.end());
    if (un.fixed_cap) *un.fixed_cap += static_cast<int>(block.size());
    CHECK(validate(un).empty());
    CHECK(pseudo_bracket(un, rules()) ==
          pseudo_bracket(dm, rules()) * pseudo_bracket(db, rules()) * rules().delta);
}

TEST_CASE("braiding round trip preserves the normalized invariant") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 3);
        BraidWord w = testing::random_word(rng, Flavor::PM_1n, n, 1 + static_cast<int>(rng() % 8),
                                  3, 2);
        BraidWord back = diagram_to_braid(closure(w));
        CHECK(normalized_invariant_of_word(back, rules()) ==
              normalized_invariant_of_word(w, rules()));
    }
}

TEST_CASE("rule set text round trip and the gatekeeper") {
    SkeinRuleSet r = SkeinRuleSet::standard();
    SkeinRuleSet r2 = SkeinRuleSet::load(r.str());
    CHECK(r2.str() == r.str());
    CHECK(!rule_violation(r).has_value());

    // zeroing the oriented pre coefficient breaks PR1
    std::string bad = r.str();
    auto at = bad.find("pre.oriented = V");
    REQUIRE(at != std::string::npos);
    bad.replace(at, 16, "pre.oriented = 0");
    CHECK_THROWS_WITH_AS(SkeinRuleSet::load(bad),
                         "rule set rejected: violates PR1 (pseudo-stabilization)",
                         std::invalid_argument);

    // a broken classical pair is caught before anything else
    std::string bad2 = r.str();
    at = bad2.find("pos.oriented = A");
    bad2.replace(at, 16, "pos.oriented = A^2");
    CHECK_THROWS_AS(SkeinRuleSet::load(bad2), std::invalid_argument);

    // breaking the singular table only is caught by the singular battery
    std::string bad3 = r.str();
    at = bad3.find("sing.disoriented");
    REQUIRE(at != std::string::npos);
    bad3.replace(at, bad3.find('\n', at) - at, "sing.disoriented = V");
    bool threw = false;
    try {
        SkeinRuleSet::load(bad3);
    } catch (const std::invalid_argument& e) {
        threw = true;
        CHECK(std::string(e.what()).find("singular") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("bracket agrees between mu-related words") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 20; ++it) {
        BraidWord s = testing::random_word(rng, Flavor::SM_1n, 3, 5, 2, 1);
        CHECK(bracket_of_word(s, rules()) == bracket_of_word(mu(s), rules()));
    }
}
