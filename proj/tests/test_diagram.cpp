#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stbraid/diagram.hpp"

#include "support/randwords.hpp"

using namespace stbraid;

namespace {

MixedLinkDiagram pre_kinked_unknot() {
    MixedLinkDiagram d;
    d.events = {{EventKind::Cup, 1, true},
                {EventKind::Cup, 2, true},
                {EventKind::CrossPre, 1, true},
                {EventKind::Cap, 2, true},
                {EventKind::Cap, 1, true}};
    return d;
}

MixedLinkDiagram pre_kink_with_up_arc() {
    MixedLinkDiagram d;
    d.events = {{EventKind::Cup, 1, true},
                {EventKind::Cup, 2, false},
                {EventKind::CrossPre, 1, true},
                {EventKind::Cap, 3, true},
                {EventKind::Cap, 1, true}};
    return d;
}

MixedLinkDiagram zigzag_unknot() {
    MixedLinkDiagram d;
    d.events = {{EventKind::Cup, 1, true},
                {EventKind::Cup, 2, false},
                {EventKind::Cap, 1, true},
                {EventKind::Cap, 1, true}};
    return d;
}

}  // namespace

TEST_CASE("closure of simple words") {
    BraidWord e(Flavor::PM_1n, 1);
    MixedLinkDiagram d = closure(e);
    CHECK(validate(d).empty());
    CHECK(component_count(d) == 2);  // fixed loop + trivial moving circle

    MixedLinkDiagram dt = closure(parse_word("t", Flavor::PM_1n, 1));
    CHECK(validate(dt).empty());
    CHECK(component_count(dt) == 2);

    MixedLinkDiagram dp = closure(parse_word("p1", Flavor::PM_1n, 2));
    CHECK(validate(dp).empty());
    CHECK(component_count(dp) == 2);  // fixed loop + one moving component
    CHECK(pre_degree(dp) == 1);

    // S^3 flavor closures carry no fixed loop
    MixedLinkDiagram ds = closure(parse_word("s1 s1", Flavor::B_n, 2));
    CHECK(!ds.fixed_cup);
    CHECK(validate(ds).empty());
    CHECK(component_count(ds) == 2);
    CHECK(diagram_writhe(ds) == 2);
}

TEST_CASE("diagram writhe counts classical moving crossings only") {
    CHECK(diagram_writhe(closure(parse_word("s1 s1", Flavor::PM_1n, 2))) == 2);
    CHECK(diagram_writhe(closure(parse_word("p1", Flavor::PM_1n, 2))) == 0);
    CHECK(diagram_writhe(closure(parse_word("s1 s1^-1", Flavor::PM_1n, 2))) == 0);
    // t hooks cross only the fixed strand
    CHECK(diagram_writhe(closure(parse_word("t t", Flavor::PM_1n, 1))) == 0);
}

TEST_CASE("validation catches broken diagrams") {
    MixedLinkDiagram bad;
    bad.events = {{EventKind::Cup, 1, true}};
    CHECK(!validate(bad).empty());

    // special crossing against the fixed part
    MixedLinkDiagram d = closure(parse_word("t", Flavor::PM_1n, 1));
    d.events[1].kind = EventKind::CrossPre;
    CHECK(!validate(d).empty());

    // hand-built diagrams validate
    CHECK(validate(pre_kinked_unknot()).empty());
    CHECK(validate(pre_kink_with_up_arc()).empty());
    CHECK(validate(zigzag_unknot()).empty());

    // cap joining strands of equal direction
    MixedLinkDiagram o;
    o.events = {{EventKind::Cup, 1, true},
                {EventKind::Cup, 2, false},
                {EventKind::CrossPos, 2, true},
                {EventKind::Cap, 1, true},
                {EventKind::Cap, 1, true}};
    CHECK(!validate(o).empty());
}

TEST_CASE("save/load round trip is bit exact") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        BraidWord w = testing::random_word(rng, Flavor::PM_1n, 3, 6, 2, 2);
        MixedLinkDiagram d = closure(w);
        std::string text = d.str();
        MixedLinkDiagram back = MixedLinkDiagram::parse(text);
        CHECK(back == d);
        CHECK(back.str() == text);
    }
    CHECK(MixedLinkDiagram::parse(pre_kinked_unknot().str()) == pre_kinked_unknot());
}

TEST_CASE("rotation splices one cup/cap pair per rotated strand") {
    MixedLinkDiagram d = pre_kink_with_up_arc();
    MixedLinkDiagram r = rotate_special_crossings(d);
    CHECK(validate(r).empty());
    CHECK(r.events.size() == d.events.size() + 2);
    CHECK(pre_degree(r) == pre_degree(d));
    CHECK(component_count(r) == component_count(d));

    // already-downward crossings stay put
    MixedLinkDiagram ok = pre_kinked_unknot();
    CHECK(rotate_special_crossings(ok) == ok);
    MixedLinkDiagram c = closure(parse_word("p1 s1 t", Flavor::PM_1n, 2));
    CHECK(rotate_special_crossings(c) == c);
}

TEST_CASE("braiding a closure reads the word back") {
    BraidWord w = parse_word("t s1", Flavor::PM_1n, 2);
    BraidWord back = diagram_to_braid(closure(w));
    CHECK(stats(back).t_winding == 1);
    CHECK(stats(back).writhe == 1);
    CHECK(stats(back).pre_degree == 0);
    CHECK(back.str() == "t s1");

    BraidWord v = parse_word("p1 s2^-1 t t", Flavor::PM_1n, 3);
    CHECK(diagram_to_braid(closure(v)).str() == v.str());

    BraidWord s = parse_word("tau1 s1", Flavor::SM_1n, 2);
    CHECK(diagram_to_braid(closure(s)).str() == s.str());

    BraidWord plain = parse_word("s1 s2 s1", Flavor::B_n, 3);
    CHECK(diagram_to_braid(closure(plain)).str() == plain.str());
}

TEST_CASE("braiding hand-built diagrams") {
    // pre-kinked unknot: one pre-crossing, one component
    for (MixedLinkDiagram d : {pre_kinked_unknot(), pre_kink_with_up_arc()}) {
        BraidWord w = diagram_to_braid(d);
        CHECK(stats(w).pre_degree == 1);
        MixedLinkDiagram back = closure(w);
        CHECK(validate(back).empty());
        CHECK(component_count(back) == component_count(d));
    }

    BraidWord z = diagram_to_braid(zigzag_unknot());
    MixedLinkDiagram zc = closure(z);
    CHECK(component_count(zc) == component_count(zigzag_unknot()));
    CHECK(stats(z).pre_degree == 0);
}

TEST_CASE("braid(closure(w)) preserves the stats tuple") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 120; ++it) {
        int n = 2 + static_cast<int>(rng() % 3);
        Flavor f = it % 3 == 0 ? Flavor::SM_1n : Flavor::PM_1n;
        BraidWord w = testing::random_word(rng, f, n, 1 + static_cast<int>(rng() % 9), 3, 2);
        MixedLinkDiagram d = closure(w);
        BraidWord back = diagram_to_braid(d);
        CHECK(stats(back).pre_degree == stats(w).pre_degree);
        CHECK(stats(back).t_winding == stats(w).t_winding);
        CHECK(component_count(closure(back)) == component_count(d));
        CHECK(validate(closure(back)).empty());
    }
}
