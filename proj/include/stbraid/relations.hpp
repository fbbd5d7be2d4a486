#pragma once

#include <string>
#include <vector>

#include "stbraid/braid.hpp"

namespace stbraid {

/// One instantiated defining relation lhs = rhs, legal in `flavor` at
/// strand count n. The lists follow the paper's presentation tables for
/// each flavor; ids are stable and deterministic.
struct Relation {
    std::string id;
    Flavor flavor;
    std::vector<Letter> lhs;
    std::vector<Letter> rhs;

    bool operator==(const Relation&) const = default;
};

/// All instantiated relations of the flavor's presentation at size n,
/// in a fixed deterministic order.
std::vector<Relation> relation_set(Flavor flavor, int n);

/// True iff the chosen side of rel matches w at position pos.
bool relation_matches(const BraidWord& w, std::size_t pos, const Relation& rel,
                      bool forward);

/// Replaces the matched side by the other side. Throws on mismatch.
BraidWord apply_relation(const BraidWord& w, std::size_t pos, const Relation& rel,
                         bool forward);

enum class Equivalence { Equivalent, Unknown };

/// Bounded semi-decision of the word problem: bidirectional BFS over
/// free-reduced words, applying every relation in both directions at every
/// position. Returns Equivalent only on a certified chain of length <=
/// budget; never a false positive. Frontier words are capped at
/// max(|w1|,|w2|) + 4 letters.
Equivalence equivalent_by_relations(const BraidWord& w1, const BraidWord& w2,
                                    int budget);

}  // namespace stbraid
