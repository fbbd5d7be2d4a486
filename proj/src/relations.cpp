#include "stbraid/relations.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace stbraid {

namespace {

using L = std::vector<Letter>;

void add(std::vector<Relation>& out, Flavor f, std::string id, L lhs, L rhs) {
    out.push_back(Relation{std::move(id), f, std::move(lhs), std::move(rhs)});
}

// Classical braid group relations shared by every flavor.
void braid_relations(std::vector<Relation>& out, Flavor f, int n) {
    for (int i = 1; i + 1 <= n - 1; ++i)
        add(out, f, "braid(" + std::to_string(i) + ")",
            {sigma(i), sigma(i + 1), sigma(i)}, {sigma(i + 1), sigma(i), sigma(i + 1)});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            add(out, f, "ss-far(" + std::to_string(i) + "," + std::to_string(j) + ")",
                {sigma(i), sigma(j)}, {sigma(j), sigma(i)});
}

// Def. 2.2 relations for the pseudo letters (and their tau images).
void typeA_special(std::vector<Relation>& out, Flavor f, int n, bool singular) {
    auto sp = [&](int i) { return singular ? tau(i) : pre(i); };
    const char* g = singular ? "tau" : "p";
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            add(out, f, std::string(g) + g + "-far(" + std::to_string(i) + "," + std::to_string(j) + ")",
                {sp(i), sp(j)}, {sp(j), sp(i)});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(i - j) < 2) continue;
            add(out, f, std::string(g) + "s-far(" + std::to_string(i) + "," + std::to_string(j) + ")",
                {sp(i), sigma(j)}, {sigma(j), sp(i)});
            add(out, f, std::string(g) + "s-far-inv(" + std::to_string(i) + "," + std::to_string(j) + ")",
                {sp(i), sigma_inv(j)}, {sigma_inv(j), sp(i)});
        }
    for (int i = 1; i <= n - 1; ++i) {
        add(out, f, std::string(g) + "s-same(" + std::to_string(i) + ")",
            {sp(i), sigma(i)}, {sigma(i), sp(i)});
        add(out, f, std::string(g) + "s-same-inv(" + std::to_string(i) + ")",
            {sp(i), sigma_inv(i)}, {sigma_inv(i), sp(i)});
    }
    for (int i = 1; i + 1 <= n - 1; ++i) {
        add(out, f, std::string("ss") + g + "-asc(" + std::to_string(i) + ")",
            {sigma(i), sigma(i + 1), sp(i)}, {sp(i + 1), sigma(i), sigma(i + 1)});
        add(out, f, std::string("ss") + g + "-desc(" + std::to_string(i) + ")",
            {sigma(i + 1), sigma(i), sp(i + 1)}, {sp(i), sigma(i + 1), sigma(i)});
    }
}

// The t-relations of the B_1n presentation.
void typeB_loop(std::vector<Relation>& out, Flavor f, int n) {
    if (n >= 2)
        add(out, f, "tsts", {loop_t(), sigma(1), loop_t(), sigma(1)},
            {sigma(1), loop_t(), sigma(1), loop_t()});
    for (int i = 2; i <= n - 1; ++i)
        add(out, f, "ts-far(" + std::to_string(i) + ")", {loop_t(), sigma(i)},
            {sigma(i), loop_t()});
}

// Def. 3.6: the mixed pseudo (cor. singular) braid monoid of type B.
void mixed_special(std::vector<Relation>& out, Flavor f, int n, bool singular) {
    auto sp = [&](int i) { return singular ? tau(i) : pre(i); };
    const char* g = singular ? "tau" : "p";
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            add(out, f, std::string(g) + g + "-far(" + std::to_string(i) + "," + std::to_string(j) + ")",
                {sp(i), sp(j)}, {sp(j), sp(i)});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(i - j) < 2) continue;
            add(out, f, std::string("s") + g + "-far(" + std::to_string(i) + "," + std::to_string(j) + ")",
                {sigma(i), sp(j)}, {sp(j), sigma(i)});
        }
    for (int i = 1; i + 1 <= n - 1; ++i) {
        add(out, f, std::string("ss") + g + "-asc(" + std::to_string(i) + ")",
            {sigma(i), sigma(i + 1), sp(i)}, {sp(i + 1), sigma(i), sigma(i + 1)});
        add(out, f, std::string("ss") + g + "-desc(" + std::to_string(i) + ")",
            {sigma(i + 1), sigma(i), sp(i + 1)}, {sp(i), sigma(i + 1), sigma(i)});
    }
    for (int i = 2; i <= n - 1; ++i)
        add(out, f, std::string("t") + g + "-far(" + std::to_string(i) + ")",
            {loop_t(), sp(i)}, {sp(i), loop_t()});
    if (n >= 2)
        add(out, f, std::string("tst") + g, {loop_t(), sigma(1), loop_t(), sp(1)},
            {sp(1), loop_t(), sigma(1), loop_t()});
}

}  // namespace

std::vector<Relation> relation_set(Flavor flavor, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<Relation> out;
    braid_relations(out, flavor, n);
    switch (flavor) {
        case Flavor::B_n:
            break;
        case Flavor::PM_n:
            typeA_special(out, flavor, n, false);
            break;
        case Flavor::SM_n:
            typeA_special(out, flavor, n, true);
            break;
        case Flavor::B_1n:
            typeB_loop(out, flavor, n);
            break;
        case Flavor::PM_1n:
            typeB_loop(out, flavor, n);
            mixed_special(out, flavor, n, false);
            break;
        case Flavor::SM_1n:
            typeB_loop(out, flavor, n);
            mixed_special(out, flavor, n, true);
            break;
    }
    return out;
}

bool relation_matches(const BraidWord& w, std::size_t pos, const Relation& rel,
                      bool forward) {
    const auto& pat = forward ? rel.lhs : rel.rhs;
    if (pos + pat.size() > w.letters.size()) return false;
    return std::equal(pat.begin(), pat.end(), w.letters.begin() + pos);
}

BraidWord apply_relation(const BraidWord& w, std::size_t pos, const Relation& rel,
                         bool forward) {
    if (!relation_matches(w, pos, rel, forward))
        throw std::invalid_argument("relation " + rel.id + " does not match at position " +
                                    std::to_string(pos));
    const auto& from = forward ? rel.lhs : rel.rhs;
    const auto& to = forward ? rel.rhs : rel.lhs;
    std::vector<Letter> out;
    out.reserve(w.letters.size() - from.size() + to.size());
    out.insert(out.end(), w.letters.begin(), w.letters.begin() + pos);
    out.insert(out.end(), to.begin(), to.end());
    out.insert(out.end(), w.letters.begin() + pos + from.size(), w.letters.end());
    return BraidWord(w.flavor, w.n, std::move(out));
}

namespace {

std::vector<BraidWord> rewrite_neighbors(const BraidWord& w,
                                         const std::vector<Relation>& rels,
                                         std::size_t length_cap) {
    std::vector<BraidWord> out;
    for (const Relation& rel : rels) {
        for (int dir = 0; dir < 2; ++dir) {
            bool forward = dir == 0;
            const auto& pat = forward ? rel.lhs : rel.rhs;
            if (pat.size() > w.letters.size()) continue;
            for (std::size_t pos = 0; pos + pat.size() <= w.letters.size(); ++pos) {
                if (!relation_matches(w, pos, rel, forward)) continue;
                BraidWord next = free_reduce(apply_relation(w, pos, rel, forward));
                if (next.letters.size() <= length_cap) out.push_back(std::move(next));
            }
        }
    }
    return out;
}

}  // namespace

Equivalence equivalent_by_relations(const BraidWord& w1, const BraidWord& w2,
                                    int budget) {
    if (w1.flavor != w2.flavor || w1.n != w2.n)
        throw std::invalid_argument("words must share flavor and n");
    BraidWord a = free_reduce(w1), b = free_reduce(w2);
    if (a == b) return Equivalence::Equivalent;
    if (budget <= 0) return Equivalence::Unknown;

    const std::size_t cap = std::max(w1.letters.size(), w2.letters.size()) + 4;
    const auto rels = relation_set(w1.flavor, w1.n);

    // Bidirectional BFS; depth[word] is moves used from the respective side.
    std::map<std::vector<Letter>, int> seen_a{{a.letters, 0}}, seen_b{{b.letters, 0}};
    std::vector<BraidWord> frontier_a{a}, frontier_b{b};
    int depth_a = 0, depth_b = 0;

    auto expand = [&](std::vector<BraidWord>& frontier,
                      std::map<std::vector<Letter>, int>& seen,
                      const std::map<std::vector<Letter>, int>& other, int next_depth,
                      int remaining_total) -> std::optional<Equivalence> {
        std::vector<BraidWord> next_frontier;
        for (const BraidWord& w : frontier) {
            for (BraidWord& nb : rewrite_neighbors(w, rels, cap)) {
                auto [it, fresh] = seen.emplace(nb.letters, next_depth);
                if (!fresh) continue;
                auto hit = other.find(nb.letters);
                if (hit != other.end() && next_depth + hit->second <= remaining_total)
                    return Equivalence::Equivalent;
                next_frontier.push_back(std::move(nb));
            }
        }
        frontier = std::move(next_frontier);
        return std::nullopt;
    };

    while (depth_a + depth_b < budget && (!frontier_a.empty() || !frontier_b.empty())) {
        bool grow_a = frontier_a.size() <= frontier_b.size() ? !frontier_a.empty()
                                                             : frontier_b.empty();
        if (grow_a) {
            ++depth_a;
            if (auto r = expand(frontier_a, seen_a, seen_b, depth_a, budget)) return *r;
        } else {
            ++depth_b;
            if (auto r = expand(frontier_b, seen_b, seen_a, depth_b, budget)) return *r;
        }
    }
    return Equivalence::Unknown;
}

}  // namespace stbraid
