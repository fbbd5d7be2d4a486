#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stbraid {

/// The five monoids/groups of the kit. B_n is the classical braid group,
/// PM_n/SM_n the pseudo/singular braid monoids, and the _1n variants their
/// solid-torus (type B) counterparts with the looping generator t.
enum class Flavor { B_n, PM_n, SM_n, B_1n, PM_1n, SM_1n };

std::string flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(const std::string& name);

inline bool is_mixed(Flavor f) {
    return f == Flavor::B_1n || f == Flavor::PM_1n || f == Flavor::SM_1n;
}
inline bool is_pseudo(Flavor f) { return f == Flavor::PM_n || f == Flavor::PM_1n; }
inline bool is_singular(Flavor f) { return f == Flavor::SM_n || f == Flavor::SM_1n; }

enum class LetterKind { Sigma, SigmaInv, P, Tau, T, TInv };

/// One generator occurrence. index is the strand index i >= 1 for
/// sigma/p/tau letters and 0 for t/t^-1 (t carries no index).
struct Letter {
    LetterKind kind;
    int index = 0;

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

inline Letter sigma(int i) { return {LetterKind::Sigma, i}; }
inline Letter sigma_inv(int i) { return {LetterKind::SigmaInv, i}; }
inline Letter pre(int i) { return {LetterKind::P, i}; }
inline Letter tau(int i) { return {LetterKind::Tau, i}; }
inline Letter loop_t() { return {LetterKind::T, 0}; }
inline Letter loop_t_inv() { return {LetterKind::TInv, 0}; }

bool letter_legal(const Letter& l, Flavor f, int n);
std::string letter_str(const Letter& l);
Letter letter_inverse(const Letter& l);  // throws for p/tau

/// A word in one of the five monoids on n moving strands.
struct BraidWord {
    Flavor flavor = Flavor::PM_1n;
    int n = 1;
    std::vector<Letter> letters;

    BraidWord() = default;
    BraidWord(Flavor f, int n_, std::vector<Letter> ls = {});

    std::size_t size() const { return letters.size(); }
    bool operator==(const BraidWord&) const = default;
    auto operator<=>(const BraidWord&) const = default;

    std::string str() const;
    std::string header_str() const;  // "flavor=PM_1n n=3; <word>"
};

/// Word statistics of the braid_core module: the grading d, the signed
/// sigma-exponent sum, the signed t-exponent sum and the induced endpoint
/// permutation (perm[i] = end position of the strand starting at i, 0-based).
struct WordStats {
    int pre_degree = 0;
    int writhe = 0;
    int t_winding = 0;
    std::vector<int> permutation;

    bool operator==(const WordStats&) const = default;
};

BraidWord parse_word(const std::string& text, Flavor flavor, int n);
BraidWord parse_word_with_header(const std::string& text);

/// Cancels adjacent sigma/sigma^-1 and t/t^-1 pairs until none remain.
/// p and tau letters are never cancelled. Confluent (stack reduction).
BraidWord free_reduce(const BraidWord& w);

WordStats stats(const BraidWord& w);

/// Natural inclusion into the same flavor on m >= n strands.
BraidWord include(const BraidWord& w, int m);

/// The isomorphism of Thm-type mu: SM_(1,)n -> PM_(1,)n, tau_i -> p_i
/// letterwise, and its inverse.
BraidWord mu(const BraidWord& w);
BraidWord mu_inv(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);  // throws if word contains p/tau

}  // namespace stbraid
