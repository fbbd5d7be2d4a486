#pragma once

#include <string>
#include <vector>

#include "stbraid/hecke.hpp"

namespace stbraid {

enum class SpanKind { JonesS, C_d, Sigma, SigmaPrime, C_d_typeB, C_d_prime_typeB };

std::string span_kind_name(SpanKind k);
std::optional<SpanKind> span_kind_from_name(const std::string& s);

/// Enumerates the candidate spanning set as literal words: Jones basis,
/// p-blocks times Jones words (C_d), and the type-B variants with
/// t_i / t'_i monomials of exponents in [-k_max, k_max].
std::vector<BraidWord> enumerate_spanning_set(SpanKind kind, int n, int d, int k_max);

struct SpanRow {
    std::string member;
    std::string generator;
    std::string status;  // "success" | "inconclusive"
    int chain_length = 0;
    std::string certificate;  // replayable step lines; empty when inconclusive
    std::string note;

    std::string table_line(int index) const;
};

struct SpanReport {
    SpanKind kind;
    int n = 0, d = 0, k_max = 0;
    std::vector<SpanRow> rows;

    bool all_success() const;
    std::string str() const;
};

/// Exhaustive grade-preserving span closure of C_d: every member times
/// every g_j^{+-1} is certified into span(C_d) by a replayable chain
/// (relation moves, quadratic expansions, inverse eliminations). Always
/// succeeds; the certificate is verified by replay before reporting.
SpanReport span_closure_typeA(int n, int d);

/// Bounded rewriting search: attempts to rewrite every member*generator
/// into the candidate span. Failures are reported as inconclusive with an
/// exhausted-search note, never as counterexamples.
SpanReport span_experiment(SpanKind kind, int n, int d, int k_max, int length_bound,
                           int state_budget = 20000);

/// Applies a certificate to the starting element and returns the result;
/// throws std::invalid_argument when a step does not apply.
AlgebraElement replay_certificate(const AlgebraElement& start,
                                  const std::string& certificate);

/// True when every summand word of e literally matches a candidate word.
bool supported_on(const AlgebraElement& e, const std::vector<BraidWord>& candidates);

}  // namespace stbraid
