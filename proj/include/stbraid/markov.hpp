#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stbraid/braid.hpp"

namespace stbraid {

/// Closure-preserving move kinds of the type-B Markov theorems, plus
/// presentation rewrites. Pseudo-stabilization is legal only for the
/// pseudo flavors; the singular move set excludes it.
enum class MoveKind {
    Conjugation,
    Commuting,
    RealStabPos,
    RealStabNeg,
    PseudoStab,
    LMoveOver,
    LMoveUnder,
    RelationRewrite,
};

std::string move_kind_name(MoveKind k);
std::optional<MoveKind> move_kind_from_name(const std::string& name);

/// a w a^{-1}, free-reduced. The conjugator must lie in B_(1,)n: no p/tau.
BraidWord conjugate(const BraidWord& w, const BraidWord& a);

/// Cyclic rotation: first k letters moved to the end.
BraidWord commute(const BraidWord& w, std::size_t k);

/// include(w, n+1) followed by sigma_n^{sign}.
BraidWord stabilize(const BraidWord& w, int sign);

/// include(w, n+1) followed by p_n (tau_n never: singular flavors have no
/// pseudo-stabilization move, so this throws for them).
BraidWord pseudo_stabilize(const BraidWord& w);

/// L-move at (letter gap, strand position): inserts the crossing block
/// [s_n^-1..s_{s+1}^-1] s_s^{+-1} [s_{s+1}..s_n] on n+1 strands (all-over
/// for L_o, all-under for L_u; signs mirrored). The degenerate rightmost
/// case reduces to real stabilization.
BraidWord l_move(const BraidWord& w, std::size_t gap, int strand, bool over);

/// Detects and removes an L-move block at the last strand; returns nothing
/// when no such block is present.
std::optional<BraidWord> l_move_inverse(const BraidWord& w);

/// One replayable step of a random walk, serialized one per line.
struct MoveLogEntry {
    std::string line;
};

struct WalkResult {
    BraidWord word;
    std::vector<MoveLogEntry> log;
};

struct WalkOptions {
    int n_max = 6;                  // stabilization cap
    std::vector<MoveKind> allowed;  // empty = flavor default set
};

/// Seeded random walk over legal moves; deterministic for a fixed seed.
/// The returned log replays to the same output via apply_move_log.
WalkResult random_markov_walk(const BraidWord& w, int steps, std::uint64_t seed,
                              const WalkOptions& opts = {});

BraidWord apply_move_log_entry(const BraidWord& w, const std::string& line);
BraidWord apply_move_log(const BraidWord& w, const std::vector<MoveLogEntry>& log);

/// The flavor's legal walk move set (Thm-level: singular flavors exclude
/// pseudo-stabilization; non-pseudo flavors likewise).
std::vector<MoveKind> default_move_kinds(Flavor f);

}  // namespace stbraid
