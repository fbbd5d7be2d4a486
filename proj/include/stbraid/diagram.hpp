#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stbraid/braid.hpp"

namespace stbraid {

enum class EventKind { Cup, Cap, CrossPos, CrossNeg, CrossPre, CrossSing };

/// One Morse event, acting on adjacent slots at 1-based position pos.
/// Cups add two slots (a local maximum swept top to bottom), caps remove
/// two, crossings swap two. or_left_down is meaningful for cups only and
/// declares the orientation of the created pair (left side directed down).
struct MorseEvent {
    EventKind kind;
    int pos = 1;
    bool or_left_down = true;

    bool operator==(const MorseEvent&) const = default;
};

/// Morse-event encoding of an oriented mixed pseudo/singular link diagram.
/// The fixed component I-hat, when present, is marked by the indices of its
/// cup and cap events; the kit keeps it in standard position: leftmost
/// cup/cap pair, crossings with moving strands only against its right-hand
/// (act) strand and only in immediately consecutive hook pairs.
struct MixedLinkDiagram {
    std::vector<MorseEvent> events;
    std::optional<int> fixed_cup;
    std::optional<int> fixed_cap;

    bool operator==(const MixedLinkDiagram&) const = default;

    std::string str() const;
    static MixedLinkDiagram parse(const std::string& text);
};

/// Per-wire data from the sweep analysis. A wire is a maximal monotone
/// strand piece: born at a cup (left or right side), dead at a cap, passing
/// through any number of crossings.
struct Wire {
    int birth_event = -1;
    bool birth_left = true;
    int death_event = -1;
    bool death_left = true;
    bool down = true;    // direction of travel
    bool fixed = false;  // belongs to I-hat
    std::vector<int> crossings;  // event indices the wire passes through
};

struct DiagramAnalysis {
    std::vector<Wire> wires;
    // occupancy[r] = wire ids between events r-1 and r (occupancy[0] empty).
    std::vector<std::vector<int>> occupancy;
    std::vector<int> component_of_wire;
    int components = 0;

    int wire_at(int row, int pos) const { return occupancy[row][pos - 1]; }
};

/// Sweeps the diagram; throws std::invalid_argument on structurally broken
/// input (bad positions, unbalanced slots). Use validate() for a report.
DiagramAnalysis analyze(const MixedLinkDiagram& d);

/// Checks every type invariant (slot bookkeeping, cap orientation
/// consistency, fixed loop shape, the no-special-crossings-with-fixed rule,
/// hook pairing of fixed crossings). Returns violations, never throws.
std::vector<std::string> validate(const MixedLinkDiagram& d);

int pre_degree(const MixedLinkDiagram& d);
int component_count(const MixedLinkDiagram& d);

/// Signed classical crossing count over moving-moving crossings only;
/// pre/singular crossings and crossings with the fixed part contribute 0.
int diagram_writhe(const MixedLinkDiagram& d);

/// Standard trace closure of a braid word: fixed loop first (for mixed
/// flavors), braid box, nested closing arcs on the right.
MixedLinkDiagram closure(const BraidWord& w);

/// Isotopes every pre/singular crossing so both through-strands run
/// downward, splicing one cup/cap pair per rotated strand end.
MixedLinkDiagram rotate_special_crossings(const MixedLinkDiagram& d);

/// The braiding algorithm: rotate special crossings, cut up-arcs into
/// one-crossing-type pieces, replace each piece by an all-over/all-under
/// strand pair at a fresh rightmost position, then read the braid word off
/// the resulting closure-form diagram. The output closes to a diagram
/// isotopic to d.
BraidWord diagram_to_braid(const MixedLinkDiagram& d);

}  // namespace stbraid
