#pragma once

// Independent oracle for the pseudo bracket: exhaustive enumeration over all
// 2^c smoothing states with explicit circle tracing. Shares no evaluation
// machinery with the library's memoized frontier evaluator.

#include <map>
#include <stdexcept>
#include <vector>

#include "stbraid/bracket.hpp"
#include "stbraid/diagram.hpp"
#include "stbraid/laurent.hpp"

namespace stbraid::testing {

struct FlatOp {
    enum Kind { Cup, Cap, Pass, FixedCup, FixedCap } kind;
    int pos;
    int winding = 0;  // Pass only
};

struct StateValue {
    int trivial = 0;
    int winding_total = 0;  // sum of |winding| over winding circles
    int winding_circles = 0;
};

// Traces the flat diagram's circles. Each point has degree 2; edges carry
// the winding picked up when traversed in their recorded direction.
inline StateValue trace_state(const std::vector<FlatOp>& ops) {
    struct Edge {
        int a, b, w;
    };
    std::vector<Edge> edges;
    std::vector<int> slots;  // current point per slot; -1 = fixed slot
    int next_point = 0;
    for (const FlatOp& op : ops) {
        switch (op.kind) {
            case FlatOp::FixedCup:
                slots.insert(slots.begin() + (op.pos - 1), {-1, -1});
                break;
            case FlatOp::FixedCap:
                slots.erase(slots.begin() + (op.pos - 1), slots.begin() + (op.pos + 1));
                break;
            case FlatOp::Cup: {
                int x = next_point++, y = next_point++;
                edges.push_back({x, y, 0});
                slots.insert(slots.begin() + (op.pos - 1), {x, y});
                break;
            }
            case FlatOp::Cap: {
                int x = slots[op.pos - 1], y = slots[op.pos];
                if (x < 0 || y < 0) throw std::logic_error("cap on fixed slot");
                edges.push_back({x, y, 0});
                slots.erase(slots.begin() + (op.pos - 1), slots.begin() + (op.pos + 1));
                break;
            }
            case FlatOp::Pass: {
                int z = next_point++;
                edges.push_back({slots[op.pos - 1], z, op.winding});
                slots[op.pos - 1] = z;
                break;
            }
        }
    }
    if (!slots.empty()) throw std::logic_error("flat diagram does not close");

    std::vector<std::vector<int>> incident(next_point);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].a].push_back(static_cast<int>(i));
        incident[edges[i].b].push_back(static_cast<int>(i));
    }
    std::vector<bool> used(edges.size(), false);
    StateValue out;
    for (int start = 0; start < next_point; ++start) {
        bool fresh = false;
        for (int e : incident[start]) fresh |= !used[e];
        if (!fresh) continue;
        int winding = 0;
        int p = start;
        for (;;) {
            int pick = -1;
            for (int e : incident[p])
                if (!used[e]) pick = e;
            if (pick < 0) break;
            used[pick] = true;
            if (edges[pick].a == p) {
                winding += edges[pick].w;
                p = edges[pick].b;
            } else {
                winding -= edges[pick].w;
                p = edges[pick].a;
            }
            if (p == start) break;
        }
        if (winding == 0) {
            ++out.trivial;
        } else {
            ++out.winding_circles;
            out.winding_total += winding < 0 ? -winding : winding;
        }
    }
    return out;
}

// Exhaustive 2^c state sum.
inline Laurent bruteforce_bracket(const MixedLinkDiagram& d, const SkeinRuleSet& rules) {
    if (d.events.empty()) return Laurent::one();
    DiagramAnalysis a = analyze(d);
    int act = -1;
    if (d.fixed_cup)
        for (std::size_t i = 0; i < a.wires.size(); ++i)
            if (a.wires[i].fixed && !a.wires[i].birth_left) act = static_cast<int>(i);

    // Collect smoothable crossings and hook pairs.
    struct Crossing {
        int event;
        Laurent c_vert, c_horiz;
    };
    std::vector<Crossing> crossings;
    std::map<int, int> hook_first;  // event -> winding sign (second of pair -> skip)
    std::map<int, bool> hook_skip;
    for (std::size_t r = 0; r < d.events.size(); ++r) {
        const MorseEvent& e = d.events[r];
        if (e.kind == EventKind::Cup || e.kind == EventKind::Cap) continue;
        const auto& row = a.occupancy[r];
        int wa = row[e.pos - 1], wb = row[e.pos];
        if (wa == act || wb == act) {
            if (hook_skip.count(static_cast<int>(r))) continue;
            const MorseEvent& e2 = d.events[r + 1];
            int sign = 0;
            if (e.kind == e2.kind) sign = e.kind == EventKind::CrossPos ? 1 : -1;
            hook_first[static_cast<int>(r)] = sign;
            hook_skip[static_cast<int>(r) + 1] = true;
            continue;
        }
        bool parallel = a.wires[wa].down == a.wires[wb].down;
        Crossing c;
        c.event = static_cast<int>(r);
        switch (e.kind) {
            case EventKind::CrossPos:
                c.c_vert = parallel ? rules.pos_oriented : rules.neg_disoriented;
                c.c_horiz = parallel ? rules.pos_disoriented : rules.neg_oriented;
                break;
            case EventKind::CrossNeg:
                c.c_vert = parallel ? rules.neg_oriented : rules.pos_disoriented;
                c.c_horiz = parallel ? rules.neg_disoriented : rules.pos_oriented;
                break;
            case EventKind::CrossPre:
                c.c_vert = parallel ? rules.pre_oriented : rules.pre_disoriented;
                c.c_horiz = parallel ? rules.pre_disoriented : rules.pre_oriented;
                break;
            case EventKind::CrossSing:
                c.c_vert = parallel ? rules.sing_oriented : rules.sing_disoriented;
                c.c_horiz = parallel ? rules.sing_disoriented : rules.sing_oriented;
                break;
            default: break;
        }
        crossings.push_back(std::move(c));
    }
    if (crossings.size() > 24) throw std::invalid_argument("too many crossings for 2^c oracle");

    Laurent total;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << crossings.size()); ++mask) {
        Laurent coeff = Laurent::one();
        std::map<int, bool> horiz;
        for (std::size_t i = 0; i < crossings.size(); ++i) {
            bool h = (mask >> i) & 1;
            horiz[crossings[i].event] = h;
            coeff *= h ? crossings[i].c_horiz : crossings[i].c_vert;
        }
        std::vector<FlatOp> ops;
        for (std::size_t r = 0; r < d.events.size(); ++r) {
            const MorseEvent& e = d.events[r];
            bool is_fixed_ev = d.fixed_cup && (static_cast<int>(r) == *d.fixed_cup ||
                                               static_cast<int>(r) == *d.fixed_cap);
            if (e.kind == EventKind::Cup) {
                ops.push_back({is_fixed_ev ? FlatOp::FixedCup : FlatOp::Cup, e.pos, 0});
            } else if (e.kind == EventKind::Cap) {
                ops.push_back({is_fixed_ev ? FlatOp::FixedCap : FlatOp::Cap, e.pos, 0});
            } else if (auto it = hook_first.find(static_cast<int>(r));
                       it != hook_first.end()) {
                // the moving strand sits right of act at the pair start
                ops.push_back({FlatOp::Pass, e.pos + 1, it->second});
            } else if (hook_skip.count(static_cast<int>(r))) {
                continue;
            } else if (horiz.at(static_cast<int>(r))) {
                ops.push_back({FlatOp::Cap, e.pos, 0});
                ops.push_back({FlatOp::Cup, e.pos, 0});
            }
            // vertical smoothing: no op
        }
        StateValue sv = trace_state(ops);
        Laurent value;
        if (sv.winding_circles == 0) {
            value = rules.delta.pow(sv.trivial - 1);
        } else {
            value = rules.delta.pow(sv.trivial) * rules.essential.pow(sv.winding_total);
        }
        total += coeff * value;
    }
    return total;
}

inline Laurent bruteforce_normalized(const MixedLinkDiagram& d, const SkeinRuleSet& rules) {
    return writhe_normalizer(diagram_writhe(d)) * bruteforce_bracket(d, rules);
}

}  // namespace stbraid::testing
