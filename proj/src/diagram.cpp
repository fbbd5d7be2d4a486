#include "stbraid/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace stbraid {

namespace {

const char* event_token(EventKind k) {
    switch (k) {
        case EventKind::Cup: return "cup";
        case EventKind::Cap: return "cap";
        case EventKind::CrossPos: return "x+";
        case EventKind::CrossNeg: return "x-";
        case EventKind::CrossPre: return "xp";
        case EventKind::CrossSing: return "xs";
    }
    return "?";
}

std::optional<EventKind> event_from_token(const std::string& t) {
    for (EventKind k : {EventKind::Cup, EventKind::Cap, EventKind::CrossPos,
                        EventKind::CrossNeg, EventKind::CrossPre, EventKind::CrossSing})
        if (event_token(k) == t) return k;
    return std::nullopt;
}

bool is_crossing(EventKind k) { return k != EventKind::Cup && k != EventKind::Cap; }

}  // namespace

std::string MixedLinkDiagram::str() const {
    std::ostringstream os;
    os << "stdiagram v1\n";
    for (const MorseEvent& e : events) {
        os << event_token(e.kind) << " " << e.pos;
        if (e.kind == EventKind::Cup) os << " " << (e.or_left_down ? "or+" : "or-");
        os << "\n";
    }
    if (fixed_cup && fixed_cap)
        os << "fixed cup=" << *fixed_cup << " cap=" << *fixed_cap << "\n";
    return os.str();
}

MixedLinkDiagram MixedLinkDiagram::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "stdiagram v1")
        throw std::invalid_argument("bad diagram header (want 'stdiagram v1')");
    MixedLinkDiagram d;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "fixed") {
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("bad fixed field: " + kv);
                int v = std::stoi(kv.substr(eq + 1));
                if (kv.substr(0, eq) == "cup")
                    d.fixed_cup = v;
                else if (kv.substr(0, eq) == "cap")
                    d.fixed_cap = v;
                else
                    throw std::invalid_argument("bad fixed field: " + kv);
            }
            continue;
        }
        auto kind = event_from_token(tok);
        if (!kind) throw std::invalid_argument("unknown event token: " + tok);
        MorseEvent e;
        e.kind = *kind;
        if (!(ls >> e.pos)) throw std::invalid_argument("missing event position");
        if (e.kind == EventKind::Cup) {
            std::string orient;
            if (!(ls >> orient) || (orient != "or+" && orient != "or-"))
                throw std::invalid_argument("cup needs or+ / or-");
            e.or_left_down = orient == "or+";
        }
        d.events.push_back(e);
    }
    return d;
}

DiagramAnalysis analyze(const MixedLinkDiagram& d) {
    DiagramAnalysis a;
    a.occupancy.push_back({});
    std::vector<int> row;
    for (std::size_t r = 0; r < d.events.size(); ++r) {
        const MorseEvent& e = d.events[r];
        const int p = e.pos;
        switch (e.kind) {
            case EventKind::Cup: {
                if (p < 1 || p > static_cast<int>(row.size()) + 1)
                    throw std::invalid_argument("cup position out of range at event " +
                                                std::to_string(r));
                int wl = static_cast<int>(a.wires.size());
                a.wires.push_back(Wire{static_cast<int>(r), true, -1, true,
                                       e.or_left_down, false, {}});
                int wr = static_cast<int>(a.wires.size());
                a.wires.push_back(Wire{static_cast<int>(r), false, -1, true,
                                       !e.or_left_down, false, {}});
                row.insert(row.begin() + (p - 1), {wl, wr});
                break;
            }
            case EventKind::Cap: {
                if (p < 1 || p + 1 > static_cast<int>(row.size()))
                    throw std::invalid_argument("cap position out of range at event " +
                                                std::to_string(r));
                int wa = row[p - 1], wb = row[p];
                a.wires[wa].death_event = static_cast<int>(r);
                a.wires[wa].death_left = true;
                a.wires[wb].death_event = static_cast<int>(r);
                a.wires[wb].death_left = false;
                row.erase(row.begin() + (p - 1), row.begin() + (p + 1));
                break;
            }
            default: {
                if (p < 1 || p + 1 > static_cast<int>(row.size()))
                    throw std::invalid_argument("crossing position out of range at event " +
                                                std::to_string(r));
                a.wires[row[p - 1]].crossings.push_back(static_cast<int>(r));
                a.wires[row[p]].crossings.push_back(static_cast<int>(r));
                std::swap(row[p - 1], row[p]);
                break;
            }
        }
        a.occupancy.push_back(row);
    }
    if (!row.empty()) throw std::invalid_argument("diagram does not close (slots remain)");
    for (Wire& w : a.wires)
        if (w.death_event < 0) throw std::invalid_argument("wire never capped");

    if (d.fixed_cup) {
        if (*d.fixed_cup < 0 || *d.fixed_cup >= static_cast<int>(d.events.size()) ||
            d.events[*d.fixed_cup].kind != EventKind::Cup)
            throw std::invalid_argument("fixed cup marker invalid");
        for (Wire& w : a.wires)
            if (w.birth_event == *d.fixed_cup) w.fixed = true;
    }

    // Components: union wires through cups and caps.
    std::vector<int> parent(a.wires.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < a.wires.size(); ++i)
        for (std::size_t j = i + 1; j < a.wires.size(); ++j)
            if (a.wires[i].birth_event == a.wires[j].birth_event ||
                a.wires[i].death_event == a.wires[j].death_event)
                parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    std::map<int, int> roots;
    a.component_of_wire.resize(a.wires.size());
    for (std::size_t i = 0; i < a.wires.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto [it, fresh] = roots.emplace(r, static_cast<int>(roots.size()));
        a.component_of_wire[i] = it->second;
    }
    a.components = static_cast<int>(roots.size());
    return a;
}

namespace {

// Fixed-part bookkeeping shared by validate/bracket/braid. act is the
// right-hand (downward) strand of the fixed loop.
struct FixedWires {
    int ret = -1;
    int act = -1;
};

std::optional<FixedWires> fixed_wires(const MixedLinkDiagram& d, const DiagramAnalysis& a) {
    if (!d.fixed_cup) return std::nullopt;
    FixedWires f;
    for (std::size_t i = 0; i < a.wires.size(); ++i) {
        if (!a.wires[i].fixed) continue;
        if (a.wires[i].birth_left)
            f.ret = static_cast<int>(i);
        else
            f.act = static_cast<int>(i);
    }
    return f;
}

}  // namespace

std::vector<std::string> validate(const MixedLinkDiagram& d) {
    std::vector<std::string> out;
    DiagramAnalysis a;
    try {
        a = analyze(d);
    } catch (const std::exception& ex) {
        out.push_back(std::string("structure: ") + ex.what());
        return out;
    }
    // Orientation consistency at caps: exactly one side flows down.
    for (std::size_t r = 0; r < d.events.size(); ++r) {
        if (d.events[r].kind != EventKind::Cap) continue;
        const auto& row = a.occupancy[r];
        int wa = row[d.events[r].pos - 1], wb = row[d.events[r].pos];
        if (a.wires[wa].down == a.wires[wb].down)
            out.push_back("orientation: cap at event " + std::to_string(r) +
                          " joins strands of equal direction");
    }
    bool has_pre = false, has_sing = false;
    for (const MorseEvent& e : d.events) {
        has_pre |= e.kind == EventKind::CrossPre;
        has_sing |= e.kind == EventKind::CrossSing;
    }
    if (has_pre && has_sing)
        out.push_back("flavor: diagram mixes pre-crossings and singular crossings");

    if (d.fixed_cup.has_value() != d.fixed_cap.has_value()) {
        out.push_back("fixed: cup and cap markers must be declared together");
        return out;
    }
    if (!d.fixed_cup) return out;

    if (*d.fixed_cap < 0 || *d.fixed_cap >= static_cast<int>(d.events.size()) ||
        d.events[*d.fixed_cap].kind != EventKind::Cap) {
        out.push_back("fixed: cap marker does not name a cap event");
        return out;
    }
    auto fw = fixed_wires(d, a);
    // Single unknotted closed loop: both fixed wires die at the fixed cap
    // and never cross each other.
    for (std::size_t i = 0; i < a.wires.size(); ++i)
        if (a.wires[i].fixed && a.wires[i].death_event != *d.fixed_cap)
            out.push_back("fixed: fixed component is not a single closed loop");
    if (d.events[*d.fixed_cup].pos != 1 || d.events[*d.fixed_cap].pos != 1)
        out.push_back("fixed: loop must occupy the leftmost slots (standard position)");
    if (*d.fixed_cup != 0)
        out.push_back("fixed: cup must be the first event (standard position)");
    if (*d.fixed_cap != static_cast<int>(d.events.size()) - 1)
        out.push_back("fixed: cap must be the last event (standard position)");

    std::vector<int> act_crossings;
    for (std::size_t r = 0; r < d.events.size(); ++r) {
        const MorseEvent& e = d.events[r];
        if (!is_crossing(e.kind)) continue;
        const auto& row = a.occupancy[r];
        int wa = row[e.pos - 1], wb = row[e.pos];
        bool fa = a.wires[wa].fixed, fb = a.wires[wb].fixed;
        if (!fa && !fb) continue;
        if (fa && fb) {
            out.push_back("fixed: fixed strands cross each other at event " + std::to_string(r));
            continue;
        }
        if (e.kind == EventKind::CrossPre || e.kind == EventKind::CrossSing)
            out.push_back("fixed: special crossing touches the fixed part at event " +
                          std::to_string(r));
        int fixed_wire = fa ? wa : wb;
        if (fw && fixed_wire == fw->ret)
            out.push_back("fixed: moving strand crosses the return side of the loop at event " +
                          std::to_string(r));
        act_crossings.push_back(static_cast<int>(r));
    }
    // Crossings with act must come in immediately consecutive hook pairs at
    // the same position against the same moving strand.
    for (std::size_t i = 0; i < act_crossings.size(); i += 2) {
        if (i + 1 >= act_crossings.size()) {
            out.push_back("fixed: unpaired crossing with the fixed strand at event " +
                          std::to_string(act_crossings[i]));
            break;
        }
        int r1 = act_crossings[i], r2 = act_crossings[i + 1];
        bool ok = r2 == r1 + 1 && d.events[r1].pos == d.events[r2].pos;
        if (ok) {
            const auto& row1 = a.occupancy[r1];
            const auto& row2 = a.occupancy[r2];
            std::set<int> s1{row1[d.events[r1].pos - 1], row1[d.events[r1].pos]};
            std::set<int> s2{row2[d.events[r2].pos - 1], row2[d.events[r2].pos]};
            ok = s1 == s2;
        }
        if (!ok)
            out.push_back("fixed: crossings with the fixed strand are not hook-paired near event " +
                          std::to_string(r1));
    }
    return out;
}

int pre_degree(const MixedLinkDiagram& d) {
    int c = 0;
    for (const MorseEvent& e : d.events)
        if (e.kind == EventKind::CrossPre || e.kind == EventKind::CrossSing) ++c;
    return c;
}

int component_count(const MixedLinkDiagram& d) { return analyze(d).components; }

int diagram_writhe(const MixedLinkDiagram& d) {
    DiagramAnalysis a = analyze(d);
    int w = 0;
    for (std::size_t r = 0; r < d.events.size(); ++r) {
        const MorseEvent& e = d.events[r];
        if (e.kind != EventKind::CrossPos && e.kind != EventKind::CrossNeg) continue;
        const auto& row = a.occupancy[r];
        int wa = row[e.pos - 1], wb = row[e.pos];
        if (a.wires[wa].fixed || a.wires[wb].fixed) continue;
        int geo = e.kind == EventKind::CrossPos ? 1 : -1;
        // Crossing sign flips when the two strands run antiparallel.
        int orient = a.wires[wa].down == a.wires[wb].down ? 1 : -1;
        w += geo * orient;
    }
    return w;
}

MixedLinkDiagram closure(const BraidWord& w) {
    MixedLinkDiagram d;
    const bool mixed = is_mixed(w.flavor);
    const int base = mixed ? 2 : 0;  // slots taken by the fixed pair
    if (mixed) {
        d.fixed_cup = 0;
        d.events.push_back({EventKind::Cup, 1, false});  // ret up, act down
    }
    for (int i = 1; i <= w.n; ++i)
        d.events.push_back({EventKind::Cup, base + i, true});  // strand down, arc up
    for (const Letter& l : w.letters) {
        switch (l.kind) {
            case LetterKind::Sigma:
                d.events.push_back({EventKind::CrossPos, base + l.index, true});
                break;
            case LetterKind::SigmaInv:
                d.events.push_back({EventKind::CrossNeg, base + l.index, true});
                break;
            case LetterKind::P:
                d.events.push_back({EventKind::CrossPre, base + l.index, true});
                break;
            case LetterKind::Tau:
                d.events.push_back({EventKind::CrossSing, base + l.index, true});
                break;
            case LetterKind::T:
                d.events.push_back({EventKind::CrossPos, 2, true});
                d.events.push_back({EventKind::CrossPos, 2, true});
                break;
            case LetterKind::TInv:
                d.events.push_back({EventKind::CrossNeg, 2, true});
                d.events.push_back({EventKind::CrossNeg, 2, true});
                break;
        }
    }
    for (int i = w.n; i >= 1; --i) d.events.push_back({EventKind::Cap, base + i, true});
    if (mixed) {
        d.events.push_back({EventKind::Cap, 1, true});
        d.fixed_cap = static_cast<int>(d.events.size()) - 1;
    }
    return d;
}

MixedLinkDiagram rotate_special_crossings(const MixedLinkDiagram& d) {
    MixedLinkDiagram cur = d;
    for (;;) {
        DiagramAnalysis a = analyze(cur);
        int target = -1;
        bool left_up = false;
        for (std::size_t r = 0; r < cur.events.size() && target < 0; ++r) {
            const MorseEvent& e = cur.events[r];
            if (e.kind != EventKind::CrossPre && e.kind != EventKind::CrossSing) continue;
            const auto& row = a.occupancy[r];
            int wa = row[e.pos - 1], wb = row[e.pos];
            if (a.wires[wa].down && a.wires[wb].down) continue;
            target = static_cast<int>(r);
            left_up = !a.wires[wa].down;
        }
        if (target < 0) return cur;
        const MorseEvent e = cur.events[target];
        std::vector<MorseEvent> block;
        if (left_up) {
            // Reroute the left up-strand: channel on the right, max above the
            // crossing, min below-left. One cup and one cap added.
            block = {{EventKind::Cup, e.pos + 2, true},
                     {e.kind, e.pos + 1, true},
                     {EventKind::Cap, e.pos, true}};
        } else {
            block = {{EventKind::Cup, e.pos, false},
                     {e.kind, e.pos + 1, true},
                     {EventKind::Cap, e.pos + 2, true}};
        }
        cur.events.erase(cur.events.begin() + target);
        cur.events.insert(cur.events.begin() + target, block.begin(), block.end());
        if (cur.fixed_cup && *cur.fixed_cup > target) *cur.fixed_cup += 2;
        if (cur.fixed_cap && *cur.fixed_cap > target) *cur.fixed_cap += 2;
    }
}

// ---------------------------------------------------------------------------
// Braiding
// ---------------------------------------------------------------------------

namespace {

struct Piece {
    int wire;         // braided up-wire
    int bottom_time;  // original event index of the bottom boundary
    int top_time;     // original event index of the top boundary
    bool bottom_is_cap;
    bool top_is_cup;
    bool over;  // label: o = true
};

// Per-passage crossing type of an up-wire through a real crossing.
bool passes_over(const MixedLinkDiagram& d, const DiagramAnalysis& a, int wire, int ev) {
    const MorseEvent& e = d.events[ev];
    bool enters_left = a.occupancy[ev][e.pos - 1] == wire;
    return e.kind == EventKind::CrossPos ? enters_left : !enters_left;
}

struct WordBuilder {
    std::vector<Letter> letters;
    bool has_pre = false, has_sing = false;
};

// Reads the braid word off a diagram already in standard closure form:
// cups, then crossings (hook pairs against act included), then caps.
// skip = wire ids of closure arcs (and the fixed return) to cut. Throws
// std::runtime_error when the diagram is not in braid-closure shape (wrong
// event order, or a closure arc that fails to reconnect bottom lane i to
// top lane i).
BraidWord read_off(const MixedLinkDiagram& d, const DiagramAnalysis& a,
                   const std::set<int>& skip, int act_wire) {
    std::size_t first_cross = 0;
    while (first_cross < d.events.size() && d.events[first_cross].kind == EventKind::Cup)
        ++first_cross;
    std::size_t first_cap = first_cross;
    while (first_cap < d.events.size() && is_crossing(d.events[first_cap].kind)) ++first_cap;
    for (std::size_t r = first_cap; r < d.events.size(); ++r)
        if (d.events[r].kind != EventKind::Cap)
            throw std::runtime_error("braiding produced a non-standard event order");

    // Box lane indexing from the row below the cups. Skipped columns must
    // stay put through the whole crossing section.
    const auto& top_row = a.occupancy[first_cross];
    std::map<int, int> moving_index;  // wire id at box top -> 1-based strand index
    int next = 0;
    for (int w : top_row) {
        if (skip.count(w)) continue;
        if (w == act_wire) continue;
        moving_index[w] = ++next;
    }
    const int n = next;

    // Each closure arc must open next to the lane it will close: remember
    // the box index of its cup partner.
    std::map<int, int> expected;  // closure arc wire -> box index it closes
    for (int w : skip) {
        if (w == act_wire) continue;
        const Wire& wi = a.wires[w];
        if (wi.fixed) continue;
        const MorseEvent& cup = d.events[wi.birth_event];
        const auto& row = a.occupancy[wi.birth_event + 1];
        int other = row[cup.pos - 1] == w ? row[cup.pos] : row[cup.pos - 1];
        auto it = moving_index.find(other);
        if (it == moving_index.end())
            throw std::runtime_error("closure arc not paired with a braid strand");
        expected[w] = it->second;
    }

    WordBuilder wb;
    std::optional<std::pair<int, EventKind>> open_hook;  // moving wire, first kind
    for (std::size_t r = first_cross; r < first_cap; ++r) {
        const MorseEvent& e = d.events[r];
        const auto& row = a.occupancy[r];
        int wa = row[e.pos - 1], wb_ = row[e.pos];
        if (skip.count(wa) || skip.count(wb_))
            throw std::runtime_error("closure arc participates in a crossing");
        if (wa == act_wire || wb_ == act_wire) {
            int mov = wa == act_wire ? wb_ : wa;
            if (e.kind != EventKind::CrossPos && e.kind != EventKind::CrossNeg)
                throw std::runtime_error("special crossing against the fixed strand");
            if (!open_hook) {
                open_hook = {mov, e.kind};
            } else {
                if (open_hook->first != mov)
                    throw std::runtime_error("interleaved fixed-strand hooks");
                if (open_hook->second == e.kind)
                    wb.letters.push_back(e.kind == EventKind::CrossPos ? loop_t()
                                                                       : loop_t_inv());
                // opposite kinds: a trivial detour, contributes nothing
                open_hook.reset();
            }
            continue;
        }
        if (open_hook) throw std::runtime_error("event interleaves an open fixed hook");
        auto ia = moving_index.find(wa), ib = moving_index.find(wb_);
        if (ia == moving_index.end() || ib == moving_index.end())
            throw std::runtime_error("crossing outside the braid box lanes");
        int left = std::min(ia->second, ib->second);
        if (std::abs(ia->second - ib->second) != 1)
            throw std::runtime_error("crossing between non-adjacent box lanes");
        switch (e.kind) {
            case EventKind::CrossPos: wb.letters.push_back(sigma(left)); break;
            case EventKind::CrossNeg: wb.letters.push_back(sigma_inv(left)); break;
            case EventKind::CrossPre:
                wb.letters.push_back(pre(left));
                wb.has_pre = true;
                break;
            case EventKind::CrossSing:
                wb.letters.push_back(tau(left));
                wb.has_sing = true;
                break;
            default: break;
        }
        // Crossings permute the moving lanes.
        std::swap(moving_index[wa], moving_index[wb_]);
    }
    if (open_hook) throw std::runtime_error("unclosed fixed-strand hook");

    // Verify the closure connectivity: every cap must reconnect a braid
    // strand to the closure arc expecting that lane.
    for (std::size_t r = first_cap; r < d.events.size(); ++r) {
        const MorseEvent& e = d.events[r];
        const auto& row = a.occupancy[r];
        int x = row[e.pos - 1], y = row[e.pos];
        if (x == act_wire || y == act_wire) continue;  // fixed cap
        int arc = skip.count(x) ? x : y;
        int strand = arc == x ? y : x;
        if (!skip.count(arc) || skip.count(strand))
            throw std::runtime_error("cap does not join a strand to a closure arc");
        if (moving_index.at(strand) != expected.at(arc))
            throw std::runtime_error("closure arc closes the wrong lane");
    }

    Flavor flavor;
    const bool mixed = act_wire >= 0;
    if (wb.has_sing)
        flavor = mixed ? Flavor::SM_1n : Flavor::SM_n;
    else if (wb.has_pre)
        flavor = mixed ? Flavor::PM_1n : Flavor::PM_n;
    else
        flavor = mixed ? Flavor::B_1n : Flavor::B_n;
    return BraidWord(flavor, std::max(n, 1), std::move(wb.letters));
}

// Scheduled item for the rebuilt (fully braided) diagram.
struct Item {
    enum Kind { OrigEvent, CupZ, CapZ, RunLeft, RunRight } kind;
    int orig = -1;       // OrigEvent: original event index
    int piece = -1;      // piece id for the rest
    int anchor_row = -1; // RunLeft: original row whose neighbors anchor the target
    int anchor_slot = -1;  // slot (1-based) of the landing point in that row
};

}  // namespace

BraidWord diagram_to_braid(const MixedLinkDiagram& d0) {
    if (d0.events.empty()) throw std::invalid_argument("empty diagram");
    {
        auto violations = validate(d0);
        if (!violations.empty())
            throw std::invalid_argument("invalid diagram: " + violations.front());
    }
    MixedLinkDiagram d = rotate_special_crossings(d0);
    DiagramAnalysis a = analyze(d);
    auto fw = fixed_wires(d, a);
    const int act = fw ? fw->act : -1;
    const int ret = fw ? fw->ret : -1;

    // Hooks must run downward so braiding leaves the fixed part alone.
    for (std::size_t r = 0; r < d.events.size(); ++r) {
        const MorseEvent& e = d.events[r];
        if (!is_crossing(e.kind)) continue;
        const auto& row = a.occupancy[r];
        int wa = row[e.pos - 1], wb = row[e.pos];
        if (wa == act || wb == act) {
            int mov = wa == act ? wb : wa;
            if (!a.wires[mov].down)
                throw std::invalid_argument(
                    "fixed-strand hooks must be traversed downward");
        }
    }

    // Up-arcs = moving up-wires.
    std::vector<int> ups;
    for (std::size_t i = 0; i < a.wires.size(); ++i)
        if (!a.wires[i].down && static_cast<int>(i) != ret && !a.wires[i].fixed)
            ups.push_back(static_cast<int>(i));

    auto partner_at = [&](int w, bool at_birth) {
        const Wire& wi = a.wires[w];
        int ev = at_birth ? wi.birth_event : wi.death_event;
        const auto& row = a.occupancy[at_birth ? ev + 1 : ev];
        int p = d.events[ev].pos;
        int x = row[p - 1], y = row[p];
        return x == w ? y : x;
    };

    bool all_closure_shaped = true;
    for (int w : ups)
        if (!a.wires[w].crossings.empty()) all_closure_shaped = false;

    if (all_closure_shaped) {
        std::set<int> skip(ups.begin(), ups.end());
        if (ret >= 0) skip.insert(ret);
        try {
            return read_off(d, a, skip, act);
        } catch (const std::runtime_error&) {
            // not in standard event order; braid everything instead
        }
    }

    // Fully braided regime: every moving up-wire is replaced by a strand
    // pair at a fresh rightmost lane (an L-move surgery per piece).
    std::vector<Piece> pieces;
    std::map<int, std::vector<int>> pieces_of_wire;
    for (int w : ups) {
        const Wire& wi = a.wires[w];
        std::vector<std::pair<int, bool>> passages;  // (event, over?)
        for (int ev : wi.crossings) {
            const MorseEvent& e = d.events[ev];
            if (e.kind == EventKind::CrossPre || e.kind == EventKind::CrossSing)
                throw std::runtime_error("special crossing on an up-arc after rotation");
            passages.emplace_back(ev, passes_over(d, a, w, ev));
        }
        std::sort(passages.begin(), passages.end());
        // Cut between passages of different type; label 'o' when none.
        std::vector<std::pair<int, int>> ranges;  // [bottom_time, top_time]
        std::vector<bool> labels;
        int top = wi.birth_event;
        std::size_t i = 0;
        while (true) {
            if (i >= passages.size()) {
                ranges.emplace_back(wi.death_event, top);
                labels.push_back(i == 0 ? true : passages.back().second);
                break;
            }
            std::size_t j = i;
            while (j + 1 < passages.size() && passages[j + 1].second == passages[i].second)
                ++j;
            if (j + 1 >= passages.size()) {
                ranges.emplace_back(wi.death_event, top);
                labels.push_back(passages[i].second);
                break;
            }
            // cut just after passage j (between event j and j+1)
            ranges.emplace_back(passages[j].first, top);
            labels.push_back(passages[i].second);
            top = passages[j].first;  // cut scheduled right after this event
            i = j + 1;
        }
        // ranges were built top-to-bottom; emit pieces top-to-bottom.
        std::vector<int> ids;
        for (std::size_t k = 0; k < ranges.size(); ++k) {
            Piece pc;
            pc.wire = w;
            pc.top_time = ranges[k].second;
            pc.bottom_time = ranges[k].first;
            pc.top_is_cup = k == 0;
            pc.bottom_is_cap = k + 1 == ranges.size();
            pc.over = labels[k];
            ids.push_back(static_cast<int>(pieces.size()));
            pieces.push_back(pc);
        }
        pieces_of_wire[w] = ids;
    }

    // Lane nesting: the piece whose bottom run happens earliest is the
    // outermost pair. Sort by bottom time (cuts run right after their event).
    std::vector<int> order(pieces.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return pieces[x].bottom_time < pieces[y].bottom_time;
    });

    // Build the item schedule.
    std::vector<Item> schedule;
    for (int pi : order) schedule.push_back({Item::CupZ, -1, pi, -1, -1});
    std::set<int> braided(ups.begin(), ups.end());
    for (std::size_t r = 0; r < d.events.size(); ++r) {
        const MorseEvent& e = d.events[r];
        bool deleted = false;
        std::vector<Item> here;
        if (e.kind == EventKind::Cup || e.kind == EventKind::Cap) {
            const auto& row = a.occupancy[e.kind == EventKind::Cup ? r + 1 : r];
            int wa = row[e.pos - 1], wb = row[e.pos];
            int up = braided.count(wa) ? wa : braided.count(wb) ? wb : -1;
            if (up >= 0) {
                deleted = true;
                for (int pi : pieces_of_wire[up]) {
                    const Piece& pc = pieces[pi];
                    if (pc.top_is_cup && pc.top_time == static_cast<int>(r))
                        here.push_back({Item::RunLeft, -1, pi, static_cast<int>(r), e.pos});
                    if (pc.bottom_is_cap && pc.bottom_time == static_cast<int>(r))
                        here.push_back({Item::RunRight, -1, pi, -1, -1});
                }
            }
        } else {
            const auto& row = a.occupancy[r];
            int wa = row[e.pos - 1], wb = row[e.pos];
            if (braided.count(wa) || braided.count(wb)) deleted = true;
        }
        if (!deleted) schedule.push_back({Item::OrigEvent, static_cast<int>(r), -1, -1, -1});
        // Cut runs scheduled right after the cut event.
        for (auto& [w, ids] : pieces_of_wire) {
            for (int pi : ids) {
                const Piece& pc = pieces[pi];
                if (!pc.top_is_cup && pc.top_time == static_cast<int>(r)) {
                    int slot = -1;
                    const auto& row = a.occupancy[r + 1];
                    for (std::size_t s = 0; s < row.size(); ++s)
                        if (row[s] == pc.wire) slot = static_cast<int>(s) + 1;
                    here.push_back({Item::RunLeft, -1, pi, static_cast<int>(r) + 1, slot});
                }
                if (!pc.bottom_is_cap && pc.bottom_time == static_cast<int>(r))
                    here.push_back({Item::RunRight, -1, pi, -1, -1});
            }
        }
        // A cut's left run (flow arriving) precedes its right run (leaving).
        std::stable_sort(here.begin(), here.end(), [](const Item& x, const Item& y) {
            return (x.kind == Item::RunLeft) > (y.kind == Item::RunLeft);
        });
        schedule.insert(schedule.end(), here.begin(), here.end());
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        schedule.push_back({Item::CapZ, -1, *it, -1, -1});

    // Lay out the rebuilt diagram. Wires are tracked by id; new ids per piece.
    const int W = static_cast<int>(a.wires.size());
    std::vector<int> strand_id(pieces.size()), ret_id(pieces.size());
    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        strand_id[pi] = W + 2 * static_cast<int>(pi);
        ret_id[pi] = W + 2 * static_cast<int>(pi) + 1;
    }
    // The moving strand descending a piece's lane: the flow-carrier. Above
    // the left run it is the piece's own strand id; the run hands it to the
    // original continuation wire implicitly by position, so we keep the lane
    // strand id and let crossings track slots.
    std::vector<int> row;
    MixedLinkDiagram out;
    out.fixed_cup.reset();
    out.fixed_cap.reset();
    int out_act = -1, out_ret = -1;
    std::set<int> out_skip;

    auto slot_of = [&](int wire) {
        for (std::size_t s = 0; s < row.size(); ++s)
            if (row[s] == wire) return static_cast<int>(s) + 1;
        return -1;
    };
    auto leftmost_ret_slot = [&]() {
        int best = static_cast<int>(row.size()) + 1;
        for (std::size_t s = 0; s < row.size(); ++s)
            for (std::size_t pi = 0; pi < pieces.size(); ++pi)
                if (row[s] == ret_id[pi]) best = std::min<int>(best, static_cast<int>(s) + 1);
        return best;
    };

    // Original wire id currently holding each original trajectory slot: the
    // left runs land the lane strand onto the braided wire's old position,
    // where it continues the original wire's path. Track by substitution.
    std::vector<int> subst(W + 2 * static_cast<int>(pieces.size()));
    std::iota(subst.begin(), subst.end(), 0);
    auto resolve = [&](int wire) {
        while (subst[wire] != wire) wire = subst[wire];
        return wire;
    };
    // The strand that right-ran out to each piece's lane, joined by its
    // closure cap.
    std::vector<int> parked(pieces.size(), -1);

    auto emit_cross = [&](EventKind k, int pos) {
        out.events.push_back({k, pos, true});
        std::swap(row[pos - 1], row[pos]);
    };

    for (const Item& item : schedule) {
        switch (item.kind) {
            case Item::CupZ: {
                int at = leftmost_ret_slot();
                out.events.push_back({EventKind::Cup, at, true});
                row.insert(row.begin() + (at - 1), {strand_id[item.piece], ret_id[item.piece]});
                break;
            }
            case Item::CapZ: {
                int s = slot_of(parked[item.piece]);
                int t = slot_of(ret_id[item.piece]);
                if (s < 0 || t != s + 1)
                    throw std::runtime_error("braiding: closure lanes out of position");
                out.events.push_back({EventKind::Cap, s, true});
                row.erase(row.begin() + (s - 1), row.begin() + (s + 1));
                break;
            }
            case Item::RunLeft: {
                const Piece& pc = pieces[item.piece];
                // Target: where the braided wire sat in the original row,
                // anchored by its surviving left neighbor.
                const auto& orow = a.occupancy[pc.top_is_cup ? item.anchor_row + 1
                                                             : item.anchor_row];
                int wslot = item.anchor_slot;
                if (pc.top_is_cup) {
                    // the cup created (partner, up) or (up, partner)
                    int x = orow[wslot - 1];
                    wslot = x == pc.wire ? wslot : wslot + 1;
                }
                int target = 1;
                for (int s = wslot - 1; s >= 1; --s) {
                    int w = orow[s - 1];
                    if (braided.count(w)) continue;
                    int cur = slot_of(resolve(w));
                    if (cur < 0) continue;
                    target = cur + 1;
                    break;
                }
                int s = slot_of(strand_id[item.piece]);
                if (s < 0) throw std::runtime_error("braiding: lane strand missing");
                while (s > target) {
                    emit_cross(pc.over ? EventKind::CrossNeg : EventKind::CrossPos, s - 1);
                    --s;
                }
                if (pc.top_is_cup) {
                    // The lane strand now continues the cup partner's path.
                    int q = partner_at(pc.wire, true);
                    subst[q] = strand_id[item.piece];
                }
                break;
            }
            case Item::RunRight: {
                const Piece& pc = pieces[item.piece];
                // At a cap the flow arrives on the dying partner strand; at a
                // cut it arrives on the lane strand of the piece below, which
                // just ran left to the cut slot.
                int carrier;
                if (pc.bottom_is_cap) {
                    carrier = resolve(partner_at(pc.wire, false));
                } else {
                    const auto& ids = pieces_of_wire[pc.wire];
                    auto it = std::find(ids.begin(), ids.end(), item.piece);
                    carrier = strand_id[*(it + 1)];
                }
                int s = slot_of(carrier);
                if (s < 0) throw std::runtime_error("braiding: run carrier missing");
                int target = leftmost_ret_slot() - 1;
                while (s < target) {
                    emit_cross(pc.over ? EventKind::CrossPos : EventKind::CrossNeg, s);
                    ++s;
                }
                parked[item.piece] = carrier;
                break;
            }
            case Item::OrigEvent: {
                const MorseEvent& e = d.events[item.orig];
                if (e.kind == EventKind::Cup) {
                    // Only the fixed cup survives here.
                    out.events.push_back({EventKind::Cup, 1, e.or_left_down});
                    const auto& orow = a.occupancy[item.orig + 1];
                    row.insert(row.begin(), {orow[e.pos - 1], orow[e.pos]});
                    out.fixed_cup = static_cast<int>(out.events.size()) - 1;
                    out_ret = orow[e.pos - 1];
                    out_act = orow[e.pos];
                    break;
                }
                if (e.kind == EventKind::Cap) {
                    const auto& orow = a.occupancy[item.orig];
                    int x = resolve(orow[e.pos - 1]), y = resolve(orow[e.pos]);
                    int sx = slot_of(x), sy = slot_of(y);
                    if (sx < 0 || sy < 0 || std::abs(sx - sy) != 1)
                        throw std::runtime_error("braiding: cap strands not adjacent");
                    out.events.push_back({EventKind::Cap, std::min(sx, sy), true});
                    row.erase(row.begin() + (std::min(sx, sy) - 1),
                              row.begin() + (std::min(sx, sy) + 1));
                    out.fixed_cap = static_cast<int>(out.events.size()) - 1;
                    break;
                }
                const auto& orow = a.occupancy[item.orig];
                int x = resolve(orow[e.pos - 1]), y = resolve(orow[e.pos]);
                int sx = slot_of(x), sy = slot_of(y);
                if (sx < 0 || sy < 0 || std::abs(sx - sy) != 1)
                    throw std::runtime_error("braiding: crossing strands not adjacent");
                emit_cross(e.kind, std::min(sx, sy));
                break;
            }
        }
    }
    if (!row.empty()) throw std::runtime_error("braiding: rebuilt diagram does not close");

    for (std::size_t pi = 0; pi < pieces.size(); ++pi) out_skip.insert(ret_id[pi]);
    if (out_ret >= 0) out_skip.insert(out_ret);

    // Re-analyze the rebuilt diagram with consistent wire numbering: wire
    // ids change, so recover skip/act by position: closure returns are the
    // up wires that never cross; act is the fixed cup's right wire.
    DiagramAnalysis b = analyze(out);
    int act2 = -1, ret2 = -1;
    if (out.fixed_cup) {
        auto f2 = fixed_wires(out, b);
        act2 = f2->act;
        ret2 = f2->ret;
    }
    std::set<int> skip2;
    for (std::size_t i = 0; i < b.wires.size(); ++i)
        if (!b.wires[i].down && b.wires[i].crossings.empty() &&
            static_cast<int>(i) != ret2 && !b.wires[i].fixed)
            skip2.insert(static_cast<int>(i));
    if (ret2 >= 0) skip2.insert(ret2);
    return read_off(out, b, skip2, act2);
}

}  // namespace stbraid
