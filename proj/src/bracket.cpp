#include "stbraid/bracket.hpp"

#include <list>
#include <map>
#include <sstream>
#include <unordered_map>

namespace stbraid {

namespace {

Laurent A() { return Laurent::var_A(); }
Laurent Ainv() { return Laurent::monomial(1, 0, -1); }

}  // namespace

SkeinRuleSet SkeinRuleSet::standard() {
    SkeinRuleSet r;
    r.pos_oriented = A();
    r.pos_disoriented = Ainv();
    r.neg_oriented = Ainv();
    r.neg_disoriented = A();
    r.pre_oriented = Laurent::var_V();
    r.pre_disoriented = Laurent::parse("1 + V*A^2 + V*A^-2");
    r.sing_oriented = r.pre_oriented;
    r.sing_disoriented = r.pre_disoriented;
    r.delta = Laurent::parse("-A^2 - A^-2");
    r.essential = Laurent::var_s();
    return r;
}

std::string SkeinRuleSet::str() const {
    std::ostringstream os;
    os << "pos.oriented = " << pos_oriented.str() << "\n";
    os << "pos.disoriented = " << pos_disoriented.str() << "\n";
    os << "neg.oriented = " << neg_oriented.str() << "\n";
    os << "neg.disoriented = " << neg_disoriented.str() << "\n";
    os << "pre.oriented = " << pre_oriented.str() << "\n";
    os << "pre.disoriented = " << pre_disoriented.str() << "\n";
    os << "sing.oriented = " << sing_oriented.str() << "\n";
    os << "sing.disoriented = " << sing_disoriented.str() << "\n";
    os << "circle.trivial = " << delta.str() << "\n";
    os << "circle.essential = " << essential.str() << "\n";
    return os.str();
}

SkeinRuleSet SkeinRuleSet::load(const std::string& text) {
    SkeinRuleSet r = standard();
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("rule line missing '=': " + line);
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        Laurent val = Laurent::parse(line.substr(eq + 1));
        if (key == "pos.oriented") r.pos_oriented = val;
        else if (key == "pos.disoriented") r.pos_disoriented = val;
        else if (key == "neg.oriented") r.neg_oriented = val;
        else if (key == "neg.disoriented") r.neg_disoriented = val;
        else if (key == "pre.oriented") r.pre_oriented = val;
        else if (key == "pre.disoriented") r.pre_disoriented = val;
        else if (key == "sing.oriented") r.sing_oriented = val;
        else if (key == "sing.disoriented") r.sing_disoriented = val;
        else if (key == "circle.trivial") r.delta = val;
        else if (key == "circle.essential") r.essential = val;
        else throw std::invalid_argument("unknown rule key: " + key);
    }
    if (auto bad = rule_violation(r))
        throw std::invalid_argument("rule set rejected: violates " + *bad);
    return r;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMemoCap = std::size_t(1) << 20;

struct ArcEnd {
    int partner = -1;  // index into the frontier, -1 for a fixed slot
    int winding = 0;
};

struct Evaluator {
    const MixedLinkDiagram& d;
    const SkeinRuleSet& rules;
    std::vector<std::pair<Laurent, Laurent>> coeff;  // per event: (vert, horiz)
    std::vector<int> hook_sign;  // per event: +1/-1/0 first-of-pair, -2 second, -3 not a hook
    int fixed_cup = -1, fixed_cap = -1;

    // memo: serialized (event, frontier) -> (S_all, S_zero), LRU-capped
    std::list<std::string> lru;
    std::unordered_map<std::string,
                       std::pair<std::pair<Laurent, Laurent>, std::list<std::string>::iterator>>
        memo;

    Evaluator(const MixedLinkDiagram& dia, const SkeinRuleSet& rs) : d(dia), rules(rs) {
        DiagramAnalysis a = analyze(d);
        int act = -1;
        if (d.fixed_cup) {
            fixed_cup = *d.fixed_cup;
            fixed_cap = *d.fixed_cap;
            for (std::size_t i = 0; i < a.wires.size(); ++i)
                if (a.wires[i].fixed && !a.wires[i].birth_left) act = static_cast<int>(i);
        }
        coeff.resize(d.events.size(), {Laurent::one(), Laurent::one()});
        hook_sign.assign(d.events.size(), -3);
        for (std::size_t r = 0; r < d.events.size(); ++r) {
            const MorseEvent& e = d.events[r];
            if (e.kind == EventKind::Cup || e.kind == EventKind::Cap) continue;
            const auto& row = a.occupancy[r];
            int wa = row[e.pos - 1], wb = row[e.pos];
            if (wa == act || wb == act) {
                if (hook_sign[r] == -2) continue;
                // first of a hook pair; the partner is the next event
                const MorseEvent& e2 = d.events[r + 1];
                int sign = 0;
                if (e.kind == e2.kind)
                    sign = e.kind == EventKind::CrossPos ? 1 : -1;
                hook_sign[r] = sign;
                hook_sign[r + 1] = -2;
                continue;
            }
            bool parallel = a.wires[wa].down == a.wires[wb].down;
            Laurent cv, ch;
            switch (e.kind) {
                case EventKind::CrossPos:
                    cv = parallel ? rules.pos_oriented : rules.neg_disoriented;
                    ch = parallel ? rules.pos_disoriented : rules.neg_oriented;
                    break;
                case EventKind::CrossNeg:
                    cv = parallel ? rules.neg_oriented : rules.pos_disoriented;
                    ch = parallel ? rules.neg_disoriented : rules.pos_oriented;
                    break;
                case EventKind::CrossPre:
                    cv = parallel ? rules.pre_oriented : rules.pre_disoriented;
                    ch = parallel ? rules.pre_disoriented : rules.pre_oriented;
                    break;
                case EventKind::CrossSing:
                    cv = parallel ? rules.sing_oriented : rules.sing_disoriented;
                    ch = parallel ? rules.sing_disoriented : rules.sing_oriented;
                    break;
                default: break;
            }
            coeff[r] = {cv, ch};
        }
    }

    static std::string key(std::size_t r, const std::vector<ArcEnd>& f) {
        std::string k = std::to_string(r);
        for (const ArcEnd& e : f) {
            k += '|';
            k += std::to_string(e.partner);
            k += ',';
            k += std::to_string(e.winding);
        }
        return k;
    }

    using Pair = std::pair<Laurent, Laurent>;

    Pair scale(Pair p, const Laurent& c) const { return {p.first * c, p.second * c}; }
    Pair plus(Pair x, const Pair& y) const {
        return {x.first + y.first, x.second + y.second};
    }

    // Splices out slots p-1 and p (0-based a, b = p-1, p) after connecting
    // their partners; returns the circle winding when the two slots close a
    // circle, or nothing.
    static std::optional<int> remove_pair(std::vector<ArcEnd>& f, int a) {
        int b = a + 1;
        std::optional<int> closed;
        if (f[a].partner == b) {
            closed = f[a].winding;
        } else {
            int pa = f[a].partner, pb = f[b].partner;
            f[pa].partner = pb;
            f[pb].partner = pa;
            int w = f[a].winding + f[b].winding;
            f[pa].winding = w;
            f[pb].winding = w;
        }
        f.erase(f.begin() + a, f.begin() + b + 1);
        for (ArcEnd& e : f)
            if (e.partner > b)
                e.partner -= 2;
        return closed;
    }

    static void insert_pair(std::vector<ArcEnd>& f, int at, bool fixed_slots) {
        for (ArcEnd& e : f)
            if (e.partner >= at) e.partner += 2;
        ArcEnd l, r;
        if (!fixed_slots) {
            l.partner = at + 1;
            r.partner = at;
        }
        f.insert(f.begin() + at, {l, r});
    }

    Pair close_factor(std::optional<int> closed, Pair sub) const {
        if (!closed) return sub;
        if (*closed == 0) return {sub.first * rules.delta, sub.second * rules.delta};
        int w = *closed < 0 ? -*closed : *closed;
        return {sub.first * rules.essential.pow(w), Laurent::zero()};
    }

    Pair eval(std::size_t r, std::vector<ArcEnd> f) {
        if (r == d.events.size()) return {Laurent::one(), Laurent::one()};
        std::string k = key(r, f);
        if (auto it = memo.find(k); it != memo.end()) {
            lru.splice(lru.begin(), lru, it->second.second);
            return it->second.first;
        }
        const MorseEvent& e = d.events[r];
        Pair out;
        switch (e.kind) {
            case EventKind::Cup: {
                insert_pair(f, e.pos - 1, static_cast<int>(r) == fixed_cup);
                out = eval(r + 1, std::move(f));
                break;
            }
            case EventKind::Cap: {
                if (static_cast<int>(r) == fixed_cap) {
                    f.erase(f.begin() + (e.pos - 1), f.begin() + (e.pos + 1));
                    for (ArcEnd& x : f)
                        if (x.partner > e.pos) x.partner -= 2;
                    out = eval(r + 1, std::move(f));
                    break;
                }
                auto closed = remove_pair(f, e.pos - 1);
                out = close_factor(closed, eval(r + 1, std::move(f)));
                break;
            }
            default: {
                if (hook_sign[r] != -3) {
                    // hook pair against the fixed strand: winding bookkeeping
                    // on the moving arc (immediately right of act), then skip
                    // both events.
                    std::vector<ArcEnd> g = f;
                    int mov = e.pos;  // 0-based slot right of act
                    if (g[mov].partner >= 0) {
                        g[mov].winding += hook_sign[r];
                        g[g[mov].partner].winding = g[mov].winding;
                    }
                    out = eval(r + 2, std::move(g));
                    break;
                }
                const auto& [cv, ch] = coeff[r];
                // vertical smoothing: nothing happens
                Pair v = scale(eval(r + 1, f), cv);
                // horizontal: cap then cup at the same position
                std::vector<ArcEnd> g = f;
                auto closed = remove_pair(g, e.pos - 1);
                insert_pair(g, e.pos - 1, false);
                Pair h = scale(close_factor(closed, eval(r + 1, std::move(g))), ch);
                out = plus(std::move(v), h);
                break;
            }
        }
        if (memo.size() >= kMemoCap) {
            memo.erase(lru.back());
            lru.pop_back();
        }
        lru.push_front(k);
        memo.emplace(std::move(k), std::make_pair(out, lru.begin()));
        return out;
    }
};

}  // namespace

Laurent pseudo_bracket(const MixedLinkDiagram& d, const SkeinRuleSet& rules) {
    if (d.events.empty()) return Laurent::one();
    auto violations = validate(d);
    if (!violations.empty())
        throw std::invalid_argument("invalid diagram: " + violations.front());
    Evaluator ev(d, rules);
    auto [all, zero] = ev.eval(0, {});
    // States whose circles all have winding zero carry the one-circle
    // normalization; winding states evaluate as written.
    return (all - zero) + zero.divide_exact(rules.delta);
}

Laurent writhe_normalizer(int writhe) {
    Laurent m = Laurent::monomial(writhe % 2 == 0 ? 1 : -1, 0, -3 * writhe);
    return m;
}

Laurent normalized_invariant(const MixedLinkDiagram& d, const SkeinRuleSet& rules) {
    return writhe_normalizer(diagram_writhe(d)) * pseudo_bracket(d, rules);
}

Laurent bracket_of_word(const BraidWord& w, const SkeinRuleSet& rules) {
    return pseudo_bracket(closure(w), rules);
}

Laurent normalized_invariant_of_word(const BraidWord& w, const SkeinRuleSet& rules) {
    return normalized_invariant(closure(w), rules);
}

// ---------------------------------------------------------------------------
// Validation battery
// ---------------------------------------------------------------------------

namespace {

bool words_equal_bracket(const SkeinRuleSet& r, Flavor f, int n, const std::string& a,
                         const std::string& b, int nb = -1) {
    BraidWord wa = parse_word(a, f, n);
    BraidWord wb = parse_word(b, f, nb < 0 ? n : nb);
    return bracket_of_word(wa, r) == bracket_of_word(wb, r);
}

bool words_equal_normalized(const SkeinRuleSet& r, Flavor f, int n, const std::string& a,
                            int nb, const std::string& b) {
    BraidWord wa = parse_word(a, f, n);
    BraidWord wb = parse_word(b, f, nb);
    return normalized_invariant_of_word(wa, r) == normalized_invariant_of_word(wb, r);
}

}  // namespace

std::optional<std::string> rule_violation(const SkeinRuleSet& rules) {
    const SkeinRuleSet& r = rules;
    if (r.delta != Laurent::parse("-A^2 - A^-2")) return "trivial-circle value";
    if (r.pos_oriented != A() || r.pos_disoriented != Ainv() || r.neg_oriented != Ainv() ||
        r.neg_disoriented != A())
        return "classical Kauffman pair (R1 normalization)";
    using F = Flavor;
    if (!words_equal_bracket(r, F::B_n, 2, "s1 s1^-1", "")) return "R2";
    if (!words_equal_bracket(r, F::B_n, 3, "s1 s2 s1", "s2 s1 s2")) return "R3";
    if (!words_equal_normalized(r, F::B_n, 2, "s1", 1, "")) return "R1 (real stabilization)";
    if (!words_equal_normalized(r, F::B_n, 2, "s1^-1", 1, "")) return "R1 (real stabilization)";
    if (!words_equal_bracket(r, F::PM_n, 2, "p1 s1", "s1 p1")) return "PR2";
    if (!words_equal_bracket(r, F::PM_n, 2, "p1 s1^-1", "s1^-1 p1")) return "PR2";
    if (!words_equal_bracket(r, F::PM_n, 3, "s1 s2 p1", "p2 s1 s2")) return "PR3";
    if (!words_equal_bracket(r, F::PM_n, 3, "s2 s1 p2", "p1 s2 s1")) return "PR3";
    if (!words_equal_normalized(r, F::PM_n, 2, "p1", 1, "")) return "PR1 (pseudo-stabilization)";
    if (!words_equal_bracket(r, F::PM_1n, 2, "t s1 t s1", "s1 t s1 t"))
        return "mixed move (t s1 t s1)";
    if (!words_equal_bracket(r, F::PM_1n, 2, "t s1 t p1", "p1 t s1 t"))
        return "mixed move (t s1 t p1)";
    if (!words_equal_bracket(r, F::SM_n, 2, "tau1 s1", "s1 tau1")) return "SR2 (singular)";
    if (!words_equal_bracket(r, F::SM_n, 3, "s1 s2 tau1", "tau2 s1 s2")) return "SR3 (singular)";
    if (!words_equal_bracket(r, F::SM_1n, 2, "t s1 t tau1", "tau1 t s1 t"))
        return "mixed move (t s1 t tau1)";
    // PR1 has no singular counterpart, so the singular table is pinned by
    // the mu-transport convention instead: tau evaluates like p.
    if (r.sing_oriented != r.pre_oriented || r.sing_disoriented != r.pre_disoriented)
        return "mu transport (singular reuses the pre-crossing coefficients)";
    return std::nullopt;
}

}  // namespace stbraid
