#include "stbraid/markov.hpp"

#include <random>
#include <sstream>

#include "stbraid/relations.hpp"

namespace stbraid {

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Conjugation: return "conjugation";
        case MoveKind::Commuting: return "commuting";
        case MoveKind::RealStabPos: return "real_stabilization_pos";
        case MoveKind::RealStabNeg: return "real_stabilization_neg";
        case MoveKind::PseudoStab: return "pseudo_stabilization";
        case MoveKind::LMoveOver: return "l_move_over";
        case MoveKind::LMoveUnder: return "l_move_under";
        case MoveKind::RelationRewrite: return "relation_rewrite";
    }
    return "?";
}

std::optional<MoveKind> move_kind_from_name(const std::string& name) {
    for (MoveKind k : {MoveKind::Conjugation, MoveKind::Commuting, MoveKind::RealStabPos,
                       MoveKind::RealStabNeg, MoveKind::PseudoStab, MoveKind::LMoveOver,
                       MoveKind::LMoveUnder, MoveKind::RelationRewrite})
        if (move_kind_name(k) == name) return k;
    return std::nullopt;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& a) {
    if (a.flavor != w.flavor || a.n != w.n)
        throw std::invalid_argument("conjugator must share flavor and n");
    for (const Letter& l : a.letters)
        if (l.kind == LetterKind::P || l.kind == LetterKind::Tau)
            throw std::invalid_argument("conjugator must lie in B_(1,)n (no p/tau letters)");
    return free_reduce(concat(concat(a, w), inverse(a)));
}

BraidWord commute(const BraidWord& w, std::size_t k) {
    if (k > w.letters.size()) throw std::invalid_argument("rotation amount exceeds length");
    std::vector<Letter> out(w.letters.begin() + k, w.letters.end());
    out.insert(out.end(), w.letters.begin(), w.letters.begin() + k);
    return BraidWord(w.flavor, w.n, std::move(out));
}

BraidWord stabilize(const BraidWord& w, int sign) {
    BraidWord out = include(w, w.n + 1);
    out.letters.push_back(sign >= 0 ? sigma(w.n) : sigma_inv(w.n));
    return out;
}

BraidWord pseudo_stabilize(const BraidWord& w) {
    if (!is_pseudo(w.flavor))
        throw std::invalid_argument("pseudo-stabilization requires a pseudo flavor");
    BraidWord out = include(w, w.n + 1);
    out.letters.push_back(pre(w.n));
    return out;
}

BraidWord l_move(const BraidWord& w, std::size_t gap, int strand, bool over) {
    if (gap > w.letters.size()) throw std::invalid_argument("gap out of range");
    if (strand < 1 || strand > w.n)
        throw std::invalid_argument("L-move arc must be on a moving strand");
    const int n = w.n;
    std::vector<Letter> block;
    for (int k = n; k > strand; --k) block.push_back(over ? sigma_inv(k) : sigma(k));
    block.push_back(over ? sigma(strand) : sigma_inv(strand));
    for (int k = strand + 1; k <= n; ++k) block.push_back(over ? sigma(k) : sigma_inv(k));

    std::vector<Letter> out(w.letters.begin(), w.letters.begin() + gap);
    out.insert(out.end(), block.begin(), block.end());
    out.insert(out.end(), w.letters.begin() + gap, w.letters.end());
    return BraidWord(w.flavor, n + 1, std::move(out));
}

std::optional<BraidWord> l_move_inverse(const BraidWord& w) {
    const int n = w.n;
    if (n < 2) return std::nullopt;
    // The block on an n-strand word uses indices s..n-1; strand n must be
    // untouched elsewhere.
    for (std::size_t pos = 0; pos < w.letters.size(); ++pos) {
        for (int s = 1; s <= n - 1; ++s) {
            for (bool over : {true, false}) {
                std::vector<Letter> block;
                for (int k = n - 1; k > s; --k) block.push_back(over ? sigma_inv(k) : sigma(k));
                block.push_back(over ? sigma(s) : sigma_inv(s));
                for (int k = s + 1; k <= n - 1; ++k) block.push_back(over ? sigma(k) : sigma_inv(k));
                if (pos + block.size() > w.letters.size()) continue;
                if (!std::equal(block.begin(), block.end(), w.letters.begin() + pos)) continue;
                bool touched = false;
                for (std::size_t i = 0; i < w.letters.size(); ++i) {
                    if (i >= pos && i < pos + block.size()) continue;
                    if (w.letters[i].index == n - 1 &&
                        w.letters[i].kind != LetterKind::T && w.letters[i].kind != LetterKind::TInv)
                        touched = true;
                }
                if (touched) continue;
                std::vector<Letter> out(w.letters.begin(), w.letters.begin() + pos);
                out.insert(out.end(), w.letters.begin() + pos + block.size(), w.letters.end());
                return BraidWord(w.flavor, n - 1, std::move(out));
            }
        }
    }
    return std::nullopt;
}

std::vector<MoveKind> default_move_kinds(Flavor f) {
    std::vector<MoveKind> kinds = {MoveKind::Conjugation, MoveKind::Commuting,
                                   MoveKind::RealStabPos, MoveKind::RealStabNeg,
                                   MoveKind::LMoveOver, MoveKind::LMoveUnder,
                                   MoveKind::RelationRewrite};
    if (is_pseudo(f)) kinds.insert(kinds.begin() + 4, MoveKind::PseudoStab);
    return kinds;
}

namespace {

std::string join_word(const BraidWord& w) { return w.str(); }

}  // namespace

BraidWord apply_move_log_entry(const BraidWord& w, const std::string& line) {
    std::istringstream is(line);
    std::string op;
    is >> op;
    if (op == "conj") {
        std::string rest;
        std::getline(is, rest);
        return conjugate(w, parse_word(rest, w.flavor, w.n));
    }
    if (op == "commute") {
        std::size_t k;
        is >> k;
        return commute(w, k);
    }
    if (op == "stab") {
        std::string sign;
        is >> sign;
        return stabilize(w, sign == "-" ? -1 : +1);
    }
    if (op == "pstab") return pseudo_stabilize(w);
    if (op == "lmove") {
        std::size_t gap;
        int strand;
        std::string side;
        is >> gap >> strand >> side;
        if (side == "inv") {
            auto r = l_move_inverse(w);
            if (!r) throw std::invalid_argument("no L-move block to remove");
            return *r;
        }
        return l_move(w, gap, strand, side == "o");
    }
    if (op == "rel") {
        std::string id, dir;
        std::size_t pos;
        is >> id >> pos >> dir;
        for (const Relation& rel : relation_set(w.flavor, w.n))
            if (rel.id == id) return apply_relation(w, pos, rel, dir == "f");
        throw std::invalid_argument("unknown relation id: " + id);
    }
    throw std::invalid_argument("unknown move op: " + op);
}

BraidWord apply_move_log(const BraidWord& w, const std::vector<MoveLogEntry>& log) {
    BraidWord cur = w;
    for (const MoveLogEntry& e : log) cur = apply_move_log_entry(cur, e.line);
    return cur;
}

WalkResult random_markov_walk(const BraidWord& w, int steps, std::uint64_t seed,
                              const WalkOptions& opts) {
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    std::vector<MoveKind> kinds = opts.allowed.empty() ? default_move_kinds(w.flavor)
                                                       : opts.allowed;
    if (is_singular(w.flavor) || (!is_pseudo(w.flavor)))
        std::erase(kinds, MoveKind::PseudoStab);
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) {
        return static_cast<std::size_t>(rng() % n);
    };

    WalkResult res{w, {}};
    for (int step = 0; step < steps; ++step) {
        MoveKind kind = kinds[pick(kinds.size())];
        std::string line;
        switch (kind) {
            case MoveKind::Conjugation: {
                std::vector<Letter> alphabet;
                for (int i = 1; i <= res.word.n - 1; ++i) {
                    alphabet.push_back(sigma(i));
                    alphabet.push_back(sigma_inv(i));
                }
                if (is_mixed(res.word.flavor)) {
                    alphabet.push_back(loop_t());
                    alphabet.push_back(loop_t_inv());
                }
                if (alphabet.empty()) {
                    line = "commute 0";
                    break;
                }
                std::size_t len = 1 + pick(2);
                BraidWord a(res.word.flavor, res.word.n);
                for (std::size_t i = 0; i < len; ++i)
                    a.letters.push_back(alphabet[pick(alphabet.size())]);
                line = "conj " + join_word(a);
                break;
            }
            case MoveKind::Commuting:
                line = "commute " + std::to_string(res.word.letters.empty()
                                                       ? 0
                                                       : pick(res.word.letters.size() + 1));
                break;
            case MoveKind::RealStabPos:
                line = res.word.n < opts.n_max ? "stab +" : "commute 0";
                break;
            case MoveKind::RealStabNeg:
                line = res.word.n < opts.n_max ? "stab -" : "commute 0";
                break;
            case MoveKind::PseudoStab:
                line = res.word.n < opts.n_max ? "pstab" : "commute 0";
                break;
            case MoveKind::LMoveOver:
            case MoveKind::LMoveUnder: {
                if (res.word.n >= opts.n_max) {
                    line = "commute 0";
                    break;
                }
                std::size_t gap = pick(res.word.letters.size() + 1);
                int strand = 1 + static_cast<int>(pick(res.word.n));
                line = "lmove " + std::to_string(gap) + " " + std::to_string(strand) + " " +
                       (kind == MoveKind::LMoveOver ? "o" : "u");
                break;
            }
            case MoveKind::RelationRewrite: {
                auto rels = relation_set(res.word.flavor, res.word.n);
                struct Hit {
                    std::string id;
                    std::size_t pos;
                    bool forward;
                };
                std::vector<Hit> hits;
                for (const Relation& rel : rels)
                    for (int dir = 0; dir < 2; ++dir)
                        for (std::size_t pos = 0; pos < res.word.letters.size() + 1; ++pos)
                            if (relation_matches(res.word, pos, rel, dir == 0))
                                hits.push_back({rel.id, pos, dir == 0});
                if (hits.empty()) {
                    line = "commute 0";
                    break;
                }
                const Hit& h = hits[pick(hits.size())];
                line = "rel " + h.id + " " + std::to_string(h.pos) + (h.forward ? " f" : " b");
                break;
            }
        }
        res.word = apply_move_log_entry(res.word, line);
        res.log.push_back({line});
    }
    return res;
}

}  // namespace stbraid
