#include "stbraid/span.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "stbraid/relations.hpp"

namespace stbraid {

std::string span_kind_name(SpanKind k) {
    switch (k) {
        case SpanKind::JonesS: return "JonesS";
        case SpanKind::C_d: return "C_d";
        case SpanKind::Sigma: return "Sigma";
        case SpanKind::SigmaPrime: return "SigmaPrime";
        case SpanKind::C_d_typeB: return "C_d_typeB";
        case SpanKind::C_d_prime_typeB: return "C_d_prime_typeB";
    }
    return "?";
}

std::optional<SpanKind> span_kind_from_name(const std::string& s) {
    for (SpanKind k : {SpanKind::JonesS, SpanKind::C_d, SpanKind::Sigma,
                       SpanKind::SigmaPrime, SpanKind::C_d_typeB,
                       SpanKind::C_d_prime_typeB})
        if (span_kind_name(k) == s) return k;
    return std::nullopt;
}

namespace {

std::vector<std::vector<int>> p_tuples(int n, int d) {
    std::vector<std::vector<int>> out{{}};
    for (int r = 0; r < d; ++r) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int i = 1; i <= n - 1; ++i) {
                auto s = t;
                s.push_back(i);
                next.push_back(std::move(s));
            }
        out = std::move(next);
    }
    return out;
}

// t_{i1}^{k1} ... t_{ir}^{kr} monomial words, 0 <= i1 < ... < ir <= n-1,
// nonzero exponents in [-k_max, k_max].
std::vector<BraidWord> t_monomials(Flavor f, int n, int k_max, bool primed) {
    std::vector<BraidWord> out{BraidWord(f, n)};
    for (int i = 0; i <= n - 1; ++i) {
        std::vector<BraidWord> next = out;  // exponent 0: factor absent
        for (int k = -k_max; k <= k_max; ++k) {
            if (k == 0) continue;
            BraidWord factor = t_element_power(i, k, primed, f, n);
            for (const BraidWord& m : out) next.push_back(concat(m, factor));
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<BraidWord> enumerate_spanning_set(SpanKind kind, int n, int d, int k_max) {
    std::vector<BraidWord> out;
    auto add_all = [&](std::vector<BraidWord> v) {
        for (BraidWord& w : v) out.push_back(std::move(w));
    };
    switch (kind) {
        case SpanKind::JonesS:
            add_all(jones_basis(Flavor::B_n, n));
            break;
        case SpanKind::C_d: {
            for (const auto& tup : p_tuples(n, d))
                for (const BraidWord& alpha : jones_basis(Flavor::PM_n, n)) {
                    std::vector<Letter> ls;
                    for (int i : tup) ls.push_back(pre(i));
                    ls.insert(ls.end(), alpha.letters.begin(), alpha.letters.end());
                    out.emplace_back(Flavor::PM_n, n, std::move(ls));
                }
            break;
        }
        case SpanKind::Sigma:
        case SpanKind::SigmaPrime: {
            bool primed = kind == SpanKind::SigmaPrime;
            for (const BraidWord& m : t_monomials(Flavor::B_1n, n, k_max, primed))
                for (const BraidWord& alpha : jones_basis(Flavor::B_1n, n))
                    out.push_back(free_reduce(concat(m, alpha)));
            break;
        }
        case SpanKind::C_d_typeB:
        case SpanKind::C_d_prime_typeB: {
            bool primed = kind == SpanKind::C_d_prime_typeB;
            for (const BraidWord& m : t_monomials(Flavor::PM_1n, n, k_max, primed))
                for (const BraidWord& sig :
                     enumerate_spanning_set(SpanKind::C_d, n, d, 0)) {
                    BraidWord s2(Flavor::PM_1n, n, sig.letters);
                    out.push_back(free_reduce(concat(m, s2)));
                }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool supported_on(const AlgebraElement& e, const std::vector<BraidWord>& candidates) {
    for (const auto& [w, c] : e.terms)
        if (!std::binary_search(candidates.begin(), candidates.end(), w)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

namespace {

Laurent q() { return Laurent::var_q(); }
Laurent q_inv() { return Laurent::monomial(1, 3, -1); }

std::string word_text(const BraidWord& w) { return w.letters.empty() ? "1" : w.str(); }

BraidWord word_from_text(const std::string& text, Flavor f, int n) {
    if (text == "1") return BraidWord(f, n);
    return parse_word(text, f, n);
}

struct Step {
    std::string line;
};

// Applies one certificate step to the element; words are free-reduced after
// every step on both the emitting and replaying side.
void apply_step(AlgebraElement& e, const std::string& line, Flavor f, int n) {
    std::istringstream is(line);
    std::string op;
    is >> op;
    auto read_word = [&](std::istringstream& s) {
        std::string rest, colon;
        s >> colon;
        if (colon != ":") throw std::invalid_argument("certificate step missing ':'");
        std::getline(s, rest);
        rest.erase(0, rest.find_first_not_of(' '));
        return word_from_text(rest, f, n);
    };
    auto take = [&](const BraidWord& w) {
        auto it = e.terms.find(w);
        if (it == e.terms.end())
            throw std::invalid_argument("certificate names a missing word: " + word_text(w));
        Laurent c = it->second;
        e.terms.erase(it);
        return c;
    };
    if (op == "rel") {
        std::string id, dir;
        std::size_t pos;
        is >> id >> pos >> dir;
        BraidWord w = read_word(is);
        Laurent c = take(w);
        for (const Relation& rel : relation_set(f, n))
            if (rel.id == id) {
                e.add(free_reduce(apply_relation(w, pos, rel, dir == "f")), c);
                return;
            }
        throw std::invalid_argument("unknown relation id: " + id);
    }
    if (op == "quad") {
        std::size_t pos;
        is >> pos;
        BraidWord w = read_word(is);
        Laurent c = take(w);
        if (pos + 1 >= w.letters.size() || w.letters[pos].kind != LetterKind::Sigma ||
            w.letters[pos + 1] != w.letters[pos])
            throw std::invalid_argument("quad step does not match g_i g_i");
        std::vector<Letter> one(w.letters.begin(), w.letters.end());
        one.erase(one.begin() + pos + 1);
        std::vector<Letter> none(one.begin(), one.end());
        none.erase(none.begin() + pos);
        e.add(free_reduce(BraidWord(f, n, std::move(one))), c * (q() - Laurent::one()));
        e.add(free_reduce(BraidWord(f, n, std::move(none))), c * q());
        return;
    }
    if (op == "invq") {
        std::size_t pos;
        is >> pos;
        BraidWord w = read_word(is);
        Laurent c = take(w);
        if (pos >= w.letters.size() || w.letters[pos].kind != LetterKind::SigmaInv)
            throw std::invalid_argument("invq step does not match g^-1");
        std::vector<Letter> repl = w.letters;
        repl[pos] = sigma(repl[pos].index);
        std::vector<Letter> del = w.letters;
        del.erase(del.begin() + pos);
        e.add(free_reduce(BraidWord(f, n, std::move(repl))), c * q_inv());
        e.add(free_reduce(BraidWord(f, n, std::move(del))), c * (q_inv() - Laurent::one()));
        return;
    }
    if (op == "exp") {
        std::size_t pos;
        std::string tok;
        is >> pos >> tok;
        BraidWord w = read_word(is);
        Laurent c = take(w);
        std::vector<Letter> pair;
        if (tok == "t+")
            pair = {loop_t(), loop_t_inv()};
        else if (tok == "t-")
            pair = {loop_t_inv(), loop_t()};
        else if (tok.size() >= 2 && tok[0] == 's') {
            bool plus = tok.back() == '+';
            int idx = std::stoi(tok.substr(1, tok.size() - 2));
            pair = plus ? std::vector<Letter>{sigma(idx), sigma_inv(idx)}
                        : std::vector<Letter>{sigma_inv(idx), sigma(idx)};
        } else {
            throw std::invalid_argument("bad exp token: " + tok);
        }
        std::vector<Letter> ls = w.letters;
        if (pos > ls.size()) throw std::invalid_argument("exp position out of range");
        ls.insert(ls.begin() + pos, pair.begin(), pair.end());
        e.add(BraidWord(f, n, std::move(ls)), c);
        return;
    }
    throw std::invalid_argument("unknown certificate op: " + op);
}

}  // namespace

AlgebraElement replay_certificate(const AlgebraElement& start,
                                  const std::string& certificate) {
    if (start.terms.empty()) return start;
    Flavor f = start.terms.begin()->first.flavor;
    int n = start.terms.begin()->first.n;
    AlgebraElement e = start;
    std::istringstream is(certificate);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        apply_step(e, line, f, n);
    }
    return e;
}

// ---------------------------------------------------------------------------
// Type-A closure certificates (Matsumoto chains between reduced words)
// ---------------------------------------------------------------------------

namespace {

// BFS in the graph of positive words connected by braid/far-commutation
// moves; returns step lines transforming `from` into a word satisfying
// `accept`. The step text names the ambient word prefix+w+suffix; BFS
// acceptance is checked on pop, so no intermediate node of the returned
// chain is itself accepted.
std::optional<std::pair<std::vector<std::string>, std::vector<Letter>>> tits_chain(
    const std::vector<Letter>& from, int n, Flavor flavor,
    const std::function<bool(const std::vector<Letter>&)>& accept,
    const std::vector<Letter>& prefix, const std::vector<Letter>& suffix) {
    auto rels = relation_set(Flavor::B_n, n);
    std::map<std::vector<Letter>, std::pair<std::vector<Letter>, std::string>> parent;
    std::deque<std::vector<Letter>> queue{from};
    parent[from] = {from, ""};
    auto emit = [&](const std::vector<Letter>& end) {
        std::vector<std::string> lines;
        std::vector<Letter> cur = end;
        while (parent[cur].second != "") {
            lines.push_back(parent[cur].second);
            cur = parent[cur].first;
        }
        std::reverse(lines.begin(), lines.end());
        return std::make_pair(lines, end);
    };
    while (!queue.empty()) {
        auto w = queue.front();
        queue.pop_front();
        if (accept(w)) return emit(w);
        BraidWord bw(Flavor::B_n, n, w);
        for (const Relation& rel : rels) {
            for (int dir = 0; dir < 2; ++dir) {
                const auto& pat = dir == 0 ? rel.lhs : rel.rhs;
                if (pat.size() > w.size()) continue;
                for (std::size_t pos = 0; pos + pat.size() <= w.size(); ++pos) {
                    if (!relation_matches(bw, pos, rel, dir == 0)) continue;
                    BraidWord nw = apply_relation(bw, pos, rel, dir == 0);
                    if (parent.count(nw.letters)) continue;
                    std::vector<Letter> full = prefix;
                    full.insert(full.end(), w.begin(), w.end());
                    full.insert(full.end(), suffix.begin(), suffix.end());
                    std::string line =
                        "rel " + rel.id + " " + std::to_string(pos + prefix.size()) +
                        " " + (dir == 0 ? "f" : "b") + " : " +
                        word_text(BraidWord(flavor, n, full));
                    parent[nw.letters] = {w, line};
                    queue.push_back(nw.letters);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::string SpanRow::table_line(int index) const {
    std::ostringstream os;
    os << "[" << index << "] " << member << " * " << generator << " | " << status
       << " | " << chain_length << " | "
       << (certificate.empty() ? "-" : "cert-" + std::to_string(index) + ".txt");
    if (!note.empty()) os << " | " << note;
    return os.str();
}

bool SpanReport::all_success() const {
    for (const SpanRow& r : rows)
        if (r.status != "success") return false;
    return true;
}

std::string SpanReport::str() const {
    std::ostringstream os;
    os << "span report kind=" << span_kind_name(kind) << " n=" << n << " d=" << d
       << " k_max=" << k_max << "\n";
    os << "product | status | chain-length | certificate-file\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
        os << rows[i].table_line(static_cast<int>(i)) << "\n";
    int succ = 0;
    for (const SpanRow& r : rows) succ += r.status == "success";
    os << "summary: " << succ << "/" << rows.size() << " success";
    if (succ != static_cast<int>(rows.size()))
        os << " (failures are inconclusive: bounded search exhausted, not "
              "counterexamples)";
    os << "\n";
    return os.str();
}

SpanReport span_closure_typeA(int n, int d) {
    SpanReport rep;
    rep.kind = SpanKind::C_d;
    rep.n = n;
    rep.d = d;
    rep.k_max = 0;
    const Flavor f = Flavor::PM_n;
    auto members = enumerate_spanning_set(SpanKind::C_d, n, d, 0);
    auto targets = members;

    for (const BraidWord& m : members) {
        std::size_t block = 0;
        while (block < m.letters.size() && m.letters[block].kind == LetterKind::P) ++block;
        std::vector<Letter> prefix(m.letters.begin(), m.letters.begin() + block);
        std::vector<Letter> alpha(m.letters.begin() + block, m.letters.end());

        for (int j = 1; j <= n - 1; ++j) {
            for (bool inv : {false, true}) {
                SpanRow row;
                row.member = word_text(m);
                row.generator = inv ? "s" + std::to_string(j) + "^-1"
                                    : "s" + std::to_string(j);
                std::vector<Letter> prod_ls = m.letters;
                prod_ls.push_back(inv ? sigma_inv(j) : sigma(j));
                AlgebraElement start = AlgebraElement::word(BraidWord(f, n, prod_ls));

                std::vector<std::string> steps;
                // Occupancy-list convention, matching the T-basis machinery.
                auto perm_of = [&](const std::vector<Letter>& t) {
                    Perm at(n);
                    std::iota(at.begin(), at.end(), 0);
                    for (const Letter& l : t) std::swap(at[l.index - 1], at[l.index]);
                    return at;
                };
                // Normalize a positive tail onto the Jones spelling, splitting
                // at the quadratic when the word is unreduced (Tits' theorem
                // guarantees a braid-equivalent spelling with a square).
                std::function<bool(std::vector<Letter>, std::size_t)> normalize =
                    [&](std::vector<Letter> t, std::size_t depth) -> bool {
                    if (depth > 8) return false;
                    Perm perm = perm_of(t);
                    if (static_cast<int>(t.size()) == perm_length(perm)) {
                        auto target = jones_word(perm, Flavor::B_n, n).letters;
                        auto chain = tits_chain(
                            t, n, f,
                            [&](const std::vector<Letter>& w) { return w == target; },
                            prefix, {});
                        if (!chain) return false;
                        for (auto& l : chain->first) steps.push_back(l);
                        return true;
                    }
                    auto chain = tits_chain(
                        t, n, f,
                        [&](const std::vector<Letter>& w) {
                            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                                if (w[i] == w[i + 1]) return true;
                            return false;
                        },
                        prefix, {});
                    if (!chain) return false;
                    for (auto& l : chain->first) steps.push_back(l);
                    auto w = chain->second;
                    std::size_t dup = 0;
                    for (std::size_t i = 0; i + 1 < w.size(); ++i)
                        if (w[i] == w[i + 1]) {
                            dup = i;
                            break;
                        }
                    std::vector<Letter> full = prefix;
                    full.insert(full.end(), w.begin(), w.end());
                    steps.push_back("quad " + std::to_string(dup + block) + " : " +
                                    word_text(BraidWord(f, n, full)));
                    std::vector<Letter> one = w;
                    one.erase(one.begin() + dup + 1);
                    std::vector<Letter> none = one;
                    none.erase(none.begin() + dup);
                    return normalize(one, depth + 1) && normalize(none, depth + 1);
                };

                bool ok;
                if (!inv) {
                    std::vector<Letter> tail = alpha;
                    tail.push_back(sigma(j));
                    ok = normalize(tail, 0);
                } else if (!alpha.empty() && alpha.back() == sigma(j)) {
                    // the product free-reduces into the member set directly
                    ok = true;
                } else {
                    Perm u = perm_of(alpha);
                    Perm us = u;
                    std::swap(us[j - 1], us[j]);
                    if (perm_length(us) < perm_length(u)) {
                        // chain alpha to a spelling ending in g_j; the final
                        // rel application free-cancels the g_j g_j^-1 pair
                        auto chain = tits_chain(
                            alpha, n, f,
                            [&](const std::vector<Letter>& w) {
                                return !w.empty() && w.back() == sigma(j);
                            },
                            prefix, {sigma_inv(j)});
                        ok = chain.has_value();
                        if (ok) {
                            for (auto& l : chain->first) steps.push_back(l);
                            std::vector<Letter> beta = chain->second;
                            beta.pop_back();
                            ok = normalize(beta, 0);
                        }
                    } else {
                        // no cancellation available: eliminate the inverse
                        std::vector<Letter> full = m.letters;
                        full.push_back(sigma_inv(j));
                        steps.push_back("invq " + std::to_string(m.letters.size()) +
                                        " : " + word_text(BraidWord(f, n, full)));
                        std::vector<Letter> tail = alpha;
                        tail.push_back(sigma(j));
                        ok = normalize(tail, 0);
                    }
                }
                if (ok) {
                    std::string cert;
                    for (const std::string& s : steps) cert += s + "\n";
                    AlgebraElement res = replay_certificate(start, cert);
                    if (!supported_on(res, targets)) {
                        row.status = "inconclusive";
                        row.note = "certificate verification failed";
                    } else {
                        row.status = "success";
                        row.chain_length = static_cast<int>(steps.size());
                        row.certificate = cert;
                    }
                } else {
                    row.status = "inconclusive";
                    row.note = "normalization chain not found";
                }
                rep.rows.push_back(std::move(row));
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Bounded rewriting search
// ---------------------------------------------------------------------------

namespace {

std::string element_key(const AlgebraElement& e) {
    std::string k;
    for (const auto& [w, c] : e.terms) {
        k += w.str();
        k += '=';
        k += c.str();
        k += ';';
    }
    return k;
}

std::size_t total_letters(const AlgebraElement& e) {
    std::size_t n = 0;
    for (const auto& [w, c] : e.terms) n += w.letters.size();
    return n;
}

}  // namespace

SpanReport span_experiment(SpanKind kind, int n, int d, int k_max, int length_bound,
                           int state_budget) {
    SpanReport rep;
    rep.kind = kind;
    rep.n = n;
    rep.d = d;
    rep.k_max = k_max;

    const bool typeB = kind == SpanKind::Sigma || kind == SpanKind::SigmaPrime ||
                       kind == SpanKind::C_d_typeB || kind == SpanKind::C_d_prime_typeB;
    const bool pseudo = kind == SpanKind::C_d || kind == SpanKind::C_d_typeB ||
                        kind == SpanKind::C_d_prime_typeB;
    Flavor f = typeB ? (pseudo ? Flavor::PM_1n : Flavor::B_1n)
                     : (pseudo ? Flavor::PM_n : Flavor::B_n);

    auto members = enumerate_spanning_set(kind, n, d, k_max);

    std::vector<std::pair<std::string, Letter>> gens;
    for (int j = 1; j <= n - 1; ++j) {
        gens.push_back({"s" + std::to_string(j), sigma(j)});
        gens.push_back({"s" + std::to_string(j) + "^-1", sigma_inv(j)});
        if (pseudo) gens.push_back({"p" + std::to_string(j), pre(j)});
    }
    if (typeB) {
        gens.push_back({"t", loop_t()});
        gens.push_back({"t^-1", loop_t_inv()});
    }

    auto rels = relation_set(f, n);

    for (const BraidWord& m : members) {
        for (const auto& [gname, gletter] : gens) {
            SpanRow row;
            row.member = word_text(m);
            row.generator = gname;
            int dprod = d + (gletter.kind == LetterKind::P ? 1 : 0);
            auto targets = enumerate_spanning_set(kind, n, dprod, k_max);

            BraidWord product = free_reduce(concat(m, BraidWord(f, n, {gletter})));
            AlgebraElement start = AlgebraElement::word(product);

            std::map<std::string, std::pair<std::string, std::string>> parent;
            std::deque<AlgebraElement> queue{start};
            parent[element_key(start)] = {"", ""};
            int visited = 0;
            std::optional<AlgebraElement> found;
            if (supported_on(start, targets)) found = start;
            while (!queue.empty() && !found && visited < state_budget) {
                AlgebraElement cur = queue.front();
                queue.pop_front();
                ++visited;
                std::string ck = element_key(cur);
                auto try_push = [&](AlgebraElement nx, std::string line) {
                    if (static_cast<int>(total_letters(nx)) >
                        length_bound * std::max<std::size_t>(nx.terms.size(), 1))
                        return;
                    if (nx.terms.size() > 8) return;
                    std::string k = element_key(nx);
                    if (parent.count(k)) return;
                    parent[k] = {ck, std::move(line)};
                    if (supported_on(nx, targets)) {
                        found = nx;
                        return;
                    }
                    queue.push_back(std::move(nx));
                };
                for (const auto& [w, c] : cur.terms) {
                    if (found) break;
                    BraidWord bw = w;
                    // relation moves
                    for (const Relation& rel : rels) {
                        for (int dir = 0; dir < 2 && !found; ++dir) {
                            const auto& pat = dir == 0 ? rel.lhs : rel.rhs;
                            if (pat.size() > bw.letters.size()) continue;
                            for (std::size_t pos = 0;
                                 pos + pat.size() <= bw.letters.size(); ++pos) {
                                if (!relation_matches(bw, pos, rel, dir == 0)) continue;
                                AlgebraElement nx = cur;
                                Laurent cc = nx.terms.at(bw);
                                nx.terms.erase(bw);
                                nx.add(free_reduce(apply_relation(bw, pos, rel, dir == 0)),
                                       cc);
                                try_push(std::move(nx),
                                         "rel " + rel.id + " " + std::to_string(pos) +
                                             (dir == 0 ? " f" : " b") + " : " +
                                             word_text(bw));
                            }
                        }
                        if (found) break;
                    }
                    if (found) break;
                    // quadratic expansion and inverse elimination
                    for (std::size_t pos = 0; pos < bw.letters.size() && !found; ++pos) {
                        if (pos + 1 < bw.letters.size() &&
                            bw.letters[pos].kind == LetterKind::Sigma &&
                            bw.letters[pos + 1] == bw.letters[pos]) {
                            AlgebraElement nx = cur;
                            Laurent cc = nx.terms.at(bw);
                            nx.terms.erase(bw);
                            std::vector<Letter> one = bw.letters;
                            one.erase(one.begin() + pos + 1);
                            std::vector<Letter> none = one;
                            none.erase(none.begin() + pos);
                            nx.add(free_reduce(BraidWord(f, n, std::move(one))),
                                   cc * (q() - Laurent::one()));
                            nx.add(free_reduce(BraidWord(f, n, std::move(none))),
                                   cc * q());
                            try_push(std::move(nx),
                                     "quad " + std::to_string(pos) + " : " + word_text(bw));
                        }
                        if (bw.letters[pos].kind == LetterKind::SigmaInv) {
                            AlgebraElement nx = cur;
                            Laurent cc = nx.terms.at(bw);
                            nx.terms.erase(bw);
                            std::vector<Letter> repl = bw.letters;
                            repl[pos] = sigma(repl[pos].index);
                            std::vector<Letter> del = bw.letters;
                            del.erase(del.begin() + pos);
                            nx.add(free_reduce(BraidWord(f, n, std::move(repl))),
                                   cc * q_inv());
                            nx.add(free_reduce(BraidWord(f, n, std::move(del))),
                                   cc * (q_inv() - Laurent::one()));
                            try_push(std::move(nx),
                                     "invq " + std::to_string(pos) + " : " + word_text(bw));
                        }
                    }
                    if (found) break;
                    // free expansions
                    std::vector<std::string> toks;
                    for (int j = 1; j <= n - 1; ++j) {
                        toks.push_back("s" + std::to_string(j) + "+");
                        toks.push_back("s" + std::to_string(j) + "-");
                    }
                    if (typeB) {
                        toks.push_back("t+");
                        toks.push_back("t-");
                    }
                    for (std::size_t pos = 0; pos <= bw.letters.size() && !found; ++pos) {
                        for (const std::string& tok : toks) {
                            AlgebraElement nx = cur;
                            Laurent cc = nx.terms.at(bw);
                            nx.terms.erase(bw);
                            std::vector<Letter> pair;
                            if (tok == "t+")
                                pair = {loop_t(), loop_t_inv()};
                            else if (tok == "t-")
                                pair = {loop_t_inv(), loop_t()};
                            else {
                                int idx = std::stoi(tok.substr(1, tok.size() - 2));
                                pair = tok.back() == '+'
                                           ? std::vector<Letter>{sigma(idx), sigma_inv(idx)}
                                           : std::vector<Letter>{sigma_inv(idx), sigma(idx)};
                            }
                            std::vector<Letter> ls = bw.letters;
                            ls.insert(ls.begin() + pos, pair.begin(), pair.end());
                            nx.add(BraidWord(f, n, std::move(ls)), cc);
                            try_push(std::move(nx), "exp " + std::to_string(pos) + " " +
                                                        tok + " : " + word_text(bw));
                            if (found) break;
                        }
                    }
                }
            }
            if (found) {
                std::vector<std::string> lines;
                std::string k = element_key(*found);
                while (!parent[k].second.empty()) {
                    lines.push_back(parent[k].second);
                    k = parent[k].first;
                }
                std::reverse(lines.begin(), lines.end());
                row.status = "success";
                row.chain_length = static_cast<int>(lines.size());
                for (const std::string& l : lines) row.certificate += l + "\n";
            } else {
                row.status = "inconclusive";
                row.note = "search exhausted (" + std::to_string(visited) + " states)";
            }
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

}  // namespace stbraid
