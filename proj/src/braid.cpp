#include "stbraid/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stbraid {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::B_n: return "B_n";
        case Flavor::PM_n: return "PM_n";
        case Flavor::SM_n: return "SM_n";
        case Flavor::B_1n: return "B_1n";
        case Flavor::PM_1n: return "PM_1n";
        case Flavor::SM_1n: return "SM_1n";
    }
    return "?";
}

std::optional<Flavor> flavor_from_name(const std::string& name) {
    for (Flavor f : {Flavor::B_n, Flavor::PM_n, Flavor::SM_n, Flavor::B_1n,
                     Flavor::PM_1n, Flavor::SM_1n})
        if (flavor_name(f) == name) return f;
    return std::nullopt;
}

bool letter_legal(const Letter& l, Flavor f, int n) {
    switch (l.kind) {
        case LetterKind::Sigma:
        case LetterKind::SigmaInv:
            return l.index >= 1 && l.index <= n - 1;
        case LetterKind::P:
            return is_pseudo(f) && l.index >= 1 && l.index <= n - 1;
        case LetterKind::Tau:
            return is_singular(f) && l.index >= 1 && l.index <= n - 1;
        case LetterKind::T:
        case LetterKind::TInv:
            return is_mixed(f);
    }
    return false;
}

std::string letter_str(const Letter& l) {
    switch (l.kind) {
        case LetterKind::Sigma: return "s" + std::to_string(l.index);
        case LetterKind::SigmaInv: return "s" + std::to_string(l.index) + "^-1";
        case LetterKind::P: return "p" + std::to_string(l.index);
        case LetterKind::Tau: return "tau" + std::to_string(l.index);
        case LetterKind::T: return "t";
        case LetterKind::TInv: return "t^-1";
    }
    return "?";
}

Letter letter_inverse(const Letter& l) {
    switch (l.kind) {
        case LetterKind::Sigma: return sigma_inv(l.index);
        case LetterKind::SigmaInv: return sigma(l.index);
        case LetterKind::T: return loop_t_inv();
        case LetterKind::TInv: return loop_t();
        default: throw std::invalid_argument("letter has no inverse in the monoid");
    }
}

BraidWord::BraidWord(Flavor f, int n_, std::vector<Letter> ls)
    : flavor(f), n(n_), letters(std::move(ls)) {
    if (n < 1) throw std::invalid_argument("strand count must be >= 1");
    for (const Letter& l : letters)
        if (!letter_legal(l, flavor, n))
            throw std::invalid_argument("letter " + letter_str(l) + " illegal for " +
                                        flavor_name(flavor) + " at n=" + std::to_string(n));
}

std::string BraidWord::str() const {
    std::string out;
    for (const Letter& l : letters) {
        if (!out.empty()) out += " ";
        out += letter_str(l);
    }
    return out;
}

std::string BraidWord::header_str() const {
    std::string out = "flavor=" + flavor_name(flavor) + " n=" + std::to_string(n) + ";";
    std::string w = str();
    if (!w.empty()) out += " " + w;
    return out;
}

namespace {

Letter parse_letter(const std::string& tok) {
    auto parse_index = [&](std::size_t from, std::size_t to) {
        if (from >= to) throw std::invalid_argument("missing index in token: " + tok);
        int idx = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw std::invalid_argument("unknown token: " + tok);
            idx = idx * 10 + (tok[i] - '0');
        }
        if (idx < 1) throw std::invalid_argument("index out of range in token: " + tok);
        return idx;
    };
    if (tok == "t") return loop_t();
    if (tok == "t^-1") return loop_t_inv();
    bool inv = false;
    std::string body = tok;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
        inv = true;
        body = body.substr(0, body.size() - 3);
    }
    if (body.size() >= 2 && body[0] == 's') {
        int idx = parse_index(1, body.size());
        return inv ? sigma_inv(idx) : sigma(idx);
    }
    if (body.size() >= 2 && body[0] == 'p' && !inv) return pre(parse_index(1, body.size()));
    if (body.size() >= 4 && body.substr(0, 3) == "tau" && !inv)
        return tau(parse_index(3, body.size()));
    throw std::invalid_argument("unknown token: " + tok);
}

}  // namespace

BraidWord parse_word(const std::string& text, Flavor flavor, int n) {
    std::istringstream is(text);
    std::vector<Letter> letters;
    std::string tok;
    while (is >> tok) letters.push_back(parse_letter(tok));
    return BraidWord(flavor, n, std::move(letters));
}

BraidWord parse_word_with_header(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("missing ';' after word header");
    std::istringstream hs(text.substr(0, semi));
    std::string kv;
    std::optional<Flavor> flavor;
    std::optional<int> n;
    while (hs >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad header field: " + kv);
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "flavor") {
            flavor = flavor_from_name(val);
            if (!flavor) throw std::invalid_argument("unknown flavor: " + val);
        } else if (key == "n") {
            n = std::stoi(val);
        } else {
            throw std::invalid_argument("unknown header field: " + key);
        }
    }
    if (!flavor || !n) throw std::invalid_argument("header must declare flavor and n");
    return parse_word(text.substr(semi + 1), *flavor, *n);
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<Letter> out;
    out.reserve(w.letters.size());
    auto cancels = [](const Letter& a, const Letter& b) {
        return (a.kind == LetterKind::Sigma && b.kind == LetterKind::SigmaInv &&
                a.index == b.index) ||
               (a.kind == LetterKind::SigmaInv && b.kind == LetterKind::Sigma &&
                a.index == b.index) ||
               (a.kind == LetterKind::T && b.kind == LetterKind::TInv) ||
               (a.kind == LetterKind::TInv && b.kind == LetterKind::T);
    };
    for (const Letter& l : w.letters) {
        if (!out.empty() && cancels(out.back(), l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return BraidWord(w.flavor, w.n, std::move(out));
}

WordStats stats(const BraidWord& w) {
    WordStats st;
    st.permutation.resize(w.n);
    std::iota(st.permutation.begin(), st.permutation.end(), 0);
    // position[k] = strand currently at position k; built by forward sweep.
    std::vector<int> at(w.n);
    std::iota(at.begin(), at.end(), 0);
    for (const Letter& l : w.letters) {
        switch (l.kind) {
            case LetterKind::Sigma: st.writhe += 1; break;
            case LetterKind::SigmaInv: st.writhe -= 1; break;
            case LetterKind::P:
            case LetterKind::Tau: st.pre_degree += 1; break;
            case LetterKind::T: st.t_winding += 1; break;
            case LetterKind::TInv: st.t_winding -= 1; break;
        }
        if (l.kind == LetterKind::Sigma || l.kind == LetterKind::SigmaInv ||
            l.kind == LetterKind::P || l.kind == LetterKind::Tau)
            std::swap(at[l.index - 1], at[l.index]);
    }
    for (int pos = 0; pos < w.n; ++pos) st.permutation[at[pos]] = pos;
    return st;
}

BraidWord include(const BraidWord& w, int m) {
    if (m < w.n) throw std::invalid_argument("inclusion target smaller than word");
    return BraidWord(w.flavor, m, w.letters);
}

namespace {

Flavor mu_target(Flavor f) {
    switch (f) {
        case Flavor::SM_n: return Flavor::PM_n;
        case Flavor::SM_1n: return Flavor::PM_1n;
        default: throw std::invalid_argument("mu expects a singular flavor");
    }
}

Flavor mu_inv_target(Flavor f) {
    switch (f) {
        case Flavor::PM_n: return Flavor::SM_n;
        case Flavor::PM_1n: return Flavor::SM_1n;
        default: throw std::invalid_argument("mu_inv expects a pseudo flavor");
    }
}

}  // namespace

BraidWord mu(const BraidWord& w) {
    std::vector<Letter> out = w.letters;
    for (Letter& l : out)
        if (l.kind == LetterKind::Tau) l.kind = LetterKind::P;
    return BraidWord(mu_target(w.flavor), w.n, std::move(out));
}

BraidWord mu_inv(const BraidWord& w) {
    std::vector<Letter> out = w.letters;
    for (Letter& l : out)
        if (l.kind == LetterKind::P) l.kind = LetterKind::Tau;
    return BraidWord(mu_inv_target(w.flavor), w.n, std::move(out));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.flavor != b.flavor || a.n != b.n)
        throw std::invalid_argument("concat requires same flavor and n");
    std::vector<Letter> ls = a.letters;
    ls.insert(ls.end(), b.letters.begin(), b.letters.end());
    return BraidWord(a.flavor, a.n, std::move(ls));
}

BraidWord inverse(const BraidWord& w) {
    std::vector<Letter> out;
    out.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.push_back(letter_inverse(*it));
    return BraidWord(w.flavor, w.n, std::move(out));
}

}  // namespace stbraid
