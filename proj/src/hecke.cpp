#include "stbraid/hecke.hpp"

#include <algorithm>
#include <numeric>

namespace stbraid {

AlgebraElement AlgebraElement::word(const BraidWord& w, Laurent c) {
    AlgebraElement e;
    e.add(free_reduce(w), c);
    return e;
}

void AlgebraElement::add(const BraidWord& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    AlgebraElement out = *this;
    for (const auto& [w, c] : rhs.terms) out.add(w, c);
    return out;
}

AlgebraElement AlgebraElement::operator*(const Laurent& c) const {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& [w, k] : terms) out.terms.emplace(w, k * c);
    return out;
}

std::string AlgebraElement::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*[" + (w.letters.empty() ? "1" : w.str()) + "]";
    }
    return out;
}

int perm_length(const Perm& u) {
    int inv = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] > u[j]) ++inv;
    return inv;
}

std::vector<int> jones_indices(const Perm& u) {
    // Insertion-sort shape: u = c_1 c_2 ... c_{n-1} with
    // c_i in {1, s_i, s_i s_{i-1}, ..., s_i...s_1}; the descending runs have
    // strictly increasing leading indices, the Jones basis shape.
    const int n = static_cast<int>(u.size());
    Perm v = u;
    std::vector<std::vector<int>> runs(n);
    // Work backwards: bring n-1 to its place, then n-2, ...
    for (int big = n - 1; big >= 1; --big) {
        int pos = static_cast<int>(std::find(v.begin(), v.end(), big) - v.begin());
        // v = c * v' with c moving `big` rightwards to its slot via a run
        // g_big-style; we instead peel from the left: move the value to
        // position `big` by adjacent transpositions acting on positions.
        std::vector<int> run;
        for (int p = pos; p < big; ++p) {
            run.push_back(p + 1);  // 1-based generator index
            std::swap(v[p], v[p + 1]);
        }
        // run built ascending; the Jones run is descending from the top:
        // s_{i} s_{i-1} ... corresponds to moving the value leftwards. We
        // record descending-run form below.
        if (!run.empty()) {
            std::reverse(run.begin(), run.end());
            runs[big] = run;
        }
    }
    std::vector<int> out;
    for (int big = 1; big <= n - 1; ++big)
        for (int idx : runs[big]) out.push_back(idx);
    return out;
}

BraidWord jones_word(const Perm& u, Flavor f, int n) {
    std::vector<Letter> ls;
    for (int idx : jones_indices(u)) ls.push_back(sigma(idx));
    return BraidWord(f, n, std::move(ls));
}

std::vector<BraidWord> jones_basis(Flavor f, int n) {
    Perm u(n);
    std::iota(u.begin(), u.end(), 0);
    std::vector<BraidWord> out;
    do {
        out.push_back(jones_word(u, f, n));
    } while (std::next_permutation(u.begin(), u.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Laurent q() { return Laurent::var_q(); }
Laurent q_inv() { return Laurent::monomial(1, 3, -1); }

// T-basis over permutations with Laurent coefficients.
using TElem = std::map<Perm, Laurent>;

void t_add(TElem& e, const Perm& u, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = e.find(u);
    if (it == e.end())
        e.emplace(u, c);
    else {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

TElem t_mul_gen(const TElem& e, int i, bool inverse) {
    TElem out;
    for (const auto& [u, c] : e) {
        Perm us = u;
        std::swap(us[i - 1], us[i]);
        bool lengthens = perm_length(us) > perm_length(u);
        if (!inverse) {
            if (lengthens) {
                t_add(out, us, c);
            } else {
                // T_u T_i = (q-1) T_u + q T_{us}
                t_add(out, u, c * (q() - Laurent::one()));
                t_add(out, us, c * q());
            }
        } else {
            // T_i^{ -1} = q^-1 T_i - (1 - q^-1)
            if (lengthens) {
                t_add(out, us, c * q_inv());
                t_add(out, u, c * (q_inv() - Laurent::one()));
            } else {
                // T_u T_i^-1 = T_{us} when us is shorter
                t_add(out, us, c);
            }
        }
    }
    return out;
}

}  // namespace

AlgebraElement reduce_typeA(const AlgebraElement& e) {
    AlgebraElement out;
    for (const auto& [w, c] : e.terms) {
        Perm id(w.n);
        std::iota(id.begin(), id.end(), 0);
        TElem acc{{id, Laurent::one()}};
        for (const Letter& l : w.letters) {
            if (l.kind == LetterKind::Sigma)
                acc = t_mul_gen(acc, l.index, false);
            else if (l.kind == LetterKind::SigmaInv)
                acc = t_mul_gen(acc, l.index, true);
            else
                throw std::invalid_argument("reduce_typeA expects g letters only");
        }
        for (const auto& [u, k] : acc) out.add(jones_word(u, w.flavor, w.n), c * k);
    }
    return out;
}

namespace {

// Moves the p letter at position j as far left as possible using the
// Def-2.2 moves; returns the new word (p letters never move past p letters).
std::vector<Letter> push_p_left(std::vector<Letter> ls, std::size_t j) {
    auto is_g = [](const Letter& l) {
        return l.kind == LetterKind::Sigma || l.kind == LetterKind::SigmaInv;
    };
    while (j > 0) {
        const Letter left = ls[j - 1];
        Letter& p = ls[j];
        if (is_g(left) &&
            (left.index == p.index || std::abs(left.index - p.index) >= 2)) {
            std::swap(ls[j - 1], ls[j]);
            --j;
            continue;
        }
        if (j >= 2 && ls[j - 2].kind == LetterKind::Sigma &&
            ls[j - 1].kind == LetterKind::Sigma) {
            int a = ls[j - 2].index, b = ls[j - 1].index;
            if (b == a + 1 && p.index == a) {
                // g_a g_{a+1} p_a -> p_{a+1} g_a g_{a+1}
                ls[j] = ls[j - 1];
                ls[j - 1] = ls[j - 2];
                ls[j - 2] = pre(a + 1);
                j -= 2;
                continue;
            }
            if (a == b + 1 && p.index == a) {
                // g_{b+1} g_b p_{b+1} -> p_b g_{b+1} g_b
                ls[j] = ls[j - 1];
                ls[j - 1] = ls[j - 2];
                ls[j - 2] = pre(b);
                j -= 2;
                continue;
            }
        }
        break;
    }
    return ls;
}

}  // namespace

AlgebraElement reduce_pseudo_typeA(const AlgebraElement& e) {
    AlgebraElement out;
    for (const auto& [w0, c] : e.terms) {
        const bool singular = is_singular(w0.flavor);
        BraidWord w = singular ? mu(w0) : w0;
        // Push every p leftwards, leftmost first.
        std::vector<Letter> ls = w.letters;
        for (std::size_t j = 0; j < ls.size(); ++j)
            if (ls[j].kind == LetterKind::P) ls = push_p_left(std::move(ls), j);
        // Reduce the g-tail right of the last p over the Jones basis.
        std::size_t tail = 0;
        for (std::size_t j = 0; j < ls.size(); ++j)
            if (ls[j].kind == LetterKind::P) tail = j + 1;
        BraidWord prefix(w.flavor, w.n,
                         std::vector<Letter>(ls.begin(), ls.begin() + tail));
        BraidWord rest(w.flavor, w.n, std::vector<Letter>(ls.begin() + tail, ls.end()));
        AlgebraElement tail_red = reduce_typeA(AlgebraElement::word(rest));
        for (const auto& [tw, tc] : tail_red.terms) {
            BraidWord full = concat(prefix, tw);
            if (singular) full = mu_inv(full);
            out.add(full, c * tc);
        }
    }
    return out;
}

BraidWord t_element(int i, bool primed, Flavor f, int n) {
    if (i < 0 || i > n - 1) throw std::out_of_range("t-element index");
    std::vector<Letter> ls;
    for (int k = i; k >= 1; --k) ls.push_back(sigma(k));
    ls.push_back(loop_t());
    for (int k = 1; k <= i; ++k) ls.push_back(primed ? sigma_inv(k) : sigma(k));
    return BraidWord(f, n, std::move(ls));
}

BraidWord t_element_power(int i, int k, bool primed, Flavor f, int n) {
    BraidWord base = t_element(i, primed, f, n);
    if (k >= 0) {
        BraidWord out(f, n);
        for (int r = 0; r < k; ++r) out = concat(out, base);
        return free_reduce(out);
    }
    BraidWord binv = inverse(base);
    BraidWord out(f, n);
    for (int r = 0; r < -k; ++r) out = concat(out, binv);
    return free_reduce(out);
}

Laurent elementary_symmetric(const std::vector<Laurent>& u, int k) {
    const int n = static_cast<int>(u.size());
    if (k < 0 || k > n) throw std::out_of_range("elementary symmetric index");
    // dp over prefix products
    std::vector<Laurent> dp(k + 1, Laurent::zero(u.empty() ? 0 : u[0].cyclotomic()));
    int cyc = u.empty() ? 0 : u[0].cyclotomic();
    dp[0] = Laurent::one(cyc);
    for (const Laurent& x : u)
        for (int j = std::min<int>(k, n); j >= 1; --j) dp[j] += dp[j - 1] * x;
    return dp[k];
}

std::vector<Laurent> basic_typeB_parameters(int cyclotomic) {
    return {Laurent::var_Q(cyclotomic), Laurent::constant(-1, cyclotomic)};
}

AlgebraElement cyclotomic_reduce(const AlgebraElement& e, int c,
                                 const std::vector<Laurent>& u) {
    if (c < 1) throw std::invalid_argument("cyclotomic degree must be >= 1");
    if (static_cast<int>(u.size()) != c)
        throw std::invalid_argument("need exactly c parameters u_1..u_c");
    const int cyc = u[0].cyclotomic();
    // t^c = sum_{k=1..c} (-1)^{k-1} e_k t^{c-k}
    std::vector<Laurent> top;  // coefficient of t^{c-k}
    for (int k = 1; k <= c; ++k)
        top.push_back(elementary_symmetric(u, k) *
                      Laurent::constant(k % 2 == 1 ? 1 : -1, cyc));
    // t^-1 = (-1)^{c+1} (t^{c-1} - e_1 t^{c-2} + ... ) / e_c
    Laurent ec = elementary_symmetric(u, c);
    Laurent ec_inv = Laurent::one(cyc).divide_exact(ec);

    AlgebraElement cur = e;
    for (;;) {
        // find a term with a t-run of exponent >= c or any t^-1
        bool changed = false;
        AlgebraElement next;
        for (const auto& [w, coef] : cur.terms) {
            std::size_t run_start = 0, run_len = 0;
            bool run_neg = false;
            bool found = false;
            std::size_t i = 0;
            while (i < w.letters.size()) {
                if (w.letters[i].kind == LetterKind::T ||
                    w.letters[i].kind == LetterKind::TInv) {
                    bool neg = w.letters[i].kind == LetterKind::TInv;
                    std::size_t j = i;
                    while (j < w.letters.size() && w.letters[j].kind == w.letters[i].kind)
                        ++j;
                    std::size_t len = j - i;
                    if (neg || static_cast<int>(len) >= c) {
                        run_start = i;
                        run_len = len;
                        run_neg = neg;
                        found = true;
                        break;
                    }
                    i = j;
                } else {
                    ++i;
                }
            }
            if (!found) {
                next.add(w, coef);
                continue;
            }
            changed = true;
            auto splice = [&](int power_delta_letters, const Laurent& factor) {
                // replace one letter of the run by t^{power_delta_letters}
                std::vector<Letter> ls(w.letters.begin(),
                                       w.letters.begin() + run_start);
                for (int r = 0; r < power_delta_letters; ++r) ls.push_back(loop_t());
                ls.insert(ls.end(), w.letters.begin() + run_start + 1, w.letters.end());
                next.add(free_reduce(BraidWord(w.flavor, w.n, std::move(ls))),
                         coef * factor);
            };
            if (!run_neg) {
                // rewrite the first c letters of the run: t^c -> sum
                std::vector<Letter> head(w.letters.begin(),
                                         w.letters.begin() + run_start);
                std::vector<Letter> tail(w.letters.begin() + run_start + c,
                                         w.letters.end());
                for (int k = 1; k <= c; ++k) {
                    std::vector<Letter> ls = head;
                    for (int r = 0; r < c - k; ++r) ls.push_back(loop_t());
                    ls.insert(ls.end(), tail.begin(), tail.end());
                    next.add(free_reduce(BraidWord(w.flavor, w.n, std::move(ls))),
                             coef * top[k - 1]);
                }
            } else {
                // replace one t^-1 by the positive-power expansion;
                // the global sign is (-1)^{c+1}
                (void)run_len;
                Laurent sgn = Laurent::constant(c % 2 == 1 ? 1 : -1, cyc);
                for (int k = 0; k <= c - 1; ++k) {
                    // term (-1)^k e_k t^{c-1-k}
                    Laurent f = elementary_symmetric(u, k) *
                                Laurent::constant(k % 2 == 0 ? 1 : -1, cyc) * sgn *
                                ec_inv;
                    splice(c - 1 - k, f);
                }
            }
        }
        cur = std::move(next);
        if (!changed) return cur;
    }
}

bool is_jones_supported(const AlgebraElement& e, Flavor f, int n) {
    auto basis = jones_basis(f, n);
    for (const auto& [w, c] : e.terms)
        if (!std::binary_search(basis.begin(), basis.end(), w)) return false;
    return true;
}

}  // namespace stbraid
