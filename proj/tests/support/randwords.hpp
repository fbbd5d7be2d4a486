#pragma once

#include <random>
#include <vector>

#include "stbraid/braid.hpp"

namespace stbraid::testing {

/// Random word with bounded pre-degree and |t-winding|; length is a cap,
/// shortened when no legal letters remain (n = 1 words).
inline BraidWord random_word(std::mt19937_64& rng, Flavor f, int n, int len,
                             int max_pre, int max_t) {
    std::vector<Letter> ls;
    int pre_used = 0, t_used = 0;
    int stall = 0;
    while (static_cast<int>(ls.size()) < len && stall < 64) {
        int pick = static_cast<int>(rng() % (2 * std::max(n - 1, 0) + 2));
        ++stall;
        if (pick < n - 1) {
            ls.push_back(sigma(pick + 1));
        } else if (pick < 2 * (n - 1)) {
            ls.push_back(sigma_inv(pick - (n - 1) + 1));
        } else if (pick == 2 * std::max(n - 1, 0)) {
            if (pre_used >= max_pre || n < 2 || !(is_pseudo(f) || is_singular(f)))
                continue;
            ++pre_used;
            ls.push_back(is_singular(f) ? tau(1 + static_cast<int>(rng() % (n - 1)))
                                        : pre(1 + static_cast<int>(rng() % (n - 1))));
        } else {
            if (std::abs(t_used) >= max_t || !is_mixed(f)) continue;
            bool inv = rng() % 2;
            t_used += inv ? -1 : 1;
            ls.push_back(inv ? loop_t_inv() : loop_t());
        }
        stall = 0;
    }
    return BraidWord(f, n, std::move(ls));
}

}  // namespace stbraid::testing
