#pragma once

#include <map>
#include <string>
#include <vector>

#include "stbraid/braid.hpp"
#include "stbraid/laurent.hpp"

namespace stbraid {

/// Formal finite linear combination of flavor-tagged words with Laurent
/// coefficients; the carrier for Hecke-type quotients. Words are kept
/// free-reduced; zero coefficients are dropped.
struct AlgebraElement {
    std::map<BraidWord, Laurent> terms;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement word(const BraidWord& w, Laurent c = Laurent::one());

    void add(const BraidWord& w, const Laurent& c);
    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const Laurent& c) const;
    bool operator==(const AlgebraElement&) const = default;

    bool is_zero() const { return terms.empty(); }
    std::string str() const;  // deterministic ordering
};

/// Permutations of {0..n-1} as image vectors.
using Perm = std::vector<int>;

int perm_length(const Perm& u);  // inversion count

/// The canonical Jones-basis spelling of a permutation: a product of
/// descending runs (g_{i1}..g_{i1-k1})(g_{i2}..) with i1 < i2 < ...
std::vector<int> jones_indices(const Perm& u);
BraidWord jones_word(const Perm& u, Flavor f, int n);

/// All n! Jones basis words for the Hecke algebra of type A.
std::vector<BraidWord> jones_basis(Flavor f, int n);

/// Reduces an element whose words contain only g^{+-1} letters onto the
/// Jones basis: inverses eliminated via g^-1 = q^-1 g - (1-q^-1), then the
/// quadratic relation g^2 = (q-1)g + q. Idempotent and linear.
AlgebraElement reduce_typeA(const AlgebraElement& e);

/// Pushes p (or tau, transported through mu) letters to the front using the
/// defining relations, then reduces the braid tail over the Jones basis.
/// Words whose p letters cannot reach the front with the monoid relations
/// alone are left in their maximally-pushed form (tail still reduced).
AlgebraElement reduce_pseudo_typeA(const AlgebraElement& e);

/// The looping conjugates of the type-B theory:
/// t'_i = g_i..g_1 t g_1^-1..g_i^-1 and t_i = g_i..g_1 t g_1..g_i.
BraidWord t_element(int i, bool primed, Flavor f, int n);
BraidWord t_element_power(int i, int k, bool primed, Flavor f, int n);

/// Rewrites every t-run with exponent outside [0, c-1] using
/// t^c = e_1 t^{c-1} - e_2 t^{c-2} + ... with elementary symmetric
/// polynomials in the (distinct) parameters u_1..u_c. Negative powers are
/// eliminated through t^-1, which requires u_1*...*u_c to be invertible.
AlgebraElement cyclotomic_reduce(const AlgebraElement& e, int c,
                                 const std::vector<Laurent>& u);

/// The parameter list of the basic type-B algebra relation
/// t^2 = (Q-1)t + Q, i.e. u_1 = Q, u_2 = -1.
std::vector<Laurent> basic_typeB_parameters(int cyclotomic = 0);

/// Elementary symmetric polynomial e_k of the given values.
Laurent elementary_symmetric(const std::vector<Laurent>& u, int k);

bool is_jones_supported(const AlgebraElement& e, Flavor f, int n);

}  // namespace stbraid
