#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stbraid {

using Int = boost::multiprecision::cpp_int;

/// Exponent vector over the fixed ordered variable set {A, V, s, q, Q, u_1..u_c}.
using ExpVec = std::vector<int>;

/// Exact multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. The variable universe is {A, V, s, q, Q} plus c cyclotomic
/// variables u_1..u_c; c is fixed at construction (default 0). Values are
/// canonical: no zero coefficients are stored, terms are kept in
/// lexicographic exponent order, and equality is map equality.
class Laurent {
public:
    static constexpr int kBaseVars = 5;  // A, V, s, q, Q

    explicit Laurent(int cyclotomic = 0) : nvars_(kBaseVars + cyclotomic) {}

    static Laurent zero(int cyclotomic = 0) { return Laurent(cyclotomic); }
    static Laurent constant(Int value, int cyclotomic = 0);
    static Laurent one(int cyclotomic = 0) { return constant(1, cyclotomic); }

    /// Single term c * var^e by variable index in {0..nvars-1}.
    static Laurent monomial(Int coeff, int var, int exp, int cyclotomic = 0);

    static Laurent var_A(int c = 0) { return monomial(1, 0, 1, c); }
    static Laurent var_V(int c = 0) { return monomial(1, 1, 1, c); }
    static Laurent var_s(int c = 0) { return monomial(1, 2, 1, c); }
    static Laurent var_q(int c = 0) { return monomial(1, 3, 1, c); }
    static Laurent var_Q(int c = 0) { return monomial(1, 4, 1, c); }
    static Laurent var_u(int i, int c) { return monomial(1, kBaseVars + i - 1, 1, c); }

    int nvars() const { return nvars_; }
    int cyclotomic() const { return nvars_ - kBaseVars; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }

    Laurent operator+(const Laurent& rhs) const;
    Laurent operator-(const Laurent& rhs) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& rhs) const;
    Laurent& operator+=(const Laurent& rhs) { return *this = *this + rhs; }
    Laurent& operator-=(const Laurent& rhs) { return *this = *this - rhs; }
    Laurent& operator*=(const Laurent& rhs) { return *this = *this * rhs; }

    bool operator==(const Laurent& rhs) const {
        return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
    }
    bool operator!=(const Laurent& rhs) const { return !(*this == rhs); }
    bool operator<(const Laurent& rhs) const;  // total order for container keys

    Laurent pow(int e) const;  // e >= 0

    /// Exact division; throws std::domain_error if the divisor does not
    /// divide exactly. Used for the one-circle bracket normalization.
    Laurent divide_exact(const Laurent& divisor) const;

    void add_term(const ExpVec& exps, const Int& coeff);

    /// Deterministic rendering: terms in lexicographic exponent order,
    /// `c*A^i*V^j*...` with unit coefficients and exponent 1 elided.
    std::string str() const;

    /// Parses the grammar produced by str(): terms joined by +/-, factors
    /// `name^exp` separated by `*`, integer coefficients. Throws
    /// std::invalid_argument on malformed input.
    static Laurent parse(const std::string& text, int cyclotomic = 0);

    static std::string var_name(int var, int cyclotomic);

    const std::map<ExpVec, Int>& terms() const { return terms_; }

private:
    int nvars_;
    std::map<ExpVec, Int> terms_;
};

inline Laurent operator*(const Int& k, const Laurent& p) {
    return Laurent::constant(k, p.cyclotomic()) * p;
}

}  // namespace stbraid
