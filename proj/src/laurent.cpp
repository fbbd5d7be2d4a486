#include "stbraid/laurent.hpp"

#include <cctype>
#include <sstream>

namespace stbraid {

Laurent Laurent::constant(Int value, int cyclotomic) {
    Laurent p(cyclotomic);
    if (value != 0) p.terms_[ExpVec(p.nvars_, 0)] = std::move(value);
    return p;
}

Laurent Laurent::monomial(Int coeff, int var, int exp, int cyclotomic) {
    Laurent p(cyclotomic);
    if (var < 0 || var >= p.nvars_) throw std::out_of_range("variable index");
    if (coeff != 0) {
        ExpVec e(p.nvars_, 0);
        e[var] = exp;
        p.terms_[std::move(e)] = std::move(coeff);
    }
    return p;
}

bool Laurent::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    if (c != 1) return false;
    for (int x : e)
        if (x != 0) return false;
    return true;
}

void Laurent::add_term(const ExpVec& exps, const Int& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("exponent vector size mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator+(const Laurent& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable universe mismatch");
    Laurent out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Laurent Laurent::operator-() const {
    Laurent out(cyclotomic());
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

Laurent Laurent::operator-(const Laurent& rhs) const { return *this + (-rhs); }

Laurent Laurent::operator*(const Laurent& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable universe mismatch");
    Laurent out(cyclotomic());
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool Laurent::operator<(const Laurent& rhs) const {
    if (nvars_ != rhs.nvars_) return nvars_ < rhs.nvars_;
    return terms_ < rhs.terms_;
}

Laurent Laurent::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Laurent out = one(cyclotomic());
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

Laurent Laurent::divide_exact(const Laurent& divisor) const {
    if (nvars_ != divisor.nvars_) throw std::invalid_argument("variable universe mismatch");
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return zero(cyclotomic());
    // Shift both operands into the nonnegative cone so that monomial
    // divisibility is meaningful, then do single-divisor lex reduction.
    auto min_exps = [&](const Laurent& p) {
        ExpVec m = p.terms_.begin()->first;
        for (const auto& [e, c] : p.terms_)
            for (int i = 0; i < p.nvars_; ++i) m[i] = std::min(m[i], e[i]);
        return m;
    };
    ExpVec ma = min_exps(*this), mb = min_exps(divisor);
    auto shifted = [&](const Laurent& p, const ExpVec& m) {
        Laurent out(p.cyclotomic());
        for (const auto& [e, c] : p.terms_) {
            ExpVec f(p.nvars_);
            for (int i = 0; i < p.nvars_; ++i) f[i] = e[i] - m[i];
            out.terms_[f] = c;
        }
        return out;
    };
    Laurent rem = shifted(*this, ma), div = shifted(divisor, mb);
    const auto& [lead_e, lead_c] = *div.terms_.rbegin();  // lex-greatest
    Laurent quot(cyclotomic());
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        ExpVec qe(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            qe[i] = re[i] - lead_e[i];
            if (qe[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        if (rc % lead_c != 0) throw std::domain_error("inexact polynomial division");
        Laurent t(cyclotomic());
        t.terms_[qe] = rc / lead_c;
        quot += t;
        rem -= t * div;
    }
    // Undo the shift: multiply by x^(ma - mb).
    Laurent corr(cyclotomic());
    ExpVec ce(nvars_);
    for (int i = 0; i < nvars_; ++i) ce[i] = ma[i] - mb[i];
    corr.terms_[ce] = 1;
    return quot * corr;
}

std::string Laurent::var_name(int var, int cyclotomic) {
    static const char* base[] = {"A", "V", "s", "q", "Q"};
    if (var < kBaseVars) return base[var];
    if (var < kBaseVars + cyclotomic) return "u" + std::to_string(var - kBaseVars + 1);
    throw std::out_of_range("variable index");
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += var_name(i, cyclotomic());
            if (e[i] != 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << factors;
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

Int parse_int(Cursor& c) {
    c.skip_ws();
    std::string digits;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) digits += c.s[c.i++];
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) digits += c.s[c.i++];
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("expected integer in polynomial");
    return Int(digits);
}

}  // namespace

Laurent Laurent::parse(const std::string& text, int cyclotomic) {
    Laurent out(cyclotomic);
    const int nv = out.nvars();
    Cursor c{text};
    if (c.done()) throw std::invalid_argument("empty polynomial");
    bool first_term = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++c.i;
        } else if (!first_term) {
            throw std::invalid_argument("expected +/- between terms");
        }
        first_term = false;
        Int coeff = 1;
        ExpVec exps(nv, 0);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            c.skip_ws();
            if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
                coeff *= parse_int(c);
                saw_factor = true;
            } else if (c.i < c.s.size() &&
                       (std::isalpha(static_cast<unsigned char>(c.s[c.i])))) {
                std::string name;
                while (c.i < c.s.size() &&
                       (std::isalnum(static_cast<unsigned char>(c.s[c.i]))))
                    name += c.s[c.i++];
                int var = -1;
                for (int v = 0; v < nv; ++v)
                    if (var_name(v, cyclotomic) == name) var = v;
                if (var < 0) throw std::invalid_argument("unknown variable: " + name);
                int exp = 1;
                c.skip_ws();
                if (c.i < c.s.size() && c.s[c.i] == '^') {
                    ++c.i;
                    Int e = parse_int(c);
                    exp = static_cast<int>(e);
                }
                exps[var] += exp;
                saw_factor = true;
            } else {
                throw std::invalid_argument("expected coefficient or variable");
            }
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '*') {
                ++c.i;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw std::invalid_argument("empty term");
        out.add_term(exps, sign * coeff);
    }
    return out;
}

}  // namespace stbraid
