#pragma once

#include <optional>
#include <string>

#include "stbraid/braid.hpp"
#include "stbraid/diagram.hpp"
#include "stbraid/laurent.hpp"

namespace stbraid {

/// Smoothing coefficients per crossing kind, relative to orientation:
/// `oriented` weights the Seifert smoothing, `disoriented` the other one.
/// Trivial circles evaluate to delta = -A^2-A^-2 (one global circle is
/// normalized away); a circle winding k times around the puncture
/// contributes essential^k.
struct SkeinRuleSet {
    Laurent pos_oriented, pos_disoriented;
    Laurent neg_oriented, neg_disoriented;
    Laurent pre_oriented, pre_disoriented;
    Laurent sing_oriented, sing_disoriented;
    Laurent delta;
    Laurent essential;

    /// The shipped rules: classical Kauffman pair for real crossings,
    /// (V, 1 + V*A^2 + V*A^-2) for pre-crossings, reused for singular
    /// crossings, delta = -A^2-A^-2, essential = s.
    static SkeinRuleSet standard();

    /// Parses `<kind>.<role> = <poly>` lines and runs the validation
    /// battery; throws std::invalid_argument naming the first violated
    /// move on a bad rule set.
    static SkeinRuleSet load(const std::string& text);

    std::string str() const;
};

/// Runs the invariance battery (classical pair, R2, R3, PR1-PR3 analogues,
/// real/pseudo stabilization, mixed t-moves, singular variants without
/// PR1). Returns the name of the first violated move, or nothing.
std::optional<std::string> rule_violation(const SkeinRuleSet& rules);

/// The pseudo bracket of an oriented diagram by memoized skein resolution.
Laurent pseudo_bracket(const MixedLinkDiagram& d, const SkeinRuleSet& rules);

/// (-A^-3)^writhe * bracket; the writhe counts classical moving-moving
/// crossings only.
Laurent normalized_invariant(const MixedLinkDiagram& d, const SkeinRuleSet& rules);

Laurent bracket_of_word(const BraidWord& w, const SkeinRuleSet& rules);
Laurent normalized_invariant_of_word(const BraidWord& w, const SkeinRuleSet& rules);

/// (-A^-3)^w as a Laurent monomial.
Laurent writhe_normalizer(int writhe);

}  // namespace stbraid
