#ifndef HILBERT_TAG_SYSTEM_HPP
#define HILBERT_TAG_SYSTEM_HPP

#include <array>
#include <span>

#include "hilbert/curve.hpp"
#include "hilbert/moves.hpp"

namespace hilbert {

/// One quadrant term of an expansion recurrence: a morphism of the
/// building-block word, plain-reversed when barred. The printed morphism of
/// a barred term already folds in the letter inversion of the reversion, so
/// the bar itself is string reversal only; the equality with the geometric
/// reversion is covered by the cross-engine tests rather than assumed.
struct ExpansionTerm {
    char morphism;  // 'i', 'o', 'a', 'g', 'x', 'f', 'm', 'y'
    bool barred = false;
};

/// The four quadrant terms. Connector letters between them are always
/// u, r, d.
struct ExpansionRule {
    std::array<ExpansionTerm, 4> terms;
};

const ExpansionRule& expansion_rule(int family);

Word apply_expansion_term(const ExpansionTerm& term, const Word& block_word);

/// One expansion step: |result| = 4*|block_word| + 3. The caller supplies
/// the correct building-block word (family 0's for families 0..5, family
/// 5's for families 6..11); see word_for.
Word expand(int family, const Word& block_word);

/// The move word of family k at order n. Order 1 is "urd" for every
/// family; higher orders follow the family's recurrence over its
/// building-block lineage.
Word word_for(int family, int order);

/// Walk a word of length 4^n - 1 from the entry cell. Throws
/// WordLengthError / OutOfBoundsError / SelfIntersectionError.
CellList word_to_path(const Word& w, Cell entry, int order);

/// Strokes between consecutive cells. Throws DomainError on a
/// non-adjacent pair.
Word path_to_word(std::span<const Cell> cells);

}  // namespace hilbert

#endif
