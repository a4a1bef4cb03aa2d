#include "hilbert/tag_system.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hilbert/errors.hpp"
#include "hilbert/family_spec.hpp"

namespace hilbert {

namespace {

constexpr ExpansionTerm t(char m, bool barred = false) { return {m, barred}; }

const std::array<ExpansionRule, kFamilyCount> kRules = {{
    {{t('o'), t('i'), t('i'), t('a')}},                    // 0
    {{t('g'), t('g'), t('x'), t('x')}},                    // 1
    {{t('f'), t('i'), t('i'), t('f')}},                    // 2
    {{t('m'), t('g'), t('x'), t('m')}},                    // 3
    {{t('o'), t('i'), t('i'), t('f')}},                    // 4
    {{t('m'), t('g'), t('x'), t('x')}},                    // 5
    {{t('f'), t('m', true), t('i'), t('y', true)}},        // 6
    {{t('f'), t('m', true), t('i'), t('a')}},              // 7
    {{t('g', true), t('m', true), t('i'), t('a')}},        // 8
    {{t('o', true), t('g'), t('a', true), t('x')}},        // 9
    {{t('m'), t('g'), t('a', true), t('i', true)}},        // 10
    {{t('m'), t('g'), t('a', true), t('x')}},              // 11
}};

const Word kOrderOneWord = "urd";

}  // namespace

const ExpansionRule& expansion_rule(int family) {
    require_valid_family(family);
    return kRules[static_cast<std::size_t>(family)];
}

Word apply_expansion_term(const ExpansionTerm& term, const Word& block_word) {
    Word out = Morphism::named(term.morphism).apply(block_word);
    if (term.barred) {
        std::reverse(out.begin(), out.end());
    }
    return out;
}

Word expand(int family, const Word& block_word) {
    const ExpansionRule& rule = expansion_rule(family);
    Word out;
    out.reserve(4 * block_word.size() + 3);
    const char connectors[3] = {'u', 'r', 'd'};
    for (int q = 0; q < 4; ++q) {
        if (q > 0) out.push_back(connectors[q - 1]);
        out += apply_expansion_term(rule.terms[static_cast<std::size_t>(q)], block_word);
    }
    return out;
}

Word word_for(int family, int order) {
    require_valid_family(family);
    require_valid_order(order);
    if (order > kMaxMaterializedOrder) {
        throw ResourceError("order " + std::to_string(order) + " exceeds materialization cap " +
                            std::to_string(kMaxMaterializedOrder));
    }
    if (order == 1) return kOrderOneWord;

    // Building block one order down: family 0's word for families 0..5,
    // family 5's word (itself over family 0) for families 6..11.
    const int block = building_block_family(family);
    Word base = kOrderOneWord;  // family 0 at order 1
    if (block == 0) {
        for (int n = 2; n < order; ++n) base = expand(0, base);
        return expand(family, base);
    }
    for (int n = 2; n + 1 < order; ++n) base = expand(0, base);
    const Word block_word = order == 2 ? kOrderOneWord : expand(5, base);
    return expand(family, block_word);
}

CellList word_to_path(const Word& w, Cell entry, int order) {
    require_valid_order(order);
    validate_word(w);
    const std::int64_t count = cell_count(order);
    if (static_cast<std::int64_t>(w.size()) != count - 1) {
        throw WordLengthError("word length " + std::to_string(w.size()) + " != 4^" +
                              std::to_string(order) + " - 1");
    }
    const std::int64_t side = grid_side(order);
    std::vector<bool> seen(static_cast<std::size_t>(count), false);
    CellList cells;
    cells.reserve(static_cast<std::size_t>(count));

    Cell at = entry;
    for (std::size_t i = 0;; ++i) {
        if (!cell_in_grid(at, order)) {
            throw OutOfBoundsError("walk leaves the grid at cell " + to_string(at) +
                                   " (step " + std::to_string(i) + ")");
        }
        const std::size_t flat = static_cast<std::size_t>(at.row * side + at.col);
        if (seen[flat]) {
            throw SelfIntersectionError("walk revisits cell " + to_string(at) + " (step " +
                                        std::to_string(i) + ")");
        }
        seen[flat] = true;
        cells.push_back(at);
        if (i == w.size()) break;
        at = step(at, w[i]);
    }
    return cells;
}

Word path_to_word(std::span<const Cell> cells) {
    Word out;
    if (cells.size() > 1) out.reserve(cells.size() - 1);
    for (std::size_t i = 1; i < cells.size(); ++i) {
        const std::optional<char> m = step_between(cells[i - 1], cells[i]);
        if (!m) {
            throw DomainError("cells " + to_string(cells[i - 1]) + " and " + to_string(cells[i]) +
                              " are not edge-adjacent");
        }
        out.push_back(*m);
    }
    return out;
}

}  // namespace hilbert
