#include "hilbert/moves.hpp"

#include <algorithm>

#include "hilbert/errors.hpp"

namespace hilbert {

void validate_word(const Word& w) {
    for (char c : w) {
        if (!is_move(c)) {
            throw DomainError(std::string("letter '") + c + "' outside the alphabet {u,d,r,l}");
        }
    }
}

std::optional<char> step_between(Cell from, Cell to) {
    for (char m : kMoves) {
        if (step(from, m) == to) return m;
    }
    return std::nullopt;
}

namespace {

// images of (u, d, r, l)
const std::array<Morphism, 8> kMorphisms = {{
    Morphism('i', {'u', 'd', 'r', 'l'}),
    Morphism('o', {'r', 'l', 'u', 'd'}),
    Morphism('a', {'l', 'r', 'd', 'u'}),
    Morphism('g', {'l', 'r', 'u', 'd'}),
    Morphism('x', {'r', 'l', 'd', 'u'}),
    Morphism('f', {'d', 'u', 'l', 'r'}),
    Morphism('m', {'d', 'u', 'r', 'l'}),
    Morphism('y', {'u', 'd', 'l', 'r'}),
}};

constexpr int move_slot(char c) {
    switch (c) {
        case 'u': return 0;
        case 'd': return 1;
        case 'r': return 2;
        default: return 3;  // 'l'
    }
}

}  // namespace

const std::array<Morphism, 8>& all_morphisms() { return kMorphisms; }

const Morphism& Morphism::named(char name) {
    for (const Morphism& m : kMorphisms) {
        if (m.name_ == name) return m;
    }
    throw DomainError(std::string("no morphism named '") + name + "'");
}

char Morphism::apply(char move) const {
    if (!is_move(move)) {
        throw DomainError(std::string("letter '") + move + "' outside the alphabet {u,d,r,l}");
    }
    return table_[static_cast<std::size_t>(move_slot(move))];
}

Word Morphism::apply(const Word& w) const {
    Word out = w;
    for (char& c : out) c = apply(c);
    return out;
}

bool Morphism::is_bijection() const {
    std::array<char, 4> sorted = table_;
    std::sort(sorted.begin(), sorted.end());
    return sorted == std::array<char, 4>{'d', 'l', 'r', 'u'};
}

Word reversion_word(Word w) {
    std::reverse(w.begin(), w.end());
    for (char& c : w) c = opposite_move(c);
    return w;
}

}  // namespace hilbert
