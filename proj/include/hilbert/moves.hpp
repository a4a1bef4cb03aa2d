#ifndef HILBERT_MOVES_HPP
#define HILBERT_MOVES_HPP

#include <array>
#include <optional>
#include <string>

#include "hilbert/geometry.hpp"

namespace hilbert {

/// A word is a pen-stroke sequence over the alphabet {u, d, r, l}, stored
/// as plain ASCII. A word encoding an order-n curve has length 4^n - 1.
using Word = std::string;

inline constexpr std::array<char, 4> kMoves = {'u', 'd', 'r', 'l'};

constexpr bool is_move(char c) { return c == 'u' || c == 'd' || c == 'r' || c == 'l'; }

/// Throws DomainError on any letter outside the alphabet.
void validate_word(const Word& w);

/// u<->d, r<->l.
constexpr char opposite_move(char c) {
    switch (c) {
        case 'u': return 'd';
        case 'd': return 'u';
        case 'r': return 'l';
        case 'l': return 'r';
        default: return c;
    }
}

constexpr Cell step(Cell c, char move) {
    switch (move) {
        case 'u': return {c.col, c.row + 1};
        case 'd': return {c.col, c.row - 1};
        case 'r': return {c.col + 1, c.row};
        default: return {c.col - 1, c.row};  // 'l'
    }
}

/// The stroke between two edge-adjacent cells, or nullopt.
std::optional<char> step_between(Cell from, Cell to);

/// Letterwise substitution on the alphabet. The named tables are the seven
/// stroke re-orientations used by the expansion recurrences, plus identity.
class Morphism {
  public:
    /// Lookup by name: 'o', 'a', 'g', 'x', 'f', 'm', 'y', or 'i' (identity).
    static const Morphism& named(char name);

    char name() const { return name_; }
    char apply(char move) const;
    Word apply(const Word& w) const;

    /// Every table is a bijection on the four letters.
    bool is_bijection() const;

    friend bool operator==(const Morphism&, const Morphism&) = default;

    Morphism(char name, std::array<char, 4> images_of_u_d_r_l)
        : name_(name), table_(images_of_u_d_r_l) {}

  private:
    char name_;
    std::array<char, 4> table_;  // images of u, d, r, l in that order
};

/// The seven named morphisms plus identity.
const std::array<Morphism, 8>& all_morphisms();

/// Word of the reversed curve: reverse the sequence and replace every
/// letter by its opposite, so the result retraces the path exit-to-entry.
Word reversion_word(Word w);

}  // namespace hilbert

#endif
