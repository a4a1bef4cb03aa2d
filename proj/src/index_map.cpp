#include "hilbert/index_map.hpp"

#include <numeric>
#include <random>
#include <vector>

#include "hilbert/errors.hpp"
#include "hilbert/family_spec.hpp"
#include "hilbert/generator.hpp"

namespace hilbert {

namespace {

constexpr std::array<Cell, 4> kBaseCells = {{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};

/// Which family's rule table applies at descent level j (1-based from the
/// top): the family itself, then its building block, then family 0.
const FamilySpec& spec_at_level(int family, int level) {
    if (level == 1) return family_spec(family);
    if (level == 2) return family_spec(building_block_family(family));
    return family_spec(0);
}

void require_index_order(int order) {
    require_valid_order(order);
    if (order > kMaxIndexOrder) {
        throw ResourceError("order " + std::to_string(order) + " exceeds the 64-bit index guard (" +
                            std::to_string(kMaxIndexOrder) + ")");
    }
}

int base_position(Cell c) {
    for (int z = 0; z < 4; ++z) {
        if (kBaseCells[static_cast<std::size_t>(z)] == c) return z;
    }
    throw DomainError("cell " + to_string(c) + " not in the order-1 grid");
}

std::int64_t squared_distance(Cell a, Cell b) {
    const std::int64_t dc = std::int64_t{a.col} - b.col;
    const std::int64_t dr = std::int64_t{a.row} - b.row;
    return dc * dc + dr * dr;
}

/// Largest order for which the locality sums stay within 64 bits.
constexpr int kMaxLocalityOrder = 16;

void reduce(std::int64_t& num, std::int64_t& den) {
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

}  // namespace

Cell index_to_cell(int family, int order, std::int64_t index) {
    require_valid_family(family);
    require_index_order(order);
    if (index < 0 || index >= cell_count(order)) {
        throw DomainError("index " + std::to_string(index) + " outside 0..4^" +
                          std::to_string(order) + "-1");
    }

    // Select one rule per level, top digit first; a reversed rule flips the
    // traversal direction of everything below it, i.e. complements the
    // following digits.
    std::vector<const QuadrantRule*> rules;
    rules.reserve(static_cast<std::size_t>(order - 1));
    bool reversed = false;
    for (int level = 1; level < order; ++level) {
        std::int64_t digit = (index >> (2 * (order - level))) & 3;
        if (reversed) digit = 3 - digit;
        const QuadrantRule& rule =
            spec_at_level(family, level).rules[static_cast<std::size_t>(digit)];
        rules.push_back(&rule);
        reversed = reversed != rule.reversed;
    }

    std::int64_t last = index & 3;
    if (reversed) last = 3 - last;
    Vec2 p = cell_center(kBaseCells[static_cast<std::size_t>(last)], 1);

    for (int level = order - 1; level >= 1; --level) {
        const int block_order = order - level;  // order of the point being lifted
        p = apply_rule_to_point(*rules[static_cast<std::size_t>(level - 1)], p, block_order);
    }
    return center_to_cell(p);
}

std::int64_t cell_to_index(int family, int order, Cell c) {
    require_valid_family(family);
    require_index_order(order);
    if (!cell_in_grid(c, order)) {
        throw DomainError("cell " + to_string(c) + " outside the order-" + std::to_string(order) +
                          " grid");
    }

    std::int64_t index = 0;
    bool reversed = false;
    Cell local = c;
    for (int level = 1; level < order; ++level) {
        const int m = order - level + 1;  // current frame order
        const std::int64_t half = grid_side(m - 1);
        const bool hi_col = local.col >= half;
        const bool hi_row = local.row >= half;
        const int quadrant = hi_col ? (hi_row ? 2 : 3) : (hi_row ? 1 : 0);
        const std::int64_t digit = reversed ? 3 - quadrant : quadrant;
        index = (index << 2) | digit;

        const QuadrantRule& rule =
            spec_at_level(family, level).rules[static_cast<std::size_t>(quadrant)];
        // invert p -> M p + t*2^m exactly: orthogonal, so M^-1 = M^T
        const Vec2 p = cell_center(local, m);
        const Vec2 inner = transpose(rule.matrix) * (p - grid_side(m) * rule.translation);
        local = center_to_cell(inner);
        reversed = reversed != rule.reversed;
    }
    std::int64_t last = base_position(local);
    if (reversed) last = 3 - last;
    return (index << 2) | last;
}

std::string format_ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw DomainError("ratio denominator must be positive");
    const std::int64_t whole = num / den;
    const std::int64_t rem = num % den;
    std::int64_t frac = (rem * 1000000 + den / 2) / den;
    std::int64_t carry = 0;
    if (frac == 1000000) {
        frac = 0;
        carry = 1;
    }
    std::string digits = std::to_string(frac);
    return std::to_string(whole + carry) + "." + std::string(6 - digits.size(), '0') + digits;
}

LocalityReport locality_report(int family, int order) {
    require_valid_family(family);
    require_valid_order(order);
    if (order > kMaxLocalityOrder) {
        throw ResourceError("locality report supports orders up to " +
                            std::to_string(kMaxLocalityOrder));
    }

    LocalityReport report;
    report.family = family;
    report.order = order;
    report.exhaustive = order <= 6;

    const std::int64_t count = cell_count(order);
    const std::int64_t max_lag = std::int64_t{1} << (2 * (order / 2));  // 4^(n/2)

    CellList cells;
    if (report.exhaustive) {
        cells = generate(family, order).cells;
    }

    std::mt19937_64 rng(0x68696c62ull);  // fixed seed
    constexpr std::int64_t kSamples = 100000;

    for (std::int64_t lag = 1; lag <= max_lag; lag *= 2) {
        LocalityLag stat;
        stat.lag = lag;
        std::int64_t worst_d2 = 0;
        std::int64_t sum_d2 = 0;

        if (report.exhaustive) {
            stat.pair_count = count - lag;
            for (std::int64_t i = 0; i + lag < count; ++i) {
                const std::int64_t d2 = squared_distance(cells[static_cast<std::size_t>(i)],
                                                         cells[static_cast<std::size_t>(i + lag)]);
                worst_d2 = std::max(worst_d2, d2);
                sum_d2 += d2;
                if (lag == 1 && d2 != 1) ++report.jump_count;
            }
        } else {
            stat.pair_count = kSamples;
            const std::int64_t range = count - lag;
            for (std::int64_t s = 0; s < kSamples; ++s) {
                const std::int64_t i = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range));
                const std::int64_t d2 = squared_distance(index_to_cell(family, order, i),
                                                         index_to_cell(family, order, i + lag));
                worst_d2 = std::max(worst_d2, d2);
                sum_d2 += d2;
                if (lag == 1 && d2 != 1) ++report.jump_count;
            }
        }

        stat.worst_num = worst_d2;
        stat.worst_den = lag;
        stat.mean_num = sum_d2;
        stat.mean_den = stat.pair_count * lag;
        stat.worst = format_ratio(stat.worst_num, stat.worst_den);
        stat.mean = format_ratio(stat.mean_num, stat.mean_den);
        reduce(stat.worst_num, stat.worst_den);
        reduce(stat.mean_num, stat.mean_den);
        report.lags.push_back(stat);
    }
    return report;
}

}  // namespace hilbert
