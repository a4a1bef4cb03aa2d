#ifndef HILBERT_INDEX_MAP_HPP
#define HILBERT_INDEX_MAP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hilbert/geometry.hpp"

namespace hilbert {

/// Largest order the per-query mappings accept (index fits 64 bits).
inline constexpr int kMaxIndexOrder = 31;

/// Cell visited at position `index` of family k's order-n curve, computed
/// by base-4 digit descent through the family's rule lineage without
/// materializing the curve. O(n) per query.
Cell index_to_cell(int family, int order, std::int64_t index);

/// Inverse of index_to_cell: descends quadrants, inverting each rule
/// (orthogonal matrices invert by transpose, reversal complements the
/// digit).
std::int64_t cell_to_index(int family, int order, Cell c);

/// Exact ratio statistics for one index lag. Ratios are squared Euclidean
/// cell distance over index distance, kept as integer fractions.
struct LocalityLag {
    std::int64_t lag = 0;
    std::int64_t pair_count = 0;
    std::int64_t worst_num = 0, worst_den = 1;
    std::int64_t mean_num = 0, mean_den = 1;
    std::string worst;  // rendered to 6 decimal places
    std::string mean;
};

/// Locality metrics of one family/order: per-lag worst and mean ratios over
/// lags {1, 2, 4, ..., 4^(n/2)}, plus the count of lag-1 pairs that are not
/// edge-adjacent (0 for any valid curve). Exhaustive for n <= 6,
/// fixed-seed sampled above. The metric definitions are artifact-defined,
/// not taken from elsewhere.
struct LocalityReport {
    int family = 0;
    int order = 0;
    bool exhaustive = true;
    std::int64_t jump_count = 0;
    std::vector<LocalityLag> lags;
};

LocalityReport locality_report(int family, int order);

/// Render numerator/denominator to 6 decimal places (round half up).
std::string format_ratio(std::int64_t num, std::int64_t den);

}  // namespace hilbert

#endif
