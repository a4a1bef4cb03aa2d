#include "hilbert/verifier.hpp"

#include <algorithm>

#include "hilbert/errors.hpp"
#include "hilbert/generator.hpp"
#include "hilbert/tag_system.hpp"

namespace hilbert {

namespace {

CheckReport make_report(std::string check, const Curve& c) {
    CheckReport r;
    r.check = std::move(check);
    r.family = c.family;
    r.order = c.order;
    return r;
}

/// generate() over an explicit rule table, so corrupted fixtures are testable.
Curve generate_with(const std::array<FamilySpec, kFamilyCount>& specs, int family, int order) {
    require_valid_family(family);
    require_valid_order(order);
    Curve curve = base_curve();
    curve.family = family;
    if (order == 1) return curve;
    const int block = building_block_family(family);
    const int zero_layers = block == 0 ? order - 2 : order - 3;
    for (int i = 0; i < zero_layers; ++i) {
        curve = assemble_quadrants(specs[0], curve);
    }
    if (block == 5 && order >= 3) {
        curve = assemble_quadrants(specs[5], curve);
    }
    curve = assemble_quadrants(specs[static_cast<std::size_t>(family)], curve);
    curve.family = family;
    return curve;
}

}  // namespace

CheckReport check_hilbert_condition_1(const Curve& c) {
    CheckReport r = make_report("hilbert-condition-1", c);
    for (std::size_t i = 1; i < c.cells.size(); ++i) {
        if (!cells_adjacent(c.cells[i - 1], c.cells[i])) {
            r.passed = false;
            r.violation_index = static_cast<std::int64_t>(i - 1);
            r.detail = "cells " + to_string(c.cells[i - 1]) + " -> " + to_string(c.cells[i]) +
                       " not edge-adjacent";
            return r;
        }
    }
    return r;
}

CheckReport check_hilbert_condition_2(const Curve& fine, const Curve& coarse) {
    if (fine.order != coarse.order + 1) {
        throw DomainError("condition 2 needs orders n+1 and n, got " +
                          std::to_string(fine.order) + " and " + std::to_string(coarse.order));
    }
    CheckReport r = make_report("hilbert-condition-2", fine);
    const std::int64_t coarse_count = cell_count(coarse.order);
    for (std::int64_t j = 0; j < coarse_count; ++j) {
        const Cell parent = coarse.cells[static_cast<std::size_t>(j)];
        for (std::int64_t s = 0; s < 4; ++s) {
            const Cell child = fine.cells[static_cast<std::size_t>(4 * j + s)];
            const bool inside = child.col >= 2 * parent.col && child.col <= 2 * parent.col + 1 &&
                                child.row >= 2 * parent.row && child.row <= 2 * parent.row + 1;
            if (!inside) {
                r.passed = false;
                r.violation_index = 4 * j + s;
                r.detail = "cell " + to_string(child) + " not inside coarse cell " +
                           to_string(parent) + " (group " + std::to_string(j) + ")";
                return r;
            }
        }
    }
    return r;
}

CheckReport check_space_filling(const Curve& c) {
    CheckReport r = make_report("space-filling", c);
    const std::string why = curve_violation(c);
    if (!why.empty()) {
        r.passed = false;
        r.detail = why;
    }
    return r;
}

bool check_closed(const Curve& c) {
    return cells_adjacent(entry_cell(c), exit_cell(c));
}

bool check_mirror_symmetric(const Curve& c) {
    const std::int32_t far = static_cast<std::int32_t>(grid_side(c.order)) - 1;
    CellList mirrored;
    mirrored.reserve(c.cells.size());
    for (Cell cell : c.cells) {
        mirrored.push_back({far - cell.col, cell.row});
    }
    if (mirrored == c.cells) return true;
    std::reverse(mirrored.begin(), mirrored.end());
    return mirrored == c.cells;
}

CheckReport cross_validate(int family, int order) {
    CheckReport r;
    r.check = "cross-validate";
    r.family = family;
    r.order = order;
    const Curve geometric = generate(family, order);
    const Word from_curve = path_to_word(geometric.cells);
    const Word from_rules = word_for(family, order);
    if (from_curve != from_rules) {
        const std::size_t at =
            static_cast<std::size_t>(std::mismatch(from_curve.begin(), from_curve.end(),
                                                   from_rules.begin(), from_rules.end())
                                         .first -
                                     from_curve.begin());
        r.passed = false;
        r.violation_index = static_cast<std::int64_t>(at);
        r.detail = "engine words differ first at letter " + std::to_string(at);
        return r;
    }
    const CellList walked = word_to_path(from_rules, entry_cell(geometric), order);
    if (walked != geometric.cells) {
        r.passed = false;
        r.detail = "word walk does not reproduce the generated cells";
    }
    return r;
}

bool family_expected_closed(int family) {
    return std::find(kClosedFamilies.begin(), kClosedFamilies.end(), family) !=
           kClosedFamilies.end();
}

bool family_expected_mirror(int family) {
    return std::find(kMirrorFamilies.begin(), kMirrorFamilies.end(), family) !=
           kMirrorFamilies.end();
}

std::vector<CheckReport> verify_family(const std::array<FamilySpec, kFamilyCount>& specs,
                                       int family, int max_order) {
    require_valid_family(family);
    if (max_order < 2) throw DomainError("max order must be >= 2");
    std::vector<CheckReport> reports;

    std::vector<Curve> curves;
    for (int n = 1; n <= max_order; ++n) {
        try {
            curves.push_back(generate_with(specs, family, n));
        } catch (const Error& e) {
            CheckReport r;
            r.check = "construction";
            r.family = family;
            r.order = n;
            r.passed = false;
            r.detail = e.what();
            reports.push_back(r);
            return reports;
        }
    }

    for (int n = 2; n <= max_order; ++n) {
        const Curve& fine = curves[static_cast<std::size_t>(n - 1)];
        const Curve& coarse = curves[static_cast<std::size_t>(n - 2)];
        reports.push_back(check_hilbert_condition_1(fine));
        reports.push_back(check_hilbert_condition_2(fine, coarse));
        reports.push_back(check_space_filling(fine));
    }

    for (int n = 1; n <= max_order; ++n) {
        const Curve& curve = curves[static_cast<std::size_t>(n - 1)];
        CheckReport r = make_report("cross-validate", curve);
        const Word from_curve = path_to_word(curve.cells);
        const Word from_rules = word_for(family, n);
        if (from_curve != from_rules) {
            r.passed = false;
            r.detail = "engine words differ";
        } else if (word_to_path(from_rules, entry_cell(curve), n) != curve.cells) {
            r.passed = false;
            r.detail = "word walk does not reproduce the generated cells";
        }
        reports.push_back(r);
    }

    for (int n = 2; n <= std::min(max_order, 4); ++n) {
        const Curve& curve = curves[static_cast<std::size_t>(n - 1)];
        CheckReport closed = make_report("closed-membership", curve);
        if (check_closed(curve) != family_expected_closed(family)) {
            closed.passed = false;
            closed.detail = family_expected_closed(family) ? "expected closed, found open"
                                                           : "expected open, found closed";
        }
        reports.push_back(closed);

        CheckReport mirror = make_report("mirror-membership", curve);
        if (check_mirror_symmetric(curve) != family_expected_mirror(family)) {
            mirror.passed = false;
            mirror.detail = family_expected_mirror(family)
                                ? "expected mirror symmetric, found asymmetric"
                                : "expected asymmetric, found mirror symmetric";
        }
        reports.push_back(mirror);
    }

    return reports;
}

std::vector<CheckReport> verify_family(int family, int max_order) {
    return verify_family(all_family_specs(), family, max_order);
}

std::vector<CheckReport> verify_all(int max_order) {
    std::vector<CheckReport> reports;
    for (int k = 0; k < kFamilyCount; ++k) {
        std::vector<CheckReport> fam = verify_family(k, max_order);
        reports.insert(reports.end(), fam.begin(), fam.end());
    }
    return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CheckReport& r) { return r.passed; });
}

}  // namespace hilbert
