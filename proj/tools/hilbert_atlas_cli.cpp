#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hilbert/enumerator.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/generator.hpp"
#include "hilbert/index_map.hpp"
#include "hilbert/json_io.hpp"
#include "hilbert/svg_render.hpp"
#include "hilbert/tag_system.hpp"
#include "hilbert/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;

int max_order_guard() {
    if (const char* env = std::getenv("HILBERT_ATLAS_MAX_ORDER")) {
        try {
            return std::stoi(env);
        } catch (...) {
            return 12;
        }
    }
    return 12;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw hilbert::IoError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw hilbert::IoError("failed writing " + path);
}

int cmd_generate(int family, int order, const std::string& format, const std::string& out) {
    if (order > max_order_guard()) {
        std::cerr << "order " << order << " exceeds the order guard (" << max_order_guard()
                  << "); set HILBERT_ATLAS_MAX_ORDER to raise it\n";
        return kExitResourceGuard;
    }
    const hilbert::Curve curve = hilbert::generate(family, order);
    if (format == "json") {
        write_output(hilbert::curve_to_json(curve).dump(2) + "\n", out);
    } else if (format == "word") {
        write_output(hilbert::path_to_word(curve.cells) + "\n", out);
    } else if (format == "csv") {
        write_output(hilbert::curve_to_csv(curve), out);
    } else {
        std::cerr << "unknown format '" << format << "' (json|word|csv)\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_verify(bool all, std::optional<int> family, int max_order) {
    std::vector<hilbert::CheckReport> reports;
    if (all || !family) {
        reports = hilbert::verify_all(max_order);
    } else {
        reports = hilbert::verify_family(*family, max_order);
    }
    std::cout << hilbert::reports_to_json(reports, max_order).dump(2) << "\n";
    return hilbert::all_passed(reports) ? kExitOk : kExitCheckFailure;
}

std::string pair_labels(const hilbert::DiagramClasses& classes,
                        const std::vector<hilbert::BVectorDiagram>& diagrams) {
    std::string out;
    for (const auto& [a, b] : classes.enantiomorphic_pairs) {
        if (!out.empty()) out += ", ";
        out += diagrams[a].label + "-" + diagrams[b].label;
    }
    return out.empty() ? "none" : out;
}

int cmd_census(const std::string& block, int block_order) {
    bool ok = true;

    const auto run_block = [&](hilbert::BlockKind kind, const char* name) {
        const auto diagrams = hilbert::enumerate_diagrams(kind, block_order);
        const auto classes = hilbert::quotient_diagrams(diagrams);
        std::cout << name << ": " << diagrams.size() << " diagrams -> " << classes.classes.size()
                  << " classes\n";
        std::cout << name << " enantiomorphic pairs (labels are enumeration-order): "
                  << pair_labels(classes, diagrams) << "\n";
        ok = ok && diagrams.size() == 8 && classes.classes.size() == 6;
    };

    if (block == "proper" || block == "both") run_block(hilbert::BlockKind::Proper, "proper");
    if (block == "improper" || block == "both") {
        run_block(hilbert::BlockKind::Improper, "improper");
    }

    const hilbert::CensusResult census = hilbert::brute_force_census(block_order);
    const auto block_line = [&](const hilbert::BlockCensus& c, const char* name) {
        std::cout << "census " << name << " (block order " << block_order << "): "
                  << c.assembly_count << " assemblies -> " << c.classes.size() << " classes\n";
    };
    if (block == "proper" || block == "both") {
        block_line(census.proper, "proper");
        ok = ok && census.proper.classes.size() == 6;
    }
    if (block == "improper" || block == "both") {
        block_line(census.improper, "improper");
        ok = ok && census.improper.classes.size() == 6;
    }
    if (block == "both") {
        std::cout << "pooled: " << census.pooled.size() << " homogeneous classes\n";
        std::string matches;
        bool bijective = census.pooled.size() == hilbert::kFamilyCount;
        std::vector<bool> hit(hilbert::kFamilyCount, false);
        for (const hilbert::CensusClass& cls : census.pooled) {
            if (!cls.matched_family || hit[static_cast<std::size_t>(*cls.matched_family)]) {
                bijective = false;
                continue;
            }
            hit[static_cast<std::size_t>(*cls.matched_family)] = true;
            if (!matches.empty()) matches += ' ';
            matches += std::to_string(*cls.matched_family);
        }
        std::cout << "pooled classes match families: " << matches
                  << (bijective ? " (bijective)" : " (NOT bijective)") << "\n";
        ok = ok && bijective;
    }
    return ok ? kExitOk : kExitCheckFailure;
}

int cmd_render(int family, int order, const std::string& out) {
    if (order > max_order_guard()) {
        std::cerr << "order " << order << " exceeds the order guard (" << max_order_guard()
                  << ")\n";
        return kExitResourceGuard;
    }
    hilbert::write_svg(hilbert::generate(family, order), out);
    return kExitOk;
}

int cmd_map(int family, int order, std::optional<std::int64_t> index,
            const std::string& cell_arg) {
    if (index && !cell_arg.empty()) {
        std::cerr << "give either an index or a cell, not both\n";
        return kExitUsage;
    }
    if (index) {
        const hilbert::Cell c = hilbert::index_to_cell(family, order, *index);
        std::cout << c.col << "," << c.row << "\n";
        return kExitOk;
    }
    if (!cell_arg.empty()) {
        const auto comma = cell_arg.find(',');
        if (comma == std::string::npos) {
            std::cerr << "cell must be 'col,row'\n";
            return kExitUsage;
        }
        hilbert::Cell c;
        try {
            c.col = std::stoi(cell_arg.substr(0, comma));
            c.row = std::stoi(cell_arg.substr(comma + 1));
        } catch (...) {
            std::cerr << "cell must be 'col,row'\n";
            return kExitUsage;
        }
        std::cout << hilbert::cell_to_index(family, order, c) << "\n";
        return kExitOk;
    }
    std::cerr << "need -i INDEX or --cell COL,ROW\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hilbert-atlas: the twelve homogeneous 2D Hilbert curve families.\n"
        "Cells are [col,row] with the origin at the lower left; JSON output\n"
        "is tagged \"schema\": \"hilbert-atlas/1\"."};
    app.require_subcommand(1);

    int family = 0;
    int order = 1;
    std::string format = "json";
    std::string output;

    auto* gen = app.add_subcommand("generate", "Generate a curve (json, word, or csv)");
    gen->add_option("-k,--family", family, "family 0..11")->required();
    gen->add_option("-n,--order", order, "order >= 1")->required();
    gen->add_option("--format", format, "json|word|csv")->default_val("json");
    gen->add_option("-o,--output", output, "output file (default stdout)");

    bool verify_all_flag = false;
    std::optional<int> verify_family_opt;
    int max_order = 6;
    auto* ver = app.add_subcommand("verify", "Run the full check suite, JSON report on stdout");
    ver->add_flag("--all", verify_all_flag, "verify all twelve families");
    ver->add_option("-k,--family", verify_family_opt, "verify one family");
    ver->add_option("--max-order", max_order, "largest order checked")->default_val(6);

    std::string census_block = "both";
    int census_block_order = 2;
    auto* cen = app.add_subcommand("census", "Diagram enumeration and brute-force census");
    cen->add_option("--block", census_block, "proper|improper|both")
        ->check(CLI::IsMember({"proper", "improper", "both"}))
        ->default_val("both");
    cen->add_option("--block-order", census_block_order, "building-block order 1..3")
        ->default_val(2);

    auto* ren = app.add_subcommand("render", "Write an SVG figure of a curve");
    ren->add_option("-k,--family", family, "family 0..11")->required();
    ren->add_option("-n,--order", order, "order >= 1")->required();
    ren->add_option("-o,--output", output, "output SVG path")->required();

    std::optional<std::int64_t> map_index;
    std::string map_cell;
    auto* map = app.add_subcommand("map", "Convert between curve index and cell");
    map->add_option("-k,--family", family, "family 0..11")->required();
    map->add_option("-n,--order", order, "order >= 1")->required();
    map->add_option("-i,--index", map_index, "index 0..4^n-1");
    map->add_option("--cell", map_cell, "cell as col,row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(family, order, format, output);
        if (ver->parsed()) {
            if (!verify_all_flag && !verify_family_opt) verify_all_flag = true;
            return cmd_verify(verify_all_flag, verify_family_opt, max_order);
        }
        if (cen->parsed()) return cmd_census(census_block, census_block_order);
        if (ren->parsed()) return cmd_render(family, order, output);
        if (map->parsed()) return cmd_map(family, order, map_index, map_cell);
    } catch (const hilbert::ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const hilbert::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const hilbert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
