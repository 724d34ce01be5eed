#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "tuttecover/covering.hpp"
#include "tuttecover/io.hpp"
#include "tuttecover/isomorphism.hpp"
#include "tuttecover/kzero.hpp"
#include "tuttecover/tutte.hpp"

namespace {

using namespace tuttecover;

struct Options {
    std::string input;
    std::string second_input;
    std::string engine = "dc-memo";
    std::string strategy;  // empty = min-index unless --seed forces random
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string format = "text";
    std::string input_kind = "auto";
};

InputKind input_kind_of(const Options& opt) {
    if (opt.input_kind == "matroid") return InputKind::MatroidFile;
    if (opt.input_kind == "graph") return InputKind::GraphFile;
    return InputKind::Auto;
}

PivotStrategy strategy_of(const Options& opt) {
    if (opt.strategy == "max-index") return PivotStrategy::max_index();
    if (opt.strategy == "random" || (opt.strategy.empty() && opt.seed_given)) {
        return PivotStrategy::seeded(opt.seed);
    }
    return PivotStrategy::min_index();
}

TuttePolynomial run_engine(const Matroid& m, const Options& opt) {
    if (opt.engine == "direct") return tutte_direct(m);
    if (opt.engine == "dc") return tutte_dc(m, strategy_of(opt), MemoPolicy::None);
    return tutte_dc(m, strategy_of(opt), MemoPolicy::Exact);
}

int cmd_tutte(const Options& opt) {
    const TuttePolynomial p = run_engine(load_matroid(opt.input, input_kind_of(opt)), opt);
    if (opt.format == "json") {
        std::cout << polynomial_to_json(p);
    } else {
        std::cout << p.to_string() << "\n";
    }
    return 0;
}

int cmd_tree(const Options& opt) {
    const Matroid m = load_matroid(opt.input, input_kind_of(opt));
    const TutteCovering cover = indecomposable_covering(m, strategy_of(opt));
    const DCTree& tree = cover.witness();
    if (opt.format == "json") {
        std::cout << dctree_to_json(tree);
    } else if (opt.format == "dot") {
        std::cout << dctree_to_dot(tree);
    } else {
        std::cout << tree.size() << " nodes, " << tree.leaf_ids().size() << " leaves\n";
    }
    return 0;
}

std::string class_text(const IndecomposableClass& cls) {
    return "(" + std::to_string(cls.loops) + "," + std::to_string(cls.coloops) + ")";
}

int cmd_cover(const Options& opt) {
    const Matroid m = load_matroid(opt.input, input_kind_of(opt));
    const TutteCovering cover = indecomposable_covering(m, strategy_of(opt));
    if (opt.format == "json") {
        std::cout << dctree_to_json(cover.witness());
    } else if (opt.format == "dot") {
        std::cout << dctree_to_dot(cover.witness());
    } else {
        std::cout << cover.legs().size() << " legs onto a " << std::to_string(m.size())
                  << "-element matroid\n";
        for (const auto& [cls, count] : leaf_class_multiset(cover)) {
            std::cout << class_text(cls) << " x" << count << "\n";
        }
    }
    return 0;
}

int cmd_refine(const Options& opt) {
    const TutteCovering a = covering_from_tree(load_dctree(opt.input).tree);
    const TutteCovering b = covering_from_tree(load_dctree(opt.second_input).tree);
    const CommonRefinement common = common_refinement(a, b);
    if (opt.format == "json") {
        std::cout << refinement_to_json(common);
    } else {
        std::cout << common.covering.legs().size() << " legs refine both coverings\n";
        for (std::size_t i = 0; i < common.covering.legs().size(); ++i) {
            std::cout << "leg " << i << " "
                      << class_text(common.covering.legs()[i].source().indecomposable_class())
                      << " -> first leg " << common.into_first[i].through << ", second leg "
                      << common.into_second[i].through << "\n";
        }
    }
    return 0;
}

int cmd_k0(const Options& opt) {
    std::cout << k0_to_json(k0_class(load_matroid(opt.input, input_kind_of(opt))));
    return 0;
}

int cmd_check(const Options& opt) {
    const Matroid m = load_matroid(opt.input, input_kind_of(opt));
    bool ok = true;

    const AxiomReport axioms = check_axioms(m);
    if (axioms.ok) {
        std::cout << "axioms: ok\n";
    } else {
        ok = false;
        for (const auto& problem : axioms.problems) {
            std::cout << "axioms: " << problem << "\n";
        }
    }

    const TuttePolynomial direct = tutte_direct(m);
    const std::vector<std::pair<std::string, TuttePolynomial>> engines = {
        {"dc min-index", tutte_dc(m, PivotStrategy::min_index(), MemoPolicy::None)},
        {"dc max-index", tutte_dc(m, PivotStrategy::max_index(), MemoPolicy::None)},
        {"dc-memo min-index", tutte_dc(m, PivotStrategy::min_index(), MemoPolicy::Exact)},
    };
    for (const auto& [name, poly] : engines) {
        const bool agrees = poly == direct;
        ok = ok && agrees;
        std::cout << "engines: direct vs " << name << (agrees ? ": equal" : ": DIFFER")
                  << "\n";
    }
    return ok ? 0 : 2;
}

int cmd_info(const Options& opt) {
    const Matroid m = load_matroid(opt.input, input_kind_of(opt));
    std::cout << "elements: " << m.size() << "\n";
    std::cout << "rank: " << m.rank() << "\n";
    std::cout << "bases: " << m.bases().size() << "\n";
    for (const auto& label : m.ground().labels()) {
        std::cout << "  " << label << ": " << to_string(m.classify(label)) << "\n";
    }
    std::cout << "indecomposable: " << (m.is_indecomposable() ? "yes" : "no");
    if (m.is_indecomposable()) std::cout << " " << class_text(m.indecomposable_class());
    std::cout << "\n";
    try {
        std::cout << "automorphisms: " << automorphism_count(m).str() << "\n";
    } catch (const CapacityExceeded&) {
        std::cout << "automorphisms: not counted (more than 8 elements)\n";
    }
    return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_strategy = true) {
    cmd->add_option("--format", opt.format, "Output form")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    if (with_strategy) {
        cmd->add_option("--strategy", opt.strategy, "Pivot rule")
            ->check(CLI::IsMember({"min-index", "max-index", "random"}));
        cmd->add_option("--seed", opt.seed, "Seed for the random pivot rule")
            ->each([&opt](const std::string&) { opt.seed_given = true; });
    }
    cmd->add_option("--input-kind", opt.input_kind, "Override extension inference")
        ->check(CLI::IsMember({"auto", "matroid", "graph"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact matroid minors, Tutte polynomials, coverings, and K0 classes"};
    app.require_subcommand(1);
    Options opt;

    auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of the input");
    tutte->add_option("input", opt.input, "Matroid or graph file")->required();
    tutte->add_option("--engine", opt.engine, "Computation engine")
        ->check(CLI::IsMember({"direct", "dc", "dc-memo"}));
    add_common(tutte, opt);

    auto* tree = app.add_subcommand("tree", "Indecomposable deletion-contraction tree");
    tree->add_option("input", opt.input, "Matroid or graph file")->required();
    add_common(tree, opt);

    auto* cover = app.add_subcommand("cover", "Indecomposable covering");
    cover->add_option("input", opt.input, "Matroid or graph file")->required();
    add_common(cover, opt);

    auto* refine = app.add_subcommand("refine", "Common refinement of two coverings");
    refine->add_option("first", opt.input, "Tree file of the first covering")->required();
    refine->add_option("second", opt.second_input, "Tree file of the second covering")
        ->required();
    add_common(refine, opt, false);

    auto* k0 = app.add_subcommand("k0", "K0 class of the input");
    k0->add_option("input", opt.input, "Matroid or graph file")->required();
    add_common(k0, opt, false);

    auto* check = app.add_subcommand("check", "Axioms plus engine cross-check");
    check->add_option("input", opt.input, "Matroid or graph file")->required();
    add_common(check, opt, false);

    auto* info = app.add_subcommand("info", "Rank, element classes, automorphisms");
    info->add_option("input", opt.input, "Matroid or graph file")->required();
    add_common(info, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (tutte->parsed()) return cmd_tutte(opt);
        if (tree->parsed()) return cmd_tree(opt);
        if (cover->parsed()) return cmd_cover(opt);
        if (refine->parsed()) return cmd_refine(opt);
        if (k0->parsed()) return cmd_k0(opt);
        if (check->parsed()) return cmd_check(opt);
        if (info->parsed()) return cmd_info(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
