#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rigpca/errors.hpp"
#include "rigpca/pipeline.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

void add_io_options(CLI::App* cmd, rigpca::RunConfig& config, bool needs_input) {
    auto* input = cmd->add_option("-i,--input", config.input, "Input file");
    cmd->add_option("-f,--format", config.format,
                    "Input format: jsonl-corpus | tsv-matrix | tsv-rig")
        ->check(CLI::IsMember({"jsonl-corpus", "tsv-matrix", "tsv-rig"}));
    cmd->add_option("-o,--out", config.out_dir, "Output directory")->required();
    cmd->add_option("--lexicon", config.lexicon, "Word whitelist, one word per line");
    cmd->add_flag("--force", config.force, "Recompute even when cached artifacts are current");
    if (needs_input) input->required();
}

void add_method_options(CLI::App* cmd, rigpca::RunConfig& config) {
    cmd->add_option("--condition-number", config.condition_number,
                    "PCA-CN condition number C (default 10)")
        ->check(CLI::Range(1.0 + 1e-9, 1e12));
    cmd->add_option("--zero-halfwidth", config.zero_halfwidth,
                    "Zero-interval half-width (default 1/(2*sqrt(n)))")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--pcs", config.pc_count, "Number of leading PCs to process");
    cmd->add_option("--pc", config.single_pc, "Process a single PC (1-based)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Word-category RIG matrix, PCA component retention and attribute grouping"};
    app.require_subcommand(1);

    rigpca::RunConfig config;
    std::function<void(const rigpca::RunConfig&)> action;

    auto* stats = app.add_subcommand("stats", "Corpus statistics (words per text/category)");
    add_io_options(stats, config, true);
    stats->callback([&] { action = rigpca::cmd_stats; });

    auto* rig = app.add_subcommand("rig", "Build the word-category RIG matrix");
    add_io_options(rig, config, true);
    rig->add_option("--top-words", config.top_words,
                    "Also export the top-N informative words per category");
    rig->add_option("--threads", config.threads, "Worker threads for the matrix build")
        ->check(CLI::Range(1u, 256u));
    rig->callback([&] { action = rigpca::cmd_rig; });

    auto* pca = app.add_subcommand("pca", "Fit PCA on the RIG matrix artifact");
    add_io_options(pca, config, false);
    pca->callback([&] { action = rigpca::cmd_pca; });

    auto* select = app.add_subcommand("select",
                                      "Retention counts (Kaiser, Broken Stick, PCA-CN) and the "
                                      "Double Kaiser attribute ledger");
    add_io_options(select, config, false);
    add_method_options(select, config);
    select->callback([&] { action = rigpca::cmd_select; });

    auto* group = app.add_subcommand("group", "Partition attributes per PC");
    add_io_options(group, config, false);
    add_method_options(group, config);
    group->add_option("--method", config.group_method, "Grouping rule: threshold | step-fit")
        ->check(CLI::IsMember({"threshold", "step-fit"}));
    group->callback([&] { action = rigpca::cmd_group; });

    auto* extremes = app.add_subcommand("extremes", "Extreme topic groups at both ends of a PC");
    add_io_options(extremes, config, false);
    add_method_options(extremes, config);
    extremes->add_option("--n-categories", config.extreme_categories,
                         "Categories per end (default 10)");
    extremes->add_option("--n-words", config.extreme_words,
                         "Top informative words per category (default 150)");
    extremes->callback([&] { action = rigpca::cmd_extremes; });

    auto* scores = app.add_subcommand("scores",
                                      "Word scores and dual category coordinates");
    add_io_options(scores, config, false);
    add_method_options(scores, config);
    scores->callback([&] { action = rigpca::cmd_scores; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        action(config);
    } catch (const rigpca::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const rigpca::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
