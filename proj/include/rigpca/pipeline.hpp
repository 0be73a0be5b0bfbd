#ifndef RIGPCA_PIPELINE_HPP
#define RIGPCA_PIPELINE_HPP

#include <cstddef>
#include <filesystem>
#include <string>

namespace rigpca {

// Everything a subcommand needs; flags it does not use are ignored.
struct RunConfig {
    std::filesystem::path input;
    std::string format = "jsonl-corpus"; // jsonl-corpus | tsv-matrix | tsv-rig
    std::filesystem::path out_dir;
    std::filesystem::path lexicon; // optional word whitelist

    double condition_number = 10.0;
    double zero_halfwidth = 0.0;   // 0 = default 1/(2*sqrt(n))
    std::size_t pc_count = 0;      // 0 = number retained by PCA-CN
    std::size_t single_pc = 0;     // 0 = all PCs up to pc_count
    std::string group_method = "threshold"; // threshold | step-fit
    std::size_t top_words = 0;     // rig: also export per-category top lists
    std::size_t extreme_categories = 10;
    std::size_t extreme_words = 150;
    unsigned threads = 1;
    bool force = false; // recompute even when the cached artifact is current
};

void cmd_stats(const RunConfig& config);
void cmd_rig(const RunConfig& config);
void cmd_pca(const RunConfig& config);
void cmd_select(const RunConfig& config);
void cmd_group(const RunConfig& config);
void cmd_extremes(const RunConfig& config);
void cmd_scores(const RunConfig& config);

} // namespace rigpca

#endif
