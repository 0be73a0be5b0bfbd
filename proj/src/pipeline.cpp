#include "rigpca/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rigpca/corpus.hpp"
#include "rigpca/errors.hpp"
#include "rigpca/grouping.hpp"
#include "rigpca/io.hpp"
#include "rigpca/pca.hpp"
#include "rigpca/rig.hpp"
#include "rigpca/selection.hpp"

namespace rigpca {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Manifest: per-artifact content hashes plus the hashes of whatever each
// artifact was produced from. Reading a stale or foreign artifact fails loudly.

std::filesystem::path manifest_path(const RunConfig& config) {
    return config.out_dir / "manifest.json";
}

json load_manifest(const RunConfig& config) {
    const auto path = manifest_path(config);
    if (!std::filesystem::exists(path)) return json{{"artifacts", json::object()}};
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": malformed manifest: " + e.what());
    }
    if (!doc.contains("artifacts")) doc["artifacts"] = json::object();
    return doc;
}

void store_manifest(const RunConfig& config, const json& doc) {
    write_file(manifest_path(config), doc.dump(2) + "\n");
}

// Records an artifact after writing it.
void record_artifact(json& manifest, const RunConfig& config, const std::string& name,
                     const json& inputs, const json& params = json::object()) {
    json entry;
    entry["hash"] = hash_file(config.out_dir / name);
    entry["inputs"] = inputs;
    entry["params"] = params;
    manifest["artifacts"][name] = std::move(entry);
}

// Verifies an upstream artifact is the one this output directory produced.
void check_artifact(const json& manifest, const RunConfig& config, const std::string& name,
                    const std::string& producer) {
    const auto path = config.out_dir / name;
    if (!std::filesystem::exists(path))
        throw ValidationError("missing artifact '" + name + "' in " + config.out_dir.string() +
                              "; run `rigpca " + producer + "` first");
    if (!manifest["artifacts"].contains(name))
        throw ValidationError("artifact '" + name + "' is not recorded in the manifest; run `rigpca " +
                              producer + "` to regenerate it");
    const std::string expected = manifest["artifacts"][name]["hash"].get<std::string>();
    if (hash_file(path) != expected)
        throw ValidationError("artifact '" + name +
                              "' does not match the manifest (modified or mixed from another "
                              "run); re-run `rigpca " + producer + "`");
}

bool artifact_current(const json& manifest, const RunConfig& config, const std::string& name,
                      const json& inputs, const json& params) {
    if (config.force) return false;
    if (!manifest["artifacts"].contains(name)) return false;
    const json& entry = manifest["artifacts"][name];
    if (entry["inputs"] != inputs || entry["params"] != params) return false;
    const auto path = config.out_dir / name;
    if (!std::filesystem::exists(path)) return false;
    return hash_file(path) == entry["hash"].get<std::string>();
}

// ---------------------------------------------------------------------------
// Input loading

std::set<std::string> load_lexicon(const RunConfig& config) {
    std::set<std::string> lexicon;
    std::istringstream in(read_file(config.lexicon));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lexicon.insert(line);
    }
    if (lexicon.empty())
        throw ValidationError(config.lexicon.string() + ": lexicon file has no words");
    return lexicon;
}

json input_fingerprint(const RunConfig& config) {
    json inputs;
    inputs["input"] = hash_file(config.input);
    if (config.format == "tsv-matrix")
        inputs["input.meta"] = hash_file(config.input.string() + ".meta.json");
    if (!config.lexicon.empty()) inputs["lexicon"] = hash_file(config.lexicon);
    return inputs;
}

struct LoadedInput {
    std::optional<Corpus> corpus; // only for jsonl-corpus
    FrequencyMatrix freq;         // lexicon restriction already applied
    std::optional<std::set<std::string>> lexicon;
};

LoadedInput load_counts(const RunConfig& config) {
    LoadedInput loaded;
    if (!config.lexicon.empty()) loaded.lexicon = load_lexicon(config);

    if (config.format == "jsonl-corpus") {
        std::ifstream in(config.input, std::ios::binary);
        if (!in) throw ValidationError("cannot open '" + config.input.string() + "'");
        loaded.corpus = ingest_jsonl(in, config.input.string());
        loaded.freq = build_frequency_matrix(*loaded.corpus);
    } else if (config.format == "tsv-matrix") {
        loaded.freq = read_frequency_matrix_tsv(config.input);
    } else {
        throw ValidationError("this command needs --format jsonl-corpus or tsv-matrix, not '" +
                              config.format + "'");
    }
    if (loaded.lexicon) loaded.freq = loaded.freq.restrict_words(*loaded.lexicon);
    return loaded;
}

// ---------------------------------------------------------------------------
// Shared downstream helpers

RigMatrix load_rig_artifact(const json& manifest, const RunConfig& config) {
    check_artifact(manifest, config, "rig_matrix.tsv", "rig");
    return read_rig_matrix_tsv(config.out_dir / "rig_matrix.tsv");
}

NamedPcaModel load_model_artifact(const json& manifest, const RunConfig& config) {
    check_artifact(manifest, config, "pca_model.json", "pca");
    return read_pca_model_json(config.out_dir / "pca_model.json");
}

// PCs to process: explicit --pc wins, then --pcs, then the PCA-CN choice.
std::vector<std::size_t> selected_pcs(const RunConfig& config, const PcaModel& model) {
    const std::size_t n = model.n_attributes;
    if (config.single_pc > 0) {
        if (config.single_pc > n)
            throw ValidationError("--pc " + std::to_string(config.single_pc) +
                                  " exceeds the number of components (" + std::to_string(n) + ")");
        return {config.single_pc};
    }
    std::size_t m = config.pc_count;
    if (m == 0) {
        SelectionParams params;
        params.condition_number = config.condition_number;
        m = pca_cn(model.eigenvalues, params).retained;
    }
    if (m == 0 || m > n)
        throw ValidationError("--pcs " + std::to_string(m) + " out of range [1, " +
                              std::to_string(n) + "]");
    std::vector<std::size_t> pcs(m);
    for (std::size_t k = 0; k < m; ++k) pcs[k] = k + 1;
    return pcs;
}

std::string scores_row(const std::string& label, const Matrix& scores, std::size_t row,
                       std::size_t m) {
    std::string line = label;
    for (std::size_t k = 0; k < m; ++k) {
        line += '\t';
        line += format_sig(scores(row, k), 12);
    }
    line += '\n';
    return line;
}

} // namespace

// ---------------------------------------------------------------------------

void cmd_stats(const RunConfig& config) {
    json manifest = load_manifest(config);
    const json inputs = input_fingerprint(config);
    LoadedInput loaded = load_counts(config);
    const FrequencyMatrix& freq = loaded.freq;

    json summary;
    summary["total_texts"] = freq.total_texts;
    summary["categories"] = freq.categories.size();
    summary["vocabulary"] = freq.words.size();
    summary["lexicon_size"] =
        loaded.lexicon ? json(loaded.lexicon->size()) : json(nullptr);

    std::vector<std::string> written;

    if (loaded.corpus) {
        const std::set<std::string> lex =
            loaded.lexicon ? *loaded.lexicon
                           : std::set<std::string>(loaded.corpus->vocabulary.begin(),
                                                   loaded.corpus->vocabulary.end());
        const WordsPerTextStats wpt = words_per_text_histogram(*loaded.corpus, lex);
        std::ostringstream out;
        out << "words\tnum_texts\n";
        for (const auto& [count, texts] : wpt.histogram) out << count << '\t' << texts << '\n';
        write_file(config.out_dir / "stats/words_per_text.tsv", out.str());
        written.push_back("stats/words_per_text.tsv");
        summary["words_per_text"] = {{"min", wpt.min}, {"max", wpt.max}, {"mean", wpt.mean}};
        char mean_buf[64];
        std::snprintf(mean_buf, sizeof(mean_buf), "%.6f", wpt.mean);
        std::cout << "words per text: min=" << wpt.min << " max=" << wpt.max
                  << " mean=" << mean_buf << "\n";
    } else {
        // A precomputed matrix has no per-text information.
        summary["words_per_text"] = nullptr;
        std::cout << "words-per-text histogram unavailable for tsv-matrix input\n";
    }

    const WordsPerCategoryStats wpc = words_per_category(freq);
    {
        std::ostringstream out;
        out << "category\tword_count\n";
        for (std::size_t j = 0; j < freq.categories.size(); ++j)
            out << freq.categories[j] << '\t' << wpc.counts[j] << '\n';
        write_file(config.out_dir / "stats/words_per_category.tsv", out.str());
        written.push_back("stats/words_per_category.tsv");

        std::ostringstream bands;
        bands << "band\tnum_categories\n";
        for (std::size_t b = 0; b < wpc.band_labels.size(); ++b)
            bands << wpc.band_labels[b] << '\t' << wpc.band_counts[b] << '\n';
        write_file(config.out_dir / "stats/words_per_category_bands.tsv", bands.str());
        written.push_back("stats/words_per_category_bands.tsv");
    }

    const CategoriesPerWordStats cpw = categories_per_word(freq);
    {
        std::ostringstream out;
        out << "word\tcategory_count\n";
        for (std::size_t i = 0; i < freq.words.size(); ++i)
            out << freq.words[i] << '\t' << cpw.counts[i] << '\n';
        write_file(config.out_dir / "stats/categories_per_word.tsv", out.str());
        written.push_back("stats/categories_per_word.tsv");

        std::ostringstream hist;
        hist << "categories\tnum_words\n";
        for (const auto& [count, words] : cpw.histogram) hist << count << '\t' << words << '\n';
        write_file(config.out_dir / "stats/categories_per_word_hist.tsv", hist.str());
        written.push_back("stats/categories_per_word_hist.tsv");
    }

    write_file(config.out_dir / "stats/summary.json", summary.dump(2) + "\n");
    written.push_back("stats/summary.json");

    for (const auto& name : written) record_artifact(manifest, config, name, inputs);
    store_manifest(config, manifest);
    std::cout << "wrote " << written.size() << " statistics files to "
              << (config.out_dir / "stats").string() << "\n";
}

void cmd_rig(const RunConfig& config) {
    json manifest = load_manifest(config);
    const json inputs = input_fingerprint(config);
    json params;
    params["format"] = config.format;
    params["top_words"] = config.top_words;

    std::vector<std::string> outputs = {"rig_matrix.tsv"};
    if (config.top_words > 0) outputs.push_back("rig_top_words.json");
    const bool cached = std::all_of(outputs.begin(), outputs.end(), [&](const std::string& name) {
        return artifact_current(manifest, config, name, inputs, params);
    });
    if (cached) {
        std::cout << "rig_matrix.tsv is current; skipping (use --force to recompute)\n";
        return;
    }

    RigMatrix matrix;
    if (config.format == "tsv-rig") {
        // Pass-through: validate and normalize the provided matrix.
        matrix = read_rig_matrix_tsv(config.input);
        if (!config.lexicon.empty()) {
            const auto lexicon = load_lexicon(config);
            RigMatrix restricted;
            restricted.category_order = matrix.category_order;
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < matrix.word_order.size(); ++i)
                if (lexicon.count(matrix.word_order[i])) keep.push_back(i);
            if (keep.empty())
                throw ValidationError("lexicon shares no words with the RIG matrix");
            restricted.values = Matrix(keep.size(), matrix.category_order.size());
            for (std::size_t i = 0; i < keep.size(); ++i) {
                restricted.word_order.push_back(matrix.word_order[keep[i]]);
                for (std::size_t j = 0; j < matrix.category_order.size(); ++j)
                    restricted.values(i, j) = matrix.values(keep[i], j);
            }
            matrix = std::move(restricted);
        }
    } else {
        LoadedInput loaded = load_counts(config);
        matrix = build_rig_matrix(loaded.freq, config.threads);
    }

    write_file(config.out_dir / "rig_matrix.tsv", rig_matrix_tsv(matrix));
    record_artifact(manifest, config, "rig_matrix.tsv", inputs, params);

    if (config.top_words > 0) {
        json lists = json::array();
        for (std::size_t j = 0; j < matrix.category_order.size(); ++j) {
            json entry;
            entry["category"] = matrix.category_order[j];
            json words = json::array();
            for (const RankedWord& rw : top_informative_words(matrix, j, config.top_words))
                words.push_back({{"word", rw.word}, {"rig", rw.rig}});
            entry["words"] = std::move(words);
            lists.push_back(std::move(entry));
        }
        write_file(config.out_dir / "rig_top_words.json", lists.dump(2) + "\n");
        record_artifact(manifest, config, "rig_top_words.json", inputs, params);
    }

    store_manifest(config, manifest);
    std::cout << "wrote rig_matrix.tsv (" << matrix.word_order.size() << " words x "
              << matrix.category_order.size() << " categories)\n";
}

void cmd_pca(const RunConfig& config) {
    json manifest = load_manifest(config);
    check_artifact(manifest, config, "rig_matrix.tsv", "rig");
    json inputs;
    inputs["rig_matrix.tsv"] = manifest["artifacts"]["rig_matrix.tsv"]["hash"];

    if (artifact_current(manifest, config, "pca_model.json", inputs, json::object())) {
        std::cout << "pca_model.json is current; skipping (use --force to recompute)\n";
        return;
    }

    const RigMatrix matrix = read_rig_matrix_tsv(config.out_dir / "rig_matrix.tsv");
    // Name the offending category up front; the fit itself only knows indices.
    for (std::size_t j = 0; j < matrix.category_order.size(); ++j) {
        double lo = matrix.values(0, j), hi = matrix.values(0, j);
        for (std::size_t i = 0; i < matrix.word_order.size(); ++i) {
            lo = std::min(lo, matrix.values(i, j));
            hi = std::max(hi, matrix.values(i, j));
        }
        if (lo == hi)
            throw ValidationError("category '" + matrix.category_order[j] +
                                  "' has constant RIG over all words; PCA undefined");
    }

    const PcaModel model = fit(matrix.values);
    write_file(config.out_dir / "pca_model.json", pca_model_json(model, matrix.category_order));
    record_artifact(manifest, config, "pca_model.json", inputs, json::object());
    store_manifest(config, manifest);

    char pc1[64];
    std::snprintf(pc1, sizeof(pc1), "%.4f", model.variance_fraction.empty() ? 0.0
                                                                            : model.variance_fraction[0]);
    std::cout << "wrote pca_model.json (" << model.n_attributes
              << " components; PC1 variance fraction " << pc1 << ")\n";
}

void cmd_select(const RunConfig& config) {
    json manifest = load_manifest(config);
    const NamedPcaModel named = load_model_artifact(manifest, config);
    const RigMatrix matrix = load_rig_artifact(manifest, config);
    if (matrix.category_order != named.attributes)
        throw ValidationError("pca_model.json and rig_matrix.tsv disagree on categories; "
                              "re-run `rigpca pca`");

    SelectionParams params;
    params.condition_number = config.condition_number;
    const SelectionSummary summary = select_all(named.model, params);
    const DoubleKaiserResult dk = double_kaiser(matrix.values, matrix.category_order);

    auto result_json = [](const SelectionResult& r) {
        json diag;
        if (r.method == "kaiser") diag["threshold"] = r.threshold;
        if (r.method == "broken_stick") diag["expectations"] = r.expectations;
        if (r.method == "pca_cn") {
            diag["condition_number"] = r.condition_number;
            diag["ratios"] = r.ratios;
        }
        return json{{"method", r.method}, {"m", r.retained}, {"diagnostics", std::move(diag)}};
    };

    json doc;
    doc["kaiser"] = result_json(summary.kaiser);
    doc["broken_stick"] = result_json(summary.broken_stick);
    doc["pca_cn"] = result_json(summary.pca_cn);
    json dropped = json::array();
    for (const DroppedAttribute& d : dk.dropped)
        dropped.push_back({{"attribute", d.attribute},
                           {"iteration", d.iteration},
                           {"importance", d.importance}});
    doc["double_kaiser"] = {{"survivors", dk.informative_attributes},
                            {"dropped", std::move(dropped)},
                            {"iterations", dk.iterations},
                            {"no_informative_pcs", dk.no_informative_pcs}};

    write_file(config.out_dir / "selection.json", doc.dump(2) + "\n");
    json inputs;
    inputs["pca_model.json"] = manifest["artifacts"]["pca_model.json"]["hash"];
    inputs["rig_matrix.tsv"] = manifest["artifacts"]["rig_matrix.tsv"]["hash"];
    json sel_params;
    sel_params["condition_number"] = config.condition_number;
    record_artifact(manifest, config, "selection.json", inputs, sel_params);
    store_manifest(config, manifest);

    std::cout << "kaiser=" << summary.kaiser.retained
              << " broken_stick=" << summary.broken_stick.retained
              << " pca_cn=" << summary.pca_cn.retained << "\n";
    std::cout << "double_kaiser: " << dk.informative_attributes.size() << " of "
              << matrix.category_order.size() << " attributes retained after " << dk.iterations
              << " drop(s)\n";
}

void cmd_group(const RunConfig& config) {
    json manifest = load_manifest(config);
    const NamedPcaModel named = load_model_artifact(manifest, config);
    const PcaModel& model = named.model;

    if (config.group_method != "threshold" && config.group_method != "step-fit")
        throw ValidationError("--method must be 'threshold' or 'step-fit'");

    GroupingParams gparams = GroupingParams::for_dimension(model.n_attributes);
    if (config.zero_halfwidth > 0.0) gparams.zero_halfwidth = config.zero_halfwidth;

    const std::vector<std::size_t> pcs = selected_pcs(config, model);

    json inputs;
    inputs["pca_model.json"] = manifest["artifacts"]["pca_model.json"]["hash"];
    json params;
    params["method"] = config.group_method;
    if (config.group_method == "threshold") params["zero_halfwidth"] = gparams.zero_halfwidth;

    json summary;
    summary["method"] = config.group_method;
    if (config.group_method == "threshold") summary["zero_halfwidth"] = gparams.zero_halfwidth;
    json per_pc = json::array();

    for (std::size_t pc : pcs) {
        const std::vector<double> component = model.components.col(pc - 1);
        const double lambda = model.eigenvalues[pc - 1];
        GroupingResult groups =
            config.group_method == "threshold"
                ? threshold_groups(component, named.attributes, gparams, pc)
                : step_groups(component, named.attributes, pc);

        const double scale = std::sqrt(std::max(0.0, lambda));
        auto write_group = [&](const std::vector<AttributeCoefficient>& list,
                               const std::string& tag) {
            std::ostringstream out;
            out << "No.\tAttribute\tComponent Coefficient\tLoading\n";
            for (std::size_t i = 0; i < list.size(); ++i)
                out << (i + 1) << '\t' << list[i].name << '\t'
                    << format_sig(list[i].coefficient, 12) << '\t'
                    << format_sig(list[i].coefficient * scale, 12) << '\n';
            const std::string name = "groups/pc" + std::to_string(pc) + "_" + tag + ".tsv";
            write_file(config.out_dir / name, out.str());
            record_artifact(manifest, config, name, inputs, params);
        };
        write_group(groups.positive, "positive");
        write_group(groups.zero, "zero");
        write_group(groups.negative, "negative");

        json entry;
        entry["pc"] = pc;
        entry["positive"] = groups.positive.size();
        entry["zero"] = groups.zero.size();
        entry["negative"] = groups.negative.size();
        entry["degenerate"] = groups.degenerate;
        if (config.group_method == "step-fit" && !groups.degenerate) {
            const StepFitResult fitted = step_fit_three(component);
            entry["k"] = fitted.k;
            entry["r"] = fitted.r;
            entry["alpha"] = fitted.alpha;
            entry["beta"] = fitted.beta;
            entry["w1"] = fitted.objective_w1;
            entry["w2"] = fitted.objective_w2;
        }
        per_pc.push_back(std::move(entry));
        std::cout << "PC" << pc << ": positive=" << groups.positive.size()
                  << " zero=" << groups.zero.size() << " negative=" << groups.negative.size()
                  << (groups.degenerate ? " (degenerate)" : "") << "\n";
    }

    summary["pcs"] = std::move(per_pc);
    write_file(config.out_dir / "groups/summary.json", summary.dump(2) + "\n");
    record_artifact(manifest, config, "groups/summary.json", inputs, params);
    store_manifest(config, manifest);
}

void cmd_extremes(const RunConfig& config) {
    json manifest = load_manifest(config);
    const NamedPcaModel named = load_model_artifact(manifest, config);
    const RigMatrix matrix = load_rig_artifact(manifest, config);
    if (matrix.category_order != named.attributes)
        throw ValidationError("pca_model.json and rig_matrix.tsv disagree on categories; "
                              "re-run `rigpca pca`");

    json inputs;
    inputs["pca_model.json"] = manifest["artifacts"]["pca_model.json"]["hash"];
    inputs["rig_matrix.tsv"] = manifest["artifacts"]["rig_matrix.tsv"]["hash"];
    json params;
    params["n_categories"] = config.extreme_categories;
    params["n_words"] = config.extreme_words;

    for (std::size_t pc : selected_pcs(config, named.model)) {
        const ExtremeTopicReport report =
            extreme_topic_report(matrix, named.model.components.col(pc - 1),
                                 config.extreme_categories, config.extreme_words);
        auto end_json = [](const ExtremeEnd& end) {
            json words = json::array();
            for (const RankedWord& rw : end.common_words)
                words.push_back({{"word", rw.word}, {"summed_rig", rw.rig}});
            return json{{"categories", end.categories}, {"common_words", std::move(words)}};
        };
        json doc;
        doc["pc"] = pc;
        doc["n_categories"] = config.extreme_categories;
        doc["n_words"] = config.extreme_words;
        doc["positive"] = end_json(report.positive);
        doc["negative"] = end_json(report.negative);
        const std::string name = "extremes/pc" + std::to_string(pc) + ".json";
        write_file(config.out_dir / name, doc.dump(2) + "\n");
        record_artifact(manifest, config, name, inputs, params);
        std::cout << name << ": " << report.positive.common_words.size()
                  << " common positive words, " << report.negative.common_words.size()
                  << " common negative words\n";
    }
    store_manifest(config, manifest);
}

void cmd_scores(const RunConfig& config) {
    json manifest = load_manifest(config);
    const NamedPcaModel named = load_model_artifact(manifest, config);
    const RigMatrix matrix = load_rig_artifact(manifest, config);
    if (matrix.category_order != named.attributes)
        throw ValidationError("pca_model.json and rig_matrix.tsv disagree on categories; "
                              "re-run `rigpca pca`");

    const std::vector<std::size_t> pcs = selected_pcs(config, named.model);
    const std::size_t m = pcs.back();

    json inputs;
    inputs["pca_model.json"] = manifest["artifacts"]["pca_model.json"]["hash"];
    inputs["rig_matrix.tsv"] = manifest["artifacts"]["rig_matrix.tsv"]["hash"];

    {
        const ScoreMatrix word_scores = scores(named.model, matrix.values, m);
        std::ostringstream out;
        out << "word";
        for (std::size_t k = 1; k <= m; ++k) out << "\tPC" << k;
        out << '\n';
        for (std::size_t i = 0; i < matrix.word_order.size(); ++i)
            out << scores_row(matrix.word_order[i], word_scores.scores, i, m);
        write_file(config.out_dir / "scores/word_scores.tsv", out.str());
        record_artifact(manifest, config, "scores/word_scores.tsv", inputs, json::object());
    }

    {
        // Dual view: categories as observations in the word space.
        for (std::size_t i = 0; i < matrix.word_order.size(); ++i) {
            double lo = matrix.values(i, 0), hi = matrix.values(i, 0);
            for (std::size_t j = 0; j < matrix.category_order.size(); ++j) {
                lo = std::min(lo, matrix.values(i, j));
                hi = std::max(hi, matrix.values(i, j));
            }
            if (lo == hi)
                throw ValidationError("word '" + matrix.word_order[i] +
                                      "' has constant RIG over all categories; dual view undefined");
        }
        const PcaModel dual = dual_fit(matrix.values);
        const std::size_t dual_m = std::min(m, dual.n_attributes);
        const ScoreMatrix cat_scores = scores(dual, matrix.values.transposed(), dual_m);
        std::ostringstream out;
        out << "category";
        for (std::size_t k = 1; k <= dual_m; ++k) out << "\tPC" << k;
        out << '\n';
        for (std::size_t j = 0; j < matrix.category_order.size(); ++j)
            out << scores_row(matrix.category_order[j], cat_scores.scores, j, dual_m);
        write_file(config.out_dir / "scores/category_coordinates.tsv", out.str());
        record_artifact(manifest, config, "scores/category_coordinates.tsv", inputs,
                        json::object());
    }

    store_manifest(config, manifest);
    std::cout << "wrote scores/word_scores.tsv and scores/category_coordinates.tsv (m=" << m
              << ")\n";
}

} // namespace rigpca
