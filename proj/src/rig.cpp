#include "rigpca/rig.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "rigpca/errors.hpp"

namespace rigpca {

namespace {

// Binary entropy in nats, with the 0*log(0) := 0 convention. The RIG ratio
// is base-independent, so the base never matters.
double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

} // namespace

double rig(const FrequencyMatrix& freq, std::size_t word, std::size_t category) {
    const double total = static_cast<double>(freq.total_texts);
    const std::int64_t in_category = freq.texts_per_category[category];
    if (in_category <= 0 || in_category >= freq.total_texts)
        throw ValidationError("zero category entropy for '" + freq.categories[category] +
                              "' (" + std::to_string(in_category) + " of " +
                              std::to_string(freq.total_texts) + " texts)");

    const std::int64_t with_word = freq.texts_with_word[word];
    const std::int64_t both = freq.df[word][category];

    const double h_category = binary_entropy(static_cast<double>(in_category) / total);

    // Condition on word presence over the 2x2 contingency table.
    double h_conditional = 0.0;
    if (with_word > 0) {
        const double p_word = static_cast<double>(with_word) / total;
        h_conditional += p_word * binary_entropy(static_cast<double>(both) /
                                                 static_cast<double>(with_word));
    }
    if (with_word < freq.total_texts) {
        const double p_absent = static_cast<double>(freq.total_texts - with_word) / total;
        h_conditional += p_absent * binary_entropy(static_cast<double>(in_category - both) /
                                                   static_cast<double>(freq.total_texts - with_word));
    }

    double value = (h_category - h_conditional) / h_category;
    // Information gain is non-negative; rounding can leave a stray -1e-17.
    if (value < 0.0) value = 0.0;
    if (value > 1.0) value = 1.0;
    return value;
}

RigMatrix build_rig_matrix(const FrequencyMatrix& freq, unsigned threads) {
    const std::size_t nw = freq.words.size();
    const std::size_t nc = freq.categories.size();
    for (std::size_t j = 0; j < nc; ++j) {
        if (freq.texts_per_category[j] <= 0 || freq.texts_per_category[j] >= freq.total_texts)
            throw ValidationError("zero category entropy for '" + freq.categories[j] +
                                  "' (" + std::to_string(freq.texts_per_category[j]) + " of " +
                                  std::to_string(freq.total_texts) + " texts)");
    }

    RigMatrix out;
    out.word_order = freq.words;
    out.category_order = freq.categories;
    out.values = Matrix(nw, nc);

    auto fill_rows = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < nc; ++j) out.values(i, j) = rig(freq, i, j);
    };

    if (threads <= 1 || nw < 2) {
        fill_rows(0, nw);
        return out;
    }

    // Rows are disjoint, so each cell is written once by one worker; the
    // values are a pure per-cell function and do not depend on the split.
    const unsigned worker_count = static_cast<unsigned>(
        std::min<std::size_t>(threads, nw));
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    const std::size_t chunk = (nw + worker_count - 1) / worker_count;
    for (unsigned w = 0; w < worker_count; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(nw, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back(fill_rows, begin, end);
    }
    for (auto& t : workers) t.join();
    return out;
}

std::vector<RankedWord> top_informative_words(const RigMatrix& rig, std::size_t category,
                                              std::size_t n) {
    if (n < 1) throw ValidationError("top_informative_words: n must be >= 1");
    const std::size_t nw = rig.word_order.size();
    std::vector<std::size_t> idx(nw);
    for (std::size_t i = 0; i < nw; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        double va = rig.values(a, category);
        double vb = rig.values(b, category);
        if (va != vb) return va > vb;
        return rig.word_order[a] < rig.word_order[b];
    });
    const std::size_t take = std::min(n, nw);
    std::vector<RankedWord> out;
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i)
        out.push_back({rig.word_order[idx[i]], rig.values(idx[i], category)});
    return out;
}

double word_informativeness(const RigMatrix& rig, std::size_t word) {
    double sum = 0.0;
    for (std::size_t j = 0; j < rig.category_order.size(); ++j) sum += rig.values(word, j);
    return sum;
}

} // namespace rigpca
