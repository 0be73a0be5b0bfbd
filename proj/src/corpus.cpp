#include "rigpca/corpus.hpp"

#include <algorithm>
#include <set>
#include <string>

#include <json.hpp>

#include "rigpca/errors.hpp"

namespace rigpca {

namespace {

bool printable_token(const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (c == '\t' || c == '\n' || c == '\r') return false;
    return true;
}

void validate_record(const TextRecord& rec, const std::string& where) {
    if (rec.id.empty()) throw ValidationError(where + ": empty text id");
    if (rec.category_labels.empty()) throw ValidationError(where + ": missing category");
    if (rec.tokens.empty()) throw ValidationError(where + ": text with zero tokens");
    for (const auto& c : rec.category_labels)
        if (!printable_token(c))
            throw ValidationError(where + ": category name empty or contains tab/newline");
    for (const auto& t : rec.tokens)
        if (!printable_token(t))
            throw ValidationError(where + ": token empty or contains tab/newline");
}

} // namespace

Corpus ingest(const std::vector<TextRecord>& records) {
    if (records.empty()) throw ValidationError("empty corpus");
    Corpus corpus;
    std::set<std::string> ids;
    std::set<std::string> cats;
    std::set<std::string> vocab;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const TextRecord& rec = records[i];
        validate_record(rec, "record " + std::to_string(i + 1) + " (id '" + rec.id + "')");
        if (!ids.insert(rec.id).second)
            throw ValidationError("duplicate text id '" + rec.id + "'");
        cats.insert(rec.category_labels.begin(), rec.category_labels.end());
        vocab.insert(rec.tokens.begin(), rec.tokens.end());
    }
    corpus.texts = records;
    corpus.categories.assign(cats.begin(), cats.end());  // std::set iterates sorted
    corpus.vocabulary.assign(vocab.begin(), vocab.end());
    return corpus;
}

Corpus ingest_jsonl(std::istream& in, const std::string& source_name) {
    std::vector<TextRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = source_name + ":" + std::to_string(line_no);
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ValidationError(where + ": malformed record: " + e.what());
        }
        if (!obj.is_object()) throw ValidationError(where + ": record is not a JSON object");
        TextRecord rec;
        if (!obj.contains("id") || !obj["id"].is_string())
            throw ValidationError(where + ": missing string field 'id'");
        rec.id = obj["id"].get<std::string>();
        if (!obj.contains("categories") || !obj["categories"].is_array())
            throw ValidationError(where + ": missing array field 'categories'");
        for (const auto& c : obj["categories"]) {
            if (!c.is_string()) throw ValidationError(where + ": non-string category");
            rec.category_labels.insert(c.get<std::string>());
        }
        if (rec.category_labels.empty()) throw ValidationError(where + ": missing category");
        if (!obj.contains("tokens") || !obj["tokens"].is_array())
            throw ValidationError(where + ": missing array field 'tokens'");
        for (const auto& t : obj["tokens"]) {
            if (!t.is_string()) throw ValidationError(where + ": non-string token");
            rec.tokens.insert(t.get<std::string>());
        }
        if (rec.tokens.empty()) throw ValidationError(where + ": text with zero tokens");
        validate_record(rec, where);
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw ValidationError(source_name + ": empty corpus");
    return ingest(records);
}

FrequencyMatrix build_frequency_matrix(const Corpus& corpus) {
    FrequencyMatrix freq;
    freq.words = corpus.vocabulary;
    freq.categories = corpus.categories;
    freq.total_texts = static_cast<std::int64_t>(corpus.texts.size());
    const std::size_t nw = freq.words.size();
    const std::size_t nc = freq.categories.size();
    freq.df.assign(nw, std::vector<std::int64_t>(nc, 0));
    freq.texts_per_category.assign(nc, 0);
    freq.texts_with_word.assign(nw, 0);

    std::map<std::string, std::size_t> word_index;
    std::map<std::string, std::size_t> cat_index;
    for (std::size_t i = 0; i < nw; ++i) word_index[freq.words[i]] = i;
    for (std::size_t j = 0; j < nc; ++j) cat_index[freq.categories[j]] = j;

    for (const TextRecord& text : corpus.texts) {
        std::vector<std::size_t> cats;
        cats.reserve(text.category_labels.size());
        for (const auto& c : text.category_labels) {
            std::size_t j = cat_index.at(c);
            cats.push_back(j);
            ++freq.texts_per_category[j];
        }
        for (const auto& t : text.tokens) {
            std::size_t i = word_index.at(t);
            ++freq.texts_with_word[i];
            for (std::size_t j : cats) ++freq.df[i][j];
        }
    }
    return freq;
}

FrequencyMatrix FrequencyMatrix::restrict_words(const std::set<std::string>& lexicon) const {
    FrequencyMatrix out;
    out.categories = categories;
    out.texts_per_category = texts_per_category;
    out.total_texts = total_texts;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (!lexicon.count(words[i])) continue;
        out.words.push_back(words[i]);
        out.df.push_back(df[i]);
        out.texts_with_word.push_back(texts_with_word[i]);
    }
    if (out.words.empty())
        throw ValidationError("lexicon shares no words with the corpus vocabulary");
    return out;
}

WordsPerTextStats words_per_text_histogram(const Corpus& corpus,
                                           const std::set<std::string>& lexicon) {
    if (lexicon.empty()) throw ValidationError("empty lexicon");
    WordsPerTextStats stats;
    std::int64_t total = 0;
    bool first = true;
    for (const TextRecord& text : corpus.texts) {
        std::int64_t n = 0;
        for (const auto& t : text.tokens)
            if (lexicon.count(t)) ++n;
        ++stats.histogram[n];
        total += n;
        if (first || n < stats.min) stats.min = n;
        if (first || n > stats.max) stats.max = n;
        first = false;
    }
    stats.mean = corpus.texts.empty()
                     ? 0.0
                     : static_cast<double>(total) / static_cast<double>(corpus.texts.size());
    return stats;
}

WordsPerCategoryStats words_per_category(const FrequencyMatrix& freq) {
    WordsPerCategoryStats stats;
    const std::size_t nc = freq.categories.size();
    stats.counts.assign(nc, 0);
    for (std::size_t j = 0; j < nc; ++j)
        for (std::size_t i = 0; i < freq.words.size(); ++i)
            if (freq.df[i][j] > 0) ++stats.counts[j];

    // Band edges follow the reporting convention capped at 5000, with an
    // overflow band for larger vocabularies.
    const std::int64_t edges[] = {1000, 2000, 3000, 4000, 5000};
    stats.band_labels = {"n<=1000", "1000<n<=2000", "2000<n<=3000", "3000<n<=4000",
                         "4000<n<=5000"};
    stats.band_counts.assign(5, 0);
    std::int64_t overflow = 0;
    for (std::int64_t c : stats.counts) {
        bool placed = false;
        for (std::size_t b = 0; b < 5; ++b) {
            if (c <= edges[b]) {
                ++stats.band_counts[b];
                placed = true;
                break;
            }
        }
        if (!placed) ++overflow;
    }
    if (overflow > 0) {
        stats.band_labels.push_back("n>5000");
        stats.band_counts.push_back(overflow);
    }
    return stats;
}

CategoriesPerWordStats categories_per_word(const FrequencyMatrix& freq) {
    CategoriesPerWordStats stats;
    stats.counts.assign(freq.words.size(), 0);
    for (std::size_t i = 0; i < freq.words.size(); ++i) {
        for (std::size_t j = 0; j < freq.categories.size(); ++j)
            if (freq.df[i][j] > 0) ++stats.counts[i];
        ++stats.histogram[stats.counts[i]];
    }
    return stats;
}

void validate_frequency_matrix(const FrequencyMatrix& freq) {
    if (freq.words.size() != freq.df.size() || freq.words.size() != freq.texts_with_word.size())
        throw ValidationError("frequency matrix: row bookkeeping sizes disagree");
    if (freq.categories.size() != freq.texts_per_category.size())
        throw ValidationError("frequency matrix: column bookkeeping sizes disagree");
    if (freq.total_texts <= 0) throw ValidationError("frequency matrix: total_texts must be > 0");
    for (std::size_t j = 0; j < freq.categories.size(); ++j)
        if (freq.texts_per_category[j] < 0 || freq.texts_per_category[j] > freq.total_texts)
            throw ValidationError("frequency matrix: texts_per_category out of range for '" +
                                  freq.categories[j] + "'");
    for (std::size_t i = 0; i < freq.words.size(); ++i) {
        if (freq.df[i].size() != freq.categories.size())
            throw ValidationError("frequency matrix: ragged row for word '" + freq.words[i] + "'");
        if (freq.texts_with_word[i] < 0 || freq.texts_with_word[i] > freq.total_texts)
            throw ValidationError("frequency matrix: texts_with_word out of range for '" +
                                  freq.words[i] + "'");
        for (std::size_t j = 0; j < freq.categories.size(); ++j) {
            std::int64_t v = freq.df[i][j];
            if (v < 0 || v > freq.texts_per_category[j] || v > freq.texts_with_word[i])
                throw ValidationError("frequency matrix: df exceeds marginals at word '" +
                                      freq.words[i] + "', category '" + freq.categories[j] + "'");
        }
    }
}

} // namespace rigpca
