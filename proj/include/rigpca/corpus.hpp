#ifndef RIGPCA_CORPUS_HPP
#define RIGPCA_CORPUS_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace rigpca {

struct TextRecord {
    std::string id;
    std::set<std::string> category_labels;
    std::set<std::string> tokens; // deduplicated: a word counts once per text
};

// Immutable after ingestion. Row i of every downstream matrix is
// vocabulary[i], column j is categories[j]; both lists are sorted
// lexicographically so identical input bytes give identical orderings.
struct Corpus {
    std::vector<TextRecord> texts;
    std::vector<std::string> categories;
    std::vector<std::string> vocabulary;
};

// Per (word, category) document frequencies: df(i,j) = number of texts in
// category j containing word i at least once. A multi-label text counts
// toward every one of its categories.
struct FrequencyMatrix {
    std::vector<std::string> words;
    std::vector<std::string> categories;
    std::vector<std::vector<std::int64_t>> df; // words x categories
    std::vector<std::int64_t> texts_per_category;
    std::vector<std::int64_t> texts_with_word;
    std::int64_t total_texts = 0;

    // Keeps only the listed words (the lexicon restriction); category
    // marginals and total_texts are untouched.
    FrequencyMatrix restrict_words(const std::set<std::string>& lexicon) const;
};

struct WordsPerTextStats {
    std::map<std::int64_t, std::int64_t> histogram; // word count -> number of texts
    std::int64_t min = 0;
    std::int64_t max = 0;
    double mean = 0.0;
};

struct WordsPerCategoryStats {
    std::vector<std::int64_t> counts;          // per category, corpus order
    std::vector<std::string> band_labels;      // fixed band edges at 1000..5000
    std::vector<std::int64_t> band_counts;
};

struct CategoriesPerWordStats {
    std::vector<std::int64_t> counts;                // per word, corpus order
    std::map<std::int64_t, std::int64_t> histogram;  // category count -> number of words
};

Corpus ingest(const std::vector<TextRecord>& records);

// One JSON object per line: {"id": str, "categories": [str], "tokens": [str]}.
// Parse errors report the 1-based line number.
Corpus ingest_jsonl(std::istream& in, const std::string& source_name = "<input>");

FrequencyMatrix build_frequency_matrix(const Corpus& corpus);

WordsPerTextStats words_per_text_histogram(const Corpus& corpus,
                                           const std::set<std::string>& lexicon);

WordsPerCategoryStats words_per_category(const FrequencyMatrix& freq);

CategoriesPerWordStats categories_per_word(const FrequencyMatrix& freq);

// Consistency checks on df against its marginals; throws ValidationError.
void validate_frequency_matrix(const FrequencyMatrix& freq);

} // namespace rigpca

#endif
