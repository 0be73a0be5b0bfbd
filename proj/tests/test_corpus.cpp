#include <doctest.h>

#include <random>
#include <sstream>

#include "rigpca/corpus.hpp"
#include "rigpca/errors.hpp"
#include "support/synthetic_corpus.hpp"
#include "support/testutil.hpp"

using namespace rigpca;
using namespace rigpca::testing;

namespace {

TextRecord make_record(std::string id, std::set<std::string> cats, std::set<std::string> toks) {
    return TextRecord{std::move(id), std::move(cats), std::move(toks)};
}

Corpus two_text_corpus() {
    return ingest({make_record("t1", {"A"}, {"x", "y"}), make_record("t2", {"B"}, {"y"})});
}

} // namespace

TEST_CASE("ingest builds sorted vocabulary and categories") {
    const Corpus corpus = two_text_corpus();
    CHECK(corpus.vocabulary == std::vector<std::string>{"x", "y"});
    CHECK(corpus.categories == std::vector<std::string>{"A", "B"});
    CHECK(corpus.texts.size() == 2);
}

TEST_CASE("ingest rejects bad records") {
    CHECK_THROWS_AS(ingest({}), ValidationError);
    CHECK_THROWS_WITH_AS(ingest({make_record("t1", {}, {"x"})}),
                         doctest::Contains("missing category"), ValidationError);
    CHECK_THROWS_WITH_AS(ingest({make_record("t1", {"A"}, {})}),
                         doctest::Contains("zero tokens"), ValidationError);
    CHECK_THROWS_WITH_AS(
        ingest({make_record("t1", {"A"}, {"x"}), make_record("t1", {"B"}, {"y"})}),
        doctest::Contains("duplicate text id"), ValidationError);
    CHECK_THROWS_AS(ingest({make_record("t1", {"A\tB"}, {"x"})}), ValidationError);
}

TEST_CASE("jsonl ingestion reports line numbers") {
    std::istringstream good(R"({"id":"t1","categories":["A"],"tokens":["x","y","y"]}
{"id":"t2","categories":["B"],"tokens":["y"]}
)");
    const Corpus corpus = ingest_jsonl(good, "input.jsonl");
    CHECK(corpus.vocabulary == std::vector<std::string>{"x", "y"});
    CHECK(corpus.texts[0].tokens.size() == 2); // duplicated token collapses

    std::istringstream broken("{\"id\":\"t1\",\"categories\":[\"A\"],\"tokens\":[\"x\"]}\nnot json\n");
    CHECK_THROWS_WITH_AS(ingest_jsonl(broken, "input.jsonl"), doctest::Contains("input.jsonl:2"),
                         ValidationError);

    std::istringstream missing("{\"id\":\"t1\",\"categories\":[],\"tokens\":[\"x\"]}\n");
    CHECK_THROWS_WITH_AS(ingest_jsonl(missing, "input.jsonl"),
                         doctest::Contains("missing category"), ValidationError);

    std::istringstream empty("");
    CHECK_THROWS_WITH_AS(ingest_jsonl(empty, "input.jsonl"), doctest::Contains("empty corpus"),
                         ValidationError);
}

TEST_CASE("frequency matrix for the two-text corpus") {
    const FrequencyMatrix freq = build_frequency_matrix(two_text_corpus());
    CHECK(freq.df == std::vector<std::vector<std::int64_t>>{{1, 0}, {1, 1}});
    CHECK(freq.texts_per_category == std::vector<std::int64_t>{1, 1});
    CHECK(freq.texts_with_word == std::vector<std::int64_t>{1, 2});
    CHECK(freq.total_texts == 2);
    validate_frequency_matrix(freq);
}

TEST_CASE("multi-label text counts toward every labeled category") {
    const Corpus corpus = ingest({make_record("t1", {"A", "B"}, {"x"})});
    const FrequencyMatrix freq = build_frequency_matrix(corpus);
    CHECK(freq.df == std::vector<std::vector<std::int64_t>>{{1, 1}});
    // column sums exceed total_texts by design for multi-label corpora
    CHECK(freq.texts_per_category[0] + freq.texts_per_category[1] > freq.total_texts);
}

TEST_CASE("frequency matrix matches a per-cell recount oracle") {
    for (std::uint32_t seed = 1; seed <= 20; ++seed) {
        const auto records = random_corpus(seed);
        const Corpus corpus = ingest(records);
        const FrequencyMatrix freq = build_frequency_matrix(corpus);
        validate_frequency_matrix(freq);
        for (std::size_t i = 0; i < freq.words.size(); ++i) {
            for (std::size_t j = 0; j < freq.categories.size(); ++j) {
                std::int64_t count = 0;
                for (const TextRecord& t : records)
                    if (t.tokens.count(freq.words[i]) &&
                        t.category_labels.count(freq.categories[j]))
                        ++count;
                CHECK(freq.df[i][j] == count);
            }
        }
    }
}

TEST_CASE("single-label corpora satisfy the row-sum identity") {
    for (std::uint32_t seed = 100; seed < 110; ++seed) {
        const auto records = random_corpus(seed, 30, 10, 4, /*single_label=*/true);
        const FrequencyMatrix freq = build_frequency_matrix(ingest(records));
        for (std::size_t i = 0; i < freq.words.size(); ++i) {
            std::int64_t row_sum = 0;
            for (std::int64_t v : freq.df[i]) row_sum += v;
            CHECK(row_sum == freq.texts_with_word[i]);
        }
    }
}

TEST_CASE("words_per_text histogram") {
    SUBCASE("disjoint lexicon puts every text at zero") {
        const WordsPerTextStats stats = words_per_text_histogram(two_text_corpus(), {"zzz"});
        CHECK(stats.histogram == std::map<std::int64_t, std::int64_t>{{0, 2}});
        CHECK(stats.min == 0);
        CHECK(stats.max == 0);
        CHECK(stats.mean == 0.0);
    }
    SUBCASE("intersections {2,2,5} give histogram {2:2, 5:1} and mean 3") {
        const Corpus corpus = ingest({
            make_record("t1", {"A"}, {"a", "b"}),
            make_record("t2", {"A"}, {"a", "c", "q"}),
            make_record("t3", {"B"}, {"a", "b", "c", "d", "e"}),
        });
        const WordsPerTextStats stats =
            words_per_text_histogram(corpus, {"a", "b", "c", "d", "e"});
        CHECK(stats.histogram == std::map<std::int64_t, std::int64_t>{{2, 2}, {5, 1}});
        CHECK(stats.mean == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(stats.min == 2);
        CHECK(stats.max == 5);
    }
    SUBCASE("empty lexicon is rejected") {
        CHECK_THROWS_AS(words_per_text_histogram(two_text_corpus(), {}), ValidationError);
    }
    SUBCASE("histogram counts sum to the number of texts") {
        for (std::uint32_t seed = 200; seed < 210; ++seed) {
            const Corpus corpus = ingest(random_corpus(seed));
            const WordsPerTextStats stats = words_per_text_histogram(
                corpus, std::set<std::string>(corpus.vocabulary.begin(), corpus.vocabulary.end()));
            std::int64_t total = 0;
            for (const auto& [count, texts] : stats.histogram) total += texts;
            CHECK(total == static_cast<std::int64_t>(corpus.texts.size()));
        }
    }
}

TEST_CASE("words_per_category counts and bands") {
    SUBCASE("zero column yields zero count") {
        FrequencyMatrix freq;
        freq.words = {"w0", "w1"};
        freq.categories = {"c0", "c1"};
        freq.df = {{1, 0}, {1, 0}};
        freq.texts_per_category = {2, 1};
        freq.texts_with_word = {1, 1};
        freq.total_texts = 3;
        const WordsPerCategoryStats stats = words_per_category(freq);
        CHECK(stats.counts == std::vector<std::int64_t>{2, 0});
    }
    SUBCASE("counts fall into the fixed bands") {
        // one category covering 4500 words, one covering 950
        FrequencyMatrix freq;
        freq.categories = {"big", "small"};
        freq.texts_per_category = {1, 1};
        freq.total_texts = 2;
        for (int i = 0; i < 4500; ++i) {
            char name[16];
            std::snprintf(name, sizeof(name), "w%05d", i);
            freq.words.push_back(name);
            freq.df.push_back({1, i < 950 ? 1 : 0});
            freq.texts_with_word.push_back(1);
        }
        const WordsPerCategoryStats stats = words_per_category(freq);
        CHECK(stats.counts == std::vector<std::int64_t>{4500, 950});
        CHECK(stats.band_labels[4] == "4000<n<=5000");
        CHECK(stats.band_counts == std::vector<std::int64_t>{1, 0, 0, 0, 1});
    }
    SUBCASE("random counts equal an independent column scan") {
        for (std::uint32_t seed = 300; seed < 305; ++seed) {
            const FrequencyMatrix freq = build_frequency_matrix(ingest(random_corpus(seed)));
            const WordsPerCategoryStats stats = words_per_category(freq);
            for (std::size_t j = 0; j < freq.categories.size(); ++j) {
                std::int64_t expected = 0;
                for (std::size_t i = 0; i < freq.words.size(); ++i)
                    expected += freq.df[i][j] > 0 ? 1 : 0;
                CHECK(stats.counts[j] == expected);
            }
        }
    }
}

TEST_CASE("categories_per_word counts and histogram") {
    SUBCASE("word absent everywhere counts zero") {
        FrequencyMatrix freq;
        freq.words = {"ghost"};
        freq.categories = {"c0", "c1"};
        freq.df = {{0, 0}};
        freq.texts_per_category = {1, 1};
        freq.texts_with_word = {0};
        freq.total_texts = 2;
        const CategoriesPerWordStats stats = categories_per_word(freq);
        CHECK(stats.counts == std::vector<std::int64_t>{0});
        CHECK(stats.histogram.at(0) == 1);
    }
    SUBCASE("random counts equal an independent row scan") {
        for (std::uint32_t seed = 400; seed < 405; ++seed) {
            const FrequencyMatrix freq = build_frequency_matrix(ingest(random_corpus(seed)));
            const CategoriesPerWordStats stats = categories_per_word(freq);
            std::int64_t hist_total = 0;
            for (const auto& [count, words] : stats.histogram) hist_total += words;
            CHECK(hist_total == static_cast<std::int64_t>(freq.words.size()));
            for (std::size_t i = 0; i < freq.words.size(); ++i) {
                std::int64_t expected = 0;
                for (std::size_t j = 0; j < freq.categories.size(); ++j)
                    expected += freq.df[i][j] > 0 ? 1 : 0;
                CHECK(stats.counts[i] == expected);
            }
        }
    }
}

TEST_CASE("ingestion is deterministic") {
    const std::string jsonl = planted_cluster_jsonl().substr(0, 2000); // a prefix is enough
    const std::string full = jsonl.substr(0, jsonl.rfind('\n') + 1);
    std::istringstream a(full), b(full);
    const Corpus ca = ingest_jsonl(a), cb = ingest_jsonl(b);
    CHECK(ca.vocabulary == cb.vocabulary);
    CHECK(ca.categories == cb.categories);
    const FrequencyMatrix fa = build_frequency_matrix(ca), fb = build_frequency_matrix(cb);
    CHECK(fa.df == fb.df);
    CHECK(fa.texts_with_word == fb.texts_with_word);
}

TEST_CASE("lexicon restriction keeps marginals for categories") {
    const FrequencyMatrix freq = build_frequency_matrix(two_text_corpus());
    const FrequencyMatrix restricted = freq.restrict_words({"y"});
    CHECK(restricted.words == std::vector<std::string>{"y"});
    CHECK(restricted.texts_per_category == freq.texts_per_category);
    CHECK(restricted.total_texts == freq.total_texts);
    CHECK_THROWS_AS(freq.restrict_words({"zzz"}), ValidationError);
}
