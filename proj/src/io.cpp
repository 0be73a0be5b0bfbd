#include "rigpca/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rigpca/errors.hpp"

namespace rigpca {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::int64_t parse_int(const std::string& s, const std::string& where) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(where + ": expected integer, got '" + s + "'");
    }
}

double parse_double(const std::string& s, const std::string& where) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(where + ": expected number, got '" + s + "'");
    }
}

} // namespace

std::string format_sig(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string hash_file(const std::filesystem::path& path) {
    return fnv1a64_hex(read_file(path));
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ValidationError("failed writing '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_frequency_matrix_tsv(const FrequencyMatrix& freq, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "word";
    for (const auto& c : freq.categories) out << '\t' << c;
    out << '\n';
    for (std::size_t i = 0; i < freq.words.size(); ++i) {
        out << freq.words[i];
        for (std::size_t j = 0; j < freq.categories.size(); ++j) out << '\t' << freq.df[i][j];
        out << '\n';
    }
    write_file(path, out.str());

    nlohmann::json meta;
    meta["total_texts"] = freq.total_texts;
    nlohmann::json tpc = nlohmann::json::object();
    for (std::size_t j = 0; j < freq.categories.size(); ++j)
        tpc[freq.categories[j]] = freq.texts_per_category[j];
    meta["texts_per_category"] = std::move(tpc);
    nlohmann::json tww = nlohmann::json::object();
    for (std::size_t i = 0; i < freq.words.size(); ++i)
        tww[freq.words[i]] = freq.texts_with_word[i];
    meta["texts_with_word"] = std::move(tww);
    write_file(path.string() + ".meta.json", meta.dump(2) + "\n");
}

FrequencyMatrix read_frequency_matrix_tsv(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    FrequencyMatrix freq;
    std::string line;
    if (!std::getline(in, line))
        throw ValidationError(path.string() + ": empty frequency matrix");
    auto header = split_tabs(chomp(line));
    if (header.size() < 2 || header[0] != "word")
        throw ValidationError(path.string() + ":1: header must be 'word<TAB>cat1...'");
    freq.categories.assign(header.begin() + 1, header.end());

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (line.empty()) continue;
        auto cells = split_tabs(line);
        const std::string where = path.string() + ":" + std::to_string(line_no);
        if (cells.size() != header.size())
            throw ValidationError(where + ": expected " + std::to_string(header.size()) +
                                  " columns, got " + std::to_string(cells.size()));
        freq.words.push_back(cells[0]);
        std::vector<std::int64_t> row(freq.categories.size());
        for (std::size_t j = 0; j < freq.categories.size(); ++j)
            row[j] = parse_int(cells[j + 1], where);
        freq.df.push_back(std::move(row));
    }
    if (freq.words.empty()) throw ValidationError(path.string() + ": no word rows");

    const std::filesystem::path meta_path = path.string() + ".meta.json";
    nlohmann::json meta;
    try {
        meta = nlohmann::json::parse(read_file(meta_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(meta_path.string() + ": malformed sidecar JSON: " + e.what());
    }
    if (!meta.contains("total_texts") || !meta.contains("texts_per_category") ||
        !meta.contains("texts_with_word"))
        throw ValidationError(meta_path.string() +
                              ": sidecar needs total_texts, texts_per_category, texts_with_word");
    freq.total_texts = meta["total_texts"].get<std::int64_t>();
    for (const auto& c : freq.categories) {
        if (!meta["texts_per_category"].contains(c))
            throw ValidationError(meta_path.string() + ": no texts_per_category entry for '" + c +
                                  "'");
        freq.texts_per_category.push_back(meta["texts_per_category"][c].get<std::int64_t>());
    }
    for (const auto& w : freq.words) {
        if (!meta["texts_with_word"].contains(w))
            throw ValidationError(meta_path.string() + ": no texts_with_word entry for '" + w +
                                  "'");
        freq.texts_with_word.push_back(meta["texts_with_word"][w].get<std::int64_t>());
    }
    validate_frequency_matrix(freq);
    return freq;
}

std::string rig_matrix_tsv(const RigMatrix& rig) {
    std::ostringstream out;
    out << "word";
    for (const auto& c : rig.category_order) out << '\t' << c;
    out << '\n';
    for (std::size_t i = 0; i < rig.word_order.size(); ++i) {
        out << rig.word_order[i];
        for (std::size_t j = 0; j < rig.category_order.size(); ++j)
            out << '\t' << format_sig(rig.values(i, j), 12);
        out << '\n';
    }
    return out.str();
}

RigMatrix read_rig_matrix_tsv(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) throw ValidationError(path.string() + ": empty RIG matrix");
    auto header = split_tabs(chomp(line));
    if (header.size() < 2 || header[0] != "word")
        throw ValidationError(path.string() + ":1: header must be 'word<TAB>cat1...'");

    RigMatrix rig;
    rig.category_order.assign(header.begin() + 1, header.end());
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = chomp(line);
        if (line.empty()) continue;
        auto cells = split_tabs(line);
        const std::string where = path.string() + ":" + std::to_string(line_no);
        if (cells.size() != header.size())
            throw ValidationError(where + ": expected " + std::to_string(header.size()) +
                                  " columns, got " + std::to_string(cells.size()));
        rig.word_order.push_back(cells[0]);
        std::vector<double> row(rig.category_order.size());
        for (std::size_t j = 0; j < rig.category_order.size(); ++j) {
            row[j] = parse_double(cells[j + 1], where);
            if (!(row[j] >= 0.0 && row[j] <= 1.0))
                throw ValidationError(where + ": RIG value " + cells[j + 1] +
                                      " outside [0,1]");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ValidationError(path.string() + ": no word rows");
    rig.values = Matrix(rows.size(), rig.category_order.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rig.category_order.size(); ++j)
            rig.values(i, j) = rows[i][j];
    return rig;
}

std::string pca_model_json(const PcaModel& model, const std::vector<std::string>& attributes) {
    nlohmann::json doc;
    doc["n_attributes"] = model.n_attributes;
    doc["attributes"] = attributes;
    doc["means"] = model.column_means;
    doc["stds"] = model.column_stds;
    doc["eigenvalues"] = model.eigenvalues;
    doc["variance_fraction"] = model.variance_fraction;
    nlohmann::json cols = nlohmann::json::array();
    for (std::size_t k = 0; k < model.components.cols(); ++k)
        cols.push_back(model.components.col(k));
    doc["components"] = std::move(cols);
    return doc.dump(2) + "\n";
}

NamedPcaModel read_pca_model_json(const std::filesystem::path& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(path.string() + ": malformed model JSON: " + e.what());
    }
    NamedPcaModel out;
    try {
        out.model.n_attributes = doc.at("n_attributes").get<std::size_t>();
        out.attributes = doc.at("attributes").get<std::vector<std::string>>();
        out.model.column_means = doc.at("means").get<std::vector<double>>();
        out.model.column_stds = doc.at("stds").get<std::vector<double>>();
        out.model.eigenvalues = doc.at("eigenvalues").get<std::vector<double>>();
        out.model.variance_fraction = doc.at("variance_fraction").get<std::vector<double>>();
        const auto cols = doc.at("components").get<std::vector<std::vector<double>>>();
        const std::size_t n = out.model.n_attributes;
        if (out.attributes.size() != n || out.model.column_means.size() != n ||
            out.model.column_stds.size() != n || out.model.eigenvalues.size() != n ||
            out.model.variance_fraction.size() != n || cols.size() != n)
            throw ValidationError(path.string() + ": model field sizes disagree");
        out.model.components = Matrix(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            if (cols[k].size() != n)
                throw ValidationError(path.string() + ": ragged components array");
            for (std::size_t i = 0; i < n; ++i) out.model.components(i, k) = cols[k][i];
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path.string() + ": bad model JSON: " + e.what());
    }
    return out;
}

} // namespace rigpca
