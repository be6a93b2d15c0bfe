#include "permcover/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace permcover {

namespace {

struct Token {
    std::string text;
    int col = 0;  // 1-based start column
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[k]))) {
            ++k;
            continue;
        }
        const std::size_t start = k;
        while (k < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[k]))) {
            ++k;
        }
        out.push_back(
            {line.substr(start, k - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int(const Token& tok, int line_no, const char* what) {
    int value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        std::ostringstream msg;
        msg << "expected " << what << ", got '" << tok.text << "'";
        throw parse_error(msg.str(), line_no, tok.col);
    }
    return value;
}

void check_bijection(const std::vector<int>& image, int n, int line_no,
                     int col) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : image) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            std::ostringstream msg;
            msg << "line is not a permutation of 1.." << n;
            throw parse_error(msg.str(), line_no, col);
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

std::pair<int, int> line_col_at(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

nlohmann::json perms_to_json(const std::vector<Permutation>& perms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Permutation& p : perms) arr.push_back(p.image());
    return arr;
}

}  // namespace

PermSet to_set(const PermSetDocument& doc) {
    return PermSet(doc.n, doc.mode, doc.perms);
}

PermSetDocument from_set(const PermSet& s) {
    PermSetDocument doc;
    doc.n = s.n();
    doc.mode = s.mode();
    doc.perms = s.members();
    return doc;
}

std::string to_text(const PermSetDocument& doc) {
    std::ostringstream out;
    out << "n=" << doc.n << " mode=" << to_string(doc.mode);
    for (const auto& [key, value] : doc.metadata) {
        out << ' ' << key << '=' << value;
    }
    out << '\n';
    for (const Permutation& p : doc.perms) {
        const std::vector<int>& image = p.image();
        for (std::size_t k = 0; k < image.size(); ++k) {
            if (k > 0) out << ' ';
            out << image[k];
        }
        out << '\n';
    }
    return out.str();
}

std::vector<PermSetDocument> parse_documents(const std::string& text) {
    std::vector<PermSetDocument> docs;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty() || tokens.front().text.front() == '#') continue;
        if (tokens.front().text.rfind("n=", 0) == 0) {
            PermSetDocument doc;
            Token n_tok{tokens[0].text.substr(2), tokens[0].col + 2};
            doc.n = parse_int(n_tok, line_no, "an integer after n=");
            if (doc.n < kMinN || doc.n > kMaxN) {
                std::ostringstream msg;
                msg << "n must be between " << kMinN << " and " << kMaxN;
                throw parse_error(msg.str(), line_no, n_tok.col);
            }
            if (tokens.size() < 2 || tokens[1].text.rfind("mode=", 0) != 0) {
                throw parse_error("expected mode=inversion or mode=pair",
                                  line_no,
                                  tokens.size() < 2
                                      ? tokens[0].col +
                                            static_cast<int>(
                                                tokens[0].text.size())
                                      : tokens[1].col);
            }
            const std::string mode_word = tokens[1].text.substr(5);
            if (mode_word == "inversion") {
                doc.mode = CoverMode::inversion;
            } else if (mode_word == "pair") {
                doc.mode = CoverMode::pair;
            } else {
                throw parse_error("mode must be 'inversion' or 'pair'",
                                  line_no, tokens[1].col + 5);
            }
            for (std::size_t t = 2; t < tokens.size(); ++t) {
                const std::string& word = tokens[t].text;
                const std::size_t eq = word.find('=');
                if (eq == std::string::npos || eq == 0) {
                    throw parse_error("metadata must look like key=value",
                                      line_no, tokens[t].col);
                }
                doc.metadata.emplace_back(word.substr(0, eq),
                                          word.substr(eq + 1));
            }
            docs.push_back(std::move(doc));
            continue;
        }
        if (docs.empty()) {
            throw parse_error("expected a header line starting with n=",
                              line_no, tokens.front().col);
        }
        PermSetDocument& doc = docs.back();
        std::vector<int> image;
        if (tokens.size() == 1 && doc.n <= 9 &&
            tokens[0].text.size() > 1) {
            for (std::size_t k = 0; k < tokens[0].text.size(); ++k) {
                const char ch = tokens[0].text[k];
                if (!std::isdigit(static_cast<unsigned char>(ch))) {
                    throw parse_error("expected a digit", line_no,
                                      tokens[0].col + static_cast<int>(k));
                }
                image.push_back(ch - '0');
            }
        } else {
            for (const Token& tok : tokens) {
                image.push_back(parse_int(tok, line_no, "a value"));
            }
        }
        if (image.size() != static_cast<std::size_t>(doc.n)) {
            std::ostringstream msg;
            msg << "expected " << doc.n << " values, got " << image.size();
            throw parse_error(msg.str(), line_no, tokens.front().col);
        }
        check_bijection(image, doc.n, line_no, tokens.front().col);
        doc.perms.emplace_back(image);
    }
    return docs;
}

PermSetDocument parse_document(const std::string& text) {
    std::vector<PermSetDocument> docs = parse_documents(text);
    if (docs.size() != 1) {
        std::ostringstream msg;
        msg << "expected exactly one document, found " << docs.size();
        throw parse_error(msg.str(), 1, 1);
    }
    return std::move(docs.front());
}

std::string to_json(const PermSetDocument& doc) {
    nlohmann::json j;
    j["n"] = doc.n;
    j["mode"] = to_string(doc.mode);
    j["perms"] = perms_to_json(doc.perms);
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [key, value] : doc.metadata) meta[key] = value;
    j["metadata"] = meta;
    return j.dump(2) + "\n";
}

PermSetDocument parse_document_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col_at(text, e.byte);
        throw parse_error(e.what(), line, col);
    }
    try {
        PermSetDocument doc;
        doc.n = j.at("n").get<int>();
        if (doc.n < kMinN || doc.n > kMaxN) {
            throw parse_error("n out of range", 1, 1);
        }
        doc.mode = mode_from_string(j.at("mode").get<std::string>());
        for (const nlohmann::json& arr : j.at("perms")) {
            std::vector<int> image = arr.get<std::vector<int>>();
            check_bijection(image, doc.n, 1, 1);
            if (image.size() != static_cast<std::size_t>(doc.n)) {
                throw parse_error("permutation has the wrong length", 1, 1);
            }
            doc.perms.emplace_back(std::move(image));
        }
        if (j.contains("metadata")) {
            for (const auto& [key, value] : j.at("metadata").items()) {
                doc.metadata.emplace_back(key, value.get<std::string>());
            }
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(e.what(), 1, 1);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 1, 1);
    }
}

bool looks_like_json(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{';
    }
    return false;
}

PermSetDocument parse_document_any(const std::string& text) {
    return looks_like_json(text) ? parse_document_json(text)
                                 : parse_document(text);
}

std::string to_dot(const CriticalSelectionGraph& g) {
    std::ostringstream out;
    out << "graph criticals {\n";
    for (int v = 1; v <= g.n; ++v) out << "  " << v << ";\n";
    for (const SelectionEdge& e : g.edges) {
        out << "  " << e.u << " -- " << e.v << " [label=\""
            << to_string(e.selector) << " (" << e.directed_pair.first << ","
            << e.directed_pair.second << ")\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const CriticalSelectionDigraph& d) {
    std::ostringstream out;
    out << "digraph criticals {\n";
    for (int v = 1; v <= d.n; ++v) out << "  " << v << ";\n";
    for (const SelectionEdge& e : d.arcs) {
        out << "  " << e.directed_pair.first << " -> "
            << e.directed_pair.second << " [label=\""
            << to_string(e.selector) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_json(const OracleReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["mode"] = to_string(report.mode);
    j["restricted"] = report.restricted;
    j["max_size_found"] = report.max_size_found;
    j["witness_count"] = report.witness_sets.size();
    nlohmann::json sets = nlohmann::json::array();
    for (const PermSet& s : report.witness_sets) {
        sets.push_back(perms_to_json(s.members()));
    }
    j["witness_sets"] = sets;
    if (report.restricted) {
        j["random_trials"] = report.random_trials;
        j["random_minimal_hits"] = report.random_minimal_hits;
        j["random_hits_all_known"] = report.random_hits_all_known;
    } else {
        j["search_space_nodes"] = report.search_space_nodes;
    }
    j["elapsed_ms"] = report.elapsed.count() * 1000.0;
    return j.dump(2) + "\n";
}

}  // namespace permcover
