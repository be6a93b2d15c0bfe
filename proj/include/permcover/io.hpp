#ifndef PERMCOVER_IO_HPP
#define PERMCOVER_IO_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permcover/completeness.hpp"
#include "permcover/oracle.hpp"
#include "permcover/selection.hpp"

namespace permcover {

// Syntax error with a 1-based position in the input.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, int line, int col)
        : std::runtime_error(what), line(line), col(col) {}
    int line;
    int col;
};

// A permutation set as read from or written to disk: member order and
// header metadata are preserved verbatim, unlike the canonical PermSet.
struct PermSetDocument {
    int n = 0;
    CoverMode mode = CoverMode::inversion;
    std::vector<Permutation> perms;
    std::vector<std::pair<std::string, std::string>> metadata;
};

PermSet to_set(const PermSetDocument& doc);
PermSetDocument from_set(const PermSet& s);

// Text form: a header line `n=<n> mode=<inversion|pair>` optionally
// followed by `key=value` metadata tokens, then one permutation per line
// (digits packed together for n <= 9, whitespace-separated otherwise).
// Blank lines and `#` comments are ignored.
std::string to_text(const PermSetDocument& doc);
PermSetDocument parse_document(const std::string& text);

// Several documents in one stream; each header line starts the next.
std::vector<PermSetDocument> parse_documents(const std::string& text);

// JSON form: {"n":…,"mode":…,"perms":[[…],…],"metadata":{…}}.
std::string to_json(const PermSetDocument& doc);
PermSetDocument parse_document_json(const std::string& text);

// True when the input looks like JSON rather than the text form.
bool looks_like_json(const std::string& text);
PermSetDocument parse_document_any(const std::string& text);

// Graphviz rendering of critical selections: undirected for inversion
// sets, an orientation (`->` per owned pair) for pair sets.
std::string to_dot(const CriticalSelectionGraph& g);
std::string to_dot(const CriticalSelectionDigraph& d);

std::string to_json(const OracleReport& report);

}  // namespace permcover

#endif
