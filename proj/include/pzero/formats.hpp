#pragma once

// Shared parsing/serialization for the five text formats: palf, kirby,
// script, constraints, expectations. One grammar module; canonical
// serialization makes golden-file diffs meaningful.

#include <optional>
#include <string>
#include <vector>

#include "pzero/curves.hpp"
#include "pzero/kirby.hpp"
#include "pzero/palf.hpp"

namespace pzero {

struct ParseError : std::runtime_error {
    int line;    // 1-based
    int column;  // 1-based
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line(line), column(column) {}
};

enum class DocKind { Palf, Kirby, Script, Constraints, Expectations };

struct DocLine {
    int line = 0;          // source line for error reporting
    std::string keyword;
    std::vector<std::string> args;
};

struct Document {
    DocKind kind;
    std::vector<DocLine> lines;

    bool operator==(const Document& o) const;
};

// comments (#) and blank lines ignored; keywords checked per kind, arities and
// integer tokens validated with positions
Document parse(DocKind kind, const std::string& text);
std::string serialize(const Document& doc);

// ----- typed views -----

PalfDescription palf_from_document(const Document& doc);
Document palf_to_document(const PalfDescription& p);

struct KirbyFile {
    KirbyDiagram diagram;
    std::optional<std::pair<int, int>> mark;        // (dotted, handle), 0-based
    std::optional<std::vector<long long>> swap_counts;  // strand counts through the marked handle
};

KirbyFile kirby_from_document(const Document& doc);
Document kirby_to_document(const KirbyDiagram& d,
                           std::optional<std::pair<int, int>> mark = std::nullopt,
                           const std::optional<std::vector<long long>>& swap_counts = std::nullopt);

MoveScript script_from_document(const Document& doc);
Document script_to_document(const MoveScript& s);

struct SearchConstraints {
    int holes = 0;
    int cycles = 0;
    std::optional<AbelianGroup> h1;
    std::optional<int> b2;
    std::optional<IntSymForm> form;       // target congruence class
    int congruence_bound = 5;
    int max_multiplicity = 2;             // per subset in the multiset
    int max_results = 16;
};

SearchConstraints constraints_from_document(const Document& doc);

struct Expectation {
    std::string id;       // e.g. "thm2.5.form_a"
    std::string source;   // provenance: claim id or derived-oracle id
    std::string kind;     // matrix | group | int | parity
    std::vector<std::string> payload;
};

std::vector<Expectation> expectations_from_document(const Document& doc);

// convenience: read file + parse, mapping I/O failure to ParseError on line 0
Document parse_file(DocKind kind, const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace pzero
