#include "pzero/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace pzero {

bool Document::operator==(const Document& o) const {
    if (kind != o.kind || lines.size() != o.lines.size()) return false;
    for (size_t i = 0; i < lines.size(); ++i)
        if (lines[i].keyword != o.lines[i].keyword || lines[i].args != o.lines[i].args)
            return false;
    return true;
}

namespace {

const std::set<std::string>& keywords_for(DocKind kind) {
    static const std::set<std::string> palf = {"holes", "cycle"};
    static const std::set<std::string> kirby = {"dotted", "handle", "L", "N", "tag", "mark", "swap"};
    static const std::set<std::string> script = {"slide", "cancel", "pair+", "blowup", "blowdown"};
    static const std::set<std::string> constraints = {"holes", "cycles", "h1", "b2", "form",
                                                      "bound", "maxmult", "maxresults"};
    static const std::set<std::string> expectations = {"expect"};
    switch (kind) {
        case DocKind::Palf: return palf;
        case DocKind::Kirby: return kirby;
        case DocKind::Script: return script;
        case DocKind::Constraints: return constraints;
        case DocKind::Expectations: return expectations;
    }
    throw std::logic_error("unreachable");
}

int token_column(const std::string& raw, const std::string& token, int occurrence) {
    // locate the n-th whitespace-delimited token for error positions
    int col = 1, seen = 0;
    size_t i = 0;
    while (i < raw.size()) {
        while (i < raw.size() && isspace(static_cast<unsigned char>(raw[i]))) ++i;
        size_t start = i;
        while (i < raw.size() && !isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (start == i) break;
        if (seen == occurrence) return int(start) + 1;
        ++seen;
    }
    (void)token;
    return col;
}

long long parse_int_arg(const DocLine& ln, size_t idx, const std::string& raw_line) {
    if (idx >= ln.args.size())
        throw ParseError(ln.line, int(raw_line.size()) + 1,
                         "missing argument " + std::to_string(idx + 1) + " for '" + ln.keyword + "'");
    const std::string& s = ln.args[idx];
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError(ln.line, token_column(raw_line, s, int(idx) + 1),
                         "expected integer, got '" + s + "'");
    return v;
}

}  // namespace

Document parse(DocKind kind, const std::string& text) {
    Document doc{kind, {}};
    const auto& kws = keywords_for(kind);
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string stripped = raw;
        size_t hash = stripped.find('#');
        if (hash != std::string::npos) stripped.resize(hash);
        std::istringstream ls(stripped);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (!kws.count(kw)) {
            throw ParseError(lineno, token_column(raw, kw, 0), "unknown keyword '" + kw + "'");
        }
        DocLine dl{lineno, kw, {}};
        std::string tok;
        while (ls >> tok) dl.args.push_back(tok);
        doc.lines.push_back(std::move(dl));
    }
    return doc;
}

std::string serialize(const Document& doc) {
    std::ostringstream os;
    for (const DocLine& ln : doc.lines) {
        os << ln.keyword;
        for (const std::string& a : ln.args) os << " " << a;
        os << "\n";
    }
    return os.str();
}

PalfDescription palf_from_document(const Document& doc) {
    int holes = -1;
    std::vector<StandardCurve> cycles;
    for (const DocLine& ln : doc.lines) {
        std::string raw = ln.keyword;
        for (const auto& a : ln.args) raw += " " + a;
        if (ln.keyword == "holes") {
            holes = int(parse_int_arg(ln, 0, raw));
            if (holes < 1) throw ParseError(ln.line, 1, "holes must be >= 1");
        } else {  // cycle
            if (ln.args.size() != 1)
                throw ParseError(ln.line, 1, "cycle takes exactly one {..} argument");
            if (ln.args[0] == "{}")
                throw ParseError(ln.line, token_column(raw, ln.args[0], 1), "empty curve");
            try {
                cycles.push_back(StandardCurve::parse(ln.args[0]));
            } catch (const std::exception& e) {
                throw ParseError(ln.line, token_column(raw, ln.args[0], 1), e.what());
            }
            if (holes < 0)
                throw ParseError(ln.line, 1, "cycle before holes declaration");
            if (cycles.back().max_hole() > holes)
                throw ParseError(ln.line, token_column(raw, ln.args[0], 1),
                                 "hole index exceeds declared hole count");
        }
    }
    if (holes < 0) throw ParseError(1, 1, "missing holes declaration");
    return PalfDescription(FiberModel{holes}, std::move(cycles));
}

Document palf_to_document(const PalfDescription& p) {
    Document doc{DocKind::Palf, {}};
    doc.lines.push_back({0, "holes", {std::to_string(p.holes())}});
    for (const StandardCurve& c : p.cycles())
        doc.lines.push_back({0, "cycle", {c.to_string()}});
    return doc;
}

KirbyFile kirby_from_document(const Document& doc) {
    int dotted = -1;
    std::vector<long long> framings;
    std::vector<std::vector<long long>> lrows, nrows;
    std::vector<std::tuple<int, int, long long>> tags;
    std::optional<std::pair<int, int>> mark;
    std::optional<std::vector<long long>> swap_counts;

    for (const DocLine& ln : doc.lines) {
        std::string raw = ln.keyword;
        for (const auto& a : ln.args) raw += " " + a;
        if (ln.keyword == "dotted") {
            dotted = int(parse_int_arg(ln, 0, raw));
        } else if (ln.keyword == "handle") {
            if (ln.args.size() != 1 || ln.args[0].rfind("f=", 0) != 0)
                throw ParseError(ln.line, 1, "handle syntax: handle f=<int>");
            DocLine tmp = ln;
            tmp.args = {ln.args[0].substr(2)};
            framings.push_back(parse_int_arg(tmp, 0, raw));
        } else if (ln.keyword == "L") {
            std::vector<long long> row;
            for (size_t i = 0; i < ln.args.size(); ++i) row.push_back(parse_int_arg(ln, i, raw));
            lrows.push_back(std::move(row));
        } else if (ln.keyword == "N") {
            std::vector<long long> row;
            for (size_t i = 0; i < ln.args.size(); ++i) row.push_back(parse_int_arg(ln, i, raw));
            nrows.push_back(std::move(row));
        } else if (ln.keyword == "tag") {
            if (ln.args.empty() || ln.args[0] != "geo")
                throw ParseError(ln.line, 1, "tag syntax: tag geo <handle> <dotted> [count]");
            DocLine tmp = ln;
            tmp.args.assign(ln.args.begin() + 1, ln.args.end());
            int h = int(parse_int_arg(tmp, 0, raw));
            int d = int(parse_int_arg(tmp, 1, raw));
            long long c = tmp.args.size() > 2 ? parse_int_arg(tmp, 2, raw) : 1;
            tags.emplace_back(h - 1, d - 1, c);
        } else if (ln.keyword == "mark") {
            int d = int(parse_int_arg(ln, 0, raw));
            int h = int(parse_int_arg(ln, 1, raw));
            mark = std::make_pair(d - 1, h - 1);
        } else if (ln.keyword == "swap") {
            std::vector<long long> sw;
            for (size_t i = 0; i < ln.args.size(); ++i) sw.push_back(parse_int_arg(ln, i, raw));
            swap_counts = std::move(sw);
        }
    }
    if (dotted < 0) throw ParseError(1, 1, "missing dotted declaration");
    int k = int(framings.size());
    if (int(lrows.size()) != k) throw ParseError(1, 1, "need one L row per handle");
    if (dotted > 0 && int(nrows.size()) != k) throw ParseError(1, 1, "need one N row per handle");
    IntMat l(k, k), n(k, dotted);
    for (int i = 0; i < k; ++i) {
        if (int(lrows[size_t(i)].size()) != k)
            throw ParseError(1, 1, "L row has wrong length");
        for (int j = 0; j < k; ++j) l.at(i, j) = lrows[size_t(i)][size_t(j)];
        if (l.at(i, i) != framings[size_t(i)])
            throw ParseError(1, 1, "L diagonal disagrees with handle framing");
    }
    for (int i = 0; i < k && dotted > 0; ++i) {
        if (int(nrows[size_t(i)].size()) != dotted)
            throw ParseError(1, 1, "N row has wrong length");
        for (int j = 0; j < dotted; ++j) n.at(i, j) = nrows[size_t(i)][size_t(j)];
    }
    KirbyDiagram dgm(dotted, std::move(l), std::move(n));
    for (auto [h, d, c] : tags) {
        if (h < 0 || h >= k || d < 0 || d >= dotted)
            throw ParseError(1, 1, "tag indices out of range");
        dgm.set_geo(h, d, c);
    }
    if (swap_counts && int(swap_counts->size()) != k)
        throw ParseError(1, 1, "swap line needs one count per handle");
    return {std::move(dgm), mark, swap_counts};
}

Document kirby_to_document(const KirbyDiagram& d, std::optional<std::pair<int, int>> mark,
                           const std::optional<std::vector<long long>>& swap_counts) {
    Document doc{DocKind::Kirby, {}};
    doc.lines.push_back({0, "dotted", {std::to_string(d.dotted())}});
    for (int j = 0; j < d.handles(); ++j)
        doc.lines.push_back({0, "handle", {"f=" + d.framing(j).str()}});
    for (int i = 0; i < d.handles(); ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < d.handles(); ++j) row.push_back(d.l().at(i, j).str());
        doc.lines.push_back({0, "L", std::move(row)});
    }
    if (d.dotted() > 0) {
        for (int i = 0; i < d.handles(); ++i) {
            std::vector<std::string> row;
            for (int j = 0; j < d.dotted(); ++j) row.push_back(d.n().at(i, j).str());
            doc.lines.push_back({0, "N", std::move(row)});
        }
    }
    for (int j = 0; j < d.handles(); ++j)
        for (int i = 0; i < d.dotted(); ++i) {
            long long g = d.geo(j, i);
            if (g == GEO_UNKNOWN) continue;
            std::vector<std::string> args = {"geo", std::to_string(j + 1), std::to_string(i + 1)};
            if (g != 1) args.push_back(std::to_string(g));
            doc.lines.push_back({0, "tag", std::move(args)});
        }
    if (mark)
        doc.lines.push_back({0, "mark", {std::to_string(mark->first + 1),
                                         std::to_string(mark->second + 1)}});
    if (swap_counts) {
        std::vector<std::string> row;
        for (long long c : *swap_counts) row.push_back(std::to_string(c));
        doc.lines.push_back({0, "swap", std::move(row)});
    }
    return doc;
}

MoveScript script_from_document(const Document& doc) {
    MoveScript s;
    for (const DocLine& ln : doc.lines) {
        std::string raw = ln.keyword;
        for (const auto& a : ln.args) raw += " " + a;
        if (ln.keyword == "slide") {
            // slide <i> over <j> <sign>
            if (ln.args.size() != 4 || ln.args[1] != "over")
                throw ParseError(ln.line, 1, "slide syntax: slide <i> over <j> +|-");
            DocLine tmp = ln;
            tmp.args = {ln.args[0], ln.args[2]};
            int i = int(parse_int_arg(tmp, 0, raw));
            int j = int(parse_int_arg(tmp, 1, raw));
            const std::string& sg = ln.args[3];
            if (sg != "+" && sg != "-")
                throw ParseError(ln.line, token_column(raw, sg, 4), "sign must be + or -");
            s.moves.push_back(MoveSlide{i, j, sg == "+" ? 1 : -1});
        } else if (ln.keyword == "cancel") {
            if (ln.args.size() != 3 || ln.args[1] != "with")
                throw ParseError(ln.line, 1, "cancel syntax: cancel <handle> with <dotted>");
            DocLine tmp = ln;
            tmp.args = {ln.args[0], ln.args[2]};
            s.moves.push_back(MoveCancel{int(parse_int_arg(tmp, 0, raw)),
                                         int(parse_int_arg(tmp, 1, raw))});
        } else if (ln.keyword == "pair+") {
            s.moves.push_back(MovePair{});
        } else if (ln.keyword == "blowup") {
            if (ln.args.size() != 1 || (ln.args[0] != "+" && ln.args[0] != "-"))
                throw ParseError(ln.line, 1, "blowup syntax: blowup +|-");
            s.moves.push_back(MoveBlowUp{ln.args[0] == "+" ? 1 : -1});
        } else {  // blowdown
            s.moves.push_back(MoveBlowDown{int(parse_int_arg(ln, 0, raw))});
        }
    }
    return s;
}

Document script_to_document(const MoveScript& s) {
    Document doc{DocKind::Script, {}};
    for (const Move& m : s.moves) {
        std::istringstream is(move_to_string(m));
        std::string kw, tok;
        is >> kw;
        DocLine ln{0, kw, {}};
        while (is >> tok) ln.args.push_back(tok);
        doc.lines.push_back(std::move(ln));
    }
    return doc;
}

SearchConstraints constraints_from_document(const Document& doc) {
    SearchConstraints sc;
    for (const DocLine& ln : doc.lines) {
        std::string raw = ln.keyword;
        for (const auto& a : ln.args) raw += " " + a;
        if (ln.keyword == "holes") sc.holes = int(parse_int_arg(ln, 0, raw));
        else if (ln.keyword == "cycles") sc.cycles = int(parse_int_arg(ln, 0, raw));
        else if (ln.keyword == "b2") sc.b2 = int(parse_int_arg(ln, 0, raw));
        else if (ln.keyword == "bound") sc.congruence_bound = int(parse_int_arg(ln, 0, raw));
        else if (ln.keyword == "maxmult") sc.max_multiplicity = int(parse_int_arg(ln, 0, raw));
        else if (ln.keyword == "maxresults") sc.max_results = int(parse_int_arg(ln, 0, raw));
        else if (ln.keyword == "h1") {
            if (ln.args.size() == 1 && ln.args[0] == "trivial") {
                sc.h1 = AbelianGroup{};
            } else {
                AbelianGroup g;
                for (size_t i = 0; i < ln.args.size(); ++i)
                    g.torsion.push_back(Int(parse_int_arg(ln, i, raw)));
                sc.h1 = g;
            }
        } else if (ln.keyword == "form") {
            // form <rank> <row-major entries>
            int r = int(parse_int_arg(ln, 0, raw));
            if (int(ln.args.size()) != 1 + r * r)
                throw ParseError(ln.line, 1, "form needs rank followed by rank^2 entries");
            IntMat g(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    g.at(i, j) = Int(parse_int_arg(ln, size_t(1 + i * r + j), raw));
            sc.form = IntSymForm(g);
        }
    }
    if (sc.holes < 1 || sc.cycles < 0)
        throw ParseError(1, 1, "constraints need holes >= 1 and cycles >= 0");
    return sc;
}

std::vector<Expectation> expectations_from_document(const Document& doc) {
    std::vector<Expectation> out;
    for (const DocLine& ln : doc.lines) {
        // expect <id> <kind> <payload...> source=<id>
        if (ln.args.size() < 3)
            throw ParseError(ln.line, 1, "expect syntax: expect <id> <kind> <payload...> source=<id>");
        Expectation e;
        e.id = ln.args[0];
        e.kind = ln.args[1];
        size_t last = ln.args.size() - 1;
        if (ln.args[last].rfind("source=", 0) != 0)
            throw ParseError(ln.line, 1, "expectation must end with source=<id>");
        e.source = ln.args[last].substr(7);
        e.payload.assign(ln.args.begin() + 2, ln.args.begin() + long(last));
        out.push_back(std::move(e));
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError(0, 0, "cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Document parse_file(DocKind kind, const std::string& path) {
    return parse(kind, read_text_file(path));
}

}  // namespace pzero
