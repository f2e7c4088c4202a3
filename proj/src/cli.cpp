#include "pzero/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

namespace pzero {

bool Report::all_pass() const {
    for (const auto& l : lines)
        if (!l.pass) return false;
    return true;
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["object"] = object_id;
    j["pass"] = all_pass();
    j["lines"] = nlohmann::json::array();
    for (const auto& l : lines) {
        j["lines"].push_back({{"name", l.name},
                              {"expected", l.expected},
                              {"computed", l.computed},
                              {"source", l.source},
                              {"pass", l.pass}});
    }
    j["notes"] = notes;
    return j.dump(2);
}

Report Report::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Report r;
    r.object_id = j.at("object").get<std::string>();
    for (const auto& l : j.at("lines")) {
        r.lines.push_back({l.at("name").get<std::string>(),
                           l.at("expected").get<std::string>(),
                           l.at("computed").get<std::string>(),
                           l.at("source").get<std::string>(),
                           l.at("pass").get<bool>()});
    }
    for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
    return r;
}

void Report::print(std::ostream& os) const {
    os << "== " << object_id << " ==\n";
    for (const auto& l : lines) {
        os << (l.pass ? "[PASS] " : "[FAIL] ") << l.name;
        if (!l.expected.empty())
            os << ": expected " << l.expected << " [" << l.source << "], computed " << l.computed;
        else if (!l.computed.empty())
            os << ": " << l.computed;
        os << "\n";
    }
    for (const auto& n : notes) os << "note: " << n << "\n";
}

namespace {

void line(Report& r, const std::string& name, const std::string& expected,
          const std::string& computed, const std::string& source, bool pass) {
    r.lines.push_back({name, expected, computed, source, pass});
}

void check(Report& r, const std::string& name, bool pass, const std::string& detail = "") {
    r.lines.push_back({name, "", detail, "", pass});
}

std::string gram_to_string(const IntSymForm& f) { return f.gram().to_string(); }

const Expectation& find_expectation(const std::vector<Expectation>& es, const std::string& id) {
    for (const auto& e : es)
        if (e.id == id) return e;
    throw std::runtime_error("missing expectation: " + id);
}

IntSymForm expectation_matrix(const Expectation& e) {
    int r = std::stoi(e.payload.at(0));
    IntMat g(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g.at(i, j) = Int(e.payload.at(size_t(1 + i * r + j)));
    return IntSymForm(g);
}

std::vector<Expectation> load_expectations(const CliOptions& opt) {
    std::string path = opt.data_dir + "/expectations.txt";
    try {
        return expectations_from_document(parse_file(DocKind::Expectations, path));
    } catch (const ParseError&) {
        return builtin_expectations();
    }
}

}  // namespace

std::vector<Expectation> builtin_expectations() {
    Document doc = parse(DocKind::Expectations, expectations_text());
    return expectations_from_document(doc);
}

std::string expectations_text() {
    return
        "# stated values verified by the catalog; source= names the claim or oracle\n"
        "expect form_a matrix 2 -8 1 1 -2 source=thm2.5.matrix_first\n"
        "expect form_b matrix 2 -8 -3 -3 -3 source=thm2.5.matrix_second\n"
        "expect parity_a parity even source=thm2.5.former_even\n"
        "expect parity_b parity odd source=thm2.5.latter_odd\n"
        "expect b2_ab int 2 source=thm2.3.second_betti\n"
        "expect h1_ab group trivial source=thm2.3.h1_trivial\n"
        "expect h2_rank int 2 source=thm2.3.h2_rank\n"
        "expect boundary_ab group 15 source=derived.snf_boundary_block\n"
        "expect chi_ab int 3 source=derived.handle_count_1_0_2\n"
        "expect monodromy_len_w12 int 5 source=thm1.length_2n_plus_m\n"
        "expect monodromy_len_ab int 6 source=thm2.6.proof_six_twists\n"
        "expect plug_form_w12 matrix 1 -8 source=derived.common_primitive_value\n";
}

PalfDescription resolve_palf_target(const std::string& target, const CliOptions& opt) {
    if (target.rfind("catalog:", 0) == 0) {
        std::string name = target.substr(8);
        if (name == "A") return manifold_A().palf;
        if (name == "B") return manifold_B().palf;
        if (name.rfind("W(", 0) == 0 && name.back() == ')') {
            std::string body = name.substr(2, name.size() - 3);
            size_t comma = body.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("catalog reference needs W(m,n)");
            PlugParams p{std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))};
            return plug_palf(p);
        }
        throw std::invalid_argument("unknown catalog palf reference: " + target);
    }
    return palf_from_document(parse_file(DocKind::Palf, target));
}

KirbyDiagram resolve_kirby_target(const std::string& target, const CliOptions& opt) {
    if (target.rfind("catalog:", 0) == 0) {
        std::string name = target.substr(8);
        bool reduced = false;
        if (name.size() > 8 && name.rfind(".reduced") == name.size() - 8) {
            reduced = true;
            name.resize(name.size() - 8);
        } else if (name.size() > 6 && name.rfind(".kirby") == name.size() - 6) {
            name.resize(name.size() - 6);
        }
        KirbyDiagram dgm;
        MoveScript script;
        if (name == "A") {
            dgm = manifold_A().marked.diagram;
            script = reduce_script_A();
        } else if (name == "B") {
            dgm = manifold_B().marked.diagram;
            script = reduce_script_B();
        } else if (name.rfind("W(", 0) == 0 && name.back() == ')') {
            std::string body = name.substr(2, name.size() - 3);
            size_t comma = body.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("catalog reference needs W(m,n)");
            PlugParams p{std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))};
            if (reduced) {
                dgm = to_kirby(plug_palf(p));
                script = reduce_script_W(p);
            } else {
                dgm = wmn_marked(p).diagram;
            }
        } else {
            throw std::invalid_argument("unknown catalog kirby reference: " + target);
        }
        if (reduced) {
            ScriptResult sr = run_script(dgm, script);
            if (!sr.ok())
                throw std::runtime_error("catalog reduction failed: " + sr.error->message);
            return sr.diagram;
        }
        return dgm;
    }
    return kirby_from_document(parse_file(DocKind::Kirby, target)).diagram;
}

int cmd_invariants(const std::string& kind, const std::string& target,
                   const CliOptions& opt, std::ostream& out, std::ostream& err) {
    Report rep;
    rep.object_id = target;
    try {
        if (kind == "palf") {
            PalfDescription p = resolve_palf_target(target, opt);
            PalfHomology hom = homology(p);
            IntSymForm form = intersection_form(p);
            InvariantRecord kirby_side = invariants(to_kirby(p));
            line(rep, "chi", "", std::to_string(euler_characteristic(p)), "", true);
            line(rep, "H1", "", hom.h1.to_string(), "", true);
            line(rep, "b2", "", std::to_string(hom.b2), "", true);
            line(rep, "gram", "", gram_to_string(form), "", true);
            line(rep, "parity", "", is_even(form) ? "even" : "odd", "", true);
            line(rep, "signature", "", std::to_string(signature(form)), "", true);
            line(rep, "boundary_H1", "", kirby_side.boundary_h1.to_string(), "", true);
            MappingClass mono = total_monodromy(p);
            std::ostringstream ms;
            ms << p.cycle_count() << " right-handed twists; framing (";
            for (size_t i = 0; i < mono.framing.size(); ++i)
                ms << (i ? "," : "") << mono.framing[i];
            ms << ")";
            line(rep, "total_monodromy", "", ms.str(), "", true);
        } else if (kind == "kirby") {
            KirbyDiagram d = resolve_kirby_target(target, opt);
            InvariantRecord rec = invariants(d);
            line(rep, "chi", "", rec.chi.str(), "", true);
            line(rep, "H1", "", rec.h1.to_string(), "", true);
            line(rep, "b2", "", std::to_string(rec.b2), "", true);
            line(rep, "gram", "", gram_to_string(rec.form), "", true);
            line(rep, "parity", "", rec.even ? "even" : "odd", "", true);
            line(rep, "signature", "", std::to_string(rec.signature), "", true);
            line(rep, "boundary_H1", "", rec.boundary_h1.to_string(), "", true);
            if (rec.form.rank() > 0)
                line(rep, "det", "", determinant(rec.form.gram()).str(), "", true);
        } else {
            err << "unknown invariants kind: " << kind << " (use palf|kirby)\n";
            return 1;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    rep.notes = convention_notes();
    if (opt.json) out << rep.to_json() << "\n";
    else rep.print(out);
    return 0;
}

int cmd_run_script(const std::string& diagram_path, const std::string& script_path,
                   const CliOptions& opt, std::ostream& out, std::ostream& err) {
    KirbyDiagram dgm;
    MoveScript script;
    try {
        dgm = resolve_kirby_target(diagram_path, opt);
        script = script_from_document(parse_file(DocKind::Script, script_path));
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    ScriptResult sr = run_script(dgm, script, opt.trace);
    for (const auto& t : sr.trace) out << t << "\n";
    if (!sr.ok()) {
        err << "move " << sr.error->step + 1 << " failed: " << sr.error->message << "\n";
        return sr.error->invariant_violation ? 3 : 2;
    }
    Report rep;
    rep.object_id = diagram_path + " + " + script_path;
    InvariantRecord rec = invariants(sr.diagram);
    line(rep, "dotted", "", std::to_string(sr.diagram.dotted()), "", true);
    line(rep, "handles", "", std::to_string(sr.diagram.handles()), "", true);
    line(rep, "L", "", sr.diagram.l().to_string(), "", true);
    line(rep, "gram", "", gram_to_string(rec.form), "", true);
    line(rep, "boundary_H1", "", rec.boundary_h1.to_string(), "", true);
    if (opt.json) out << rep.to_json() << "\n";
    else rep.print(out);
    return 0;
}

int cmd_verify_theorem1(int m, int n, const CliOptions& opt, std::ostream& out,
                        std::ostream& err) {
    Report rep;
    rep.object_id = "theorem1 W(" + std::to_string(m) + "," + std::to_string(n) + ")";
    PlugParams p{m, n};
    try {
        check_params(p);
    } catch (const std::exception& e) {
        err << "parameter error: " << e.what() << "\n";
        return 1;
    }
    PalfDescription palf = plug_palf(p);
    int expect_len = 2 * n + m;
    line(rep, "factorization length", std::to_string(expect_len),
         std::to_string(palf.cycle_count()), "thm1.length_2n_plus_m",
         palf.cycle_count() == expect_len);
    bool allow = true;
    for (const auto& c : palf.cycles()) allow &= is_allowable(c);
    line(rep, "all vanishing cycles allowable", "true", allow ? "true" : "false",
         "def.palf_allowable", allow);

    PalfHomology hom = homology(palf);
    IntSymForm form = intersection_form(palf);
    line(rep, "chi", "2", std::to_string(euler_characteristic(palf)),
         "derived.handle_count", euler_characteristic(palf) == 2);
    line(rep, "H1", "0", hom.h1.to_string(), "derived.snf", hom.h1.is_trivial());
    line(rep, "b2", "1", std::to_string(hom.b2), "derived.snf", hom.b2 == 1);
    bool negdef = signature(form) == -form.rank();
    line(rep, "form negative definite", "true", negdef ? "true" : "false",
         "derived.restriction_of_minus_identity", negdef);

    InvariantRecord palf_side = invariants(to_kirby(palf));
    InvariantRecord raw_side = invariants(wmn_marked(p).diagram);
    bool agree = palf_side.h1 == raw_side.h1 && palf_side.b2 == raw_side.b2 &&
                 palf_side.chi == raw_side.chi &&
                 palf_side.boundary_h1 == raw_side.boundary_h1 &&
                 congruent(palf_side.form, raw_side.form, 5).verdict == CongruenceVerdict::Yes;
    line(rep, "PALF invariants agree with the dotted diagram", "agree",
         agree ? "agree" : "disagree", "derived.cross_presentation", agree);

    rep.notes = convention_notes();
    if (opt.json) out << rep.to_json() << "\n";
    else rep.print(out);
    return rep.all_pass() ? 0 : 3;
}

int cmd_verify_theorem2(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<Expectation> es = load_expectations(opt);
    Report rep;
    rep.object_id = "theorem2";
    CatalogManifold A = manifold_A();
    CatalogManifold B = manifold_B();

    // (1) plug twist
    MarkedDiagram twisted = plug_twist(A.marked);
    line(rep, "(1) plug twist of A is B", "equal diagrams",
         twisted == B.marked ? "equal diagrams" : "different", "thm2.1.dot_zero_swap",
         twisted == B.marked);
    line(rep, "(1) involution", "identity", plug_twist(twisted) == A.marked ? "identity" : "not",
         "derived.swap_twice", plug_twist(twisted) == A.marked);

    // (2) PALF validity
    for (const CatalogManifold* mfd : {&A, &B}) {
        bool allow = true;
        for (const auto& c : mfd->palf.cycles()) allow &= is_allowable(c);
        bool extends = mfd->palf.cycle_count() == plug_palf({1, 2}).cycle_count() + 1;
        line(rep, "(2) " + mfd->name + " admits a genus-zero PALF", "allowable, W(1,2)+1 cycle",
             allow && extends ? "allowable, W(1,2)+1 cycle" : "invalid",
             "thm2.2.palf_structure", allow && extends);
    }

    // (3) homology
    const Expectation& b2e = find_expectation(es, "b2_ab");
    const Expectation& h2e = find_expectation(es, "h2_rank");
    for (const CatalogManifold* mfd : {&A, &B}) {
        PalfHomology hom = homology(mfd->palf);
        InvariantRecord raw = invariants(mfd->marked.diagram);
        bool ok = hom.b2 == std::stoi(b2e.payload[0]) && raw.b2 == hom.b2 &&
                  hom.h1.is_trivial() && raw.h1.is_trivial();
        line(rep, "(3) " + mfd->name + " b2 and H1 (both presentations)",
             "b2=" + b2e.payload[0] + " H1=0",
             "b2=" + std::to_string(hom.b2) + "/" + std::to_string(raw.b2) + " H1=" +
                 hom.h1.to_string() + "/" + raw.h1.to_string(),
             b2e.source, ok);
        // H2 of a 2-handlebody is the kernel lattice: free of rank b2
        bool h2free = hom.b2 == std::stoi(h2e.payload[0]);
        line(rep, "(3) " + mfd->name + " H2 free of rank 2", h2e.payload[0],
             std::to_string(hom.b2), h2e.source, h2free);
    }

    // (4) boundary
    const Expectation& be = find_expectation(es, "boundary_ab");
    InvariantRecord ra = invariants(A.marked.diagram);
    InvariantRecord rb = invariants(B.marked.diagram);
    bool bnd = ra.boundary_h1 == rb.boundary_h1 && ra.boundary_h1.free_rank == 0 &&
               ra.boundary_h1.torsion.size() == 1 &&
               ra.boundary_h1.torsion[0] == Int(be.payload[0]);
    line(rep, "(4) boundary H1 equal", "Z/" + be.payload[0],
         ra.boundary_h1.to_string() + " vs " + rb.boundary_h1.to_string(), be.source, bnd);
    LinkingForm la = linking_form(ra.form);
    LinkingForm lb = linking_form(rb.form);
    bool liso = linking_isomorphic(la, lb);
    line(rep, "(4) linking forms isomorphic", "isomorphic",
         la.to_string() + " vs " + lb.to_string(), "derived.linking_enumeration", liso);

    // (5) intersection forms
    const IntSymForm fa = expectation_matrix(find_expectation(es, "form_a"));
    const IntSymForm fb = expectation_matrix(find_expectation(es, "form_b"));
    CongruenceResult ca = congruent(ra.form, fa, 5);
    CongruenceResult cb = congruent(rb.form, fb, 5);
    line(rep, "(5) A form congruent to stated matrix", gram_to_string(fa),
         gram_to_string(ra.form), find_expectation(es, "form_a").source,
         ca.verdict == CongruenceVerdict::Yes);
    line(rep, "(5) B form congruent to stated matrix", gram_to_string(fb),
         gram_to_string(rb.form), find_expectation(es, "form_b").source,
         cb.verdict == CongruenceVerdict::Yes);
    bool pa = is_even(ra.form), pb = is_even(rb.form);
    line(rep, "(5) parities", "even vs odd",
         std::string(pa ? "even" : "odd") + " vs " + (pb ? "even" : "odd"),
         find_expectation(es, "parity_a").source, pa && !pb);
    CongruenceResult mutual = congruent(ra.form, rb.form, 5);
    bool distinguished = mutual.verdict == CongruenceVerdict::No &&
                         mutual.failed_invariant == "parity";
    line(rep, "(5) forms not congruent (parity obstruction)", "no(parity)",
         mutual.verdict == CongruenceVerdict::No ? "no(" + mutual.failed_invariant + ")"
                                                 : "not refuted",
         "thm2.5.even_odd_sentence", distinguished);

    // (6) monodromy words
    const Expectation& lw = find_expectation(es, "monodromy_len_w12");
    const Expectation& lab = find_expectation(es, "monodromy_len_ab");
    PalfDescription w12 = plug_palf({1, 2});
    bool len_ok = w12.cycle_count() == std::stoi(lw.payload[0]) &&
                  A.palf.cycle_count() == std::stoi(lab.payload[0]) &&
                  B.palf.cycle_count() == std::stoi(lab.payload[0]);
    bool prefix = std::equal(w12.cycles().begin(), w12.cycles().end(), A.palf.cycles().begin()) &&
                  std::equal(w12.cycles().begin(), w12.cycles().end(), B.palf.cycles().begin());
    line(rep, "(6) monodromy lengths", lw.payload[0] + " and " + lab.payload[0],
         std::to_string(w12.cycle_count()) + " and " + std::to_string(A.palf.cycle_count()) +
             "/" + std::to_string(B.palf.cycle_count()),
         lab.source, len_ok);
    line(rep, "(6) A and B share the W(1,2) twist prefix", "shared prefix",
         prefix ? "shared prefix" : "different", "thm2.6.factorizations", prefix);

    rep.notes = convention_notes();
    if (opt.json) out << rep.to_json() << "\n";
    else rep.print(out);
    if (!rep.all_pass()) {
        err << "theorem 2 verification failed\n";
        return 3;
    }
    return 0;
}

namespace {

StandardCurve random_curve(std::mt19937_64& rng, int h) {
    std::uniform_int_distribution<int> size_dist(1, h);
    int r = size_dist(rng);
    std::vector<int> holes(h);
    std::iota(holes.begin(), holes.end(), 1);
    std::shuffle(holes.begin(), holes.end(), rng);
    holes.resize(size_t(r));
    return StandardCurve(holes);
}

KirbyDiagram random_diagram(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ddist(0, 3), kdist(1, 6), edist(-3, 3);
    int d = ddist(rng), k = kdist(rng);
    IntMat l(k, k), n(k, d);
    for (int a = 0; a < k; ++a) {
        l.at(a, a) = edist(rng);
        for (int b = a + 1; b < k; ++b) {
            l.at(a, b) = edist(rng);
            l.at(b, a) = l.at(a, b);
        }
        for (int t = 0; t < d; ++t) n.at(a, t) = edist(rng);
    }
    std::vector<std::vector<long long>> geo(size_t(k), std::vector<long long>(size_t(d), 0));
    for (int a = 0; a < k; ++a)
        for (int t = 0; t < d; ++t)  // drawn with no excess strands
            geo[size_t(a)][size_t(t)] = abs(n.at(a, t)).convert_to<long long>();
    return KirbyDiagram(d, std::move(l), std::move(n), std::move(geo));
}

bool random_move_case(std::mt19937_64& rng, std::string& fail) {
    KirbyDiagram dgm = random_diagram(rng);
    MoveScript script;
    std::uniform_int_distribution<int> len_dist(1, 10), kind_dist(0, 9);
    int len = len_dist(rng);
    KirbyDiagram cur = dgm;
    for (int s = 0; s < len; ++s) {
        int kind = kind_dist(rng);
        if (kind <= 5 && cur.handles() >= 2) {  // slide
            std::uniform_int_distribution<int> hd(0, cur.handles() - 1);
            int i = hd(rng), j = hd(rng);
            if (i == j) continue;
            int sign = (kind % 2) ? 1 : -1;
            script.moves.push_back(MoveSlide{i + 1, j + 1, sign});
            cur = slide(cur, i, j, sign);
        } else if (kind == 6) {
            script.moves.push_back(MovePair{});
            cur = add_cancelling_pair(cur);
        } else if (kind == 7) {  // cancel if a legal pair exists
            bool done = false;
            for (int i = 0; i < cur.dotted() && !done; ++i)
                for (int j = 0; j < cur.handles() && !done; ++j)
                    if (cur.geo(j, i) == 1 && abs(cur.n().at(j, i)) == 1) {
                        script.moves.push_back(MoveCancel{j + 1, i + 1});
                        cur = cancel_pair(cur, j, i);
                        done = true;
                    }
        } else if (kind == 8) {
            int sign = (rng() & 1) ? 1 : -1;
            script.moves.push_back(MoveBlowUp{sign});
            cur = blow_up(cur, sign);
        } else {  // blow down if possible
            bool done = false;
            for (int j = 0; j < cur.handles() && !done; ++j) {
                if (cur.framing(j) != 1 && cur.framing(j) != -1) continue;
                bool clean = true;
                for (int t = 0; t < cur.dotted(); ++t)
                    if (cur.n().at(j, t) != 0 || cur.geo(j, t) != 0) clean = false;
                if (!clean) continue;
                script.moves.push_back(MoveBlowDown{j + 1});
                cur = blow_down(cur, j);
                done = true;
            }
        }
    }
    ScriptResult sr = run_script(dgm, script);  // re-verifies invariants per move
    if (!sr.ok()) {
        fail = "script aborted at move " + std::to_string(sr.error->step + 1) + ": " +
               sr.error->message;
        return false;
    }
    return true;
}

}  // namespace

int cmd_selftest(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    Report rep;
    rep.object_id = "selftest-relations";
    std::mt19937_64 rng(opt.seed);

    // lantern relation on the 3-holed disk
    FiberModel f3{3};
    MappingClass lhs = compose_mc(
        compose_mc(dehn_twist(StandardCurve({1, 2, 3}), f3), dehn_twist(StandardCurve({1}), f3)),
        compose_mc(dehn_twist(StandardCurve({2}), f3), dehn_twist(StandardCurve({3}), f3)));
    MappingClass rhs = compose_mc(
        compose_mc(dehn_twist(StandardCurve({1, 2}), f3), dehn_twist(StandardCurve({1, 3}), f3)),
        dehn_twist(StandardCurve({2, 3}), f3));
    check(rep, "lantern relation (h=3)", equals_mc(lhs, rhs));

    // braid relations
    bool braid_ok = true;
    for (int h = 3; h <= 5; ++h) {
        for (int i = 1; i + 1 < h; ++i) {
            BraidWord aba{h, {i, i + 1, i}};
            BraidWord bab{h, {i + 1, i, i + 1}};
            braid_ok &= artin_action(aba) == artin_action(bab);
        }
        for (int i = 1; i < h; ++i)
            for (int j = i + 2; j < h; ++j) {
                BraidWord ij{h, {i, j}};
                BraidWord ji{h, {j, i}};
                braid_ok &= artin_action(ij) == artin_action(ji);
            }
    }
    check(rep, "braid relations", braid_ok);

    // commutation of twists along disjoint standard curves, all pairs h <= 5
    bool commute_ok = true;
    for (int h = 2; h <= 5 && commute_ok; ++h) {
        FiberModel f{h};
        std::vector<StandardCurve> all;
        for (int mask = 1; mask < (1 << h); ++mask) {
            std::vector<int> holes;
            for (int b = 0; b < h; ++b)
                if (mask & (1 << b)) holes.push_back(b + 1);
            all.emplace_back(holes);
        }
        for (size_t a = 0; a < all.size() && commute_ok; ++a)
            for (size_t b = a + 1; b < all.size() && commute_ok; ++b) {
                if (!disjoint(all[a], all[b])) continue;
                MappingClass ta = dehn_twist(all[a], f);
                MappingClass tb = dehn_twist(all[b], f);
                if (!equals_mc(compose_mc(ta, tb), compose_mc(tb, ta))) commute_ok = false;
            }
    }
    check(rep, "disjoint standard curves give commuting twists (h<=5)", commute_ok);

    // t o t^{-1} = identity for random twists
    bool inv_ok = true;
    for (int c = 0; c < 100; ++c) {
        std::uniform_int_distribution<int> hdist(2, 6);
        int h = hdist(rng);
        FiberModel f{h};
        StandardCurve s = random_curve(rng, h);
        MappingClass t = dehn_twist(s, f, +1);
        MappingClass ti = dehn_twist(s, f, -1);
        if (!compose_mc(t, ti).is_identity()) inv_ok = false;
    }
    check(rep, "t o t^-1 = identity (100 random twists)", inv_ok);

    // SNF property checks on random matrices (unimodularity and the chain are
    // re-verified inside smith_normal_form on every call)
    bool snf_ok = true;
    std::uniform_int_distribution<int> dim_dist(1, 5), ent_dist(-6, 6);
    for (int c = 0; c < std::max(50, opt.cases / 20); ++c) {
        IntMat m(dim_dist(rng), dim_dist(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = ent_dist(rng);
        try {
            smith_normal_form(m);
        } catch (const std::exception&) {
            snf_ok = false;
        }
    }
    check(rep, "smith normal form properties on random matrices", snf_ok);

    // randomized Kirby-move invariance
    int cases = opt.cases;
    bool moves_ok = true;
    std::string fail;
    for (int c = 0; c < cases && moves_ok; ++c)
        moves_ok = random_move_case(rng, fail);
    check(rep, "randomized Kirby-move invariance (" + std::to_string(cases) + " cases)",
          moves_ok, fail);

    if (opt.json) out << rep.to_json() << "\n";
    else rep.print(out);
    if (!rep.all_pass()) {
        err << "selftest failed\n";
        return 3;
    }
    return 0;
}

int cmd_search(const std::string& constraints_path, const CliOptions& opt,
               std::ostream& out, std::ostream& err) {
    SearchConstraints sc;
    try {
        sc = constraints_from_document(parse_file(DocKind::Constraints, constraints_path));
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    }
    std::vector<PalfDescription> found;
    try {
        found = search_curve_family(sc);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (opt.json) {
        nlohmann::json j;
        j["count"] = found.size();
        j["results"] = nlohmann::json::array();
        for (const auto& p : found) {
            nlohmann::json r;
            r["holes"] = p.holes();
            r["cycles"] = nlohmann::json::array();
            for (const auto& c : p.cycles()) r["cycles"].push_back(c.to_string());
            j["results"].push_back(r);
        }
        out << j.dump(2) << "\n";
    } else {
        out << found.size() << " result(s)\n";
        for (const auto& p : found) {
            out << "holes " << p.holes() << ":";
            for (const auto& c : p.cycles()) out << " " << c.to_string();
            out << "\n";
        }
    }
    return 0;
}

int cmd_validate(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    ValidationReport vr = validate_catalog(opt.data_dir);
    Report rep;
    rep.object_id = "catalog";
    for (const auto& it : vr.items) check(rep, it.name, it.pass, it.detail);
    rep.notes = vr.notes;
    if (opt.json) out << rep.to_json() << "\n";
    else rep.print(out);
    if (!vr.all_pass()) {
        err << "catalog validation failed\n";
        return 3;
    }
    return 0;
}

}  // namespace pzero
