#include "pzero/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pzero {

void check_params(const PlugParams& p) {
    if (p.m < 1) throw std::invalid_argument("plug parameter m must be >= 1");
    if (p.n < 2) throw std::invalid_argument("plug parameter n must be >= 2");
}

PalfDescription plug_palf(const PlugParams& p) {
    check_params(p);
    int h = 2 * p.n + p.m - 1;
    std::vector<int> tail;  // holes 4..h
    for (int i = 4; i <= h; ++i) tail.push_back(i);

    std::vector<StandardCurve> cycles;
    cycles.emplace_back(std::vector<int>{1, 3});
    cycles.emplace_back(std::vector<int>{1, 2});
    {
        std::vector<int> p3{2, 3};
        p3.insert(p3.end(), tail.begin(), tail.end());
        cycles.emplace_back(std::move(p3));
    }
    cycles.emplace_back(tail);
    cycles.emplace_back(std::vector<int>{1, 2, 3, 4});
    for (int i = 0; i < p.n - 2; ++i)
        cycles.emplace_back(std::vector<int>{5 + 2 * i, 6 + 2 * i});
    for (int j = 0; j < p.m - 1; ++j)
        cycles.emplace_back(std::vector<int>{5 + 2 * (p.n - 2) + j});
    for (int i = 0; i < p.n - 2; ++i)
        cycles.emplace_back(std::vector<int>{5 + 2 * i});
    return PalfDescription(FiberModel{h}, std::move(cycles));
}

long long plug_form_value(const PlugParams& p) {
    check_params(p);
    return -4LL * (p.m + p.n - 1);
}

MarkedDiagram wmn_marked(const PlugParams& p) {
    check_params(p);
    IntMat l = IntMat::from_rows({{0, p.n - 1}, {p.n - 1, -p.m}});
    IntMat n = IntMat::from_rows({{2}, {1}});
    KirbyDiagram dgm(1, std::move(l), std::move(n), {{2}, {1}});
    return MarkedDiagram{std::move(dgm), 0, 0, {2, p.n - 1}};
}

namespace {

PalfDescription w12_extended(const std::vector<int>& extra) {
    return attach_lefschetz_handle(plug_palf({1, 2}), StandardCurve(extra));
}

}  // namespace

CatalogManifold manifold_A() {
    IntMat l = IntMat::from_rows({{0, 1, 1}, {1, -1, 0}, {1, 0, -2}});
    IntMat n = IntMat::from_rows({{2}, {1}, {0}});
    KirbyDiagram dgm(1, std::move(l), std::move(n), {{2}, {1}, {0}});
    return {"A", w12_extended({4}), MarkedDiagram{std::move(dgm), 0, 0, {2, 1, 1}}};
}

CatalogManifold manifold_B() {
    IntMat l = IntMat::from_rows({{0, 1, 0}, {1, -1, 0}, {0, 0, -2}});
    IntMat n = IntMat::from_rows({{2}, {1}, {1}});
    KirbyDiagram dgm(1, std::move(l), std::move(n), {{2}, {1}, {1}});
    return {"B", w12_extended({1, 2, 3}), MarkedDiagram{std::move(dgm), 0, 0, {2, 1, 0}}};
}

MarkedDiagram plug_twist(const MarkedDiagram& md) {
    const KirbyDiagram& d = md.diagram;
    int i = md.marked_dot, j = md.marked_handle;
    if (i < 0 || i >= d.dotted() || j < 0 || j >= d.handles())
        throw std::invalid_argument("plug_twist: marked pair out of range");
    if (d.framing(j) != 0)
        throw std::invalid_argument("plug_twist: marked 2-handle must be 0-framed");
    if (int(md.partner_geo.size()) != d.handles())
        throw std::invalid_argument("plug_twist: swap annotation has wrong length");
    // the annotation must agree with the tracked count of the marked pair
    if (d.geo(j, i) != GEO_UNKNOWN && md.partner_geo[size_t(j)] != d.geo(j, i))
        throw std::invalid_argument("plug_twist: swap annotation contradicts strand counts");

    int k = d.handles(), dd = d.dotted();
    IntMat l = d.l(), n = d.n();
    std::vector<std::vector<long long>> geo(size_t(k), std::vector<long long>(size_t(dd), 0));
    for (int u = 0; u < k; ++u)
        for (int t = 0; t < dd; ++t) geo[size_t(u)][size_t(t)] = d.geo(u, t);

    // slot j becomes the old dotted circle (as a 0-framed handle), slot i the
    // old handle (as a dot): exchange the linking data across the pair
    for (int u = 0; u < k; ++u) {
        if (u == j) continue;
        Int lu = l.at(u, j);
        l.at(u, j) = n.at(u, i);
        l.at(j, u) = l.at(u, j);
        n.at(u, i) = lu;
        geo[size_t(u)][size_t(i)] = md.partner_geo[size_t(u)];
    }
    l.at(j, j) = 0;
    for (int t = 0; t < dd; ++t) {
        if (t == i) continue;
        n.at(j, t) = 0;  // dotted circles are modeled as mutually unlinked
        geo[size_t(j)][size_t(t)] = 0;
    }

    std::vector<long long> new_partner(size_t(k), 0);
    for (int u = 0; u < k; ++u) new_partner[size_t(u)] = d.geo(u, i);

    KirbyDiagram out(dd, std::move(l), std::move(n), std::move(geo));
    return MarkedDiagram{std::move(out), i, j, std::move(new_partner)};
}

KirbyDiagram surger_dot_to_zero(const KirbyDiagram& dgm, int dotted_i) {
    if (dotted_i < 0 || dotted_i >= dgm.dotted())
        throw std::invalid_argument("surger_dot_to_zero: dot index out of range");
    int k = dgm.handles(), d = dgm.dotted();
    IntMat l(k + 1, k + 1), n(k + 1, d - 1);
    std::vector<std::vector<long long>> geo(size_t(k) + 1,
                                            std::vector<long long>(size_t(d) - 1, 0));
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) l.at(a, b) = dgm.l().at(a, b);
        l.at(a, k) = dgm.n().at(a, dotted_i);
        l.at(k, a) = l.at(a, k);
        for (int t = 0, ti = 0; t < d; ++t) {
            if (t == dotted_i) continue;
            n.at(a, ti) = dgm.n().at(a, t);
            geo[size_t(a)][size_t(ti)] = dgm.geo(a, t);
            ++ti;
        }
    }
    return KirbyDiagram(d - 1, std::move(l), std::move(n), std::move(geo));
}

MoveScript reduce_script_A() {
    MoveScript s;
    s.moves = {MoveSlide{1, 2, -1}, MoveSlide{1, 2, -1}, MoveCancel{2, 1}};
    return s;
}

MoveScript reduce_script_B() {
    MoveScript s;
    s.moves = {MoveSlide{1, 2, -1}, MoveSlide{1, 2, -1}, MoveSlide{3, 2, -1}, MoveCancel{2, 1}};
    return s;
}

MoveScript generate_cancellation_script(const KirbyDiagram& dgm, int target_dots) {
    MoveScript script;
    KirbyDiagram cur = dgm;
    while (cur.dotted() > target_dots) {
        int best_j = -1, best_i = -1, best_w = -1;
        for (int i = 0; i < cur.dotted(); ++i)
            for (int j = 0; j < cur.handles(); ++j) {
                if (cur.geo(j, i) != 1 || abs(cur.n().at(j, i)) != 1) continue;
                int w = 0;
                for (int t = 0; t < cur.dotted(); ++t)
                    if (cur.n().at(j, t) != 0) ++w;
                if (best_j < 0 || w < best_w) { best_j = j; best_i = i; best_w = w; }
            }
        if (best_j < 0) break;  // no legal geometric pair left
        script.moves.push_back(MoveCancel{best_j + 1, best_i + 1});
        cur = cancel_pair(cur, best_j, best_i);
    }
    return script;
}

MoveScript reduce_script_W(const PlugParams& p) {
    return generate_cancellation_script(to_kirby(plug_palf(p)), 1);
}

std::vector<PalfDescription> search_curve_family(const SearchConstraints& sc) {
    std::vector<PalfDescription> out;
    if (sc.holes < 1 || sc.cycles < 0) return out;
    if (sc.b2 && *sc.b2 > sc.cycles) return out;  // infeasible
    if (sc.holes > 20) throw std::invalid_argument("search: hole count too large");

    long long symbols = (1LL << sc.holes) - 1;
    // crude size estimate of the multiset space; refuse hopeless enumerations
    double logsize = 0;
    for (int t = 0; t < sc.cycles; ++t)
        logsize += std::log10(double(symbols + t + 1) / (t + 1));
    if (logsize > 6.7)
        throw std::invalid_argument("search: enumeration space too large, tighten constraints");

    FiberModel fiber{sc.holes};
    std::vector<long long> chosen;
    std::vector<StandardCurve> curves;

    std::function<void(long long)> dfs = [&](long long next_min) {
        if (int(out.size()) >= sc.max_results) return;
        if (int(chosen.size()) == sc.cycles) {
            PalfDescription cand(fiber, curves);
            PalfHomology hom = homology(cand);
            if (sc.h1 && !(hom.h1 == *sc.h1)) return;
            if (sc.b2 && hom.b2 != *sc.b2) return;
            if (sc.form) {
                IntSymForm f = intersection_form(cand);
                if (f.rank() != sc.form->rank()) return;
                CongruenceResult cr = congruent(f, *sc.form, sc.congruence_bound);
                if (cr.verdict != CongruenceVerdict::Yes) return;
            }
            out.push_back(std::move(cand));
            return;
        }
        for (long long code = next_min; code <= symbols; ++code) {
            int mult = 0;
            for (long long c : chosen)
                if (c == code) ++mult;
            if (mult >= sc.max_multiplicity) continue;
            std::vector<int> holes;
            for (int b = 0; b < sc.holes; ++b)
                if (code & (1LL << b)) holes.push_back(b + 1);
            chosen.push_back(code);
            curves.emplace_back(std::move(holes));
            dfs(code);
            chosen.pop_back();
            curves.pop_back();
            if (int(out.size()) >= sc.max_results) return;
        }
    };
    dfs(1);
    return out;
}

std::vector<std::string> convention_notes() {
    return {
        "fiber convention: W(m,n) uses 2n+m-1 holes so that the disk fiber has "
        "2n+m boundary components in total and chi(W) = 2; the alternative "
        "reading (2n+m holes, 2n+m+1 boundary components) would force chi = 1 "
        "and is rejected by the handle count.",
        "monodromy length convention: W(1,2) carries 5 twists (2n+m with m=1, "
        "n=2); the four-twist wording in the source statement of item (6) "
        "disagrees with its own proof, which lists five twists plus one.",
    };
}

bool ValidationReport::all_pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

namespace {

void add(ValidationReport& rep, const std::string& name, bool pass,
         const std::string& detail = "") {
    rep.items.push_back({name, pass, detail});
}

bool file_matches(const std::string& path, const std::string& expected,
                  std::string& detail) {
    namespace fs = std::filesystem;
    if (!fs::exists(path)) {
        detail = "missing file " + path;
        return false;
    }
    std::string got = read_text_file(path);
    if (got != expected) {
        detail = "file " + path + " differs from the generated canonical form";
        return false;
    }
    return true;
}

}  // namespace

ValidationReport validate_catalog(const std::string& data_dir) {
    ValidationReport rep;
    rep.notes = convention_notes();
    IntSymForm target_a(IntMat::from_rows({{-8, 1}, {1, -2}}));
    IntSymForm target_b(IntMat::from_rows({{-8, -3}, {-3, -3}}));

    // W(m,n) sweep
    for (int m = 1; m <= 4; ++m) {
        for (int n = 2; n <= 5; ++n) {
            PlugParams p{m, n};
            std::string tag = "W(" + std::to_string(m) + "," + std::to_string(n) + ")";
            PalfDescription palf = plug_palf(p);
            bool count_ok = palf.cycle_count() == 2 * n + m &&
                            palf.holes() == 2 * n + m - 1;
            bool allow_ok = true;
            for (const auto& c : palf.cycles()) allow_ok &= is_allowable(c);
            add(rep, tag + " cycle count 2n+m and allowability", count_ok && allow_ok);

            PalfHomology hom = homology(palf);
            IntSymForm form = intersection_form(palf);
            bool profile = euler_characteristic(palf) == 2 && hom.h1.is_trivial() &&
                           hom.b2 == 1 && form.rank() == 1 &&
                           form.gram().at(0, 0) == plug_form_value(p) &&
                           signature(form) == -1;
            add(rep, tag + " invariant profile", profile,
                "chi=2 H1=0 b2=1 form=<" + std::to_string(plug_form_value(p)) + ">");

            InvariantRecord palf_side = invariants(to_kirby(palf));
            InvariantRecord raw_side = invariants(wmn_marked(p).diagram);
            bool agree = palf_side.h1 == raw_side.h1 && palf_side.b2 == raw_side.b2 &&
                         palf_side.chi == raw_side.chi &&
                         palf_side.boundary_h1 == raw_side.boundary_h1 &&
                         congruent(palf_side.form, raw_side.form, 5).verdict ==
                             CongruenceVerdict::Yes;
            add(rep, tag + " PALF agrees with dotted diagram", agree);

            MoveScript ws = reduce_script_W(p);
            ScriptResult sr = run_script(to_kirby(palf), ws);
            bool script_ok = sr.ok() && sr.diagram.dotted() == 1 && sr.diagram.handles() == 2;
            add(rep, tag + " reduction script reaches plug shape", script_ok);

            if (!data_dir.empty()) {
                std::string detail;
                std::string base = data_dir + "/palf/W_" + std::to_string(m) + "_" +
                                   std::to_string(n) + ".palf";
                bool ok = file_matches(base, serialize(palf_to_document(palf)), detail);
                add(rep, tag + " golden palf file", ok, detail);
                MarkedDiagram md = wmn_marked(p);
                std::string kf = data_dir + "/kirby/W_" + std::to_string(m) + "_" +
                                 std::to_string(n) + ".kirby";
                ok = file_matches(kf,
                                  serialize(kirby_to_document(
                                      md.diagram, std::make_pair(md.marked_dot, md.marked_handle),
                                      md.partner_geo)),
                                  detail);
                add(rep, tag + " golden kirby file", ok, detail);
                std::string sf = data_dir + "/scripts/reduce_W_" + std::to_string(m) + "_" +
                                 std::to_string(n) + ".script";
                ok = file_matches(sf, serialize(script_to_document(ws)), detail);
                add(rep, tag + " golden script file", ok, detail);
            }
        }
    }

    // A and B
    CatalogManifold A = manifold_A();
    CatalogManifold B = manifold_B();
    for (const CatalogManifold* mfd : {&A, &B}) {
        const IntSymForm& target = (mfd->name == "A") ? target_a : target_b;
        PalfHomology hom = homology(mfd->palf);
        bool basic = euler_characteristic(mfd->palf) == 3 && hom.h1.is_trivial() && hom.b2 == 2;
        add(rep, mfd->name + " chi=3, H1=0, b2=2", basic);

        IntSymForm pf = intersection_form(mfd->palf);
        CongruenceResult pcr = congruent(pf, target, 5);
        add(rep, mfd->name + " PALF form congruent to stated matrix",
            pcr.verdict == CongruenceVerdict::Yes);

        InvariantRecord raw = invariants(mfd->marked.diagram);
        CongruenceResult rcr = congruent(raw.form, target, 5);
        add(rep, mfd->name + " diagram form congruent to stated matrix",
            rcr.verdict == CongruenceVerdict::Yes);
        add(rep, mfd->name + " boundary H1 = Z/15",
            raw.boundary_h1.torsion.size() == 1 && raw.boundary_h1.torsion[0] == 15 &&
                raw.boundary_h1.free_rank == 0);

        InvariantRecord palf_side = invariants(to_kirby(mfd->palf));
        bool agree = palf_side.h1 == raw.h1 && palf_side.b2 == raw.b2 &&
                     palf_side.chi == raw.chi && palf_side.boundary_h1 == raw.boundary_h1 &&
                     congruent(palf_side.form, raw.form, 5).verdict == CongruenceVerdict::Yes;
        add(rep, mfd->name + " PALF agrees with dotted diagram", agree);

        if (!data_dir.empty()) {
            std::string detail;
            bool ok = file_matches(data_dir + "/palf/" + mfd->name + ".palf",
                                   serialize(palf_to_document(mfd->palf)), detail);
            add(rep, mfd->name + " golden palf file", ok, detail);
            ok = file_matches(
                data_dir + "/kirby/" + mfd->name + ".kirby",
                serialize(kirby_to_document(
                    mfd->marked.diagram,
                    std::make_pair(mfd->marked.marked_dot, mfd->marked.marked_handle),
                    mfd->marked.partner_geo)),
                detail);
            add(rep, mfd->name + " golden kirby file", ok, detail);
        }
    }

    add(rep, "A and B forms even/odd",
        is_even(invariants(A.marked.diagram).form) &&
            !is_even(invariants(B.marked.diagram).form));
    CongruenceResult ab = congruent(invariants(A.marked.diagram).form,
                                    invariants(B.marked.diagram).form, 5);
    add(rep, "A and B forms distinguished by parity",
        ab.verdict == CongruenceVerdict::No && ab.failed_invariant == "parity");

    MarkedDiagram twisted = plug_twist(A.marked);
    add(rep, "plug twist of A equals B", twisted == B.marked);
    add(rep, "plug twist is an involution", plug_twist(twisted) == A.marked);
    add(rep, "plug twist preserves chi",
        invariants(twisted.diagram).chi == invariants(A.marked.diagram).chi);
    add(rep, "plug twist preserves boundary H1",
        invariants(twisted.diagram).boundary_h1 == invariants(A.marked.diagram).boundary_h1);

    LinkingForm la = linking_form(invariants(A.marked.diagram).form);
    LinkingForm lb = linking_form(invariants(B.marked.diagram).form);
    add(rep, "A and B boundary linking forms isomorphic", linking_isomorphic(la, lb));

    ScriptResult sa = run_script(A.marked.diagram, reduce_script_A());
    ScriptResult sb = run_script(B.marked.diagram, reduce_script_B());
    add(rep, "reduce_A reaches the stated matrix",
        sa.ok() && sa.diagram.dotted() == 0 &&
            congruent(invariants(sa.diagram).form, target_a, 5).verdict == CongruenceVerdict::Yes);
    add(rep, "reduce_B reaches the stated matrix",
        sb.ok() && sb.diagram.dotted() == 0 &&
            congruent(invariants(sb.diagram).form, target_b, 5).verdict == CongruenceVerdict::Yes);

    if (!data_dir.empty()) {
        std::string detail;
        bool ok = file_matches(data_dir + "/scripts/reduce_A.script",
                               serialize(script_to_document(reduce_script_A())), detail);
        add(rep, "golden reduce_A script", ok, detail);
        ok = file_matches(data_dir + "/scripts/reduce_B.script",
                          serialize(script_to_document(reduce_script_B())), detail);
        add(rep, "golden reduce_B script", ok, detail);
    }

    return rep;
}

}  // namespace pzero
