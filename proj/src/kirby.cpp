#include "pzero/kirby.hpp"

#include <sstream>
#include <stdexcept>

namespace pzero {

namespace {

long long geo_add(long long a, long long b) {
    if (a == GEO_UNKNOWN || b == GEO_UNKNOWN) return GEO_UNKNOWN;
    return a + b;
}

}  // namespace

KirbyDiagram::KirbyDiagram(int dotted, IntMat l, IntMat n)
    : KirbyDiagram(dotted, std::move(l), std::move(n),
                   std::vector<std::vector<long long>>()) {}

KirbyDiagram::KirbyDiagram(int dotted, IntMat l, IntMat n,
                           std::vector<std::vector<long long>> geo)
    : dotted_(dotted), l_(std::move(l)), n_(std::move(n)), geo_(std::move(geo)) {
    if (dotted_ < 0) throw std::invalid_argument("negative dotted circle count");
    if (!l_.is_symmetric()) throw std::invalid_argument("linking matrix not symmetric");
    if (n_.rows() != l_.rows() || n_.cols() != dotted_)
        throw std::invalid_argument("dotted-linking matrix has wrong shape");
    if (geo_.empty())
        geo_.assign(size_t(handles()), std::vector<long long>(size_t(dotted_), GEO_UNKNOWN));
    if (int(geo_.size()) != handles())
        throw std::invalid_argument("geometric count matrix has wrong shape");
    for (int j = 0; j < handles(); ++j) {
        if (int(geo_[size_t(j)].size()) != dotted_)
            throw std::invalid_argument("geometric count matrix has wrong shape");
        for (int i = 0; i < dotted_; ++i) {
            long long g = geo_[size_t(j)][size_t(i)];
            if (g != GEO_UNKNOWN && Int(g) < abs(n_.at(j, i)))
                throw std::invalid_argument("geometric count below |algebraic linking|");
        }
    }
}

void KirbyDiagram::set_geo(int j, int i, long long count) {
    if (count != GEO_UNKNOWN && Int(count) < abs(n_.at(j, i)))
        throw std::invalid_argument("geometric count below |algebraic linking|");
    geo_[size_t(j)][size_t(i)] = count;
}

bool KirbyDiagram::operator==(const KirbyDiagram& o) const {
    return dotted_ == o.dotted_ && l_ == o.l_ && n_ == o.n_ && geo_ == o.geo_;
}

KirbyDiagram slide(const KirbyDiagram& dgm, int i, int j, int sign) {
    int k = dgm.handles();
    if (i < 0 || i >= k || j < 0 || j >= k)
        throw MovePreconditionError("slide: handle index out of range");
    if (i == j) throw MovePreconditionError("slide: cannot slide a handle over itself");
    if (sign != 1 && sign != -1) throw MovePreconditionError("slide: sign must be +-1");

    KirbyDiagram out = dgm;
    Int new_fii = dgm.l_.at(i, i) + dgm.l_.at(j, j) + 2 * sign * dgm.l_.at(i, j);
    for (int m = 0; m < k; ++m) {
        if (m == i) continue;
        out.l_.at(i, m) = dgm.l_.at(i, m) + sign * dgm.l_.at(j, m);
        out.l_.at(m, i) = out.l_.at(i, m);
    }
    out.l_.at(i, i) = new_fii;
    for (int t = 0; t < dgm.dotted(); ++t) {
        out.n_.at(i, t) = dgm.n_.at(i, t) + sign * dgm.n_.at(j, t);
        out.geo_[size_t(i)][size_t(t)] =
            geo_add(dgm.geo_[size_t(i)][size_t(t)], dgm.geo_[size_t(j)][size_t(t)]);
    }
    return out;
}

KirbyDiagram cancel_pair(const KirbyDiagram& dgm, int handle_j, int dotted_i) {
    if (handle_j < 0 || handle_j >= dgm.handles())
        throw MovePreconditionError("cancel: handle index out of range");
    if (dotted_i < 0 || dotted_i >= dgm.dotted())
        throw MovePreconditionError("cancel: dotted index out of range");
    Int nji = dgm.n_.at(handle_j, dotted_i);
    if (abs(nji) != 1)
        throw MovePreconditionError("cancel: |linking| of the pair is not 1");
    long long g = dgm.geo(handle_j, dotted_i);
    if (g != 1)
        throw MovePreconditionError(
            g == GEO_UNKNOWN
                ? "cancel: pair is algebraically 1 but carries no geometric certificate"
                : "cancel: geometric strand count of the pair is not 1");

    // clear column dotted_i by sliding every other handle over handle_j
    KirbyDiagram cur = dgm;
    for (int u = 0; u < cur.handles(); ++u) {
        if (u == handle_j) continue;
        while (cur.n_.at(u, dotted_i) != 0) {
            int s = (cur.n_.at(u, dotted_i) * nji > 0) ? -1 : 1;
            cur = slide(cur, u, handle_j, s);
        }
    }
    // delete handle_j and dotted_i
    int k = cur.handles(), d = cur.dotted();
    IntMat l(k - 1, k - 1), n(k - 1, d - 1);
    std::vector<std::vector<long long>> geo(size_t(k) - 1,
                                            std::vector<long long>(size_t(d) - 1, 0));
    for (int a = 0, ai = 0; a < k; ++a) {
        if (a == handle_j) continue;
        for (int b = 0, bi = 0; b < k; ++b) {
            if (b == handle_j) continue;
            l.at(ai, bi) = cur.l_.at(a, b);
            ++bi;
        }
        for (int t = 0, ti = 0; t < d; ++t) {
            if (t == dotted_i) continue;
            n.at(ai, ti) = cur.n_.at(a, t);
            geo[size_t(ai)][size_t(ti)] = cur.geo_[size_t(a)][size_t(t)];
            ++ti;
        }
        ++ai;
    }
    return KirbyDiagram(d - 1, std::move(l), std::move(n), std::move(geo));
}

KirbyDiagram add_cancelling_pair(const KirbyDiagram& dgm) {
    int k = dgm.handles(), d = dgm.dotted();
    IntMat l(k + 1, k + 1), n(k + 1, d + 1);
    std::vector<std::vector<long long>> geo(size_t(k) + 1,
                                            std::vector<long long>(size_t(d) + 1, 0));
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) l.at(a, b) = dgm.l_.at(a, b);
        for (int t = 0; t < d; ++t) {
            n.at(a, t) = dgm.n_.at(a, t);
            geo[size_t(a)][size_t(t)] = dgm.geo_[size_t(a)][size_t(t)];
        }
    }
    n.at(k, d) = 1;
    geo[size_t(k)][size_t(d)] = 1;
    return KirbyDiagram(d + 1, std::move(l), std::move(n), std::move(geo));
}

KirbyDiagram blow_up(const KirbyDiagram& dgm, int sign) {
    if (sign != 1 && sign != -1) throw MovePreconditionError("blow_up: sign must be +-1");
    int k = dgm.handles(), d = dgm.dotted();
    IntMat l(k + 1, k + 1), n(k + 1, d);
    std::vector<std::vector<long long>> geo(size_t(k) + 1,
                                            std::vector<long long>(size_t(d), 0));
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) l.at(a, b) = dgm.l_.at(a, b);
        for (int t = 0; t < d; ++t) {
            n.at(a, t) = dgm.n_.at(a, t);
            geo[size_t(a)][size_t(t)] = dgm.geo_[size_t(a)][size_t(t)];
        }
    }
    l.at(k, k) = sign;
    return KirbyDiagram(d, std::move(l), std::move(n), std::move(geo));
}

KirbyDiagram blow_down(const KirbyDiagram& dgm, int handle_j) {
    if (handle_j < 0 || handle_j >= dgm.handles())
        throw MovePreconditionError("blow_down: handle index out of range");
    Int f = dgm.l_.at(handle_j, handle_j);
    if (f != 1 && f != -1)
        throw MovePreconditionError("blow_down: handle framing must be +-1");
    for (int t = 0; t < dgm.dotted(); ++t)
        if (dgm.n_.at(handle_j, t) != 0 || dgm.geo(handle_j, t) != 0)
            throw MovePreconditionError("blow_down: handle passes through a dotted circle");

    // absorb linking with the other handles by sliding them over handle_j
    KirbyDiagram cur = dgm;
    for (int u = 0; u < cur.handles(); ++u) {
        if (u == handle_j) continue;
        while (cur.l_.at(u, handle_j) != 0) {
            int s = (cur.l_.at(u, handle_j) * f > 0) ? -1 : 1;
            cur = slide(cur, u, handle_j, s);
        }
    }
    int k = cur.handles(), d = cur.dotted();
    IntMat l(k - 1, k - 1), n(k - 1, d);
    std::vector<std::vector<long long>> geo(size_t(k) - 1,
                                            std::vector<long long>(size_t(d), 0));
    for (int a = 0, ai = 0; a < k; ++a) {
        if (a == handle_j) continue;
        for (int b = 0, bi = 0; b < k; ++b) {
            if (b == handle_j) continue;
            l.at(ai, bi) = cur.l_.at(a, b);
            ++bi;
        }
        for (int t = 0; t < d; ++t) {
            n.at(ai, t) = cur.n_.at(a, t);
            geo[size_t(ai)][size_t(t)] = cur.geo_[size_t(a)][size_t(t)];
        }
        ++ai;
    }
    return KirbyDiagram(d, std::move(l), std::move(n), std::move(geo));
}

InvariantRecord invariants(const KirbyDiagram& dgm) {
    InvariantRecord rec;
    int k = dgm.handles(), d = dgm.dotted();
    rec.chi = 1 - d + k;

    IntMat nt = dgm.n().transposed();  // d x k
    rec.h1 = cokernel(nt);
    rec.torsion = rec.h1.torsion;
    rec.b2 = k - rank(dgm.n());

    // intersection form: restrict L to the sublattice of handle-coefficient
    // vectors with zero total linking against every dotted circle
    IntMat kb = kernel_basis(nt);
    rec.form = restrict_form(dgm.l(), kb);
    rec.even = is_even(rec.form);
    rec.signature = signature(rec.form);

    // boundary: dots become 0-framed circles
    IntMat bm(k + d, k + d);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) bm.at(a, b) = dgm.l().at(a, b);
    for (int a = 0; a < k; ++a)
        for (int t = 0; t < d; ++t) {
            bm.at(a, k + t) = dgm.n().at(a, t);
            bm.at(k + t, a) = dgm.n().at(a, t);
        }
    rec.boundary_h1 = cokernel(bm);
    return rec;
}

std::string move_to_string(const Move& m) {
    std::ostringstream os;
    if (auto* s = std::get_if<MoveSlide>(&m))
        os << "slide " << s->i << " over " << s->j << " " << (s->sign > 0 ? "+" : "-");
    else if (auto* c = std::get_if<MoveCancel>(&m))
        os << "cancel " << c->handle << " with " << c->dotted;
    else if (std::get_if<MovePair>(&m))
        os << "pair+";
    else if (auto* b = std::get_if<MoveBlowUp>(&m))
        os << "blowup " << (b->sign > 0 ? "+" : "-");
    else if (auto* bd = std::get_if<MoveBlowDown>(&m))
        os << "blowdown " << bd->handle;
    return os.str();
}

namespace {

bool form_class_unchanged(const IntSymForm& a, const IntSymForm& b) {
    if (a.rank() != b.rank()) return false;
    if (determinant(a.gram()) != determinant(b.gram())) return false;
    if (signature(a) != signature(b)) return false;
    if (is_even(a) != is_even(b)) return false;
    // cheap complete-enough invariants plus a bounded witness attempt; only a
    // proven "no" counts as a violation
    CongruenceResult cr = congruent(a, b, 2);
    return cr.verdict != CongruenceVerdict::No;
}

}  // namespace

ScriptResult run_script(const KirbyDiagram& dgm, const MoveScript& script, bool want_trace) {
    ScriptResult res{dgm, {}, std::nullopt};
    InvariantRecord before = invariants(dgm);
    if (want_trace)
        res.trace.push_back("start: d=" + std::to_string(dgm.dotted()) +
                            " k=" + std::to_string(dgm.handles()) +
                            " L=" + dgm.l().to_string());
    for (size_t step = 0; step < script.moves.size(); ++step) {
        const Move& m = script.moves[step];
        KirbyDiagram next = res.diagram;
        try {
            if (auto* s = std::get_if<MoveSlide>(&m))
                next = slide(res.diagram, s->i - 1, s->j - 1, s->sign);
            else if (auto* c = std::get_if<MoveCancel>(&m))
                next = cancel_pair(res.diagram, c->handle - 1, c->dotted - 1);
            else if (std::get_if<MovePair>(&m))
                next = add_cancelling_pair(res.diagram);
            else if (auto* b = std::get_if<MoveBlowUp>(&m))
                next = blow_up(res.diagram, b->sign);
            else if (auto* bd = std::get_if<MoveBlowDown>(&m))
                next = blow_down(res.diagram, bd->handle - 1);
        } catch (const MovePreconditionError& e) {
            res.error = ScriptError{int(step), e.what(), false};
            return res;
        }
        InvariantRecord after = invariants(next);
        std::string bad;
        bool is_blow = std::holds_alternative<MoveBlowUp>(m) || std::holds_alternative<MoveBlowDown>(m);
        if (!is_blow) {
            if (after.chi != before.chi) bad = "chi";
            else if (!(after.h1 == before.h1)) bad = "H1";
            else if (after.b2 != before.b2) bad = "b2";
            else if (!(after.boundary_h1 == before.boundary_h1)) bad = "boundary_H1";
            else if (!form_class_unchanged(after.form, before.form)) bad = "intersection form";
        } else {
            if (!(after.h1 == before.h1)) bad = "H1";
            else if (!(after.boundary_h1 == before.boundary_h1)) bad = "boundary_H1";
            else if (std::abs(after.b2 - before.b2) != 1) bad = "b2 step";
            else if (std::abs(after.signature - before.signature) != 1) bad = "signature step";
        }
        if (!bad.empty()) {
            res.error = ScriptError{int(step), "invariant '" + bad + "' changed by " +
                                    move_to_string(m), true};
            return res;
        }
        res.diagram = next;
        before = after;
        if (want_trace)
            res.trace.push_back("after " + move_to_string(m) + ": d=" +
                                std::to_string(next.dotted()) + " k=" +
                                std::to_string(next.handles()) + " L=" + next.l().to_string());
    }
    return res;
}

}  // namespace pzero
