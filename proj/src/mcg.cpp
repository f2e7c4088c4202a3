#include "pzero/mcg.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace pzero {

MappingClass MappingClass::identity(int rank) {
    return {FreeAutomorphism::identity(rank), std::vector<long long>(rank, 0)};
}

bool MappingClass::is_identity() const {
    if (!aut.is_identity()) return false;
    for (long long f : framing)
        if (f != 0) return false;
    return true;
}

MappingClass compose_mc(const MappingClass& g1, const MappingClass& g2) {
    if (g1.rank() != g2.rank())
        throw std::invalid_argument("compose_mc: rank mismatch");
    std::vector<long long> fr(g1.framing);
    for (size_t i = 0; i < fr.size(); ++i) fr[i] += g2.framing[i];
    return {compose(g1.aut, g2.aut), std::move(fr)};
}

MappingClass inverse_mc(const MappingClass& g) {
    std::vector<long long> fr(g.framing);
    for (auto& f : fr) f = -f;
    return {g.aut.inverse(), std::move(fr)};
}

bool equals_mc(const MappingClass& g1, const MappingClass& g2) {
    return g1.framing == g2.framing && g1.aut == g2.aut;
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> p(strands);
    std::iota(p.begin(), p.end(), 1);
    for (int x : letters) {
        int i = std::abs(x);
        if (i < 1 || i >= strands)
            throw std::invalid_argument("braid generator index out of range");
        std::swap(p[size_t(i) - 1], p[size_t(i)]);
    }
    return p;
}

bool BraidWord::is_pure() const {
    std::vector<int> p = permutation();
    for (int i = 0; i < strands; ++i)
        if (p[size_t(i)] != i + 1) return false;
    return true;
}

namespace {

FreeAutomorphism sigma(int i, int h, bool positive) {
    std::vector<Word> fwd, bwd;
    for (int j = 1; j <= h; ++j) {
        fwd.push_back(Word::generator(h, j));
        bwd.push_back(Word::generator(h, j));
    }
    if (positive) {
        fwd[size_t(i) - 1] = Word::reduce(h, {i, i + 1, -i});
        fwd[size_t(i)] = Word::generator(h, i);
        bwd[size_t(i) - 1] = Word::generator(h, i + 1);
        bwd[size_t(i)] = Word::reduce(h, {-(i + 1), i, i + 1});
    } else {
        fwd[size_t(i) - 1] = Word::generator(h, i + 1);
        fwd[size_t(i)] = Word::reduce(h, {-(i + 1), i, i + 1});
        bwd[size_t(i) - 1] = Word::reduce(h, {i, i + 1, -i});
        bwd[size_t(i)] = Word::generator(h, i);
    }
    return FreeAutomorphism(std::move(fwd), std::move(bwd));
}

}  // namespace

FreeAutomorphism artin_action(const BraidWord& b) {
    if (b.strands < 1) throw std::invalid_argument("braid needs at least one strand");
    FreeAutomorphism a = FreeAutomorphism::identity(b.strands);
    for (int x : b.letters) {
        int i = std::abs(x);
        if (i < 1 || i >= b.strands)
            throw std::invalid_argument("braid generator index out of range");
        a = compose(sigma(i, b.strands, x > 0), a);
    }
    return a;
}

MappingClass from_braid(const BraidWord& b) {
    if (!b.is_pure())
        throw std::invalid_argument("mapping class requires a pure braid");
    return {artin_action(b), std::vector<long long>(b.strands, 0)};
}

BraidWord gathering_braid(const std::vector<int>& holes, int strands) {
    // Movers processed left to right; moving the strand at position p left to
    // position q crosses positions p-1 .. q. Later strands keep their original
    // positions since each move shifts only strands strictly to its left.
    std::vector<int> s = holes;
    BraidWord out{strands, {}};
    int q = s.front();
    for (size_t t = 1; t < s.size(); ++t) {
        int target = q + int(t);
        for (int pos = s[t] - 1; pos >= target; --pos)
            out.letters.push_back(pos);
    }
    return out;
}

namespace {

MappingClass twist_consecutive(const StandardCurve& c, const FiberModel& f, int sign) {
    int h = f.holes;
    int j = c.min_hole(), k = c.max_hole();
    std::vector<int> g;
    for (int i = j; i <= k; ++i) g.push_back(i);
    Word gamma = Word::reduce(h, g);
    Word gamma_inv = gamma.inverse();
    std::vector<Word> fwd, bwd;
    for (int i = 1; i <= h; ++i) {
        Word x = Word::generator(h, i);
        if (i >= j && i <= k) {
            Word conj = concat(concat(gamma, x), gamma_inv);
            Word conj_inv = concat(concat(gamma_inv, x), gamma);
            if (sign > 0) {
                fwd.push_back(conj);
                bwd.push_back(conj_inv);
            } else {
                fwd.push_back(conj_inv);
                bwd.push_back(conj);
            }
        } else {
            fwd.push_back(x);
            bwd.push_back(x);
        }
    }
    std::vector<long long> fr(h, 0);
    for (int i : c.enclosed()) fr[size_t(i) - 1] = sign;
    return {FreeAutomorphism(std::move(fwd), std::move(bwd)), std::move(fr)};
}

}  // namespace

MappingClass dehn_twist(const StandardCurve& c, const FiberModel& f, int sign) {
    check_on_fiber(c, f);
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("dehn_twist: sign must be +1 or -1");
    if (c.is_consecutive())
        return twist_consecutive(c, f, sign);

    // gather the enclosed strands into a consecutive block; the arcs-below
    // convention makes each moving strand pass under the skipped ones, which
    // in the adopted Artin convention is the negative crossing (validated by
    // the lantern and commutation suites)
    BraidWord beta = gathering_braid(c.enclosed(), f.holes);
    for (int& x : beta.letters) x = -x;
    FreeAutomorphism b = artin_action(beta);

    std::vector<int> block;
    for (int i = 0; i < int(c.enclosed().size()); ++i)
        block.push_back(c.min_hole() + i);
    MappingClass d = twist_consecutive(StandardCurve(block), f, sign);

    FreeAutomorphism conjugated = compose(b.inverse(), compose(d.aut, b));
    std::vector<long long> fr(f.holes, 0);
    for (int i : c.enclosed()) fr[size_t(i) - 1] = sign;
    return {std::move(conjugated), std::move(fr)};
}

}  // namespace pzero
