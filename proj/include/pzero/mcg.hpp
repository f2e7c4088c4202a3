#pragma once

// Mapping classes of the h-holed disk rel boundary, represented faithfully as
// a free-group automorphism (the action on pi_1, holes as free generators)
// paired with an integer framing vector counting boundary-parallel twists
// about each inner hole. The pi_1 action alone has kernel generated by the
// inner-boundary twists; the framing vector restores injectivity.

#include <vector>

#include "pzero/curves.hpp"
#include "pzero/words.hpp"

namespace pzero {

struct MappingClass {
    FreeAutomorphism aut;
    std::vector<long long> framing;  // length == aut.rank()

    int rank() const { return aut.rank(); }
    static MappingClass identity(int rank);
    bool is_identity() const;
};

MappingClass compose_mc(const MappingClass& g1, const MappingClass& g2);
MappingClass inverse_mc(const MappingClass& g);
bool equals_mc(const MappingClass& g1, const MappingClass& g2);

struct BraidWord {
    int strands = 0;
    std::vector<int> letters;  // signed Artin generator indices, |i| in 1..strands-1

    std::vector<int> permutation() const;  // image of strand positions 1..strands
    bool is_pure() const;
};

// classical Artin action on the free group: sigma_i sends
//   x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
// letters act first-to-last
FreeAutomorphism artin_action(const BraidWord& b);

// mapping class of a pure braid (identity permutation required)
MappingClass from_braid(const BraidWord& b);

// the gathering word that slides the strands of a non-consecutive hole set
// into a consecutive block anchored at its least hole, each moving strand
// passing under every skipped strand; movers are processed left to right
BraidWord gathering_braid(const std::vector<int>& holes, int strands);

// right-handed (sign=+1) Dehn twist along a standard curve
MappingClass dehn_twist(const StandardCurve& c, const FiberModel& f, int sign = +1);

}  // namespace pzero
