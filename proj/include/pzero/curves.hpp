#pragma once

// Simple closed curves on the genus-zero fiber: a round disk with h holes,
// indexed 1..h left to right. A standard curve encloses a chosen hole subset;
// its connecting arcs run below every skipped hole.

#include <string>
#include <vector>

#include "pzero/forms.hpp"

namespace pzero {

struct FiberModel {
    int holes = 0;  // h >= 1; the surface has h+1 boundary components

    bool operator==(const FiberModel& o) const = default;
};

class StandardCurve {
public:
    // enclosed hole set, any order / duplicates rejected; must be nonempty
    explicit StandardCurve(std::vector<int> enclosed);

    const std::vector<int>& enclosed() const { return enclosed_; }  // ascending
    int min_hole() const { return enclosed_.front(); }
    int max_hole() const { return enclosed_.back(); }
    bool contains(int hole) const;
    bool is_consecutive() const;

    bool operator==(const StandardCurve& o) const = default;
    bool operator<(const StandardCurve& o) const { return enclosed_ < o.enclosed_; }

    std::string to_string() const;                       // {1,3}
    static StandardCurve parse(const std::string& text);

private:
    std::vector<int> enclosed_;
};

void check_on_fiber(const StandardCurve& c, const FiberModel& f);

// indicator vector of the enclosed set in the hole basis of H_1(fiber)
std::vector<Int> homology_class(const StandardCurve& c, const FiberModel& f);

// nonzero homology class; true for every StandardCurve since the hole classes
// are a free basis (exposed for generic curve input from files)
bool is_allowable(const StandardCurve& c);

// conservative syntactic disjointness under the arcs-below convention; a
// false verdict does not preclude an isotopic disjoint realization
bool disjoint(const StandardCurve& c1, const StandardCurve& c2);

}  // namespace pzero
