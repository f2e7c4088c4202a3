#pragma once

// PALF descriptions: a planar fiber plus an ordered list of vanishing cycles,
// together with the derived invariants of the total space and the translation
// to a dotted Kirby diagram.

#include <vector>

#include "pzero/curves.hpp"
#include "pzero/forms.hpp"
#include "pzero/kirby.hpp"
#include "pzero/mcg.hpp"

namespace pzero {

class PalfDescription {
public:
    PalfDescription(FiberModel fiber, std::vector<StandardCurve> cycles);

    const FiberModel& fiber() const { return fiber_; }
    const std::vector<StandardCurve>& cycles() const { return cycles_; }
    int holes() const { return fiber_.holes; }
    int cycle_count() const { return int(cycles_.size()); }

    bool operator==(const PalfDescription& o) const = default;

private:
    FiberModel fiber_;
    std::vector<StandardCurve> cycles_;  // attaching order, first applied first
};

// 1 - h + k: one 0-handle, h 1-handles, one 2-handle per vanishing cycle
int euler_characteristic(const PalfDescription& p);

// h x k; column j is the homology class of cycle j
IntMat incidence_matrix(const PalfDescription& p);

struct PalfHomology {
    AbelianGroup h1;
    int b2 = 0;
};

PalfHomology homology(const PalfDescription& p);

// restriction of -I_k to an integral basis of ker(incidence): under the
// stacked-curve Kirby translation the 2-handles are pairwise unlinked with
// framing -1, so the linking matrix is -I_k and the intersection form is its
// restriction to the null-homologous sublattice
IntSymForm intersection_form(const PalfDescription& p);
// same form on the independently computed HNF kernel basis
IntSymForm intersection_form_hnf_basis(const PalfDescription& p);

// t_{c_k} o ... o t_{c_1}: last cycle outermost
MappingClass total_monodromy(const PalfDescription& p);

PalfDescription attach_lefschetz_handle(const PalfDescription& p, const StandardCurve& c);

// h dotted circles; one -1 framed 2-handle per cycle, pairwise unlinked,
// linking dotted circle i once exactly when the cycle encloses hole i (each
// strand passes its hole once, so every incidence is geometric linking one)
KirbyDiagram to_kirby(const PalfDescription& p);

}  // namespace pzero
