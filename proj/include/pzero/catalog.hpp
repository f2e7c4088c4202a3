#pragma once

// Constructors for the catalog objects: the plug PALFs W(m,n) and their
// dotted Kirby diagrams, the manifolds A and B, the plug twist, a constrained
// curve-family search, and the catalog-wide validation run.
//
// The vanishing-cycle sets and diagram linking data are derived
// transcriptions: the figures they stand for are not recoverable from text,
// so the shipped data is pinned instead by the full invariant suite
// (validate_catalog) against the stated matrices, homology and boundary
// groups, and by cross-checking the PALF and diagram presentations of every
// object against each other.

#include <string>
#include <vector>

#include "pzero/formats.hpp"
#include "pzero/kirby.hpp"
#include "pzero/palf.hpp"

namespace pzero {

struct PlugParams {
    int m = 1;  // m >= 1
    int n = 2;  // n >= 2
};

void check_params(const PlugParams& p);

// genus-zero PALF on W(m,n): fiber with 2n+m-1 holes and 2n+m vanishing
// cycles. The adopted hole count makes chi = 2 and gives the fiber 2n+m
// boundary components in total; reports carry the convention note.
PalfDescription plug_palf(const PlugParams& p);

// intersection form of W(m,n) is <-(4(m+n-1))>
long long plug_form_value(const PlugParams& p);

struct MarkedDiagram {
    KirbyDiagram diagram;
    int marked_dot = 0;     // 0-based
    int marked_handle = 0;  // 0-based, framing 0
    // geometric strand count of every handle through the marked handle's
    // spanning disk (entry at the marked handle = count of the marked pair);
    // this is the swap annotation that makes the dot <-> 0 exchange exact
    std::vector<long long> partner_geo;

    bool operator==(const MarkedDiagram& o) const = default;
};

// raw dotted diagram of W(m,n): one dotted circle, a 0-framed 2-handle
// through it twice, and a -m framed 2-handle through it once, the two
// 2-handles linking n-1 times
MarkedDiagram wmn_marked(const PlugParams& p);

struct CatalogManifold {
    std::string name;
    PalfDescription palf;
    MarkedDiagram marked;
};

CatalogManifold manifold_A();
CatalogManifold manifold_B();

// the dot <-> 0 exchange on the marked pair; involutive and boundary
// preserving, chi preserved (a 1-handle and a 2-handle trade places)
MarkedDiagram plug_twist(const MarkedDiagram& md);

// single surgery replacing dotted circle i by a 0-framed 2-handle
// (S^1 x D^3 -> D^2 x S^2); chi increases by exactly 2
KirbyDiagram surger_dot_to_zero(const KirbyDiagram& dgm, int dotted_i);

// shipped reduction scripts
MoveScript reduce_script_A();
MoveScript reduce_script_B();
// cancel 1-handles of to_kirby(plug_palf(p)) down to the plug shape
// (1 dotted circle, two 2-handles); deterministic greedy generation
MoveScript reduce_script_W(const PlugParams& p);

// greedy cancellation script: repeatedly cancel the geometric pair whose
// handle passes through the fewest dotted circles, until `target_dots` remain
// or no legal pair exists
MoveScript generate_cancellation_script(const KirbyDiagram& dgm, int target_dots);

// enumerate standard-curve multisets meeting the constraints, in
// deterministic lexicographic order
std::vector<PalfDescription> search_curve_family(const SearchConstraints& sc);

struct ValidationItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    std::vector<std::string> notes;  // adopted-convention notes
    bool all_pass() const;
};

// run every shipped catalog object through the invariant suite, the stated
// matrix comparisons, and the golden-file round trips under data_dir (pass
// an empty string to skip the file comparisons)
ValidationReport validate_catalog(const std::string& data_dir);

// convention notes included in reports
std::vector<std::string> convention_notes();

}  // namespace pzero
