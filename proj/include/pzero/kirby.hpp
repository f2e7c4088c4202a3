#pragma once

// Matrix-level Kirby diagrams and Kirby-calculus moves. A diagram holds d
// dotted circles (1-handles) and k framed 2-handles with their symmetric
// linking matrix L (diagonal = framings) and dotted-linking matrix N (k x d).
// The engine cannot see isotopy, so geometric cancellation legality is
// carried by explicit strand counts: G[j][i] is the number of times 2-handle
// j passes through dotted circle i geometrically (GEO_UNKNOWN if untracked).
// Slides update counts additively, so a tracked count is an upper bound for
// the true one; together with |N[j][i]| <= count this makes count == 1 an
// exact certificate.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pzero/forms.hpp"

namespace pzero {

inline constexpr long long GEO_UNKNOWN = -1;

class KirbyDiagram {
public:
    KirbyDiagram() = default;
    // L must be symmetric with diagonal equal to the framings
    KirbyDiagram(int dotted, IntMat l, IntMat n);
    KirbyDiagram(int dotted, IntMat l, IntMat n, std::vector<std::vector<long long>> geo);

    int dotted() const { return dotted_; }
    int handles() const { return l_.rows(); }
    const IntMat& l() const { return l_; }
    const IntMat& n() const { return n_; }
    Int framing(int j) const { return l_.at(j, j); }
    long long geo(int j, int i) const { return geo_[size_t(j)][size_t(i)]; }
    void set_geo(int j, int i, long long count);

    bool operator==(const KirbyDiagram& o) const;

private:
    int dotted_ = 0;
    IntMat l_;                                // k x k
    IntMat n_;                                // k x d
    std::vector<std::vector<long long>> geo_; // k x d strand counts
    friend KirbyDiagram slide(const KirbyDiagram&, int, int, int);
    friend KirbyDiagram cancel_pair(const KirbyDiagram&, int, int);
    friend KirbyDiagram add_cancelling_pair(const KirbyDiagram&);
    friend KirbyDiagram blow_up(const KirbyDiagram&, int);
    friend KirbyDiagram blow_down(const KirbyDiagram&, int);
};

struct MovePreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// handle i := i (+/-) handle j; 0-based indices
KirbyDiagram slide(const KirbyDiagram& dgm, int i, int j, int sign);

// cancel 2-handle j against dotted circle i: requires geo(j,i) == 1 (which
// forces N[j][i] == +-1); every other handle is first slid over j until its
// column-i linking vanishes, then handle j and dot i are deleted
KirbyDiagram cancel_pair(const KirbyDiagram& dgm, int handle_j, int dotted_i);

// append an unknotted dotted circle and a 0-framed 2-handle passing through
// it once, unlinked from everything else
KirbyDiagram add_cancelling_pair(const KirbyDiagram& dgm);

KirbyDiagram blow_up(const KirbyDiagram& dgm, int sign);

// remove a +-1 framed handle not passing through any dotted circle; linking
// with other handles is absorbed by slides first
KirbyDiagram blow_down(const KirbyDiagram& dgm, int handle_j);

struct InvariantRecord {
    Int chi = 0;
    AbelianGroup h1;
    int b2 = 0;
    std::vector<Int> torsion;  // torsion of H1 (invariant factors)
    IntSymForm form;
    bool even = false;
    int signature = 0;
    AbelianGroup boundary_h1;

    bool operator==(const InvariantRecord& o) const = default;
};

InvariantRecord invariants(const KirbyDiagram& dgm);

// ----- scripted moves -----

struct MoveSlide { int i, j, sign; };          // 1-based in scripts
struct MoveCancel { int handle, dotted; };
struct MovePair {};
struct MoveBlowUp { int sign; };
struct MoveBlowDown { int handle; };

using Move = std::variant<MoveSlide, MoveCancel, MovePair, MoveBlowUp, MoveBlowDown>;

struct MoveScript {
    std::vector<Move> moves;
};

std::string move_to_string(const Move& m);

struct ScriptError {
    int step = -1;              // 0-based index of the failing move
    std::string message;
    bool invariant_violation = false;
};

struct ScriptResult {
    KirbyDiagram diagram;
    std::vector<std::string> trace;
    std::optional<ScriptError> error;

    bool ok() const { return !error.has_value(); }
};

// moves applied in order; after every move the 4-manifold invariants that the
// move must preserve are recomputed and compared, and the run aborts on any
// violation
ScriptResult run_script(const KirbyDiagram& dgm, const MoveScript& script,
                        bool want_trace = false);

}  // namespace pzero
