#pragma once

// Exact integer linear algebra: Smith normal form and invariants of integral
// symmetric bilinear forms. All arithmetic is arbitrary precision; nothing in
// this module touches floating point.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pzero {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    IntMat transposed() const;
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const = default;

    bool is_symmetric() const;
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row(int dst, int src, const Int& q);  // row dst += q * row src
    void add_col(int dst, int src, const Int& q);
    void negate_row(int i);

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// determinant by fraction-free (Bareiss) elimination
Int determinant(const IntMat& m);

struct SmithResult {
    IntMat d;  // diagonal, des in divisibility chain
    IntMat u;  // unimodular, u * m * v = d
    IntMat v;
};

// D = U*M*V with U, V unimodular and d_1 | d_2 | ...; unimodularity and the
// divisibility chain are re-verified on every call.
SmithResult smith_normal_form(const IntMat& m);

// nonzero diagonal entries of the SNF, normalized positive
std::vector<Int> invariant_factors(const IntMat& m);
int rank(const IntMat& m);

// cokernel of Z^cols -> Z^rows: torsion invariant factors (excluding 1) and free rank
struct AbelianGroup {
    std::vector<Int> torsion;
    int free_rank = 0;

    bool operator==(const AbelianGroup& o) const = default;
    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    Int torsion_order() const;
    std::string to_string() const;  // e.g. "Z^2 + Z/15", "0"
};

AbelianGroup cokernel(const IntMat& m);

// integral basis of ker(M) as matrix columns (saturated sublattice)
IntMat kernel_basis(const IntMat& m);
// second, independent route to an integral kernel basis (column HNF style)
IntMat kernel_basis_hnf(const IntMat& m);

class IntSymForm {
public:
    IntSymForm() = default;
    explicit IntSymForm(IntMat gram);

    int rank() const { return gram_.rows(); }
    const IntMat& gram() const { return gram_; }
    bool operator==(const IntSymForm& o) const = default;

private:
    IntMat gram_;
};

// B^T * L * B for a basis given by the columns of b
IntSymForm restrict_form(const IntMat& l, const IntMat& b);

// p - q from exact rational symmetric diagonalization, kernel excluded
int signature(const IntSymForm& f);

// true iff Q(v,v) is even for all v; by bilinearity the diagonal decides
bool is_even(const IntSymForm& f);

enum class CongruenceVerdict { Yes, No, Unknown };

struct CongruenceResult {
    CongruenceVerdict verdict = CongruenceVerdict::Unknown;
    std::optional<IntMat> witness;      // P with P^T f P = g
    std::string failed_invariant;       // set when verdict == No
};

// invariants first (rank, det, signature, parity); then bounded search for a
// unimodular witness with entries |<= bound|. Unknown is an honest outcome.
CongruenceResult congruent(const IntSymForm& f, const IntSymForm& g, int bound = 5);

// Q/Z-valued linking form of a nondegenerate form: -L^{-1} mod 1 on the
// cokernel. One q-value per cyclic summand generator.
struct LinkingForm {
    struct Summand {
        Int order;       // invariant factor > 1
        Int q_num;       // q(g) = q_num / q_den mod 1, reduced, 0 <= q_num < q_den
        Int q_den;
        bool operator==(const Summand& o) const = default;
    };
    std::vector<Summand> summands;

    std::string to_string() const;
};

LinkingForm linking_form(const IntSymForm& l);

// true iff some generator matching equates the q-value orbits (unit rescaling
// g -> u*g sends q to u^2 q); complete for cyclic torsion, which covers every
// boundary group appearing in the catalog
bool linking_isomorphic(const LinkingForm& a, const LinkingForm& b);

}  // namespace pzero
