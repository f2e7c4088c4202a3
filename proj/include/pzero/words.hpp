#pragma once

// Reduced words in a finitely generated free group and automorphisms stored
// with explicit inverses. Letters are signed generator indices: +i for x_i,
// -i for x_i^{-1}, 1 <= i <= rank.

#include <string>
#include <vector>

namespace pzero {

class Word {
public:
    Word() : rank_(0) {}
    explicit Word(int rank) : rank_(rank) {}

    // free reduction of a raw letter sequence; throws on out-of-range indices
    static Word reduce(int rank, const std::vector<int>& letters);
    static Word generator(int rank, int i);

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }

    Word inverse() const;
    bool operator==(const Word& o) const = default;

    // x1..xh for generators, X1..Xh for inverses, no separator; empty word = "1"
    std::string to_string() const;
    static Word parse(int rank, const std::string& text);

private:
    int rank_;
    std::vector<int> letters_;  // invariant: freely reduced
};

Word concat(const Word& a, const Word& b);

class FreeAutomorphism {
public:
    // forward and backward generator images; construction verifies that the
    // two are mutually inverse on every generator
    FreeAutomorphism(std::vector<Word> forward, std::vector<Word> backward);

    static FreeAutomorphism identity(int rank);

    int rank() const { return int(forward_.size()); }
    const Word& forward(int i) const { return forward_[size_t(i) - 1]; }   // 1-based
    const Word& backward(int i) const { return backward_[size_t(i) - 1]; }
    const std::vector<Word>& forward_images() const { return forward_; }

    Word apply(const Word& w) const;
    Word apply_inverse(const Word& w) const;
    FreeAutomorphism inverse() const;
    bool is_identity() const;

    bool operator==(const FreeAutomorphism& o) const { return forward_ == o.forward_; }

private:
    FreeAutomorphism() = default;
    std::vector<Word> forward_, backward_;
};

// (compose(phi, psi))(x) = phi(psi(x))
FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi);

}  // namespace pzero
