#include "pzero/words.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pzero {

Word Word::reduce(int rank, const std::vector<int>& letters) {
    Word w(rank);
    w.letters_.reserve(letters.size());
    for (int x : letters) {
        if (x == 0 || std::abs(x) > rank)
            throw std::invalid_argument("word letter index out of range");
        if (!w.letters_.empty() && w.letters_.back() == -x)
            w.letters_.pop_back();
        else
            w.letters_.push_back(x);
    }
    return w;
}

Word Word::generator(int rank, int i) {
    return reduce(rank, {i});
}

Word Word::inverse() const {
    Word w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(-*it);
    return w;
}

std::string Word::to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (int x : letters_)
        os << (x > 0 ? 'x' : 'X') << std::abs(x);
    return os.str();
}

Word Word::parse(int rank, const std::string& text) {
    std::vector<int> letters;
    size_t i = 0;
    if (text == "1") return Word(rank);
    while (i < text.size()) {
        char c = text[i];
        if (c != 'x' && c != 'X')
            throw std::invalid_argument("word parse: expected x or X");
        ++i;
        size_t start = i;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("word parse: missing generator index");
        int idx = std::stoi(text.substr(start, i - start));
        letters.push_back(c == 'x' ? idx : -idx);
    }
    return reduce(rank, letters);
}

Word concat(const Word& a, const Word& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("concat: rank mismatch");
    std::vector<int> all = a.letters();
    all.insert(all.end(), b.letters().begin(), b.letters().end());
    return Word::reduce(a.rank(), all);
}

namespace {

Word substitute(const std::vector<Word>& images, const Word& w) {
    std::vector<int> out;
    for (int x : w.letters()) {
        const Word& img = images[size_t(std::abs(x)) - 1];
        if (x > 0)
            out.insert(out.end(), img.letters().begin(), img.letters().end());
        else {
            Word inv = img.inverse();
            out.insert(out.end(), inv.letters().begin(), inv.letters().end());
        }
    }
    return Word::reduce(int(images.size()), out);
}

}  // namespace

FreeAutomorphism::FreeAutomorphism(std::vector<Word> forward, std::vector<Word> backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
    if (forward_.size() != backward_.size() || forward_.empty())
        throw std::invalid_argument("automorphism: forward/backward size mismatch");
    int h = int(forward_.size());
    for (int i = 1; i <= h; ++i) {
        Word g = Word::generator(h, i);
        if (substitute(backward_, substitute(forward_, g)) != g ||
            substitute(forward_, substitute(backward_, g)) != g)
            throw std::invalid_argument("automorphism: backward is not the inverse of forward");
    }
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
    std::vector<Word> gens;
    gens.reserve(rank);
    for (int i = 1; i <= rank; ++i) gens.push_back(Word::generator(rank, i));
    return FreeAutomorphism(gens, gens);
}

Word FreeAutomorphism::apply(const Word& w) const {
    if (w.rank() != rank()) throw std::invalid_argument("apply: rank mismatch");
    return substitute(forward_, w);
}

Word FreeAutomorphism::apply_inverse(const Word& w) const {
    if (w.rank() != rank()) throw std::invalid_argument("apply_inverse: rank mismatch");
    return substitute(backward_, w);
}

FreeAutomorphism FreeAutomorphism::inverse() const {
    FreeAutomorphism out;
    out.forward_ = backward_;
    out.backward_ = forward_;
    return out;
}

bool FreeAutomorphism::is_identity() const {
    for (int i = 1; i <= rank(); ++i)
        if (forward_[size_t(i) - 1] != Word::generator(rank(), i)) return false;
    return true;
}

FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi) {
    if (phi.rank() != psi.rank())
        throw std::invalid_argument("compose: rank mismatch");
    FreeAutomorphism out = FreeAutomorphism::identity(phi.rank());
    std::vector<Word> fwd, bwd;
    fwd.reserve(phi.rank());
    bwd.reserve(phi.rank());
    for (int i = 1; i <= phi.rank(); ++i) {
        fwd.push_back(phi.apply(psi.forward(i)));
        bwd.push_back(psi.apply_inverse(phi.backward(i)));
    }
    return FreeAutomorphism(std::move(fwd), std::move(bwd));
}

}  // namespace pzero
