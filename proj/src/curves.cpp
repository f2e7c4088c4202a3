#include "pzero/curves.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pzero {

StandardCurve::StandardCurve(std::vector<int> enclosed) : enclosed_(std::move(enclosed)) {
    if (enclosed_.empty())
        throw std::invalid_argument("empty curve");
    std::sort(enclosed_.begin(), enclosed_.end());
    for (size_t i = 0; i < enclosed_.size(); ++i) {
        if (enclosed_[i] < 1)
            throw std::invalid_argument("curve hole index must be >= 1");
        if (i && enclosed_[i] == enclosed_[i - 1])
            throw std::invalid_argument("duplicate hole in curve");
    }
}

bool StandardCurve::contains(int hole) const {
    return std::binary_search(enclosed_.begin(), enclosed_.end(), hole);
}

bool StandardCurve::is_consecutive() const {
    return max_hole() - min_hole() + 1 == int(enclosed_.size());
}

std::string StandardCurve::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < enclosed_.size(); ++i) {
        if (i) os << ",";
        os << enclosed_[i];
    }
    os << "}";
    return os.str();
}

StandardCurve StandardCurve::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("curve parse: expected {..}");
    std::string body = text.substr(1, text.size() - 2);
    std::vector<int> holes;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        while (pos < tok.size() && isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("curve parse: bad token '" + tok + "'");
        holes.push_back(v);
    }
    return StandardCurve(holes);  // rejects empty
}

void check_on_fiber(const StandardCurve& c, const FiberModel& f) {
    if (f.holes < 1) throw std::invalid_argument("fiber must have at least one hole");
    if (c.max_hole() > f.holes)
        throw std::invalid_argument("curve hole index exceeds fiber hole count");
}

std::vector<Int> homology_class(const StandardCurve& c, const FiberModel& f) {
    check_on_fiber(c, f);
    std::vector<Int> v(f.holes, 0);
    for (int h : c.enclosed()) v[size_t(h) - 1] = 1;
    return v;
}

bool is_allowable(const StandardCurve& c) {
    return !c.enclosed().empty();  // enforced by the type; nonzero indicator vector
}

bool disjoint(const StandardCurve& c1, const StandardCurve& c2) {
    const auto& a = c1.enclosed();
    const auto& b = c2.enclosed();
    auto subset = [](const std::vector<int>& x, const std::vector<int>& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    if (subset(a, b) || subset(b, a)) return true;

    std::vector<int> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    if (!inter.empty()) return false;

    int a0 = c1.min_hole(), a1 = c1.max_hole();
    int b0 = c2.min_hole(), b1 = c2.max_hole();
    if (a1 < b0 || b1 < a0) return true;  // separated ranges
    // nested ranges with a consecutive inner set
    if (a0 > b0 && a1 < b1 && c1.is_consecutive()) return true;
    if (b0 > a0 && b1 < a1 && c2.is_consecutive()) return true;
    return false;
}

}  // namespace pzero
