#include "pzero/palf.hpp"

#include <stdexcept>

namespace pzero {

PalfDescription::PalfDescription(FiberModel fiber, std::vector<StandardCurve> cycles)
    : fiber_(fiber), cycles_(std::move(cycles)) {
    if (fiber_.holes < 1)
        throw std::invalid_argument("fiber must have at least one hole");
    for (const StandardCurve& c : cycles_) {
        check_on_fiber(c, fiber_);
        if (!is_allowable(c))
            throw std::invalid_argument("vanishing cycle is not allowable");
    }
}

int euler_characteristic(const PalfDescription& p) {
    return 1 - p.holes() + p.cycle_count();
}

IntMat incidence_matrix(const PalfDescription& p) {
    int h = p.holes(), k = p.cycle_count();
    IntMat m(h, k);
    for (int j = 0; j < k; ++j) {
        std::vector<Int> cls = homology_class(p.cycles()[size_t(j)], p.fiber());
        for (int i = 0; i < h; ++i) m.at(i, j) = cls[size_t(i)];
    }
    return m;
}

PalfHomology homology(const PalfDescription& p) {
    IntMat m = incidence_matrix(p);
    PalfHomology out;
    out.h1 = cokernel(m);
    out.b2 = p.cycle_count() - rank(m);
    return out;
}

namespace {

IntSymForm restricted_to(const IntMat& kb, int k) {
    IntMat minus_id(k, k);
    for (int i = 0; i < k; ++i) minus_id.at(i, i) = -1;
    return restrict_form(minus_id, kb);
}

}  // namespace

IntSymForm intersection_form(const PalfDescription& p) {
    return restricted_to(kernel_basis(incidence_matrix(p)), p.cycle_count());
}

IntSymForm intersection_form_hnf_basis(const PalfDescription& p) {
    return restricted_to(kernel_basis_hnf(incidence_matrix(p)), p.cycle_count());
}

MappingClass total_monodromy(const PalfDescription& p) {
    MappingClass total = MappingClass::identity(p.holes());
    for (const StandardCurve& c : p.cycles())
        total = compose_mc(dehn_twist(c, p.fiber(), +1), total);
    return total;
}

PalfDescription attach_lefschetz_handle(const PalfDescription& p, const StandardCurve& c) {
    check_on_fiber(c, p.fiber());
    if (!is_allowable(c))
        throw std::invalid_argument("attached curve is not allowable");
    std::vector<StandardCurve> cycles = p.cycles();
    cycles.push_back(c);
    return PalfDescription(p.fiber(), std::move(cycles));
}

KirbyDiagram to_kirby(const PalfDescription& p) {
    int h = p.holes(), k = p.cycle_count();
    IntMat l(k, k), n(k, h);
    std::vector<std::vector<long long>> geo(size_t(k), std::vector<long long>(size_t(h), 0));
    for (int j = 0; j < k; ++j) {
        l.at(j, j) = -1;
        for (int i : p.cycles()[size_t(j)].enclosed()) {
            n.at(j, i - 1) = 1;
            geo[size_t(j)][size_t(i) - 1] = 1;
        }
    }
    return KirbyDiagram(h, std::move(l), std::move(n), std::move(geo));
}

}  // namespace pzero
