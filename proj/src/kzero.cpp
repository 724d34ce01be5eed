#include "tuttecover/kzero.hpp"

namespace tuttecover {

KZeroElement KZeroElement::generator(IndecomposableClass c, long long multiplicity) {
    KZeroElement out;
    out.add(c, multiplicity);
    return out;
}

long long KZeroElement::coefficient(IndecomposableClass c) const {
    auto it = coeffs_.find(c);
    return it == coeffs_.end() ? 0 : it->second;
}

void KZeroElement::add(IndecomposableClass c, long long multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = coeffs_.emplace(c, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) coeffs_.erase(it);
    }
}

KZeroElement k0_class(const Matroid& m) {
    const auto multiset = leaf_class_multiset(indecomposable_covering(m));
    KZeroElement out;
    for (const auto& [cls, count] : multiset) out.add(cls, static_cast<long long>(count));
    return out;
}

KZeroElement k0_add(const KZeroElement& a, const KZeroElement& b) {
    KZeroElement out = a;
    for (const auto& [cls, coeff] : b.coefficients()) out.add(cls, coeff);
    return out;
}

KZeroElement k0_negate(const KZeroElement& a) {
    KZeroElement out;
    for (const auto& [cls, coeff] : a.coefficients()) out.add(cls, -coeff);
    return out;
}

KZeroElement k0_convolve(const KZeroElement& a, const KZeroElement& b) {
    KZeroElement out;
    for (const auto& [ca, xa] : a.coefficients()) {
        for (const auto& [cb, xb] : b.coefficients()) {
            out.add({ca.loops + cb.loops, ca.coloops + cb.coloops}, xa * xb);
        }
    }
    return out;
}

KZeroElement duality_involution(const KZeroElement& a) {
    KZeroElement out;
    for (const auto& [cls, coeff] : a.coefficients()) {
        out.add({cls.coloops, cls.loops}, coeff);
    }
    return out;
}

TuttePolynomial tutte_from_class(const KZeroElement& a) {
    TuttePolynomial out;
    for (const auto& [cls, coeff] : a.coefficients()) {
        if (coeff < 0) {
            throw NegativeCoefficient(
                "formal differences of classes have no polynomial reading");
        }
        out.add_term(static_cast<unsigned>(cls.coloops), static_cast<unsigned>(cls.loops),
                     BigInt(coeff));
    }
    return out;
}

}  // namespace tuttecover
