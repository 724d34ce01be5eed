#pragma once

#include <map>

#include "tuttecover/covering.hpp"
#include "tuttecover/tutte.hpp"

namespace tuttecover {

/// Element of the free abelian group on (loop-count, coloop-count)
/// pairs: a finitely supported integer coefficient map with no stored
/// zeros.
class KZeroElement {
public:
    using Coefficients = std::map<IndecomposableClass, long long>;

    KZeroElement() = default;  // zero

    static KZeroElement generator(IndecomposableClass c, long long multiplicity = 1);

    const Coefficients& coefficients() const { return coeffs_; }
    long long coefficient(IndecomposableClass c) const;
    bool is_zero() const { return coeffs_.empty(); }

    void add(IndecomposableClass c, long long multiplicity);

    bool operator==(const KZeroElement&) const = default;

private:
    Coefficients coeffs_;
};

/// The class of a matroid: the leaf class multiset of its
/// indecomposable covering. Strategy-independent, so the default
/// min-index pivoting is used.
KZeroElement k0_class(const Matroid& m);

KZeroElement k0_add(const KZeroElement& a, const KZeroElement& b);
KZeroElement k0_negate(const KZeroElement& a);

/// Product induced by direct sums: generators multiply by adding their
/// loop and coloop counts, matching how grafted trees multiply leaves.
KZeroElement k0_convolve(const KZeroElement& a, const KZeroElement& b);

/// Swaps every (m,n) coefficient onto (n,m); the K₀ shadow of duality.
KZeroElement duality_involution(const KZeroElement& a);

/// Reads the class as a polynomial: coefficient of x^n y^m = multiplicity
/// of (m,n). Only meaningful for nonnegative elements.
TuttePolynomial tutte_from_class(const KZeroElement& a);

}  // namespace tuttecover
