#pragma once

#include <map>
#include <string>
#include <utility>

#include "tuttecover/bigint.hpp"
#include "tuttecover/matroid.hpp"
#include "tuttecover/pivot.hpp"

namespace tuttecover {

/// Sparse exact bivariate polynomial with arbitrary-precision
/// coefficients. Terms are kept sorted by (x-exponent, y-exponent) and
/// never store zero.
class TuttePolynomial {
public:
    using Key = std::pair<unsigned, unsigned>;  // (x-exponent, y-exponent)
    using Terms = std::map<Key, BigInt>;

    TuttePolynomial() = default;  // the zero polynomial

    static TuttePolynomial constant(BigInt c);
    static TuttePolynomial monomial(unsigned x_exp, unsigned y_exp, BigInt c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(unsigned x_exp, unsigned y_exp) const;

    /// Accumulates c·x^a·y^b, dropping the term if it cancels to zero.
    void add_term(unsigned x_exp, unsigned y_exp, const BigInt& c);

    TuttePolynomial& operator+=(const TuttePolynomial& other);
    friend TuttePolynomial operator+(TuttePolynomial a, const TuttePolynomial& b) {
        a += b;
        return a;
    }
    friend TuttePolynomial operator*(const TuttePolynomial& a, const TuttePolynomial& b);

    bool operator==(const TuttePolynomial&) const = default;

    BigRational evaluate(const BigRational& x, const BigRational& y) const;

    /// Human form, highest x-degree first: "x^2 + x*y + 3".
    std::string to_string() const;

private:
    Terms terms_;
};

TuttePolynomial poly_add(const TuttePolynomial& p, const TuttePolynomial& q);
TuttePolynomial poly_mul(const TuttePolynomial& p, const TuttePolynomial& q);

struct CorankNullity {
    std::size_t corank = 0;
    std::size_t nullity = 0;

    bool operator==(const CorankNullity&) const = default;
};

CorankNullity corank_nullity(const Matroid& m, Mask subset);
CorankNullity corank_nullity(const Matroid& m, const std::vector<std::string>& subset);

/// Expands the corank-nullity sum over all 2^n subsets. The reference
/// engine: slow, simple, and independent of the recursive one.
TuttePolynomial tutte_direct(const Matroid& m);

enum class MemoPolicy { None, Exact };

/// Deletion-contraction recursion. Loops and coloops are stripped
/// multiplicatively before each branch; Exact memoization keys on the
/// label-free encoding of the stripped minor.
TuttePolynomial tutte_dc(const Matroid& m,
                         PivotStrategy strategy = PivotStrategy::min_index(),
                         MemoPolicy memo = MemoPolicy::Exact);

}  // namespace tuttecover
