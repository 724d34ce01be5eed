#include "tuttecover/tutte.hpp"

#include <array>
#include <unordered_map>
#include <vector>

namespace tuttecover {

TuttePolynomial TuttePolynomial::constant(BigInt c) { return monomial(0, 0, std::move(c)); }

TuttePolynomial TuttePolynomial::monomial(unsigned x_exp, unsigned y_exp, BigInt c) {
    TuttePolynomial p;
    if (c != 0) p.terms_.emplace(Key{x_exp, y_exp}, std::move(c));
    return p;
}

BigInt TuttePolynomial::coefficient(unsigned x_exp, unsigned y_exp) const {
    auto it = terms_.find({x_exp, y_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void TuttePolynomial::add_term(unsigned x_exp, unsigned y_exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Key{x_exp, y_exp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TuttePolynomial& TuttePolynomial::operator+=(const TuttePolynomial& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
}

TuttePolynomial operator*(const TuttePolynomial& a, const TuttePolynomial& b) {
    TuttePolynomial out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return out;
}

BigRational TuttePolynomial::evaluate(const BigRational& x, const BigRational& y) const {
    auto power = [](const BigRational& base, unsigned e) {
        BigRational acc(1);
        for (unsigned i = 0; i < e; ++i) acc *= base;
        return acc;
    };
    BigRational total(0);
    for (const auto& [key, c] : terms_) {
        total += BigRational(c) * power(x, key.first) * power(y, key.second);
    }
    return total;
}

std::string TuttePolynomial::to_string() const {
    if (terms_.empty()) return "0";

    auto format_term = [](const Key& key, const BigInt& c) {
        BigInt abs = c < 0 ? BigInt(-c) : c;
        std::string body;
        if (key.first > 0) {
            body = "x";
            if (key.first > 1) body += "^" + std::to_string(key.first);
        }
        if (key.second > 0) {
            if (!body.empty()) body += "*";
            body += "y";
            if (key.second > 1) body += "^" + std::to_string(key.second);
        }
        if (body.empty()) return abs.str();
        if (abs == 1) return body;
        return abs.str() + "*" + body;
    };

    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += format_term(key, c);
    }
    return out;
}

TuttePolynomial poly_add(const TuttePolynomial& p, const TuttePolynomial& q) { return p + q; }

TuttePolynomial poly_mul(const TuttePolynomial& p, const TuttePolynomial& q) { return p * q; }

CorankNullity corank_nullity(const Matroid& m, Mask subset) {
    const std::size_t r = m.rank_of(subset);
    return {m.rank() - r, static_cast<std::size_t>(popcount(subset)) - r};
}

CorankNullity corank_nullity(const Matroid& m, const std::vector<std::string>& subset) {
    return corank_nullity(m, m.ground().mask_of(subset));
}

namespace {

// Binomial coefficients C(0..cap, *) as exact integers.
std::vector<std::vector<BigInt>> pascal(std::size_t cap) {
    std::vector<std::vector<BigInt>> c(cap + 1);
    for (std::size_t i = 0; i <= cap; ++i) {
        c[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

}  // namespace

TuttePolynomial tutte_direct(const Matroid& m) {
    const std::size_t n = m.size();
    if (n > 24) {
        throw CapacityExceeded("direct subset-sum engine is limited to 24 elements, got " +
                               std::to_string(n));
    }
    const std::size_t r = m.rank();

    // Tally subsets by (corank, nullity); expand the powers of (x-1) and
    // (y-1) once per occupied cell.
    std::vector<std::vector<std::uint64_t>> counts(r + 1,
                                                   std::vector<std::uint64_t>(n - r + 1, 0));
    const Mask all = m.ground().all();
    for (Mask a = 0;; ++a) {
        const std::size_t ra = m.rank_of(a);
        ++counts[r - ra][static_cast<std::size_t>(popcount(a)) - ra];
        if (a == all) break;
    }

    const auto binom = pascal(n);
    TuttePolynomial out;
    for (std::size_t z = 0; z <= r; ++z) {
        for (std::size_t nl = 0; nl <= n - r; ++nl) {
            if (counts[z][nl] == 0) continue;
            const BigInt count(counts[z][nl]);
            for (std::size_t i = 0; i <= z; ++i) {
                for (std::size_t j = 0; j <= nl; ++j) {
                    BigInt c = count * binom[z][i] * binom[nl][j];
                    if ((z - i + nl - j) % 2 == 1) c = -c;
                    out.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), c);
                }
            }
        }
    }
    return out;
}

namespace {

struct EncodingHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::uint64_t h = mix64(v.size());
        for (std::uint64_t w : v) h = mix64(h ^ w);
        return static_cast<std::size_t>(h);
    }
};

using MemoTable =
    std::unordered_map<std::vector<std::uint64_t>, TuttePolynomial, EncodingHash>;

TuttePolynomial dc_recurse(const Matroid& m, const PivotStrategy& strategy,
                           MemoTable* memo) {
    const Mask degenerate = m.loop_mask() | m.coloop_mask();
    const unsigned loops = static_cast<unsigned>(popcount(m.loop_mask()));
    const unsigned coloops = static_cast<unsigned>(popcount(m.coloop_mask()));
    const TuttePolynomial factor = TuttePolynomial::monomial(coloops, loops);

    if (degenerate == m.ground().all()) return factor;
    const Matroid core = m.deletion(degenerate);

    std::vector<std::uint64_t> key;
    if (memo) {
        key = core.canonical_encoding();
        if (auto it = memo->find(key); it != memo->end()) return factor * it->second;
    }

    const std::size_t pivot = *pick_pivot(core, strategy);
    TuttePolynomial sub = dc_recurse(core.deletion(bit_at(pivot)), strategy, memo);
    sub += dc_recurse(core.contraction(bit_at(pivot)), strategy, memo);

    if (memo) memo->emplace(std::move(key), sub);
    return factor * sub;
}

}  // namespace

TuttePolynomial tutte_dc(const Matroid& m, PivotStrategy strategy, MemoPolicy memo) {
    if (memo == MemoPolicy::Exact) {
        MemoTable table;
        return dc_recurse(m, strategy, &table);
    }
    return dc_recurse(m, strategy, nullptr);
}

}  // namespace tuttecover
