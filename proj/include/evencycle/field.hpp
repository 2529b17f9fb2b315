#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string>

#include "evencycle/errors.hpp"
#include "evencycle/gf2poly.hpp"

namespace evencycle {

/// Seedable generator used everywhere randomness is drawn.
using Rng = std::mt19937_64;

using u128 = unsigned __int128;

/// Element of F_{2^d}: the coefficient vector of the residue representative,
/// bit i = coefficient of x^i, always of degree < d.
struct FieldElem {
    std::uint64_t bits = 0;

    bool is_zero() const { return bits == 0; }
    friend bool operator==(FieldElem, FieldElem) = default;
};

namespace detail {

inline u128 clmul(std::uint64_t a, std::uint64_t b)
{
    u128 acc = 0;
    const u128 wide = b;
    while (a != 0) {
        acc ^= wide << std::countr_zero(a);
        a &= a - 1;
    }
    return acc;
}

inline int bit_length(u128 v)
{
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0)
        return 128 - std::countl_zero(hi);
    return 64 - std::countl_zero(static_cast<std::uint64_t>(v));
}

}  // namespace detail

/// The field F_{2^d} = Z_2[x]/<g2> for 1 <= d <= 64. Immutable once built.
class Field {
public:
    static constexpr unsigned max_degree = 64;

    explicit Field(GF2Poly g2) : g2_(std::move(g2))
    {
        const int d = g2_.degree();
        if (d < 1 || d > static_cast<int>(max_degree))
            throw UsageError("Field: modulus degree must be in [1, 64]");
        if (!is_irreducible(g2_))
            throw UsageError("Field: modulus " + g2_.to_string() + " is reducible");
        d_ = static_cast<unsigned>(d);
        mask_ = d_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d_) - 1;
        modulus_ = (u128{1} << d_) | g2_.low_word();
    }

    unsigned degree() const { return d_; }
    const GF2Poly& modulus() const { return g2_; }
    std::uint64_t mask() const { return mask_; }

    /// Number of field elements, saturated at 2^64 - 1 for d = 64.
    std::uint64_t order_saturated() const { return d_ == 64 ? ~std::uint64_t{0} : std::uint64_t{1} << d_; }

    FieldElem zero() const { return {}; }
    FieldElem one() const { return {1}; }

    /// The element whose coefficient vector is the binary expansion of v.
    FieldElem from_index(std::uint64_t v) const
    {
        if ((v & ~mask_) != 0)
            throw UsageError("Field: index " + std::to_string(v) + " does not fit in F_{2^" +
                             std::to_string(d_) + "}");
        return {v};
    }

    FieldElem add(FieldElem a, FieldElem b) const { return {a.bits ^ b.bits}; }
    FieldElem sub(FieldElem a, FieldElem b) const { return {a.bits ^ b.bits}; }
    FieldElem neg(FieldElem a) const { return a; }

    FieldElem mul(FieldElem a, FieldElem b) const { return {reduce(detail::clmul(a.bits, b.bits))}; }

    FieldElem inv(FieldElem a) const
    {
        if (a.is_zero())
            throw DivisionByZero();
        // extended Euclid; invariant: s*a = u and t*a = v (mod g2)
        u128 u = a.bits, v = modulus_;
        u128 s = 1, t = 0;
        while (u != 1) {
            int shift = detail::bit_length(u) - detail::bit_length(v);
            if (shift < 0) {
                std::swap(u, v);
                std::swap(s, t);
                shift = -shift;
            }
            u ^= v << shift;
            s ^= t << shift;
        }
        return {reduce_wide(s)};
    }

    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

    FieldElem random(Rng& rng) const { return {rng() & mask_}; }

    /// Coefficients as '0'/'1' digits, highest degree (x^(d-1)) first.
    std::string to_string(FieldElem a) const
    {
        std::string s(d_, '0');
        for (unsigned i = 0; i < d_; ++i)
            if ((a.bits >> i) & 1u)
                s[d_ - 1 - i] = '1';
        return s;
    }

    friend bool operator==(const Field& a, const Field& b) { return a.g2_ == b.g2_; }

private:
    // reduces a carryless product of two residues (degree <= 2d-2)
    std::uint64_t reduce(u128 p) const
    {
        for (int k = 2 * static_cast<int>(d_) - 2; k >= static_cast<int>(d_); --k) {
            if (static_cast<std::uint64_t>(p >> k) & 1u)
                p ^= modulus_ << (k - static_cast<int>(d_));
        }
        return static_cast<std::uint64_t>(p);
    }

    std::uint64_t reduce_wide(u128 p) const
    {
        for (int k = detail::bit_length(p) - 1; k >= static_cast<int>(d_); --k) {
            if (static_cast<std::uint64_t>(p >> k) & 1u)
                p ^= modulus_ << (k - static_cast<int>(d_));
        }
        return static_cast<std::uint64_t>(p);
    }

    GF2Poly g2_;
    unsigned d_ = 0;
    std::uint64_t mask_ = 0;
    u128 modulus_ = 0;
};

/// Draws random monic degree-d candidates until one is irreducible. Gives up
/// after 64*d attempts, which only happens if the generator is broken.
inline Field make_field(unsigned d, Rng& rng)
{
    if (d < 1 || d > Field::max_degree)
        throw UsageError("make_field: degree must be in [1, 64], got " + std::to_string(d));
    const std::uint64_t low_mask = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    for (unsigned attempt = 0; attempt < 64 * d; ++attempt) {
        GF2Poly candidate = GF2Poly::from_word(rng() & low_mask);
        candidate.set(d, true);
        if (is_irreducible(candidate))
            return Field(std::move(candidate));
    }
    throw InvariantError("make_field: no irreducible polynomial of degree " + std::to_string(d) +
                         " found in " + std::to_string(64 * d) + " attempts");
}

}  // namespace evencycle
