#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "evencycle/errors.hpp"
#include "evencycle/field.hpp"

namespace evencycle {

/// Element of E_{4^d} = Z_4[x]/<g4>, stored as two bit planes: coefficient i is
/// bit i of `lo` plus twice bit i of `hi`.
struct RingElem {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool is_zero() const { return (lo | hi) == 0; }
    friend bool operator==(RingElem, RingElem) = default;
};

namespace detail {

// Z_4 polynomial held in 128-bit planes, used for unreduced products.
struct WidePlanes {
    u128 lo = 0;
    u128 hi = 0;

    void add(u128 vlo, u128 vhi)
    {
        const u128 carry = lo & vlo;
        lo ^= vlo;
        hi ^= vhi ^ carry;
    }

    void sub(u128 vlo, u128 vhi) { add(vlo, vhi ^ vlo); }
};

}  // namespace detail

/// The Galois-ring-style extension E_{4^d} = Z_4[x]/<g4> where g4 is the lift
/// of the field modulus g2. Holds its paired field.
class Ring {
public:
    explicit Ring(Field field) : field_(std::move(field)), tail_(field_.modulus().low_word() & field_.mask()) {}

    const Field& field() const { return field_; }
    unsigned degree() const { return field_.degree(); }

    RingElem zero() const { return {}; }
    RingElem one() const { return {1, 0}; }
    RingElem from_int(unsigned z) const { return {z & 1u, (z >> 1) & 1u}; }

    RingElem add(RingElem a, RingElem b) const { return {a.lo ^ b.lo, a.hi ^ b.hi ^ (a.lo & b.lo)}; }
    RingElem neg(RingElem a) const { return {a.lo, a.hi ^ a.lo}; }
    RingElem sub(RingElem a, RingElem b) const { return add(a, neg(b)); }
    RingElem twice(RingElem a) const { return {0, a.lo}; }

    RingElem mul(RingElem a, RingElem b) const
    {
        // a*b = a.lo*b.lo + 2*(a.lo*b.hi + a.hi*b.lo)  (mod 4)
        // The first product needs carries (counts mod 4); the doubled part only
        // needs its parity.
        detail::WidePlanes acc;
        const u128 blo = b.lo, bhi = b.hi;
        std::uint64_t bits = a.lo;
        while (bits != 0) {
            const int i = std::countr_zero(bits);
            acc.add(blo << i, bhi << i);
            bits &= bits - 1;
        }
        bits = a.hi;
        while (bits != 0) {
            const int i = std::countr_zero(bits);
            acc.hi ^= blo << i;
            bits &= bits - 1;
        }
        return reduce(acc);
    }

    /// Coefficientwise reinterpretation of {0,1} as Z_4 values.
    RingElem lift(FieldElem a) const { return {a.bits, 0}; }

    /// Coefficientwise reduction mod 2. A ring homomorphism onto the field.
    FieldElem project(RingElem s) const { return {s.lo}; }

    /// Odd means some coefficient is odd; even elements multiply to zero.
    bool is_odd(RingElem s) const { return s.lo != 0; }

    /// tau = lift(project(sigma)^-1) * upsilon, so that upsilon - sigma*tau is even.
    RingElem elim_coeff(RingElem sigma, RingElem upsilon) const
    {
        if (!is_odd(sigma))
            throw UsageError("elim_coeff: pivot must be odd");
        return mul(lift(field_.inv(project(sigma))), upsilon);
    }

    /// Inverse of a -> 2*lift(a). Any odd coefficient is an upstream bug.
    FieldElem unlift2(RingElem s) const
    {
        if (s.lo != 0)
            throw InvariantError("unlift2: element " + to_string(s) + " has an odd coefficient");
        return {s.hi};
    }

    /// Z_4 digits, highest degree (x^(d-1)) first.
    std::string to_string(RingElem s) const
    {
        const unsigned d = degree();
        std::string out(d, '0');
        for (unsigned i = 0; i < d; ++i) {
            const unsigned c = static_cast<unsigned>((s.lo >> i) & 1u) + 2 * static_cast<unsigned>((s.hi >> i) & 1u);
            out[d - 1 - i] = static_cast<char>('0' + c);
        }
        return out;
    }

    /// Parses Z_4 digits, highest degree first; fewer than d digits are zero-padded.
    RingElem parse(const std::string& digits) const
    {
        const unsigned d = degree();
        if (digits.empty() || digits.size() > d)
            throw UsageError("ring element '" + digits + "' must have 1.." + std::to_string(d) + " digits");
        RingElem s;
        const std::size_t len = digits.size();
        for (std::size_t i = 0; i < len; ++i) {
            const char c = digits[len - 1 - i];
            if (c < '0' || c > '3')
                throw UsageError("ring element '" + digits + "' has a non-Z_4 digit");
            const unsigned z = static_cast<unsigned>(c - '0');
            s.lo |= static_cast<std::uint64_t>(z & 1u) << i;
            s.hi |= static_cast<std::uint64_t>(z >> 1) << i;
        }
        return s;
    }

private:
    // x^d = -tail (mod g4); fold coefficients of degree >= d downward, top first.
    RingElem reduce(detail::WidePlanes p) const
    {
        const int d = static_cast<int>(degree());
        const u128 tail = tail_;
        const int top = std::max(detail::bit_length(p.lo), detail::bit_length(p.hi)) - 1;
        for (int k = top; k >= d; --k) {
            const bool l = static_cast<std::uint64_t>(p.lo >> k) & 1u;
            const bool h = static_cast<std::uint64_t>(p.hi >> k) & 1u;
            if (!l && !h)
                continue;
            const u128 bit = u128{1} << k;
            p.lo &= ~bit;
            p.hi &= ~bit;
            const u128 shifted = tail << (k - d);
            p.sub(l ? shifted : 0, h ? shifted : 0);
        }
        return {static_cast<std::uint64_t>(p.lo), static_cast<std::uint64_t>(p.hi)};
    }

    Field field_;
    std::uint64_t tail_;
};

}  // namespace evencycle
