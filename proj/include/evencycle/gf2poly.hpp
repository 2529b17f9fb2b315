#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "evencycle/errors.hpp"

namespace evencycle {

/// Polynomial over Z_2 with packed coefficients, bit i of the word array is the
/// coefficient of x^i. Always normalized: no trailing zero words.
class GF2Poly {
public:
    GF2Poly() = default;

    static GF2Poly from_word(std::uint64_t w)
    {
        GF2Poly p;
        p.words_.push_back(w);
        p.normalize();
        return p;
    }

    static GF2Poly monomial(unsigned k)
    {
        GF2Poly p;
        p.set(k, true);
        return p;
    }

    /// Parses "1011" style strings, highest degree first.
    static GF2Poly from_string(const std::string& s)
    {
        GF2Poly p;
        const std::size_t len = s.size();
        for (std::size_t i = 0; i < len; ++i) {
            const char c = s[len - 1 - i];
            if (c == '1')
                p.set(static_cast<unsigned>(i), true);
            else if (c != '0')
                throw UsageError("GF2Poly: invalid digit '" + std::string(1, c) + "'");
        }
        return p;
    }

    bool is_zero() const { return words_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    int degree() const
    {
        if (words_.empty())
            return -1;
        return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
    }

    bool coeff(unsigned i) const
    {
        const std::size_t w = i / 64;
        return w < words_.size() && ((words_[w] >> (i % 64)) & 1u);
    }

    void set(unsigned i, bool bit)
    {
        const std::size_t w = i / 64;
        if (w >= words_.size()) {
            if (!bit)
                return;
            words_.resize(w + 1, 0);
        }
        const std::uint64_t m = std::uint64_t{1} << (i % 64);
        words_[w] = bit ? (words_[w] | m) : (words_[w] & ~m);
        normalize();
    }

    /// Low 64 coefficients.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i)
            s.push_back(coeff(static_cast<unsigned>(i)) ? '1' : '0');
        return s;
    }

    friend GF2Poly operator+(const GF2Poly& a, const GF2Poly& b)
    {
        GF2Poly r;
        r.words_.resize(std::max(a.words_.size(), b.words_.size()), 0);
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            r.words_[i] ^= a.words_[i];
        for (std::size_t i = 0; i < b.words_.size(); ++i)
            r.words_[i] ^= b.words_[i];
        r.normalize();
        return r;
    }

    friend GF2Poly operator*(const GF2Poly& a, const GF2Poly& b)
    {
        GF2Poly r;
        if (a.is_zero() || b.is_zero())
            return r;
        r.words_.assign(a.words_.size() + b.words_.size(), 0);
        for (int i = 0; i <= a.degree(); ++i) {
            if (a.coeff(static_cast<unsigned>(i)))
                r.xor_shifted(b, static_cast<unsigned>(i));
        }
        r.normalize();
        return r;
    }

    friend GF2Poly operator%(GF2Poly a, const GF2Poly& m)
    {
        const int dm = m.degree();
        if (dm < 0)
            throw DivisionByZero();
        for (int k = a.degree(); k >= dm; k = a.degree()) {
            a.xor_shifted(m, static_cast<unsigned>(k - dm));
            a.normalize();
        }
        return a;
    }

    friend bool operator==(const GF2Poly&, const GF2Poly&) = default;

private:
    void normalize()
    {
        while (!words_.empty() && words_.back() == 0)
            words_.pop_back();
    }

    // this ^= other * x^shift, without normalizing
    void xor_shifted(const GF2Poly& other, unsigned shift)
    {
        const std::size_t ws = shift / 64;
        const unsigned bs = shift % 64;
        const std::size_t need = other.words_.size() + ws + 1;
        if (words_.size() < need)
            words_.resize(need, 0);
        for (std::size_t i = 0; i < other.words_.size(); ++i) {
            words_[i + ws] ^= other.words_[i] << bs;
            if (bs != 0)
                words_[i + ws + 1] ^= other.words_[i] >> (64 - bs);
        }
    }

    std::vector<std::uint64_t> words_;
};

inline GF2Poly gcd(GF2Poly a, GF2Poly b)
{
    while (!b.is_zero()) {
        GF2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

namespace detail {

inline std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0)
                n /= q;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

}  // namespace detail

/// Rabin's test: p of degree d is irreducible over Z_2 iff x^(2^d) = x (mod p)
/// and gcd(x^(2^(d/q)) - x, p) = 1 for every prime q dividing d.
inline bool is_irreducible(const GF2Poly& p)
{
    const int d = p.degree();
    if (d < 1)
        throw UsageError("is_irreducible: polynomial must have degree >= 1");
    // leading coefficient of a nonzero Z_2 polynomial is always 1, so monic holds

    const GF2Poly x = GF2Poly::monomial(1) % p;
    // frob[k] = x^(2^k) mod p
    std::vector<GF2Poly> frob{x};
    for (int k = 1; k <= d; ++k)
        frob.push_back((frob.back() * frob.back()) % p);

    if (frob[static_cast<std::size_t>(d)] != x)
        return false;
    for (unsigned q : detail::prime_divisors(static_cast<unsigned>(d))) {
        const GF2Poly h = frob[static_cast<std::size_t>(d) / q] + x;
        if (gcd(p, h).degree() != 0)
            return false;
    }
    return true;
}

}  // namespace evencycle
