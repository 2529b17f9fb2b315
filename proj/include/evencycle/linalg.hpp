#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "evencycle/errors.hpp"
#include "evencycle/field.hpp"
#include "evencycle/matrix.hpp"

namespace evencycle {

/// Univariate polynomial over F_{2^d}; coeffs[l] is the coefficient of r^l.
/// Trailing zeros are tolerated; degree() ignores them.
struct PolyF {
    std::vector<FieldElem> coeffs;

    int degree() const
    {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (!coeffs[i].is_zero())
                return static_cast<int>(i);
        return -1;
    }

    bool is_zero() const { return degree() < 0; }

    FieldElem coeff(std::size_t l) const { return l < coeffs.size() ? coeffs[l] : FieldElem{}; }

    void trim()
    {
        while (!coeffs.empty() && coeffs.back().is_zero())
            coeffs.pop_back();
    }

    friend bool operator==(const PolyF& a, const PolyF& b)
    {
        const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.coeff(i) != b.coeff(i))
                return false;
        return true;
    }
};

using PolyMatrixF = Matrix<PolyF>;

inline FieldElem evaluate(const Field& f, const PolyF& p, FieldElem at)
{
    FieldElem acc = f.zero();
    for (std::size_t i = p.coeffs.size(); i-- > 0;)
        acc = f.add(f.mul(acc, at), p.coeffs[i]);
    return acc;
}

inline MatrixF evaluate(const Field& f, const PolyMatrixF& b, FieldElem at)
{
    MatrixF out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out(i, j) = evaluate(f, b(i, j), at);
    return out;
}

/// Determinant by Gaussian elimination; pivot is the first nonzero entry of the
/// current column scanning downward. Row swaps need no sign in characteristic 2.
inline FieldElem det_f(const Field& f, MatrixF a)
{
    const std::size_t n = a.size();
    FieldElem det = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return f.zero();
        a.swap_rows(pivot, col);

        const FieldElem p = a(col, col);
        det = f.mul(det, p);
        const FieldElem p_inv = f.inv(p);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a(row, col).is_zero())
                continue;
            const FieldElem factor = f.mul(a(row, col), p_inv);
            for (std::size_t j = col + 1; j < n; ++j)
                a(row, j) = f.sub(a(row, j), f.mul(factor, a(col, j)));
            a(row, col) = f.zero();
        }
    }
    return det;
}

/// The unique polynomial of degree < points.size() through all points.
inline PolyF lagrange_interpolate(const Field& f, const std::vector<std::pair<FieldElem, FieldElem>>& points)
{
    const std::size_t k = points.size();
    PolyF result{std::vector<FieldElem>(k, f.zero())};
    if (k == 0)
        return result;

    // master(y) = prod_j (y - x_j), degree k
    std::vector<FieldElem> master{f.one()};
    for (const auto& [x, y] : points) {
        (void)y;
        std::vector<FieldElem> next(master.size() + 1, f.zero());
        for (std::size_t i = 0; i < master.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], master[i]);
            next[i] = f.sub(next[i], f.mul(x, master[i]));
        }
        master = std::move(next);
    }

    for (std::size_t l = 0; l < k; ++l) {
        const FieldElem xl = points[l].first;
        FieldElem denom = f.one();
        for (std::size_t j = 0; j < k; ++j) {
            if (j == l)
                continue;
            const FieldElem diff = f.sub(xl, points[j].first);
            if (diff.is_zero())
                throw UsageError("lagrange_interpolate: duplicate abscissa " + f.to_string(xl));
            denom = f.mul(denom, diff);
        }
        const FieldElem scale = f.div(points[l].second, denom);
        if (scale.is_zero())
            continue;
        // master / (y - xl) by synthetic division, highest coefficient first
        FieldElem carry = f.zero();
        for (std::size_t i = k; i-- > 0;) {
            carry = f.add(master[i + 1], f.mul(carry, xl));
            result.coeffs[i] = f.add(result.coeffs[i], f.mul(scale, carry));
        }
    }
    return result;
}

/// det B for a polynomial matrix with entry degrees bounded so that det B has
/// degree <= max_degree. Evaluates at the field elements indexed 0..max_degree,
/// takes each determinant, and interpolates.
inline PolyF det_poly(const Field& f, const PolyMatrixF& b, std::size_t max_degree)
{
    if (max_degree >= f.order_saturated())
        throw UsageError("det_poly: F_{2^" + std::to_string(f.degree()) + "} has fewer than " +
                         std::to_string(max_degree + 1) + " distinct points");
    std::vector<std::pair<FieldElem, FieldElem>> samples;
    samples.reserve(max_degree + 1);
    for (std::size_t i = 0; i <= max_degree; ++i) {
        const FieldElem at = f.from_index(i);
        samples.emplace_back(at, det_f(f, evaluate(f, b, at)));
    }
    PolyF result = lagrange_interpolate(f, samples);
    result.trim();
    return result;
}

namespace detail {

inline PolyF poly_mul(const Field& f, const PolyF& a, const PolyF& b)
{
    const int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0)
        return {};
    PolyF out{std::vector<FieldElem>(static_cast<std::size_t>(da + db + 1), f.zero())};
    for (int i = 0; i <= da; ++i) {
        if (a.coeffs[i].is_zero())
            continue;
        for (int j = 0; j <= db; ++j)
            out.coeffs[i + j] = f.add(out.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
    return out;
}

inline PolyF poly_add(const Field& f, const PolyF& a, const PolyF& b)
{
    PolyF out{std::vector<FieldElem>(std::max(a.coeffs.size(), b.coeffs.size()), f.zero())};
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = f.add(a.coeff(i), b.coeff(i));
    out.trim();
    return out;
}

// a / b when b divides a exactly
inline PolyF poly_div_exact(const Field& f, PolyF a, const PolyF& b)
{
    const int db = b.degree();
    if (db < 0)
        throw DivisionByZero();
    const FieldElem lead_inv = f.inv(b.coeffs[static_cast<std::size_t>(db)]);
    const int da = a.degree();
    if (da < db) {
        if (da >= 0)
            throw InvariantError("poly_div_exact: nonzero remainder");
        return {};
    }
    PolyF q{std::vector<FieldElem>(static_cast<std::size_t>(da - db + 1), f.zero())};
    for (int k = da; k >= db; --k) {
        const FieldElem c = f.mul(a.coeffs[static_cast<std::size_t>(k)], lead_inv);
        if (c.is_zero())
            continue;
        q.coeffs[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j)
            a.coeffs[static_cast<std::size_t>(k - db + j)] =
                f.sub(a.coeffs[static_cast<std::size_t>(k - db + j)], f.mul(c, b.coeffs[static_cast<std::size_t>(j)]));
    }
    if (!a.is_zero())
        throw InvariantError("poly_div_exact: nonzero remainder");
    return q;
}

}  // namespace detail

/// det B by fraction-free (Bareiss) elimination directly in F_{2^d}[r]. Works
/// for any field size; used where the field has too few evaluation points.
inline PolyF det_poly_fraction_free(const Field& f, PolyMatrixF b)
{
    const std::size_t n = b.size();
    if (n == 0)
        return PolyF{{f.one()}};
    PolyF prev{{f.one()}};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && b(pivot, k).is_zero())
            ++pivot;
        if (pivot == n)
            return {};
        b.swap_rows(pivot, k);  // sign is irrelevant in characteristic 2
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const PolyF num = detail::poly_add(f, detail::poly_mul(f, b(k, k), b(i, j)),
                                                   detail::poly_mul(f, b(i, k), b(k, j)));
                b(i, j) = detail::poly_div_exact(f, num, prev);
            }
            b(i, k) = {};
        }
        prev = b(k, k);
    }
    PolyF result = b(n - 1, n - 1);
    result.trim();
    return result;
}

}  // namespace evencycle
