#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evencycle/errors.hpp"
#include "evencycle/linalg.hpp"
#include "evencycle/matrix.hpp"
#include "evencycle/ring4.hpp"

#if !defined(NDEBUG) && !defined(EVENCYCLE_CHECK_INVARIANTS)
#define EVENCYCLE_CHECK_INVARIANTS 1
#endif

namespace evencycle {

/// Working state of the odd-elimination walk. Rows and columns get marked in
/// pairs; each marked column's single odd entry sits at its designated row.
struct EliminationState {
    MatrixE matrix;
    std::vector<bool> marked_rows;
    std::vector<bool> marked_cols;
    std::vector<std::optional<std::size_t>> designated;  // column -> row
    RingElem accumulator;

    explicit EliminationState(MatrixE m)
        : matrix(std::move(m)),
          marked_rows(matrix.size(), false),
          marked_cols(matrix.size(), false),
          designated(matrix.size())
    {
    }

    std::size_t size() const { return matrix.size(); }

    std::size_t marked_count() const
    {
        std::size_t c = 0;
        for (bool b : marked_rows)
            c += b ? 1 : 0;
        return c;
    }

    void mark(std::size_t row, std::size_t col)
    {
        marked_rows[row] = true;
        marked_cols[col] = true;
        designated[col] = row;
    }

    /// Throws InvariantError when the marking bookkeeping is inconsistent.
    void check_invariants(const Ring& ring) const
    {
        const std::size_t n = size();
        std::size_t rows = 0, cols = 0;
        for (std::size_t i = 0; i < n; ++i) {
            rows += marked_rows[i] ? 1 : 0;
            cols += marked_cols[i] ? 1 : 0;
        }
        if (rows != cols)
            throw InvariantError("elimination: " + std::to_string(rows) + " marked rows vs " + std::to_string(cols) +
                                 " marked columns");
        for (std::size_t j = 0; j < n; ++j) {
            if (!marked_cols[j])
                continue;
            if (!designated[j] || !marked_rows[*designated[j]])
                throw InvariantError("elimination: marked column " + std::to_string(j) + " has no marked designated row");
            for (std::size_t i = 0; i < n; ++i) {
                if (ring.is_odd(matrix(i, j)) != (i == *designated[j]))
                    throw InvariantError("elimination: marked column " + std::to_string(j) +
                                         " does not have exactly one odd entry at its designated row");
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!marked_rows[i])
                continue;
            std::size_t odd = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (marked_cols[j] && ring.is_odd(matrix(i, j)))
                    ++odd;
            if (odd != 1)
                throw InvariantError("elimination: marked row " + std::to_string(i) + " has " + std::to_string(odd) +
                                     " odd entries among marked columns");
        }
    }
};

/// Permanent of a matrix whose row i2 is a ring multiple of row i1. Such a
/// permanent is twice a sum over half the permutations, which projects to a
/// slice of the coefficients of det B in F_{2^d}[r], where B scales row i1 by
/// (1, r, ..., r^(n-1)) and row i2 by (r^(n-1), ..., 1).
inline RingElem per_similar(const Ring& ring, const MatrixE& m, std::size_t i1, std::size_t i2)
{
    const std::size_t n = m.size();
    if (i1 == i2 || i1 >= n || i2 >= n)
        throw UsageError("per_similar: need two distinct row indices below " + std::to_string(n));
    const Field& f = ring.field();

    PolyMatrixF b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const FieldElem e = ring.project(m(i, j));
            if (e.is_zero())
                continue;
            std::size_t shift = 0;
            if (i == i1)
                shift = j;
            else if (i == i2)
                shift = n - 1 - j;
            PolyF p{std::vector<FieldElem>(shift + 1, f.zero())};
            p.coeffs[shift] = e;
            b(i, j) = std::move(p);
        }
    }

    const std::size_t max_degree = 2 * n - 2;
    const PolyF det = max_degree < f.order_saturated() ? det_poly(f, b, max_degree) : det_poly_fraction_free(f, b);

    FieldElem sum = f.zero();
    for (std::size_t l = 0; l + 2 <= n; ++l)
        sum = f.add(sum, det.coeff(l));
    return ring.twice(ring.lift(sum));
}

namespace detail {

inline bool is_odd_permutation(const std::vector<std::size_t>& perm)
{
    std::vector<bool> seen(perm.size(), false);
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s])
            continue;
        ++cycles;
        for (std::size_t v = s; !seen[v]; v = perm[v])
            seen[v] = true;
    }
    return (perm.size() - cycles) % 2 == 1;
}

// Sum of the terminal matrix's Leibniz terms that have at most one even factor,
// optionally signed.
inline RingElem base_case(const Ring& ring, const EliminationState& st, bool with_sign)
{
    st.check_invariants(ring);
    const std::size_t n = st.size();
    const MatrixE& m = st.matrix;

    std::vector<std::size_t> unmarked_rows, unmarked_cols;
    for (std::size_t i = 0; i < n; ++i) {
        if (!st.marked_rows[i])
            unmarked_rows.push_back(i);
        if (!st.marked_cols[i])
            unmarked_cols.push_back(i);
    }
    for (std::size_t i : unmarked_rows)
        for (std::size_t j = 0; j < n; ++j)
            if (ring.is_odd(m(i, j)))
                throw InvariantError("base case: unmarked row " + std::to_string(i) + " still has an odd entry");

    if (unmarked_rows.size() >= 2)
        return ring.zero();

    // perm[row] = column of the main term
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j)
        if (st.marked_cols[j])
            perm[*st.designated[j]] = j;

    auto signed_term = [&](RingElem v, bool odd_perm) { return with_sign && odd_perm ? ring.neg(v) : v; };

    if (unmarked_rows.empty()) {
        RingElem prod = ring.one();
        for (std::size_t i = 0; i < n; ++i)
            prod = ring.mul(prod, m(i, perm[i]));
        return signed_term(prod, is_odd_permutation(perm));
    }

    const std::size_t i0 = unmarked_rows.front();
    const std::size_t j0 = unmarked_cols.front();
    perm[i0] = j0;
    const bool main_odd = is_odd_permutation(perm);

    // prefix[i] = prod over marked rows < i of their designated entries; suffix likewise
    std::vector<RingElem> prefix(n + 1, ring.one()), suffix(n + 1, ring.one());
    for (std::size_t i = 0; i < n; ++i)
        prefix[i + 1] = i == i0 ? prefix[i] : ring.mul(prefix[i], m(i, perm[i]));
    for (std::size_t i = n; i-- > 0;)
        suffix[i] = i == i0 ? suffix[i + 1] : ring.mul(suffix[i + 1], m(i, perm[i]));

    RingElem total = signed_term(ring.mul(prefix[n], m(i0, j0)), main_odd);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == i0 || !ring.is_odd(m(i, j0)))
            continue;
        // row i takes j0, row i0 takes row i's designated column
        RingElem term = ring.mul(m(i, j0), m(i0, perm[i]));
        term = ring.mul(term, ring.mul(prefix[i], suffix[i + 1]));
        total = ring.add(total, signed_term(term, !main_odd));
    }
    return total;
}

// Runs the odd-elimination walk to its terminal state. For each row operation
// "row i2 -= tau * row i1", on_branch(current, tau, i1, i2) sees the matrix
// before the row is reduced.
template <class OnBranch>
EliminationState eliminate(const Ring& ring, const MatrixE& input, OnBranch&& on_branch)
{
    EliminationState st(input);
    const std::size_t n = st.size();
    MatrixE& m = st.matrix;

    for (;;) {
        // smallest unmarked column with an odd entry at an unmarked row, then smallest row
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        for (std::size_t j = 0; j < n && !pivot; ++j) {
            if (st.marked_cols[j])
                continue;
            for (std::size_t i = 0; i < n; ++i) {
                if (!st.marked_rows[i] && ring.is_odd(m(i, j))) {
                    pivot.emplace(i, j);
                    break;
                }
            }
        }
        if (!pivot)
            break;
        const auto [i1, j] = *pivot;
        const RingElem sigma = m(i1, j);

        for (std::size_t i2 = 0; i2 < n; ++i2) {
            if (i2 == i1 || !ring.is_odd(m(i2, j)))
                continue;
            const RingElem tau = ring.elim_coeff(sigma, m(i2, j));
            on_branch(m, tau, i1, i2);
            for (std::size_t c = 0; c < n; ++c)
                m(i2, c) = ring.sub(m(i2, c), ring.mul(tau, m(i1, c)));
        }
        st.mark(i1, j);
#if EVENCYCLE_CHECK_INVARIANTS
        st.check_invariants(ring);
#endif
    }
    return st;
}

inline MatrixE similar_branch(const Ring& ring, const MatrixE& m, RingElem tau, std::size_t i1, std::size_t i2)
{
    MatrixE out = m;
    for (std::size_t c = 0; c < m.size(); ++c)
        out(i2, c) = ring.mul(tau, m(i1, c));
    return out;
}

}  // namespace detail

/// Exact permanent of the terminal state (see base_case for the enumeration).
inline RingElem base_case_per(const Ring& ring, const EliminationState& state)
{
    return detail::base_case(ring, state, false);
}

inline RingElem base_case_det(const Ring& ring, const EliminationState& state)
{
    return detail::base_case(ring, state, true);
}

/// Runs elimination without branch accounting; exposed for inspecting terminal states.
inline EliminationState eliminate_to_base(const Ring& ring, const MatrixE& m)
{
    return detail::eliminate(ring, m, [](const MatrixE&, RingElem, std::size_t, std::size_t) {});
}

/// Permanent over E_{4^d}. Each row operation splits the permanent into the
/// reduced matrix and a similar-rows branch, the latter handled by per_similar.
inline RingElem per_e(const Ring& ring, const MatrixE& m)
{
    RingElem branches = ring.zero();
    EliminationState st = detail::eliminate(ring, m, [&](const MatrixE& cur, RingElem tau, std::size_t i1, std::size_t i2) {
        branches = ring.add(branches, per_similar(ring, detail::similar_branch(ring, cur, tau, i1, i2), i1, i2));
    });
    st.accumulator = ring.add(branches, base_case_per(ring, st));
    return st.accumulator;
}

/// Determinant over E_{4^d}; similar-rows branches cancel, so only the walk and
/// the signed base case remain.
inline RingElem det_e(const Ring& ring, const MatrixE& m)
{
    EliminationState st = eliminate_to_base(ring, m);
    st.accumulator = base_case_det(ring, st);
    return st.accumulator;
}

struct PerDet {
    RingElem per;
    RingElem det;
};

/// per_e and det_e from one shared elimination walk.
inline PerDet per_det_e(const Ring& ring, const MatrixE& m)
{
    RingElem branches = ring.zero();
    EliminationState st = detail::eliminate(ring, m, [&](const MatrixE& cur, RingElem tau, std::size_t i1, std::size_t i2) {
        branches = ring.add(branches, per_similar(ring, detail::similar_branch(ring, cur, tau, i1, i2), i1, i2));
    });
    return {ring.add(branches, base_case_per(ring, st)), base_case_det(ring, st)};
}

}  // namespace evencycle
