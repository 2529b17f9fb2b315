#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evencycle/digraph.hpp"
#include "evencycle/errors.hpp"
#include "evencycle/field.hpp"
#include "evencycle/matrix.hpp"
#include "evencycle/ring4.hpp"

// Brute-force reference implementations. They favor obviousness over speed and
// share no code path with the algebraic algorithms they check.

namespace evencycle::oracle {

inline constexpr std::size_t max_algebraic_size = 8;
inline constexpr std::size_t max_graph_size = 12;

namespace detail {

inline void guard(std::size_t n, std::size_t limit, const char* who)
{
    if (n > limit)
        throw UsageError(std::string(who) + ": size " + std::to_string(n) + " exceeds oracle limit " +
                         std::to_string(limit));
}

inline std::size_t count_cycles(const std::vector<std::size_t>& perm)
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
    return cycles;
}

}  // namespace detail

/// Leibniz sums (unsigned, signed) over all n! permutations. Works for any
/// algebra exposing zero/one/add/mul/neg.
template <class Algebra, class T>
std::pair<T, T> leibniz(const Algebra& alg, const Matrix<T>& m)
{
    const std::size_t n = m.size();
    detail::guard(n, max_algebraic_size, "leibniz");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T per = alg.zero(), det = alg.zero();
    do {
        T term = alg.one();
        for (std::size_t i = 0; i < n; ++i)
            term = alg.mul(term, m(i, perm[i]));
        per = alg.add(per, term);
        const bool odd = (n - detail::count_cycles(perm)) % 2 == 1;
        det = alg.add(det, odd ? alg.neg(term) : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {per, det};
}

inline std::pair<RingElem, RingElem> brute_per_det_e(const Ring& ring, const MatrixE& m)
{
    return leibniz(ring, m);
}

/// Sum over all cycle covers (permutations, loops allowed) whose cycle count has
/// the parity of m, of the product of entries. Non-arcs have weight zero.
inline FieldElem brute_pcc(const Field& f, const MatrixF& a, long m)
{
    const std::size_t n = a.size();
    detail::guard(n, max_algebraic_size, "brute_pcc");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    FieldElem sum = f.zero();
    const std::size_t parity = static_cast<std::size_t>(((m % 2) + 2) % 2);
    do {
        if (detail::count_cycles(perm) % 2 != parity)
            continue;
        FieldElem term = f.one();
        for (std::size_t i = 0; i < n; ++i)
            term = f.mul(term, a(i, perm[i]));
        sum = f.add(sum, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

/// A cycle cover of a digraph with a loop at every vertex, as a successor map
/// on 1..n (successor[u-1] is the head of the arc leaving u).
struct CycleCover {
    std::vector<std::size_t> successor;
    std::size_t kappa = 0;   // cycles, loops included
    std::size_t lambda = 0;  // loops
};

inline std::vector<CycleCover> enumerate_cycle_covers(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    detail::guard(n, max_algebraic_size, "enumerate_cycle_covers");
    std::vector<CycleCover> out;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool supported = true;
        std::size_t loops = 0;
        for (std::size_t u = 0; u < n && supported; ++u) {
            if (perm[u] == u)
                ++loops;
            else
                supported = g.has_arc(u + 1, perm[u] + 1);
        }
        if (!supported)
            continue;
        CycleCover c;
        for (std::size_t u = 0; u < n; ++u)
            c.successor.push_back(perm[u] + 1);
        c.kappa = detail::count_cycles(perm);
        c.lambda = loops;
        out.push_back(std::move(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Shortest even simple directed cycle by exhaustive DFS. Each cycle is rooted
/// at its smallest vertex; paths no shorter than the best answer are cut.
inline std::optional<std::size_t> brute_shortest_even_cycle(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    detail::guard(n, max_graph_size, "brute_shortest_even_cycle");
    std::vector<std::vector<std::size_t>> out(n + 1);
    for (const auto& [u, v] : g.arcs())
        out[u].push_back(v);

    std::optional<std::size_t> best;
    std::vector<bool> on_path(n + 1, false);

    // path currently has `len` vertices and ends at u
    auto dfs = [&](auto&& self, std::size_t root, std::size_t u, std::size_t len) -> void {
        for (std::size_t v : out[u]) {
            if (v == root) {
                if (len % 2 == 0 && (!best || len < *best))
                    best = len;
                continue;
            }
            if (v < root || on_path[v])
                continue;
            if (best && len + 1 >= *best)
                continue;
            on_path[v] = true;
            self(self, root, v, len + 1);
            on_path[v] = false;
        }
    };
    for (std::size_t root = 1; root <= n; ++root) {
        on_path[root] = true;
        dfs(dfs, root, root, 1);
        on_path[root] = false;
    }
    return best;
}

/// Polynomial over F_{2^d} in which no variable appears squared.
struct SquarefreePoly {
    struct Term {
        FieldElem coeff;
        std::vector<std::size_t> vars;  // distinct variable indices
    };
    std::size_t variables = 0;
    std::vector<Term> terms;

    bool is_zero() const
    {
        return std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.coeff.is_zero(); });
    }

    std::size_t degree() const
    {
        std::size_t d = 0;
        for (const Term& t : terms)
            if (!t.coeff.is_zero())
                d = std::max(d, t.vars.size());
        return d;
    }

    FieldElem evaluate(const Field& f, const std::vector<FieldElem>& at) const
    {
        FieldElem sum = f.zero();
        for (const Term& t : terms) {
            FieldElem v = t.coeff;
            for (std::size_t x : t.vars)
                v = f.mul(v, at[x]);
            sum = f.add(sum, v);
        }
        return sum;
    }
};

/// w_0 * w_1 * ... * w_{degree-1}; the extremal case of the squarefree
/// identity-testing bound, nonzero with probability exactly (1 - 2^-d)^degree.
inline SquarefreePoly product_test_poly(std::size_t degree)
{
    SquarefreePoly p;
    p.variables = degree;
    SquarefreePoly::Term t{FieldElem{1}, {}};
    for (std::size_t i = 0; i < degree; ++i)
        t.vars.push_back(i);
    p.terms.push_back(std::move(t));
    return p;
}

/// Fraction of uniformly random evaluation points at which p is nonzero.
inline double dlsz_statistic(const Field& f, const SquarefreePoly& p, std::size_t trials, Rng& rng)
{
    if (p.is_zero())
        throw UsageError("dlsz_statistic: the zero polynomial has no nonzero evaluations to count");
    for (const auto& t : p.terms) {
        std::vector<std::size_t> vars = t.vars;
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
            throw UsageError("dlsz_statistic: polynomial is not squarefree");
        if (!vars.empty() && vars.back() >= p.variables)
            throw UsageError("dlsz_statistic: variable index out of range");
    }
    if (trials == 0)
        throw UsageError("dlsz_statistic: need at least one trial");
    std::size_t nonzero = 0;
    std::vector<FieldElem> at(p.variables);
    for (std::size_t t = 0; t < trials; ++t) {
        for (auto& x : at)
            x = f.random(rng);
        if (!p.evaluate(f, at).is_zero())
            ++nonzero;
    }
    return static_cast<double>(nonzero) / static_cast<double>(trials);
}

/// Convenience form: the built-in degree-`degree` product polynomial over a
/// freshly generated F_{2^d}.
inline double dlsz_statistic(std::size_t degree, unsigned d, std::size_t trials, std::uint64_t seed)
{
    Rng rng(seed);
    const Field f = make_field(d, rng);
    return dlsz_statistic(f, product_test_poly(degree), trials, rng);
}

}  // namespace evencycle::oracle
