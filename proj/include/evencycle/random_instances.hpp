#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "evencycle/digraph.hpp"
#include "evencycle/field.hpp"
#include "evencycle/matrix.hpp"
#include "evencycle/ring4.hpp"

// Seeded instance generators shared by the self-test, unit tests and the
// acceptance suite.

namespace evencycle::instances {

inline RingElem random_ring_elem(const Ring& ring, Rng& rng)
{
    const std::uint64_t mask = ring.field().mask();
    return {rng() & mask, rng() & mask};
}

inline RingElem random_even_ring_elem(const Ring& ring, Rng& rng)
{
    return {0, rng() & ring.field().mask()};
}

inline MatrixE random_matrix_e(const Ring& ring, std::size_t n, Rng& rng)
{
    MatrixE m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = random_ring_elem(ring, rng);
    return m;
}

/// Random matrix biased toward sparse and even entries, so that elimination
/// hits its corner cases (empty pivot columns, leftover even rows).
inline MatrixE random_structured_matrix_e(const Ring& ring, std::size_t n, Rng& rng)
{
    MatrixE m(n);
    std::uniform_int_distribution<int> kind(0, 3);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            switch (kind(rng)) {
            case 0: m(i, j) = ring.zero(); break;
            case 1: m(i, j) = random_even_ring_elem(ring, rng); break;
            default: m(i, j) = random_ring_elem(ring, rng); break;
            }
        }
    }
    return m;
}

inline MatrixF random_matrix_f(const Field& f, std::size_t n, Rng& rng)
{
    MatrixF m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = f.random(rng);
    return m;
}

/// G(n, p) digraph without loops.
inline Digraph random_digraph(std::size_t n, double p, Rng& rng)
{
    Digraph g(n);
    std::bernoulli_distribution arc(p);
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = 1; v <= n; ++v)
            if (u != v && arc(rng))
                g.add_arc(u, v);
    return g;
}

/// Weighted adjacency of g with random arc weights and random loop weights.
inline MatrixF random_weighted_adjacency(const Field& f, const Digraph& g, Rng& rng)
{
    const std::size_t n = g.vertex_count();
    MatrixF a(n, f.zero());
    for (const auto& [u, v] : g.arcs())
        a(u - 1, v - 1) = f.random(rng);
    for (std::size_t u = 0; u < n; ++u)
        a(u, u) = f.random(rng);
    return a;
}

/// Directed cycle 1 -> 2 -> ... -> len -> 1 on vertices offset+1..offset+len.
inline void add_directed_cycle(Digraph& g, std::size_t offset, std::size_t len)
{
    for (std::size_t i = 1; i <= len; ++i)
        g.add_arc(offset + i, offset + (i % len) + 1);
}

}  // namespace evencycle::instances
