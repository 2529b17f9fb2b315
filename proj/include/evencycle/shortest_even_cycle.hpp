#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evencycle/digraph.hpp"
#include "evencycle/enumerators.hpp"
#include "evencycle/field.hpp"
#include "evencycle/linalg.hpp"
#include "evencycle/ring4.hpp"

namespace evencycle {

/// One interpolation sample: delta = pcc_{n-1} of the adjacency matrix with its
/// diagonal scaled by gamma.
struct EvaluationSample {
    FieldElem gamma;
    FieldElem delta;
};

struct ShortestEvenCycleRun {
    std::optional<std::size_t> length;
    unsigned field_degree = 0;
    std::optional<Field> field;  // unset when n < 2
    std::vector<EvaluationSample> samples;
    PolyF q;  // pcc_{n-1} of A_y at the drawn weights, as a polynomial in y
};

struct EvenCycleDetection {
    bool found = false;
    unsigned field_degree = 0;
    std::optional<Field> field;
    std::vector<FieldElem> evaluations;  // one per repeat
};

inline unsigned ceil_log2(std::size_t n)
{
    unsigned k = 0;
    while ((std::size_t{1} << k) < n)
        ++k;
    return k;
}

/// Extension degree used for an n-vertex graph: 5*ceil(log2 n), at least 4,
/// raised to d_override when that is larger.
inline unsigned algorithm_field_degree(std::size_t n, std::optional<unsigned> d_override = std::nullopt)
{
    unsigned d = std::max(4u, 5 * ceil_log2(n));
    if (d_override)
        d = std::max(d, *d_override);
    if (d > Field::max_degree)
        throw UsageError("field degree " + std::to_string(d) + " exceeds the supported maximum of 64");
    return d;
}

namespace detail {

struct ArcWeights {
    std::vector<std::pair<Digraph::Arc, FieldElem>> arcs;
    std::vector<FieldElem> loops;  // loops[u-1]
};

inline ArcWeights draw_weights(const Field& f, const Digraph& g, Rng& rng)
{
    ArcWeights w;
    for (const auto& arc : g.arcs())
        w.arcs.emplace_back(arc, f.random(rng));
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        w.loops.push_back(f.random(rng));
    return w;
}

inline WeightedAdjacencyF adjacency(const Field& f, const Digraph& g, const ArcWeights& w, FieldElem loop_scale)
{
    WeightedAdjacencyF a(g.vertex_count(), f.zero());
    for (const auto& [arc, weight] : w.arcs)
        a(arc.first - 1, arc.second - 1) = weight;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        a(u, u) = f.mul(loop_scale, w.loops[u]);
    return a;
}

}  // namespace detail

/// Length of a shortest even cycle, or nullopt when none is witnessed.
///
/// Draws random weights for every arc and loop, evaluates pcc_{n-1} of the
/// adjacency matrix with the diagonal scaled by gamma for n+1 distinct gammas,
/// interpolates the polynomial q(y), and reports the smallest positive even k
/// with a nonzero coefficient at y^(n-k). The answer is never too small; it may
/// be missed (or too large) with probability O(1/n) at the default degree.
inline ShortestEvenCycleRun shortest_even_cycle(const Digraph& g, std::uint64_t seed,
                                                std::optional<unsigned> d_override = std::nullopt)
{
    ShortestEvenCycleRun run;
    const std::size_t n = g.vertex_count();
    if (n < 2)
        return run;

    run.field_degree = algorithm_field_degree(n, d_override);
    Rng rng(seed);
    const Ring ring(make_field(run.field_degree, rng));
    const Field& f = ring.field();
    run.field = f;

    const detail::ArcWeights weights = detail::draw_weights(f, g, rng);

    std::vector<std::pair<FieldElem, FieldElem>> points;
    for (std::size_t l = 0; l <= n; ++l) {
        const FieldElem gamma = f.from_index(l);
        const FieldElem delta = pcc_f(ring, detail::adjacency(f, g, weights, gamma));
        run.samples.push_back({gamma, delta});
        points.emplace_back(gamma, delta);
    }
    run.q = lagrange_interpolate(f, points);

    for (std::size_t k = 2; k <= n; k += 2) {
        if (!run.q.coeff(n - k).is_zero()) {
            run.length = k;
            break;
        }
    }
    return run;
}

/// Randomized even-cycle test: evaluates pcc_{n-1} of the weighted adjacency
/// matrix (loops on the diagonal) at `repeats` independent weightings. Never
/// reports a cycle that does not exist.
inline EvenCycleDetection has_even_cycle(const Digraph& g, std::uint64_t seed, unsigned repeats = 1,
                                         std::optional<unsigned> d_override = std::nullopt)
{
    if (repeats == 0)
        throw UsageError("has_even_cycle: repeats must be positive");
    EvenCycleDetection out;
    const std::size_t n = g.vertex_count();
    out.field_degree = algorithm_field_degree(n, d_override);
    if (n == 0)
        return out;

    Rng rng(seed);
    const Ring ring(make_field(out.field_degree, rng));
    const Field& f = ring.field();
    out.field = f;
    for (unsigned t = 0; t < repeats; ++t) {
        const detail::ArcWeights weights = detail::draw_weights(f, g, rng);
        const FieldElem value = pcc_f(ring, detail::adjacency(f, g, weights, f.one()));
        out.evaluations.push_back(value);
        out.found = out.found || !value.is_zero();
    }
    return out;
}

}  // namespace evencycle
