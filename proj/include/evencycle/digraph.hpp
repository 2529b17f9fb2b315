#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>

#include "evencycle/errors.hpp"

namespace evencycle {

/// Simple digraph on vertices 1..n. Self-loops are not stored: the algorithms
/// put their own loop on every vertex.
class Digraph {
public:
    using Arc = std::pair<std::size_t, std::size_t>;

    explicit Digraph(std::size_t n = 0) : n_(n) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }

    /// Adds u -> v. Returns false for a dropped self-loop; throws on a
    /// duplicate or out-of-range endpoint.
    bool add_arc(std::size_t u, std::size_t v)
    {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw UsageError("arc " + std::to_string(u) + " " + std::to_string(v) + " has a vertex outside 1.." +
                             std::to_string(n_));
        if (u == v)
            return false;
        if (!arcs_.emplace(u, v).second)
            throw UsageError("duplicate arc " + std::to_string(u) + " " + std::to_string(v));
        return true;
    }

    bool has_arc(std::size_t u, std::size_t v) const { return arcs_.count({u, v}) != 0; }

    /// Arcs in lexicographic order.
    const std::set<Arc>& arcs() const { return arcs_; }

private:
    std::size_t n_;
    std::set<Arc> arcs_;
};

}  // namespace evencycle
