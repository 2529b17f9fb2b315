#pragma once

#include "evencycle/matrix.hpp"
#include "evencycle/perdet.hpp"
#include "evencycle/ring4.hpp"

namespace evencycle {

/// Weighted adjacency matrix over F_{2^d}: entry (u, v) is the weight of arc
/// u -> v, the diagonal holds loop weights, everything else is zero.
using WeightedAdjacencyF = MatrixF;

/// pcc_{n-1}(A): weighted sum over cycle covers whose cycle count has the
/// parity of n-1. Computed from 2*lift(pcc) = per(lift A) - det(lift A).
inline FieldElem pcc_f(const Ring& ring, const WeightedAdjacencyF& a)
{
    const MatrixE lifted = lift(ring, a);
    const PerDet pd = per_det_e(ring, lifted);
    return ring.unlift2(ring.sub(pd.per, pd.det));
}

}  // namespace evencycle
