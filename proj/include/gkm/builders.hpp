#ifndef GKM_BUILDERS_HPP
#define GKM_BUILDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gkm/connection.hpp"
#include "gkm/graph.hpp"
#include "gkm/solver.hpp"

namespace gkm {

/// Complete graph on n+1 vertices p0..pn in rank n+1; the weight from pi to
/// pj is x_j - x_i. Valence n.
GkmGraph build_projective(int n);

/// Johnson graph J(n, k): vertices are the k-subsets of {1..n}, adjacent
/// when the symmetric difference has two elements; replacing j by l carries
/// weight x_l - x_j. Valence k(n-k). Throws InvalidParams unless
/// 1 <= k <= n-1.
GkmGraph build_grassmannian(int n, int k);

/// Graph product of projective builders with weights in the direct-sum
/// lattice; valence is the sum of the factors. Throws InvalidParams on an
/// empty list or nonpositive factor.
GkmGraph build_toric_product(const std::vector<int>& factors);

/// Per-edge geometry override for the bundle builder, indexed like the
/// fiber graph's edge list.
struct TwistSpec {
    std::vector<Rational> lengths;
    std::vector<std::vector<long long>> chern;
};

struct BundleExample {
    GkmGraph graph; // the fiber's graph, with geometry riding on the edges
    FiberData fiber;
    EdgeGeometry geometry;
};

/// Bundle-style example: the graph is the fiber family's graph unchanged,
/// paired with the declared fixed-component Poincare data. Without a twist
/// the geometry is the untwisted product (all lengths 1, all labels zero),
/// which has zero cycle defect; a supplied twist is passed through after
/// invariant checks.
BundleExample build_bundle_example(const GkmGraph& fiber_graph, FiberData fiber,
                                   const std::optional<TwistSpec>& twist = {});

/// Parses "projective:2", "grassmannian:4,2" or "toric:1,1,2" into a built
/// graph. Throws InvalidParams on anything else.
GkmGraph build_from_spec(const std::string& spec);

} // namespace gkm

#endif // GKM_BUILDERS_HPP
