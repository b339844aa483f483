#ifndef GKM_SOLVER_HPP
#define GKM_SOLVER_HPP

#include <vector>

#include "gkm/graph.hpp"
#include "gkm/matrix.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

/// One cohomology class: a polynomial per vertex (indexed like
/// GkmGraph::vertices()), all of one degree, satisfying the edge
/// compatibility condition.
using CohomClass = std::vector<HomogPolynomial>;

/// Per-degree dimensions and explicit bases of the graph cohomology ring.
/// Grading is by polynomial degree k; the cohomology degree is 2k.
struct CohomologySolution {
    int rank = 0;
    std::vector<std::string> vertices;
    int max_degree = 0;
    std::vector<long long> dims;                 // dims[k]
    std::vector<std::vector<CohomClass>> bases;  // bases[k], kernel order

    /// Every basis element is scaled so its first nonzero coefficient, in
    /// (vertex, monomial) order, is 1.
};

/// Graded Poincare data of the common fixed component: poincare[j] is the
/// rank of its degree-j cohomology.
struct FiberData {
    std::vector<long long> poincare;

    int top_degree() const { return static_cast<int>(poincare.size()) - 1; }
};

/// The degree-k compatibility system: one column per (vertex, monomial)
/// unknown, and per edge one row for each monomial of the restricted
/// (rank-1 variable) graded piece. Shared by the direct solvers.
RationalMatrix build_compatibility_system(const GkmGraph& g, int degree);

/// Solves the compatibility condition degree by degree: dimension and an
/// explicit kernel basis for each polynomial degree k <= max_degree.
/// Throws InvalidGraph when validation fails.
CohomologySolution solve_cohomology(const GkmGraph& g, int max_degree);

/// The Betti-weighted count of graded polynomial dimensions:
/// result[k] = sum_i betti[i] * graded_dim(rank, k - i).
std::vector<long long> dims_from_betti(const std::vector<long long>& betti, int rank,
                                       int max_degree);

struct MorseRow {
    int degree;            // polynomial degree k (cohomology degree 2k)
    long long solver_dim;  // dim of the degree-k solution space
    long long bound;       // Betti-weighted bound
    bool equal;
};

/// Per-degree comparison of the solver dimension against the Betti bound.
/// The inequality solver_dim <= bound is asserted (Error on violation);
/// equality is reported, not promised.
std::vector<MorseRow> morse_check(const GkmGraph& g, int max_degree, std::uint64_t seed = 0);

/// Graded dimensions of the ring of fiber-valued compatible maps, computed
/// directly: one copy of the compatibility system per fiber generator, with
/// the generator's degree as a shift. Degrees are real cohomology degrees
/// (odd fiber ranks mix parities). Throws InvalidGraph / InvalidFiber.
struct FiberSolution {
    int max_real_degree = 0;
    std::vector<long long> dims; // dims[real degree]
};
FiberSolution solve_with_fiber(const GkmGraph& g, const FiberData& fiber, int max_real_degree);

/// Graded convolution of an already-computed solution with fiber Poincare
/// data: result[K] = sum_j poincare[j] * dims[(K-j)/2] over j with K-j even.
/// Throws InsufficientDepth when the solution is too shallow.
std::vector<long long> tensor_dims(const CohomologySolution& solution, const FiberData& fiber,
                                   int max_real_degree);

/// Pointwise product of two compatible classes; the result is verified to
/// satisfy the compatibility condition again.
CohomClass ring_product(const GkmGraph& g, const CohomClass& f, const CohomClass& h);

/// Exact check of the compatibility condition for one class.
bool satisfies_compatibility(const GkmGraph& g, const CohomClass& f);

} // namespace gkm

#endif // GKM_SOLVER_HPP
