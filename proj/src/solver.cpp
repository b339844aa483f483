#include "gkm/solver.hpp"

#include <map>
#include <sstream>

#include "gkm/monomial.hpp"

namespace gkm {

namespace {

void require_valid(const GkmGraph& g) {
    ValidationReport report = validate(g);
    if (report.valid()) {
        return;
    }
    std::ostringstream os;
    os << "graph fails validation:";
    for (const auto& violation : report.violations) {
        os << " [" << violation_kind_name(violation.kind) << "] " << violation.detail << ";";
    }
    throw InvalidGraph(os.str());
}

void require_fiber(const FiberData& fiber) {
    if (fiber.poincare.empty() || fiber.poincare[0] < 1) {
        throw InvalidFiber("fiber Poincare data needs a positive degree-0 rank");
    }
    for (long long b : fiber.poincare) {
        if (b < 0) {
            throw InvalidFiber("fiber Poincare ranks must be non-negative");
        }
    }
}

} // namespace

RationalMatrix build_compatibility_system(const GkmGraph& g, int degree) {
    const int n = g.rank();
    const int vertex_count = g.vertex_count();
    MonomialBasis full(n, degree);
    MonomialBasis reduced(n - 1, degree);
    const long long monomials = full.size();
    const long long rows_per_edge = reduced.size();

    RationalMatrix system(static_cast<int>(g.edge_count() * rows_per_edge),
                          static_cast<int>(vertex_count * monomials));
    int row_base = 0;
    for (const auto& record : g.edges()) {
        FormRestrictor rest(record.weight, degree);
        for (long long m = 0; m < monomials; ++m) {
            HomogPolynomial restricted =
                rest.restrict(HomogPolynomial::monomial(n, full.list[m], Rational(1)));
            for (const auto& [expo, c] : restricted.terms()) {
                const int row = row_base + reduced.index.at(expo);
                system.add(row, static_cast<int>(record.from * monomials + m), c);
                system.add(row, static_cast<int>(record.to * monomials + m), -c);
            }
        }
        row_base += static_cast<int>(rows_per_edge);
    }
    return system;
}

CohomologySolution solve_cohomology(const GkmGraph& g, int max_degree) {
    require_valid(g);
    const int n = g.rank();
    const int vertex_count = g.vertex_count();

    CohomologySolution out;
    out.rank = n;
    out.vertices = g.vertices();
    out.max_degree = max_degree;

    for (int k = 0; k <= max_degree; ++k) {
        MonomialBasis full(n, k);
        const long long monomials = full.size();
        KernelResult ker = kernel(build_compatibility_system(g, k));
        out.dims.push_back(ker.dimension());

        std::vector<CohomClass> classes;
        classes.reserve(ker.basis.size());
        for (const auto& vec : ker.basis) {
            CohomClass cls(vertex_count, HomogPolynomial(n, k));
            for (int v = 0; v < vertex_count; ++v) {
                for (long long m = 0; m < monomials; ++m) {
                    const Rational& c = vec[v * monomials + m];
                    if (c != 0) {
                        cls[v].add_term(full.list[m], c);
                    }
                }
            }
            classes.push_back(std::move(cls));
        }
        out.bases.push_back(std::move(classes));
    }
    return out;
}

std::vector<long long> dims_from_betti(const std::vector<long long>& betti, int rank,
                                       int max_degree) {
    std::vector<long long> out;
    out.reserve(max_degree + 1);
    for (int k = 0; k <= max_degree; ++k) {
        long long total = 0;
        for (int i = 0; i < static_cast<int>(betti.size()); ++i) {
            if (k - i >= 0) {
                total += betti[i] * graded_dim(rank, k - i);
            }
        }
        out.push_back(total);
    }
    return out;
}

std::vector<MorseRow> morse_check(const GkmGraph& g, int max_degree, std::uint64_t seed) {
    CohomologySolution solution = solve_cohomology(g, max_degree);
    std::vector<long long> betti = betti_vector(g, pick_generic(g, seed));
    std::vector<long long> bounds = dims_from_betti(betti, g.rank(), max_degree);

    std::vector<MorseRow> rows;
    rows.reserve(max_degree + 1);
    for (int k = 0; k <= max_degree; ++k) {
        if (solution.dims[k] > bounds[k]) {
            throw Error("Morse inequality violated at degree " + std::to_string(k) + ": dim " +
                        std::to_string(solution.dims[k]) + " > bound " +
                        std::to_string(bounds[k]));
        }
        rows.push_back({k, solution.dims[k], bounds[k], solution.dims[k] == bounds[k]});
    }
    return rows;
}

FiberSolution solve_with_fiber(const GkmGraph& g, const FiberData& fiber, int max_real_degree) {
    require_fiber(fiber);
    require_valid(g);

    // one compatibility system per fiber generator, assembled directly;
    // generators of equal degree share one block, so each distinct
    // polynomial degree is solved once
    std::map<int, long long> block_dims;
    auto block_dim = [&](int degree) {
        auto it = block_dims.find(degree);
        if (it == block_dims.end()) {
            it = block_dims.emplace(degree, kernel(build_compatibility_system(g, degree)).dimension())
                     .first;
        }
        return it->second;
    };

    FiberSolution out;
    out.max_real_degree = max_real_degree;
    out.dims.assign(max_real_degree + 1, 0);
    for (int real = 0; real <= max_real_degree; ++real) {
        long long total = 0;
        for (int j = 0; j <= std::min(real, fiber.top_degree()); ++j) {
            if (fiber.poincare[j] == 0 || (real - j) % 2 != 0) {
                continue;
            }
            total += fiber.poincare[j] * block_dim((real - j) / 2);
        }
        out.dims[real] = total;
    }
    return out;
}

std::vector<long long> tensor_dims(const CohomologySolution& solution, const FiberData& fiber,
                                   int max_real_degree) {
    require_fiber(fiber);
    if (max_real_degree / 2 > solution.max_degree) {
        throw InsufficientDepth("convolution to real degree " + std::to_string(max_real_degree) +
                                " needs solver depth " + std::to_string(max_real_degree / 2) +
                                ", have " + std::to_string(solution.max_degree));
    }
    std::vector<long long> out(max_real_degree + 1, 0);
    for (int real = 0; real <= max_real_degree; ++real) {
        for (int j = 0; j <= std::min(real, fiber.top_degree()); ++j) {
            if ((real - j) % 2 != 0) {
                continue;
            }
            out[real] += fiber.poincare[j] * solution.dims[(real - j) / 2];
        }
    }
    return out;
}

CohomClass ring_product(const GkmGraph& g, const CohomClass& f, const CohomClass& h) {
    if (f.size() != h.size() || static_cast<int>(f.size()) != g.vertex_count()) {
        throw std::invalid_argument("ring_product: class size mismatch");
    }
    CohomClass out;
    out.reserve(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) {
        out.push_back(f[v] * h[v]);
    }
    if (!satisfies_compatibility(g, out)) {
        throw Error("ring_product: product violates the compatibility condition");
    }
    return out;
}

bool satisfies_compatibility(const GkmGraph& g, const CohomClass& f) {
    if (static_cast<int>(f.size()) != g.vertex_count()) {
        throw std::invalid_argument("satisfies_compatibility: class size mismatch");
    }
    for (const auto& record : g.edges()) {
        HomogPolynomial difference = f[record.from] - f[record.to];
        if (!restrict_mod_form(difference, record.weight).is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace gkm
