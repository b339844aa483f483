#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkm/matrix.hpp"
#include "oracles.hpp"

using namespace gkm;

namespace {

std::vector<std::vector<Rational>> dense(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
    for (const auto& [key, value] : m.entries()) {
        out[key.first][key.second] = value;
    }
    return out;
}

bool in_kernel(const RationalMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> product(m.rows(), Rational(0));
    for (const auto& [key, value] : m.entries()) {
        product[key.first] += value * v[key.second];
    }
    for (const auto& entry : product) {
        if (entry != 0) {
            return false;
        }
    }
    return true;
}

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (rng() % 5 == 0) {
                m.set(r, c, oracles::random_rational(rng));
            }
        }
    }
    return m;
}

} // namespace

TEST_CASE("kernel of a constraint-free matrix is everything") {
    KernelResult result = kernel(RationalMatrix(0, 4));
    CHECK(result.rank == 0);
    CHECK(result.dimension() == 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(result.basis[i][j] == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("kernel of the identity is trivial") {
    RationalMatrix m(3, 3);
    for (int i = 0; i < 3; ++i) {
        m.set(i, i, Rational(1));
    }
    KernelResult result = kernel(m);
    CHECK(result.rank == 3);
    CHECK(result.dimension() == 0);
}

TEST_CASE("rank-1 stack has the expected kernel line") {
    RationalMatrix m(2, 2);
    m.set(0, 0, Rational(1));
    m.set(0, 1, Rational(1));
    m.set(1, 0, Rational(2));
    m.set(1, 1, Rational(2));
    KernelResult result = kernel(m);
    CHECK(result.rank == 1);
    REQUIRE(result.dimension() == 1);
    CHECK(result.basis[0] == std::vector<Rational>{Rational(1), Rational(-1)});
}

TEST_CASE("zero-column matrix") {
    KernelResult result = kernel(RationalMatrix(3, 0));
    CHECK(result.rank == 0);
    CHECK(result.dimension() == 0);
}

TEST_CASE("rank + kernel dimension = columns, against an independent elimination") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 50);
        const int cols = 1 + static_cast<int>(rng() % 50);
        const RationalMatrix m = random_matrix(rng, rows, cols);
        const KernelResult result = kernel(m);
        CHECK(result.rank + result.dimension() == cols);
        CHECK(result.rank == oracles::rank_reversed(dense(m)));
        for (const auto& v : result.basis) {
            CHECK(in_kernel(m, v));
        }
    }
}

TEST_CASE("kernel basis vectors are normalized and independent") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalMatrix m =
            random_matrix(rng, 2 + static_cast<int>(rng() % 12), 2 + static_cast<int>(rng() % 12));
        const KernelResult result = kernel(m);
        for (const auto& v : result.basis) {
            // first nonzero entry is exactly 1
            for (const auto& entry : v) {
                if (entry != 0) {
                    CHECK(entry == 1);
                    break;
                }
            }
        }
        if (!result.basis.empty()) {
            RationalMatrix stacked(static_cast<int>(result.basis.size()), m.cols());
            for (int i = 0; i < static_cast<int>(result.basis.size()); ++i) {
                for (int j = 0; j < m.cols(); ++j) {
                    if (result.basis[i][j] != 0) {
                        stacked.set(i, j, result.basis[i][j]);
                    }
                }
            }
            CHECK(rank(stacked) == result.dimension());
        }
    }
}

TEST_CASE("appending constraint rows never grows the kernel") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 25; ++trial) {
        const int cols = 2 + static_cast<int>(rng() % 10);
        RationalMatrix m = random_matrix(rng, 1 + static_cast<int>(rng() % 8), cols);
        const long long before = kernel(m).dimension();
        m.append_rows(random_matrix(rng, 1 + static_cast<int>(rng() % 4), cols));
        CHECK(kernel(m).dimension() <= before);
    }
}

TEST_CASE("deterministic output") {
    std::mt19937_64 rng(109);
    const RationalMatrix m = random_matrix(rng, 20, 25);
    const KernelResult a = kernel(m);
    const KernelResult b = kernel(m);
    CHECK(a.rank == b.rank);
    CHECK(a.basis == b.basis);
}
