#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gkm/builders.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/solver.hpp"

using namespace gkm;

namespace {

std::vector<long long> betti_of(const GkmGraph& g) {
    return betti_vector(g, pick_generic(g, 0));
}

/// Edge set as sorted (from, to, weight) triples under a vertex renaming.
std::set<std::tuple<std::string, std::string, std::vector<long long>>>
edge_fingerprint(const GkmGraph& g, const std::map<std::string, std::string>& rename) {
    std::set<std::tuple<std::string, std::string, std::vector<long long>>> out;
    for (const auto& record : g.edges()) {
        std::string from = g.vertices()[record.from];
        std::string to = g.vertices()[record.to];
        if (rename.count(from)) {
            from = rename.at(from);
        }
        if (rename.count(to)) {
            to = rename.at(to);
        }
        auto weight = record.weight.coeffs;
        if (to < from) {
            std::swap(from, to);
            for (auto& c : weight) {
                c = -c;
            }
        }
        out.insert({from, to, weight});
    }
    return out;
}

} // namespace

TEST_CASE("projective line: two vertices, one edge, weight (-1,1)") {
    GkmGraph cp1 = build_projective(1);
    CHECK(cp1.rank() == 2);
    CHECK(cp1.vertex_count() == 2);
    REQUIRE(cp1.edge_count() == 1);
    CHECK(cp1.edges()[0].weight.coeffs == std::vector<long long>{-1, 1});
    CHECK(validate(cp1).valid());
    CHECK(betti_of(cp1) == std::vector<long long>{1, 1});
}

TEST_CASE("projective builders: complete graphs with all-ones Betti vectors") {
    for (int n = 1; n <= 3; ++n) {
        GkmGraph g = build_projective(n);
        CHECK(g.vertex_count() == n + 1);
        CHECK(g.edge_count() == n * (n + 1) / 2);
        CHECK(g.valence() == n);
        CHECK(validate(g).valid());
        CHECK(betti_of(g) == std::vector<long long>(n + 1, 1));
    }
    CHECK_THROWS_AS(build_projective(0), InvalidParams);
}

TEST_CASE("Johnson builder: counts, valence, Betti data") {
    GkmGraph j42 = build_grassmannian(4, 2);
    CHECK(j42.vertex_count() == 6);
    CHECK(j42.valence() == 4);
    CHECK(validate(j42).valid());
    CHECK(betti_of(j42) == std::vector<long long>{1, 1, 2, 1, 1});

    GkmGraph j32 = build_grassmannian(3, 2);
    CHECK(j32.vertex_count() == 3);
    CHECK(validate(j32).valid());
    CHECK(betti_of(j32) == std::vector<long long>{1, 1, 1});

    CHECK_THROWS_AS(build_grassmannian(3, 0), InvalidParams);
    CHECK_THROWS_AS(build_grassmannian(3, 3), InvalidParams);
}

TEST_CASE("one-element subsets reproduce the projective graph up to renaming") {
    for (int n = 3; n <= 4; ++n) {
        GkmGraph j = build_grassmannian(n, 1);
        GkmGraph p = build_projective(n - 1);
        std::map<std::string, std::string> rename;
        for (int i = 1; i <= n; ++i) {
            rename["{" + std::to_string(i) + "}"] = "p" + std::to_string(i - 1);
        }
        CHECK(edge_fingerprint(j, rename) == edge_fingerprint(p, {}));
    }
}

TEST_CASE("toric products") {
    GkmGraph segment = build_toric_product({1});
    CHECK(graph_to_json(segment) == graph_to_json(build_projective(1)));

    GkmGraph square = build_toric_product({1, 1});
    CHECK(square.vertex_count() == 4);
    CHECK(square.valence() == 2);
    CHECK(square.rank() == 4);
    CHECK(validate(square).valid());
    CHECK(betti_of(square) == std::vector<long long>{1, 2, 1});

    GkmGraph cube = build_toric_product({1, 1, 1});
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.valence() == 3);
    CHECK(validate(cube).valid());
    CHECK(betti_of(cube) == std::vector<long long>{1, 3, 3, 1});

    GkmGraph mixed = build_toric_product({2, 1});
    CHECK(mixed.vertex_count() == 6);
    CHECK(mixed.valence() == 3);
    CHECK(validate(mixed).valid());

    CHECK_THROWS_AS(build_toric_product({}), InvalidParams);
    CHECK_THROWS_AS(build_toric_product({0}), InvalidParams);
}

TEST_CASE("3-independence where the rank permits") {
    for (const GkmGraph& g : {build_projective(2), build_projective(3), build_projective(4),
                              build_grassmannian(3, 1), build_grassmannian(4, 2)}) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(independence_degree(g, v) >= std::min(3, g.valence()));
        }
    }
}

TEST_CASE("builders are deterministic down to the serialized bytes") {
    CHECK(graph_to_json(build_projective(3)) == graph_to_json(build_projective(3)));
    CHECK(graph_to_json(build_grassmannian(4, 2)) == graph_to_json(build_grassmannian(4, 2)));
    CHECK(graph_to_json(build_toric_product({1, 2})) ==
          graph_to_json(build_toric_product({1, 2})));
    BundleExample a = build_bundle_example(build_projective(1), FiberData{{1, 0, 1}});
    BundleExample b = build_bundle_example(build_projective(1), FiberData{{1, 0, 1}});
    CHECK(graph_to_json(a.graph) == graph_to_json(b.graph));
}

TEST_CASE("untwisted bundle: unit lengths, zero labels, graph unchanged") {
    BundleExample bundle = build_bundle_example(build_projective(1), FiberData{{1, 0, 1}});
    CHECK(bundle.fiber.poincare == std::vector<long long>{1, 0, 1});
    REQUIRE(bundle.graph.edge_count() == 1);
    CHECK(*bundle.graph.edges()[0].length == 1);
    CHECK(*bundle.graph.edges()[0].chern == std::vector<long long>{0});
    // geometry strips back off to the fiber graph
    std::map<std::string, std::string> id;
    CHECK(edge_fingerprint(bundle.graph, id) == edge_fingerprint(build_projective(1), id));
}

TEST_CASE("bundle dimensions factor through the fiber ranks") {
    BundleExample bundle = build_bundle_example(build_projective(2), FiberData{{1, 0, 1}});
    FiberSolution direct = solve_with_fiber(bundle.graph, bundle.fiber, 6);
    std::vector<long long> convolved =
        tensor_dims(solve_cohomology(bundle.graph, 3), bundle.fiber, 6);
    CHECK(direct.dims == convolved);
}

TEST_CASE("twist passthrough checks its invariants") {
    GkmGraph cp1 = build_projective(1);
    TwistSpec good;
    good.lengths = {Rational(1)};
    good.chern = {{1}};
    BundleExample twisted = build_bundle_example(cp1, FiberData{{1, 0, 1}}, good);
    CHECK(twisted.geometry.chern[0] == std::vector<long long>{1});

    TwistSpec wrong_count;
    wrong_count.lengths = {Rational(1), Rational(1)};
    wrong_count.chern = {{1}, {1}};
    CHECK_THROWS_AS(build_bundle_example(cp1, FiberData{{1}}, wrong_count), InvalidParams);

    TwistSpec bad_length;
    bad_length.lengths = {Rational(-1)};
    bad_length.chern = {{1}};
    CHECK_THROWS_AS(build_bundle_example(cp1, FiberData{{1}}, bad_length), InvalidParams);

    TwistSpec ragged;
    ragged.lengths = {Rational(1)};
    ragged.chern = {{1, 0}};
    BundleExample wide = build_bundle_example(cp1, FiberData{{1}}, ragged);
    CHECK(wide.geometry.class_dim == 2);

    CHECK_THROWS_AS(build_bundle_example(cp1, FiberData{{0, 1}}, good), InvalidFiber);
}

TEST_CASE("builder spec strings") {
    CHECK(graph_to_json(build_from_spec("projective:2")) == graph_to_json(build_projective(2)));
    CHECK(graph_to_json(build_from_spec("grassmannian:4,2")) ==
          graph_to_json(build_grassmannian(4, 2)));
    CHECK(graph_to_json(build_from_spec("toric:1,1")) ==
          graph_to_json(build_toric_product({1, 1})));
    CHECK_THROWS_AS(build_from_spec("flag:3"), InvalidParams);
    CHECK_THROWS_AS(build_from_spec("projective:x"), InvalidParams);
    CHECK_THROWS_AS(build_from_spec("projective"), InvalidParams);
}
