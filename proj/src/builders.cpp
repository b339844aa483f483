#include "gkm/builders.hpp"

#include <algorithm>
#include <sstream>

namespace gkm {

namespace {

std::string subset_name(const std::vector<int>& subset) {
    std::string name = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) {
            name += ",";
        }
        name += std::to_string(subset[i]);
    }
    return name + "}";
}

} // namespace

GkmGraph build_projective(int n) {
    if (n < 1) {
        throw InvalidParams("projective builder needs n >= 1");
    }
    const int rank = n + 1;
    std::vector<std::string> vertices;
    for (int i = 0; i <= n; ++i) {
        vertices.push_back("p" + std::to_string(i));
    }
    std::vector<EdgeSpec> edges;
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            EdgeSpec spec;
            spec.from = "p" + std::to_string(i);
            spec.to = "p" + std::to_string(j);
            spec.weight.assign(rank, 0);
            spec.weight[j] = 1;
            spec.weight[i] = -1;
            edges.push_back(std::move(spec));
        }
    }
    return GkmGraph(rank, std::move(vertices), edges);
}

GkmGraph build_grassmannian(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1) {
        throw InvalidParams("grassmannian builder needs 1 <= k <= n-1");
    }
    // enumerate k-subsets of {1..n} in lexicographic order
    std::vector<std::vector<int>> subsets;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) {
        pick[i] = i + 1;
    }
    while (true) {
        subsets.push_back(pick);
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == n - k + pos + 1) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++pick[pos];
        for (int i = pos + 1; i < k; ++i) {
            pick[i] = pick[i - 1] + 1;
        }
    }

    std::vector<std::string> vertices;
    std::map<std::vector<int>, int> order;
    for (int i = 0; i < static_cast<int>(subsets.size()); ++i) {
        vertices.push_back(subset_name(subsets[i]));
        order.emplace(subsets[i], i);
    }

    std::vector<EdgeSpec> edges;
    for (const auto& subset : subsets) {
        std::vector<bool> member(n + 1, false);
        for (int x : subset) {
            member[x] = true;
        }
        for (int out : subset) {
            for (int in = 1; in <= n; ++in) {
                if (member[in]) {
                    continue;
                }
                std::vector<int> other;
                for (int x : subset) {
                    if (x != out) {
                        other.push_back(x);
                    }
                }
                other.push_back(in);
                std::sort(other.begin(), other.end());
                // each unordered pair once, oriented from the earlier subset
                if (order.at(subset) < order.at(other)) {
                    EdgeSpec spec;
                    spec.from = subset_name(subset);
                    spec.to = subset_name(other);
                    spec.weight.assign(n, 0);
                    spec.weight[in - 1] = 1;
                    spec.weight[out - 1] = -1;
                    edges.push_back(std::move(spec));
                }
            }
        }
    }
    return GkmGraph(n, std::move(vertices), edges);
}

GkmGraph build_toric_product(const std::vector<int>& factors) {
    if (factors.empty()) {
        throw InvalidParams("toric product builder needs at least one factor");
    }
    if (factors.size() == 1) {
        return build_projective(factors[0]);
    }
    std::vector<GkmGraph> parts;
    int rank = 0;
    std::vector<int> offset;
    for (int f : factors) {
        if (f < 1) {
            throw InvalidParams("toric product factors must be positive");
        }
        offset.push_back(rank);
        parts.push_back(build_projective(f));
        rank += f + 1;
    }

    // vertices: tuples over the factor vertex lists
    std::vector<std::vector<int>> tuples{{}};
    for (const auto& part : parts) {
        std::vector<std::vector<int>> grown;
        for (const auto& tuple : tuples) {
            for (int v = 0; v < part.vertex_count(); ++v) {
                auto next = tuple;
                next.push_back(v);
                grown.push_back(std::move(next));
            }
        }
        tuples = std::move(grown);
    }

    auto tuple_name = [&](const std::vector<int>& tuple) {
        std::string name = "(";
        for (std::size_t t = 0; t < tuple.size(); ++t) {
            if (t > 0) {
                name += ",";
            }
            name += parts[t].vertices()[tuple[t]];
        }
        return name + ")";
    };

    std::vector<std::string> vertices;
    vertices.reserve(tuples.size());
    for (const auto& tuple : tuples) {
        vertices.push_back(tuple_name(tuple));
    }

    std::vector<EdgeSpec> edges;
    for (const auto& tuple : tuples) {
        for (std::size_t t = 0; t < parts.size(); ++t) {
            for (const auto& record : parts[t].edges()) {
                if (record.from != tuple[t]) {
                    continue; // one endpoint per unoriented factor edge
                }
                auto other = tuple;
                other[t] = record.to;
                EdgeSpec spec;
                spec.from = tuple_name(tuple);
                spec.to = tuple_name(other);
                spec.weight.assign(rank, 0);
                for (int i = 0; i < record.weight.rank(); ++i) {
                    spec.weight[offset[t] + i] = record.weight.coeffs[i];
                }
                edges.push_back(std::move(spec));
            }
        }
    }
    return GkmGraph(rank, std::move(vertices), edges);
}

BundleExample build_bundle_example(const GkmGraph& fiber_graph, FiberData fiber,
                                   const std::optional<TwistSpec>& twist) {
    if (fiber.poincare.empty() || fiber.poincare[0] < 1) {
        throw InvalidFiber("fiber Poincare data needs a positive degree-0 rank");
    }
    for (long long b : fiber.poincare) {
        if (b < 0) {
            throw InvalidFiber("fiber Poincare ranks must be non-negative");
        }
    }

    const int edge_count = fiber_graph.edge_count();
    std::vector<Rational> lengths;
    std::vector<std::vector<long long>> chern;
    if (twist) {
        if (static_cast<int>(twist->lengths.size()) != edge_count ||
            static_cast<int>(twist->chern.size()) != edge_count) {
            throw InvalidParams("twist data must cover every edge");
        }
        for (const auto& length : twist->lengths) {
            if (length <= 0) {
                throw InvalidParams("twist lengths must be positive");
            }
        }
        std::size_t dim = twist->chern.empty() ? 0 : twist->chern[0].size();
        for (const auto& label : twist->chern) {
            if (label.size() != dim) {
                throw InvalidParams("twist chern labels must share one dimension");
            }
        }
        lengths = twist->lengths;
        chern = twist->chern;
    } else {
        // untwisted product: unit lengths, zero labels in one class slot
        lengths.assign(edge_count, Rational(1));
        chern.assign(edge_count, std::vector<long long>{0});
    }

    // rebuild the graph with geometry riding on the edges
    std::vector<EdgeSpec> specs;
    specs.reserve(edge_count);
    for (int e = 0; e < edge_count; ++e) {
        const auto& record = fiber_graph.edges()[e];
        EdgeSpec spec;
        spec.from = fiber_graph.vertices()[record.from];
        spec.to = fiber_graph.vertices()[record.to];
        spec.weight = record.weight.coeffs;
        spec.length = lengths[e];
        spec.chern = chern[e];
        specs.push_back(std::move(spec));
    }
    GkmGraph graph(fiber_graph.rank(), fiber_graph.vertices(), specs);
    EdgeGeometry geometry = EdgeGeometry::from_graph(graph);
    return {std::move(graph), std::move(fiber), std::move(geometry)};
}

GkmGraph build_from_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string family = spec.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                params.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw InvalidParams("bad builder parameter \"" + item + "\"");
            }
        }
    }
    if (family == "projective") {
        if (params.size() != 1) {
            throw InvalidParams("projective spec: projective:<n>");
        }
        return build_projective(params[0]);
    }
    if (family == "grassmannian") {
        if (params.size() != 2) {
            throw InvalidParams("grassmannian spec: grassmannian:<n>,<k>");
        }
        return build_grassmannian(params[0], params[1]);
    }
    if (family == "toric") {
        if (params.empty()) {
            throw InvalidParams("toric spec: toric:<f1>,<f2>,...");
        }
        return build_toric_product(params);
    }
    throw InvalidParams("unknown builder family \"" + family + "\"");
}

} // namespace gkm
