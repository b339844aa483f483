#include "gkm/connection.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>
#include <unordered_map>

namespace gkm {

namespace {

std::string oriented_label(const GkmGraph& g, OrientedEdge e) {
    return g.vertices()[g.initial(e)] + "->" + g.vertices()[g.terminal(e)];
}

} // namespace

Connection compute_connection(const GkmGraph& g, const ConnectionOptions& options) {
    if (options.require_three_independent) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (independence_degree(g, v) < 3) {
                throw ConnectionError(ConnectionError::Kind::NotThreeIndependent,
                                      "star at " + g.vertices()[v] + " is not 3-independent");
            }
        }
    }

    Connection connection;
    for (int e = 0; e < g.edge_count(); ++e) {
        for (bool reversed : {false, true}) {
            const OrientedEdge along{e, reversed};
            const LinearForm traversed = g.weight(along);
            if (traversed.is_zero()) {
                throw ConnectionError(ConnectionError::Kind::NoMatch,
                                      "edge " + oriented_label(g, along) + " has zero weight",
                                      oriented_key(along));
            }
            const int p = g.initial(along);
            const int q = g.terminal(along);

            std::vector<OrientedEdge> candidates = g.star(q).edges;
            if (options.scan_seed != 0) {
                std::mt19937_64 rng(options.scan_seed + oriented_key(along));
                std::shuffle(candidates.begin(), candidates.end(), rng);
            }

            std::vector<OrientedEdge> images;
            images.reserve(g.star(p).edges.size());
            for (OrientedEdge source : g.star(p).edges) {
                const LinearForm source_weight = g.weight(source);
                OrientedEdge found{-1, false};
                int matches = 0;
                for (OrientedEdge candidate : candidates) {
                    LinearForm difference = g.weight(candidate);
                    for (int i = 0; i < difference.rank(); ++i) {
                        difference.coeffs[i] -= source_weight.coeffs[i];
                    }
                    if (is_rational_multiple(difference, traversed, options.strict_integral)) {
                        ++matches;
                        found = candidate;
                    }
                }
                if (matches == 0) {
                    throw ConnectionError(ConnectionError::Kind::NoMatch,
                                          "no image for " + oriented_label(g, source) +
                                              " along " + oriented_label(g, along),
                                          oriented_key(along), oriented_key(source));
                }
                if (matches > 1) {
                    throw ConnectionError(ConnectionError::Kind::AmbiguousMatch,
                                          std::to_string(matches) + " images for " +
                                              oriented_label(g, source) + " along " +
                                              oriented_label(g, along),
                                          oriented_key(along), oriented_key(source));
                }
                images.push_back(found);
            }

            // bijectivity: images must be a permutation of the target star
            std::vector<OrientedEdge> sorted_images = images;
            std::sort(sorted_images.begin(), sorted_images.end());
            if (std::adjacent_find(sorted_images.begin(), sorted_images.end()) !=
                sorted_images.end()) {
                throw ConnectionError(ConnectionError::Kind::NotBijective,
                                      "two star edges share an image along " +
                                          oriented_label(g, along),
                                      oriented_key(along));
            }
            connection.maps[oriented_key(along)] = std::move(images);
        }
    }

    // inverse property: the reversed map undoes the forward map
    for (int e = 0; e < g.edge_count(); ++e) {
        for (bool reversed : {false, true}) {
            const OrientedEdge along{e, reversed};
            const int p = g.initial(along);
            const auto& forward = connection.maps.at(oriented_key(along));
            const auto& backward = connection.maps.at(oriented_key(reverse(along)));
            const auto& target_star = g.star(g.terminal(along)).edges;
            for (std::size_t i = 0; i < forward.size(); ++i) {
                const auto position = std::find(target_star.begin(), target_star.end(), forward[i]);
                const std::size_t pos = position - target_star.begin();
                if (backward[pos] != g.star(p).edges[i]) {
                    throw ConnectionError(ConnectionError::Kind::NotBijective,
                                          "connection along " + oriented_label(g, along) +
                                              " is not inverted by its reversal",
                                          oriented_key(along));
                }
            }
        }
    }

    return connection;
}

const Connection& cached_connection(const GkmGraph& g) {
    static std::mutex lock;
    static std::unordered_map<std::string, Connection> cache;
    const std::string key = g.content_key();
    std::scoped_lock guard(lock);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, compute_connection(g)).first;
    }
    return it->second;
}

EdgeGeometry EdgeGeometry::from_graph(const GkmGraph& g) {
    EdgeGeometry geom;
    geom.lengths.reserve(g.edge_count());
    geom.chern.reserve(g.edge_count());
    int class_dim = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& record = g.edges()[e];
        if (!record.length) {
            throw MissingChernData("edge " + g.vertices()[record.from] + "->" +
                                   g.vertices()[record.to] + " has no length");
        }
        if (!record.chern) {
            throw MissingChernData("edge " + g.vertices()[record.from] + "->" +
                                   g.vertices()[record.to] + " has no chern label");
        }
        if (class_dim < 0) {
            class_dim = static_cast<int>(record.chern->size());
        }
        geom.lengths.push_back(*record.length);
        geom.chern.push_back(*record.chern);
    }
    geom.class_dim = std::max(class_dim, 0);
    return geom;
}

std::vector<long long> EdgeGeometry::chern_of(OrientedEdge e) const {
    std::vector<long long> label = chern[e.edge];
    if (e.reversed) {
        for (auto& c : label) {
            c = -c;
        }
    }
    return label;
}

ChernReport check_chern_compatibility(const GkmGraph& g, const Connection& nabla,
                                      const EdgeGeometry& geom) {
    if (static_cast<int>(geom.chern.size()) != g.edge_count()) {
        throw MissingChernData("geometry covers " + std::to_string(geom.chern.size()) +
                               " edges, graph has " + std::to_string(g.edge_count()));
    }
    ChernReport report;
    for (int e = 0; e < g.edge_count(); ++e) {
        for (bool reversed : {false, true}) {
            const OrientedEdge along{e, reversed};
            const auto& star = g.star(g.initial(along)).edges;
            const auto& images = nabla.maps.at(oriented_key(along));
            for (std::size_t i = 0; i < star.size(); ++i) {
                if (star[i] == along) {
                    // traversed edge: the label negates, which the reversal
                    // convention already encodes
                    continue;
                }
                if (geom.chern_of(images[i]) != geom.chern_of(star[i])) {
                    report.violations.push_back({along, star[i], images[i]});
                }
            }
        }
    }
    return report;
}

std::vector<OmegaClass> transport_class(const GkmGraph& g, const EdgeGeometry& geom,
                                        const std::vector<OrientedEdge>& path,
                                        const OmegaClass& start) {
    if (static_cast<int>(start.size()) != geom.class_dim) {
        throw std::invalid_argument("transport_class: class dimension mismatch");
    }
    std::vector<OmegaClass> classes;
    classes.reserve(path.size() + 1);
    classes.push_back(start);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0 && g.terminal(path[i - 1]) != g.initial(path[i])) {
            throw BrokenPath("path breaks between step " + std::to_string(i - 1) + " and " +
                             std::to_string(i));
        }
        OmegaClass next = classes.back();
        const Rational& length = geom.length_of(path[i]);
        const std::vector<long long> label = geom.chern_of(path[i]);
        for (int j = 0; j < geom.class_dim; ++j) {
            next[j] += length * label[j];
        }
        classes.push_back(std::move(next));
    }
    return classes;
}

OmegaClass cycle_defect(const GkmGraph& g, const EdgeGeometry& geom,
                        const std::vector<OrientedEdge>& cycle) {
    if (cycle.empty()) {
        throw BrokenPath("empty cycle");
    }
    if (g.terminal(cycle.back()) != g.initial(cycle.front())) {
        throw BrokenPath("cycle does not close");
    }
    const OmegaClass start(geom.class_dim, Rational(0));
    std::vector<OmegaClass> classes = transport_class(g, geom, cycle, start);
    return classes.back();
}

std::vector<OrientedEdge> path_from_vertices(const GkmGraph& g,
                                             const std::vector<std::string>& names) {
    if (names.size() < 2) {
        throw BrokenPath("a path needs at least two vertices");
    }
    std::vector<OrientedEdge> path;
    path.reserve(names.size() - 1);
    for (std::size_t i = 0; i + 1 < names.size(); ++i) {
        const int from = g.vertex_index(names[i]);
        const int to = g.vertex_index(names[i + 1]);
        bool found = false;
        for (OrientedEdge oe : g.star(from).edges) {
            if (g.terminal(oe) == to) {
                path.push_back(oe);
                found = true;
                break;
            }
        }
        if (!found) {
            throw BrokenPath("no edge between " + names[i] + " and " + names[i + 1]);
        }
    }
    return path;
}

} // namespace gkm
