#include "gkm/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

#include "gkm/matrix.hpp"

namespace gkm {

GkmGraph::GkmGraph(int rank, std::vector<std::string> vertices,
                   const std::vector<EdgeSpec>& edges)
    : rank_(rank), vertices_(std::move(vertices)) {
    if (rank_ < 1) {
        throw MalformedGraph("rank must be positive");
    }
    if (vertices_.empty()) {
        throw MalformedGraph("vertex list is empty");
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw MalformedGraph("duplicate vertex identifier");
    }

    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        index.emplace(vertices_[i], i);
    }

    edges_.reserve(edges.size());
    for (const auto& spec : edges) {
        EdgeRecord record;
        auto from = index.find(spec.from);
        auto to = index.find(spec.to);
        if (from == index.end() || to == index.end()) {
            throw MalformedGraph("edge endpoint \"" + (from == index.end() ? spec.from : spec.to) +
                                 "\" is not a declared vertex");
        }
        record.from = from->second;
        record.to = to->second;
        if (static_cast<int>(spec.weight.size()) != rank_) {
            throw MalformedGraph("edge " + spec.from + "->" + spec.to + ": weight has " +
                                 std::to_string(spec.weight.size()) + " entries, rank is " +
                                 std::to_string(rank_));
        }
        record.weight = LinearForm(spec.weight);
        if (spec.length) {
            if (*spec.length <= 0) {
                throw MalformedGraph("edge " + spec.from + "->" + spec.to +
                                     ": length must be positive");
            }
            record.length = spec.length;
        }
        record.chern = spec.chern;
        edges_.push_back(std::move(record));
    }

    // chern label dimensions must agree across the graph
    int class_dim = -1;
    for (const auto& e : edges_) {
        if (!e.chern) {
            continue;
        }
        if (class_dim < 0) {
            class_dim = static_cast<int>(e.chern->size());
        } else if (class_dim != static_cast<int>(e.chern->size())) {
            throw MalformedGraph("chern labels have inconsistent dimensions");
        }
    }

    stars_.resize(vertices_.size());
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
        stars_[v].vertex = v;
    }
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        stars_[edges_[e].from].edges.push_back({e, false});
        stars_[edges_[e].to].edges.push_back({e, true});
    }
}

int GkmGraph::vertex_index(const std::string& name) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end() || *it != name) {
        throw MalformedGraph("unknown vertex \"" + name + "\"");
    }
    return static_cast<int>(it - vertices_.begin());
}

int GkmGraph::initial(OrientedEdge e) const {
    return e.reversed ? edges_[e.edge].to : edges_[e.edge].from;
}

int GkmGraph::terminal(OrientedEdge e) const {
    return e.reversed ? edges_[e.edge].from : edges_[e.edge].to;
}

LinearForm GkmGraph::weight(OrientedEdge e) const {
    return e.reversed ? edges_[e.edge].weight.negated() : edges_[e.edge].weight;
}

int GkmGraph::valence() const {
    int d = 0;
    for (const auto& star : stars_) {
        d = std::max(d, static_cast<int>(star.edges.size()));
    }
    return d;
}

std::string GkmGraph::content_key() const {
    std::ostringstream os;
    os << rank_ << ";";
    for (const auto& v : vertices_) {
        os << v << ",";
    }
    os << ";";
    for (const auto& e : edges_) {
        os << e.from << ">" << e.to << ":";
        for (long long c : e.weight.coeffs) {
            os << c << ",";
        }
        if (e.length) {
            os << "L" << format_rational(*e.length);
        }
        if (e.chern) {
            os << "C";
            for (long long c : *e.chern) {
                os << c << ",";
            }
        }
        os << "|";
    }
    return os.str();
}

const char* violation_kind_name(Violation::Kind kind) {
    switch (kind) {
    case Violation::Kind::IrregularValence: return "irregular-valence";
    case Violation::Kind::Disconnected: return "disconnected";
    case Violation::Kind::ZeroWeight: return "zero-weight";
    case Violation::Kind::SelfLoop: return "self-loop";
    case Violation::Kind::ProportionalParallel: return "proportional-parallel";
    case Violation::Kind::StarMismatch: return "star-mismatch";
    }
    return "unknown";
}

namespace {

std::string edge_label(const GkmGraph& g, int e) {
    return g.vertices()[g.edges()[e].from] + "->" + g.vertices()[g.edges()[e].to];
}

/// Sorted multiset of the star weights at `vertex`, restricted to the
/// kernel of `restrictor`'s form, as dense coefficient vectors.
std::vector<std::vector<Rational>> restricted_star(const GkmGraph& g, const FormRestrictor& rest,
                                                   int vertex) {
    std::vector<std::vector<Rational>> out;
    for (OrientedEdge oe : g.star(vertex).edges) {
        out.push_back(rest.restrict(HomogPolynomial::from_form(g.weight(oe))).dense_coeffs());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ValidationReport validate(const GkmGraph& g) {
    ValidationReport report;
    const int vertex_count = g.vertex_count();

    std::vector<bool> weight_usable(g.edge_count(), true);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& record = g.edges()[e];
        if (record.from == record.to) {
            report.violations.push_back(
                {Violation::Kind::SelfLoop, e, record.from, "self-loop at " + g.vertices()[record.from]});
            weight_usable[e] = false;
        }
        if (record.weight.is_zero()) {
            report.violations.push_back(
                {Violation::Kind::ZeroWeight, e, -1, "zero weight on " + edge_label(g, e)});
            weight_usable[e] = false;
        }
    }

    // parallel edges: group by unordered endpoint pair, compare pairwise
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& record = g.edges()[e];
        by_pair[{std::min(record.from, record.to), std::max(record.from, record.to)}].push_back(e);
    }
    for (const auto& [pair, members] : by_pair) {
        (void)pair;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (weight_usable[members[i]] && weight_usable[members[j]] &&
                    proportional(g.edges()[members[i]].weight, g.edges()[members[j]].weight)) {
                    report.violations.push_back({Violation::Kind::ProportionalParallel,
                                                 members[j], -1,
                                                 "parallel edges " + edge_label(g, members[i]) +
                                                     " and " + edge_label(g, members[j]) +
                                                     " have proportional weights"});
                }
            }
        }
    }

    // regular valence
    const int d = g.valence();
    for (int v = 0; v < vertex_count; ++v) {
        if (g.valence(v) != d) {
            report.violations.push_back({Violation::Kind::IrregularValence, -1, v,
                                         g.vertices()[v] + " has valence " +
                                             std::to_string(g.valence(v)) + ", expected " +
                                             std::to_string(d)});
        }
    }

    // connectivity
    std::vector<bool> seen(vertex_count, false);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = true;
    int reached = 1;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (OrientedEdge oe : g.star(v).edges) {
            int w = g.terminal(oe);
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                frontier.push(w);
            }
        }
    }
    if (reached != vertex_count) {
        report.violations.push_back({Violation::Kind::Disconnected, -1, -1,
                                     std::to_string(vertex_count - reached) +
                                         " vertices unreachable from " + g.vertices()[0]});
    }

    // A3, in its weight-multiset form: across each edge the star weights,
    // restricted to the kernel of the edge weight, agree as multisets
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!weight_usable[e]) {
            continue;
        }
        const auto& record = g.edges()[e];
        FormRestrictor rest(record.weight, 1);
        if (restricted_star(g, rest, record.from) != restricted_star(g, rest, record.to)) {
            report.violations.push_back({Violation::Kind::StarMismatch, e, -1,
                                         "restricted star weights differ across " +
                                             edge_label(g, e)});
        }
    }

    return report;
}

GenericDirection pick_generic(const GkmGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long long bound = 8;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<long long> xi(g.rank());
        for (auto& x : xi) {
            // explicit modulo mapping keeps the stream platform-independent
            x = static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
        }
        bool generic = true;
        for (const auto& record : g.edges()) {
            if (record.weight.eval(xi) == 0) {
                generic = false;
                break;
            }
        }
        if (generic) {
            return {xi};
        }
        if (bound < (1LL << 40)) {
            bound *= 2;
        }
    }
    // nonzero forms always admit a generic vector, so 64 misses means a bug
    throw std::logic_error("pick_generic: could not find a generic direction");
}

int morse_index(const GkmGraph& g, const GenericDirection& xi, int vertex) {
    int count = 0;
    for (OrientedEdge oe : g.star(vertex).edges) {
        const BigInt value = g.weight(oe).eval(xi.entries);
        if (value == 0) {
            throw NonGenericDirection("direction annihilates the weight of " +
                                      edge_label(g, oe.edge));
        }
        if (value < 0) {
            ++count;
        }
    }
    return count;
}

std::vector<long long> betti_vector(const GkmGraph& g, const GenericDirection& xi) {
    std::vector<long long> betti(g.valence() + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        ++betti[morse_index(g, xi, v)];
    }
    return betti;
}

int independence_degree(const std::vector<LinearForm>& weights, int rank) {
    const int d = static_cast<int>(weights.size());
    const int k_max = std::min(d, rank);
    for (int k = k_max; k >= 1; --k) {
        // every k-subset full rank?
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        bool all_independent = true;
        while (true) {
            RationalMatrix m(k, rank);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < rank; ++j) {
                    if (weights[pick[i]].coeffs[j] != 0) {
                        m.set(i, j, Rational(weights[pick[i]].coeffs[j]));
                    }
                }
            }
            if (gkm::rank(m) < k) {
                all_independent = false;
                break;
            }
            // next combination
            int pos = k - 1;
            while (pos >= 0 && pick[pos] == d - k + pos) {
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
        if (all_independent) {
            return k;
        }
    }
    return 0;
}

int independence_degree(const GkmGraph& g, int vertex) {
    std::vector<LinearForm> weights;
    for (OrientedEdge oe : g.star(vertex).edges) {
        weights.push_back(g.weight(oe));
    }
    return independence_degree(weights, g.rank());
}

} // namespace gkm
