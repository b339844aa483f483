#ifndef GKM_GRAPH_HPP
#define GKM_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkm/errors.hpp"
#include "gkm/polynomial.hpp"
#include "gkm/rational.hpp"

namespace gkm {

/// Orientation view over a stored unoriented edge. The reversed view
/// carries the negated weight, so weight(reverse(e)) == -weight(e) holds by
/// construction.
struct OrientedEdge {
    int edge = -1;
    bool reversed = false;

    bool operator==(const OrientedEdge& other) const {
        return edge == other.edge && reversed == other.reversed;
    }
    bool operator<(const OrientedEdge& other) const {
        return edge != other.edge ? edge < other.edge : reversed < other.reversed;
    }
};

inline OrientedEdge reverse(OrientedEdge e) { return {e.edge, !e.reversed}; }
inline int oriented_key(OrientedEdge e) { return e.edge * 2 + (e.reversed ? 1 : 0); }

/// Edge description keyed by vertex names, as it appears in input files and
/// builders.
struct EdgeSpec {
    std::string from;
    std::string to;
    std::vector<long long> weight; // orientation from -> to
    std::optional<Rational> length;
    std::optional<std::vector<long long>> chern; // orientation from -> to
};

/// Stored edge with resolved vertex indices.
struct EdgeRecord {
    int from = -1;
    int to = -1;
    LinearForm weight;
    std::optional<Rational> length;
    std::optional<std::vector<long long>> chern;
};

/// Star of a vertex: its outgoing oriented edges in deterministic order.
struct VertexStar {
    int vertex = -1;
    std::vector<OrientedEdge> edges;
};

/// The labeled-graph data model: vertices, unoriented weighted edges, torus
/// rank. Construction resolves names and rejects structural impossibilities
/// (MalformedGraph); axiom checking lives in validate(). Vertices are held
/// in lexicographic order so that all derived output is reproducible.
/// Immutable after construction.
class GkmGraph {
  public:
    GkmGraph(int rank, std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

    int rank() const { return rank_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }

    /// Index of a vertex name; throws MalformedGraph when unknown.
    int vertex_index(const std::string& name) const;

    int initial(OrientedEdge e) const;
    int terminal(OrientedEdge e) const;
    LinearForm weight(OrientedEdge e) const;

    const VertexStar& star(int vertex) const { return stars_[vertex]; }

    /// Valence of one vertex / the maximum valence. For valid graphs every
    /// vertex has the same valence.
    int valence(int vertex) const { return static_cast<int>(stars_[vertex].edges.size()); }
    int valence() const;

    /// Canonical serialization of the whole graph content, used as a cache
    /// key.
    std::string content_key() const;

  private:
    int rank_;
    std::vector<std::string> vertices_;
    std::vector<EdgeRecord> edges_;
    std::vector<VertexStar> stars_;
};

struct Violation {
    enum class Kind {
        IrregularValence,     // A1: not every vertex has the common valence
        Disconnected,         // underlying graph not connected
        ZeroWeight,           // a weight is the zero form
        SelfLoop,             // edge with equal endpoints
        ProportionalParallel, // parallel edges with proportional weights
        StarMismatch,         // A3: restricted weight multisets differ across an edge
    };

    Kind kind;
    int edge = -1;   // -1 when not edge-located
    int vertex = -1; // -1 when not vertex-located
    std::string detail;
};

const char* violation_kind_name(Violation::Kind kind);

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks the action axioms: regular valence, connectivity, nonzero weights,
/// no self-loops, no proportional parallel edges, and for every edge the
/// equality of the two weight multisets restricted to the kernel of the edge
/// weight. The reversal axiom holds by construction of the orientation
/// views.
ValidationReport validate(const GkmGraph& g);

/// Direction vector that vanishes on no edge weight of the graph it was
/// picked for.
struct GenericDirection {
    std::vector<long long> entries;
};

/// Deterministic for a fixed seed: samples integer vectors with entries in
/// [-B, B], doubling B after each failure, until no edge weight annihilates
/// the vector.
GenericDirection pick_generic(const GkmGraph& g, std::uint64_t seed);

/// Number of outgoing edges at `vertex` whose weight pairs negatively with
/// the direction. Throws NonGenericDirection when a pairing vanishes.
int morse_index(const GkmGraph& g, const GenericDirection& xi, int vertex);

/// Vertex counts by Morse index, indexed 0..valence. Independent of the
/// choice of generic direction (tested, not assumed).
std::vector<long long> betti_vector(const GkmGraph& g, const GenericDirection& xi);

/// Largest k such that every k-subset of the given weights is linearly
/// independent; k >= 2 at every vertex is the pairwise-independence
/// condition for a GKM graph, k >= 3 forces a unique compatible connection.
int independence_degree(const std::vector<LinearForm>& weights, int rank);
int independence_degree(const GkmGraph& g, int vertex);

} // namespace gkm

#endif // GKM_GRAPH_HPP
