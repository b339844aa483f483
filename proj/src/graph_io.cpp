#include "gkm/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gkm {

namespace {

using nlohmann::json;

long long require_int(const json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw MalformedGraph(where + " must be an integer");
    }
    return value.get<long long>();
}

std::vector<long long> require_int_array(const json& value, const std::string& where) {
    if (!value.is_array()) {
        throw MalformedGraph(where + " must be an array of integers");
    }
    std::vector<long long> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        out.push_back(require_int(item, where + " entry"));
    }
    return out;
}

} // namespace

LoadResult parse_graph(const std::string& json_text, const LoadOptions& options) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw MalformedGraph(std::string("JSON parse error: ") + err.what());
    }
    if (!doc.is_object()) {
        throw MalformedGraph("top level must be an object");
    }

    std::vector<std::string> warnings;
    static const std::set<std::string> known_top = {"rank", "vertices", "edges"};
    static const std::set<std::string> known_edge = {"from", "to", "weight", "length", "chern"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!known_top.count(key)) {
            warnings.push_back("unknown top-level field \"" + key + "\" ignored");
        }
    }

    if (!doc.contains("rank") || !doc.contains("vertices") || !doc.contains("edges")) {
        throw MalformedGraph("missing required field (rank, vertices, edges)");
    }
    const int rank = static_cast<int>(require_int(doc["rank"], "\"rank\""));

    if (!doc["vertices"].is_array()) {
        throw MalformedGraph("\"vertices\" must be an array of strings");
    }
    std::vector<std::string> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) {
            throw MalformedGraph("\"vertices\" must be an array of strings");
        }
        vertices.push_back(v.get<std::string>());
    }

    if (!doc["edges"].is_array()) {
        throw MalformedGraph("\"edges\" must be an array of objects");
    }
    std::vector<EdgeSpec> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_object()) {
            throw MalformedGraph("edge entries must be objects");
        }
        for (const auto& [key, value] : e.items()) {
            (void)value;
            if (!known_edge.count(key)) {
                warnings.push_back("unknown edge field \"" + key + "\" ignored");
            }
        }
        if (!e.contains("from") || !e.contains("to") || !e.contains("weight")) {
            throw MalformedGraph("edge entries need \"from\", \"to\" and \"weight\"");
        }
        if (!e["from"].is_string() || !e["to"].is_string()) {
            throw MalformedGraph("edge endpoints must be vertex name strings");
        }
        EdgeSpec spec;
        spec.from = e["from"].get<std::string>();
        spec.to = e["to"].get<std::string>();
        spec.weight = require_int_array(e["weight"], "edge weight");
        if (e.contains("length")) {
            if (!e["length"].is_string()) {
                throw MalformedGraph("edge length must be a \"p/q\" string");
            }
            try {
                spec.length = parse_rational(e["length"].get<std::string>());
            } catch (const std::invalid_argument& err) {
                throw MalformedGraph(std::string("edge length: ") + err.what());
            }
        }
        if (e.contains("chern")) {
            spec.chern = require_int_array(e["chern"], "edge chern label");
        }
        edges.push_back(std::move(spec));
    }

    GkmGraph graph(rank, std::move(vertices), edges);

    if (options.reject_proportional_parallel) {
        // parallel edges with proportional weights poison every downstream
        // star computation, so they are refused here rather than reported
        std::map<std::pair<int, int>, std::vector<int>> by_pair;
        for (int i = 0; i < graph.edge_count(); ++i) {
            const auto& record = graph.edges()[i];
            by_pair[{std::min(record.from, record.to), std::max(record.from, record.to)}]
                .push_back(i);
        }
        for (const auto& [pair, members] : by_pair) {
            (void)pair;
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    const auto& a = graph.edges()[members[i]].weight;
                    const auto& b = graph.edges()[members[j]].weight;
                    if (!a.is_zero() && !b.is_zero() && proportional(a, b)) {
                        throw MalformedGraph("parallel edges with proportional weights between " +
                                             graph.vertices()[graph.edges()[members[i]].from] +
                                             " and " +
                                             graph.vertices()[graph.edges()[members[i]].to]);
                    }
                }
            }
        }
    }

    return {std::move(graph), std::move(warnings)};
}

LoadResult load_graph(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MalformedGraph("cannot open \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str(), options);
}

std::string graph_to_json(const GkmGraph& g) {
    nlohmann::ordered_json doc;
    doc["rank"] = g.rank();
    doc["vertices"] = g.vertices();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) {
        nlohmann::ordered_json record;
        record["from"] = g.vertices()[e.from];
        record["to"] = g.vertices()[e.to];
        record["weight"] = e.weight.coeffs;
        if (e.length) {
            record["length"] = format_rational(*e.length);
        }
        if (e.chern) {
            record["chern"] = *e.chern;
        }
        doc["edges"].push_back(std::move(record));
    }
    return doc.dump(2) + "\n";
}

void save_graph(const GkmGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw MalformedGraph("cannot write \"" + path + "\"");
    }
    out << graph_to_json(g);
}

} // namespace gkm
