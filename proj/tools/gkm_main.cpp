// gkm: command-line driver for moment-graph invariants. All commands write
// deterministic output for fixed inputs and flags; the only randomness is
// the --seed flag. Exit codes: 0 success, 1 domain violation, 2 I/O or
// parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkm/builders.hpp"
#include "gkm/connection.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/solver.hpp"

namespace {

using namespace gkm;
using ordered_json = nlohmann::ordered_json;

enum class Format { Tsv, Json };

bool log_enabled() {
    static const bool enabled = [] {
        const char* level = std::getenv("GKM_LOG");
        return level != nullptr && std::string(level) != "" && std::string(level) != "off";
    }();
    return enabled;
}

void log_note(const std::string& message) {
    if (log_enabled()) {
        std::cerr << "[gkm] " << message << "\n";
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

std::vector<long long> parse_ints(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    for (const auto& item : split(text, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad " + what + " entry \"" + item + "\"");
        }
    }
    return out;
}

std::string join_rationals(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += format_rational(values[i]);
    }
    return out;
}

/// Loads the input graph from a file or a builder spec (exactly one given).
GkmGraph input_graph(const std::string& file, const std::string& builder,
                     bool reject_proportional = true) {
    if (!file.empty() && !builder.empty()) {
        throw std::invalid_argument("give either a file or --builder, not both");
    }
    if (!builder.empty()) {
        return build_from_spec(builder);
    }
    if (file.empty()) {
        throw std::invalid_argument("no input graph: give a file or --builder");
    }
    LoadOptions options;
    options.reject_proportional_parallel = reject_proportional;
    LoadResult loaded = load_graph(file, options);
    for (const auto& warning : loaded.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    return loaded.graph;
}

std::string oriented_name(const GkmGraph& g, OrientedEdge e) {
    return g.vertices()[g.initial(e)] + "->" + g.vertices()[g.terminal(e)];
}

int run_validate(const std::string& file, Format format) {
    LoadOptions options;
    options.reject_proportional_parallel = false; // report, do not refuse
    LoadResult loaded = load_graph(file, options);
    for (const auto& warning : loaded.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    ValidationReport report = validate(loaded.graph);
    if (format == Format::Json) {
        ordered_json doc;
        doc["valid"] = report.valid();
        doc["violations"] = ordered_json::array();
        for (const auto& v : report.violations) {
            ordered_json item;
            item["kind"] = violation_kind_name(v.kind);
            item["detail"] = v.detail;
            doc["violations"].push_back(std::move(item));
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        if (report.valid()) {
            std::cout << "valid\n";
        } else {
            for (const auto& v : report.violations) {
                std::cout << "violation\t" << violation_kind_name(v.kind) << "\t" << v.detail
                          << "\n";
            }
        }
    }
    return report.valid() ? 0 : 1;
}

int run_betti(const std::string& file, const std::string& builder, std::uint64_t seed,
              Format format) {
    GkmGraph g = input_graph(file, builder);
    GenericDirection xi = pick_generic(g, seed);
    std::vector<long long> betti = betti_vector(g, xi);
    if (format == Format::Json) {
        ordered_json doc;
        doc["seed"] = seed;
        doc["direction"] = xi.entries;
        doc["betti"] = betti;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < betti.size(); ++i) {
            std::cout << (i ? "," : "") << betti[i];
        }
        std::cout << "\n";
    }
    return 0;
}

int run_cohom(const std::string& file, const std::string& builder, int kmax,
              const std::string& fiber_text, std::uint64_t seed, bool dump_basis,
              Format format) {
    GkmGraph g = input_graph(file, builder);
    log_note("solving to polynomial degree " + std::to_string(kmax));
    std::vector<MorseRow> rows = morse_check(g, kmax, seed);
    CohomologySolution solution = solve_cohomology(g, kmax);

    std::optional<FiberData> fiber;
    FiberSolution direct;
    std::vector<long long> convolved;
    if (!fiber_text.empty()) {
        fiber = FiberData{parse_ints(fiber_text, "fiber rank")};
        const int max_real = 2 * kmax;
        direct = solve_with_fiber(g, *fiber, max_real);
        convolved = tensor_dims(solution, *fiber, max_real);
    }

    if (format == Format::Json) {
        ordered_json doc;
        doc["degrees"] = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json item;
            item["k"] = row.degree;
            item["deg"] = 2 * row.degree;
            item["dim"] = row.solver_dim;
            item["bound"] = row.bound;
            item["equal"] = row.equal;
            doc["degrees"].push_back(std::move(item));
        }
        if (fiber) {
            ordered_json table = ordered_json::array();
            for (int real = 0; real <= direct.max_real_degree; ++real) {
                ordered_json item;
                item["deg"] = real;
                item["direct"] = direct.dims[real];
                item["convolved"] = convolved[real];
                item["equal"] = direct.dims[real] == convolved[real];
                table.push_back(std::move(item));
            }
            doc["fiber"] = ordered_json{{"poincare", fiber->poincare}, {"degrees", table}};
        }
        if (dump_basis) {
            ordered_json basis = ordered_json::array();
            for (int k = 0; k <= solution.max_degree; ++k) {
                for (std::size_t i = 0; i < solution.bases[k].size(); ++i) {
                    ordered_json item;
                    item["k"] = k;
                    item["index"] = i;
                    ordered_json values;
                    for (int v = 0; v < static_cast<int>(solution.vertices.size()); ++v) {
                        values[solution.vertices[v]] = solution.bases[k][i][v].str();
                    }
                    item["values"] = std::move(values);
                    basis.push_back(std::move(item));
                }
            }
            doc["basis"] = std::move(basis);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "k\tdeg\tdim\tbound\tequal\n";
        for (const auto& row : rows) {
            std::cout << row.degree << "\t" << 2 * row.degree << "\t" << row.solver_dim << "\t"
                      << row.bound << "\t" << (row.equal ? "yes" : "no") << "\n";
        }
        if (fiber) {
            std::cout << "deg\tdirect\tconvolved\tequal\n";
            for (int real = 0; real <= direct.max_real_degree; ++real) {
                std::cout << real << "\t" << direct.dims[real] << "\t" << convolved[real] << "\t"
                          << (direct.dims[real] == convolved[real] ? "yes" : "no") << "\n";
            }
        }
        if (dump_basis) {
            for (int k = 0; k <= solution.max_degree; ++k) {
                for (std::size_t i = 0; i < solution.bases[k].size(); ++i) {
                    for (int v = 0; v < static_cast<int>(solution.vertices.size()); ++v) {
                        std::cout << "basis\t" << k << "\t" << i << "\t" << solution.vertices[v]
                                  << "\t" << solution.bases[k][i][v].str() << "\n";
                    }
                }
            }
        }
    }
    return 0;
}

int run_connection(const std::string& file, const std::string& builder, bool strict,
                   Format format) {
    GkmGraph g = input_graph(file, builder);
    ConnectionOptions options;
    options.strict_integral = strict;
    Connection connection = compute_connection(g, options);
    if (format == Format::Json) {
        ordered_json doc = ordered_json::array();
        for (int e = 0; e < g.edge_count(); ++e) {
            for (bool reversed : {false, true}) {
                OrientedEdge along{e, reversed};
                ordered_json item;
                item["along"] = oriented_name(g, along);
                ordered_json maps = ordered_json::array();
                const auto& star = g.star(g.initial(along)).edges;
                const auto& images = connection.maps.at(oriented_key(along));
                for (std::size_t i = 0; i < star.size(); ++i) {
                    maps.push_back(ordered_json{{"edge", oriented_name(g, star[i])},
                                                {"image", oriented_name(g, images[i])}});
                }
                item["maps"] = std::move(maps);
                doc.push_back(std::move(item));
            }
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (int e = 0; e < g.edge_count(); ++e) {
            for (bool reversed : {false, true}) {
                OrientedEdge along{e, reversed};
                const auto& star = g.star(g.initial(along)).edges;
                const auto& images = connection.maps.at(oriented_key(along));
                for (std::size_t i = 0; i < star.size(); ++i) {
                    std::cout << oriented_name(g, along) << "\t" << oriented_name(g, star[i])
                              << "\t" << oriented_name(g, images[i]) << "\n";
                }
            }
        }
    }
    return 0;
}

int run_chern_check(const std::string& file, Format format) {
    GkmGraph g = input_graph(file, "");
    EdgeGeometry geom = EdgeGeometry::from_graph(g);
    ChernReport report = check_chern_compatibility(g, compute_connection(g), geom);
    if (format == Format::Json) {
        ordered_json doc;
        doc["compatible"] = report.ok();
        doc["violations"] = ordered_json::array();
        for (const auto& v : report.violations) {
            doc["violations"].push_back(ordered_json{{"along", oriented_name(g, v.along)},
                                                     {"edge", oriented_name(g, v.star_edge)},
                                                     {"image", oriented_name(g, v.image)}});
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        if (report.ok()) {
            std::cout << "compatible\n";
        } else {
            for (const auto& v : report.violations) {
                std::cout << "violation\t" << oriented_name(g, v.along) << "\t"
                          << oriented_name(g, v.star_edge) << "\t" << oriented_name(g, v.image)
                          << "\n";
            }
        }
    }
    return report.ok() ? 0 : 1;
}

int run_transport(const std::string& file, const std::string& path_text,
                  const std::string& cycle_text, const std::string& omega_text, Format format) {
    if (path_text.empty() == cycle_text.empty()) {
        throw std::invalid_argument("give exactly one of --path or --cycle");
    }
    GkmGraph g = input_graph(file, "");
    EdgeGeometry geom = EdgeGeometry::from_graph(g);
    const bool closed = !cycle_text.empty();
    std::vector<std::string> names = split(closed ? cycle_text : path_text, ',');
    std::vector<OrientedEdge> path = path_from_vertices(g, names);
    if (closed && g.terminal(path.back()) != g.initial(path.front())) {
        throw BrokenPath("cycle does not close");
    }

    OmegaClass start(geom.class_dim, Rational(0));
    if (!omega_text.empty()) {
        start.clear();
        for (const auto& item : split(omega_text, ',')) {
            start.push_back(parse_rational(item));
        }
    }
    std::vector<OmegaClass> classes = transport_class(g, geom, path, start);

    if (format == Format::Json) {
        ordered_json doc;
        doc["path"] = names;
        doc["classes"] = ordered_json::array();
        for (const auto& cls : classes) {
            ordered_json row = ordered_json::array();
            for (const auto& value : cls) {
                row.push_back(format_rational(value));
            }
            doc["classes"].push_back(std::move(row));
        }
        if (closed) {
            ordered_json defect = ordered_json::array();
            for (int j = 0; j < geom.class_dim; ++j) {
                defect.push_back(format_rational(classes.back()[j] - classes.front()[j]));
            }
            doc["defect"] = std::move(defect);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < classes.size(); ++i) {
            std::cout << names[i] << "\t" << join_rationals(classes[i]) << "\n";
        }
        if (closed) {
            OmegaClass defect = classes.back();
            for (int j = 0; j < geom.class_dim; ++j) {
                defect[j] -= classes.front()[j];
            }
            std::cout << "defect\t" << join_rationals(defect) << "\n";
        }
    }
    return 0;
}

int run_defect(const std::string& file, const std::string& cycle_text, Format format) {
    GkmGraph g = input_graph(file, "");
    EdgeGeometry geom = EdgeGeometry::from_graph(g);
    std::vector<std::string> names = split(cycle_text, ',');
    OmegaClass defect = cycle_defect(g, geom, path_from_vertices(g, names));
    if (format == Format::Json) {
        ordered_json doc;
        doc["cycle"] = names;
        ordered_json row = ordered_json::array();
        for (const auto& value : defect) {
            row.push_back(format_rational(value));
        }
        doc["defect"] = std::move(row);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "defect\t" << join_rationals(defect) << "\n";
    }
    return 0;
}

TwistSpec load_twist(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open twist file \"" + path + "\"");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("twist file: ") + err.what());
    }
    TwistSpec twist;
    for (const auto& item : doc.at("lengths")) {
        twist.lengths.push_back(parse_rational(item.get<std::string>()));
    }
    for (const auto& row : doc.at("chern")) {
        twist.chern.push_back(row.get<std::vector<long long>>());
    }
    return twist;
}

int run_generate(const std::string& family, const std::vector<std::string>& params,
                 const std::string& out, const std::string& fiber_spec,
                 const std::string& poincare_text, const std::string& twist_file) {
    std::string spec = family;
    if (!params.empty()) {
        spec += ":";
        for (std::size_t i = 0; i < params.size(); ++i) {
            spec += (i ? "," : "") + params[i];
        }
    }
    if (family == "bundle") {
        if (fiber_spec.empty() || poincare_text.empty()) {
            throw std::invalid_argument("bundle needs --fiber <spec> and --poincare <b0,b1,...>");
        }
        std::optional<TwistSpec> twist;
        if (!twist_file.empty()) {
            twist = load_twist(twist_file);
        }
        BundleExample bundle = build_bundle_example(
            build_from_spec(fiber_spec), FiberData{parse_ints(poincare_text, "poincare")}, twist);
        save_graph(bundle.graph, out);
        return 0;
    }
    save_graph(build_from_spec(spec), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"moment-graph invariants: validation, Betti data, cohomology, connections"};
    app.require_subcommand(1);

    std::string format_name = "tsv";
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();

    std::string file;
    std::string builder;
    std::uint64_t seed = 0;
    int kmax = 4;
    std::string fiber_text;
    bool dump_basis = false;
    bool strict = false;
    std::string path_text, cycle_text, omega_text;
    std::string family, out_file, fiber_spec, poincare_text, twist_file;
    std::vector<std::string> params;

    auto* cmd_validate = app.add_subcommand("validate", "check the action axioms on a graph file");
    cmd_validate->add_option("file", file, "graph JSON file")->required();

    auto* cmd_betti = app.add_subcommand("betti", "Betti vector from a generic direction");
    cmd_betti->add_option("file", file, "graph JSON file");
    cmd_betti->add_option("--builder", builder, "builder spec, e.g. projective:2");
    cmd_betti->add_option("--seed", seed, "seed for the generic direction");

    auto* cmd_cohom = app.add_subcommand("cohom", "graded dimensions, bounds and bases");
    cmd_cohom->add_option("file", file, "graph JSON file");
    cmd_cohom->add_option("--builder", builder, "builder spec, e.g. projective:2");
    cmd_cohom->add_option("--kmax", kmax, "maximum polynomial degree")->check(CLI::NonNegativeNumber);
    cmd_cohom->add_option("--fiber", fiber_text, "fiber Poincare ranks b0,b1,...");
    cmd_cohom->add_option("--seed", seed, "seed for the generic direction");
    cmd_cohom->add_flag("--dump-basis", dump_basis, "print explicit bases");

    auto* cmd_connection = app.add_subcommand("connection", "the compatible connection");
    cmd_connection->add_option("file", file, "graph JSON file");
    cmd_connection->add_option("--builder", builder, "builder spec");
    cmd_connection->add_flag("--strict-integral", strict,
                             "require integer proportionality factors");

    auto* cmd_chern = app.add_subcommand("chern-check", "Chern label compatibility");
    cmd_chern->add_option("file", file, "graph JSON file with geometry")->required();

    auto* cmd_transport = app.add_subcommand("transport", "transport a class along a path");
    cmd_transport->add_option("file", file, "graph JSON file with geometry")->required();
    cmd_transport->add_option("--path", path_text, "comma-separated vertex names");
    cmd_transport->add_option("--cycle", cycle_text, "closed comma-separated vertex names");
    cmd_transport->add_option("--omega", omega_text, "starting class, comma-separated rationals");

    auto* cmd_defect = app.add_subcommand("defect", "net class change around a cycle");
    cmd_defect->add_option("file", file, "graph JSON file with geometry")->required();
    cmd_defect->add_option("--cycle", cycle_text, "closed comma-separated vertex names")
        ->required();

    auto* cmd_generate = app.add_subcommand("generate", "emit a builder graph as JSON");
    cmd_generate->add_option("family", family, "projective | grassmannian | toric | bundle")
        ->required();
    cmd_generate->add_option("params", params, "family parameters");
    cmd_generate->add_option("--out", out_file, "output file")->required();
    cmd_generate->add_option("--fiber", fiber_spec, "bundle: fiber builder spec");
    cmd_generate->add_option("--poincare", poincare_text, "bundle: fixed-component ranks");
    cmd_generate->add_option("--twist", twist_file, "bundle: twist JSON file");

    // global flags (--format) may appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format format = format_name == "json" ? Format::Json : Format::Tsv;
    try {
        if (cmd_validate->parsed()) {
            return run_validate(file, format);
        }
        if (cmd_betti->parsed()) {
            return run_betti(file, builder, seed, format);
        }
        if (cmd_cohom->parsed()) {
            return run_cohom(file, builder, kmax, fiber_text, seed, dump_basis, format);
        }
        if (cmd_connection->parsed()) {
            return run_connection(file, builder, strict, format);
        }
        if (cmd_chern->parsed()) {
            return run_chern_check(file, format);
        }
        if (cmd_transport->parsed()) {
            return run_transport(file, path_text, cycle_text, omega_text, format);
        }
        if (cmd_defect->parsed()) {
            return run_defect(file, cycle_text, format);
        }
        if (cmd_generate->parsed()) {
            return run_generate(family, params, out_file, fiber_spec, poincare_text, twist_file);
        }
    } catch (const MalformedGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
