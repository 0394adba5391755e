#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cubefan/census.hpp"
#include "cubefan/forbidden.hpp"
#include "cubefan/json_io.hpp"
#include "cubefan/wall.hpp"

namespace {

using namespace cubefan;

struct InputOptions {
    std::string path;
    std::string edges;
    int n = -1;
    std::string format = "auto";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("input", in.path, "graph file (edge list or graph6), or - for stdin");
    cmd->add_option("--edges", in.edges, "inline edges, e.g. \"1-2,2-3\" (requires --n)");
    cmd->add_option("--n", in.n, "node count for --edges");
    cmd->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
}

Graph parse_inline_edges(int n, const std::string& edges) {
    Graph g(n);
    std::size_t pos = 0;
    while (pos < edges.size()) {
        std::size_t comma = edges.find(',', pos);
        if (comma == std::string::npos) comma = edges.size();
        std::string item = edges.substr(pos, comma - pos);
        std::size_t dash = item.find('-');
        if (dash == std::string::npos)
            throw FormatError("inline edge \"" + item + "\": expected \"u-v\"");
        try {
            int u = std::stoi(item.substr(0, dash));
            int v = std::stoi(item.substr(dash + 1));
            g.add_edge(u, v);
        } catch (const std::invalid_argument&) {
            throw FormatError("inline edge \"" + item + "\": expected \"u-v\"");
        } catch (const std::out_of_range&) {
            throw FormatError("inline edge \"" + item + "\": label out of range");
        }
        pos = comma + 1;
    }
    return g;
}

Graph load_graph(const InputOptions& in) {
    if (in.n >= 0 || !in.edges.empty()) {
        if (in.n < 0) throw FormatError("--edges requires --n");
        return parse_inline_edges(in.n, in.edges);
    }
    if (in.path.empty()) throw FormatError("no input: give a file, -, or --edges with --n");

    std::string text;
    if (in.path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream file(in.path);
        if (!file) throw FormatError("cannot open " + in.path);
        std::ostringstream ss;
        ss << file.rdbuf();
        text = ss.str();
    }

    GraphFormat format = GraphFormat::Auto;
    if (in.format == "edgelist") format = GraphFormat::EdgeList;
    if (in.format == "graph6") format = GraphFormat::Graph6;
    return parse_graph(text, format);
}

std::string labels_to_line(const Fan& f, const std::vector<int>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        out += (i ? " " : "") + label_to_string(f.labels[ids[i]]);
    return out;
}

std::string wall_to_line(const Fan& f, const Wall& w) {
    std::string out = "base [" + labels_to_line(f, w.base) + "] neighbors [" +
                      label_to_string(f.labels[w.neighbors[0]]) + " " +
                      label_to_string(f.labels[w.neighbors[1]]) + "] coefficients [";
    for (std::size_t i = 0; i < w.coefficients.size(); ++i)
        out += (i ? " " : "") + std::to_string(w.coefficients[i]);
    out += "] number " + std::to_string(w.number);
    return out;
}

int run_classify(const InputOptions& in, bool json_out) {
    Graph g = load_graph(in);
    bool graph_fano = graph_fano_test(g);
    bool graph_weakfano = graph_weakfano_test(g);
    FanClass graph_class = classify_graph(g);
    std::optional<ForbiddenWitness> forbidden = find_forbidden(g);

    // The empty graph has no fan to build; the empty product is Fano.
    bool have_fan = g.node_count() >= 1;
    std::optional<Fan> fan;
    std::optional<Classification> cls;
    if (have_fan) {
        fan = build_fan(g);
        cls = classify_fan(*fan);
    }
    FanClass fan_class = have_fan ? cls->kind : FanClass::Fano;
    bool agree = fan_class == graph_class;

    if (json_out) {
        nlohmann::json out{{"n", g.node_count()},
                           {"edges", g.edge_count()},
                           {"graph6", to_graph6(g)},
                           {"fan_class", fan_class_name(fan_class)},
                           {"graph_class", fan_class_name(graph_class)},
                           {"graph_fano_test", graph_fano},
                           {"graph_weakfano_test", graph_weakfano},
                           {"agree", agree}};
        if (cls) {
            out["min_number"] = cls->min_number;
            out["witness_wall"] = wall_to_json(*fan, cls->witness);
        }
        if (forbidden)
            out["forbidden"] = {{"kind", pattern_name(forbidden->kind)},
                                {"nodes", forbidden->nodes.elements()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "graph: n=" << g.node_count() << " edges=" << g.edge_count()
                  << " graph6=" << to_graph6(g) << "\n";
        std::cout << "fan classification: " << fan_class_name(fan_class) << "\n";
        if (cls) {
            std::cout << "min wall number: " << cls->min_number << "\n";
            std::cout << "witness wall: " << wall_to_line(*fan, cls->witness) << "\n";
        }
        std::cout << "graph fano test: " << (graph_fano ? "true" : "false") << "\n";
        std::cout << "graph weak fano test: " << (graph_weakfano ? "true" : "false") << "\n";
        if (forbidden)
            std::cout << "forbidden subgraph: " << pattern_name(forbidden->kind) << " "
                      << to_string(forbidden->nodes) << "\n";
        std::cout << "graph classification: " << fan_class_name(graph_class) << "\n";
        std::cout << "oracle agreement: " << (agree ? "ok" : "MISMATCH") << "\n";
    }
    return agree ? 0 : 2;
}

int run_fan(const InputOptions& in, bool json_out) {
    Graph g = load_graph(in);
    Fan f = build_fan(g);
    if (json_out) {
        std::cout << fan_to_json(f).dump(2) << "\n";
        return 0;
    }
    std::cout << "n: " << g.node_count() << "\n";
    std::cout << "rays: " << f.labels.size() << " (" << f.tube_count << " tubes, "
              << g.node_count() << " bars)\n";
    for (std::size_t i = 0; i < f.labels.size(); ++i) {
        std::cout << "  " << label_to_string(f.labels[i]) << " -> (";
        for (std::size_t c = 0; c < f.rays[i].size(); ++c)
            std::cout << (c ? "," : "") << f.rays[i][c];
        std::cout << ")\n";
    }
    std::cout << "maximal cones: " << f.maximal_cones.size() << "\n";
    for (const std::vector<int>& cone : f.maximal_cones)
        std::cout << "  {" << labels_to_line(f, cone) << "}\n";
    return 0;
}

int run_walls(const InputOptions& in, bool json_out) {
    Graph g = load_graph(in);
    Fan f = build_fan(g);
    std::vector<Wall> walls = enumerate_walls(f);
    for (Wall& w : walls) solve_wall(f, w);
    if (json_out) {
        std::cout << walls_to_json(f, walls).dump(2) << "\n";
        return 0;
    }
    std::cout << "walls: " << walls.size() << "\n";
    for (const Wall& w : walls) std::cout << "  " << wall_to_line(f, w) << "\n";
    return 0;
}

int run_witness(const InputOptions& in) {
    Graph g = load_graph(in);
    if (g.node_count() == 0) {
        std::cout << "empty graph: Fano, no walls\n";
        return 0;
    }

    std::optional<ForbiddenWitness> forbidden = find_forbidden(g);
    NerveCase nerve_case;
    if (forbidden) {
        switch (forbidden->kind) {
            case PatternKind::CycleGe4: nerve_case = NerveCase::CycleGe4; break;
            case PatternKind::Diamond: nerve_case = NerveCase::Diamond; break;
            case PatternKind::Claw: nerve_case = NerveCase::Claw; break;
            default: nerve_case = NerveCase::CycleGe4; break;
        }
        std::cout << "forbidden subgraph: " << pattern_name(forbidden->kind) << " "
                  << to_string(forbidden->nodes) << "\n";
    } else if (!graph_fano_test(g)) {
        nerve_case = NerveCase::FanoComponent;
        std::cout << "component with >= 3 nodes: no forbidden subgraph, weak Fano\n";
    } else {
        Fan f = build_fan(g);
        Classification cls = classify_fan(f);
        std::cout << "graph is Fano: every wall number is positive\n";
        std::cout << "min wall: " << wall_to_line(f, cls.witness) << "\n";
        return 0;
    }

    NerveWitness nerve = witness_nerve(g, nerve_case);
    std::cout << "witness nerve base:";
    for (const FacetLabel& label : nerve.base) std::cout << " " << label_to_string(label);
    std::cout << "\n";
    std::cout << "expected neighbors: " << label_to_string(nerve.neighbor_j) << " "
              << label_to_string(nerve.neighbor_jp) << "\n";
    std::cout << "expected number: " << nerve.expected << "\n";

    Fan f = build_fan(g);
    std::optional<Wall> wall = find_wall(f, nerve.base);
    if (!wall) throw FanIntegrityError("witness nerve base is not a wall of the fan");
    std::cout << "wall: " << wall_to_line(f, *wall) << "\n";
    if (wall->number != nerve.expected)
        throw FanIntegrityError("wall number " + std::to_string(wall->number) +
                                " does not match expected " + std::to_string(nerve.expected));

    // When both neighbors are tubes meeting in a disconnected set, the
    // constructive extraction applies.
    const FacetLabel& a = f.labels[wall->neighbors[0]];
    const FacetLabel& b = f.labels[wall->neighbors[1]];
    if (a.is_tube() && b.is_tube()) {
        NodeSet inter = a.tube & b.tube;
        if (!inter.empty() && components_within(g, inter).size() >= 2) {
            ForbiddenWitness extracted = extract_cycle_or_diamond(g, a.tube, b.tube);
            std::cout << "extracted from neighbors: " << pattern_name(extracted.kind) << " "
                      << to_string(extracted.nodes) << "\n";
        }
    }
    return 0;
}

int run_crosscheck(const CrosscheckOptions& opts, const std::string& out_path) {
    std::ofstream census;
    std::ostream* census_out = nullptr;
    if (!out_path.empty()) {
        census.open(out_path);
        if (!census) throw FormatError("cannot open " + out_path + " for writing");
        census_out = &census;
    }

    CrosscheckReport rep = cross_validate(opts, census_out);
    for (int n = 1; n < static_cast<int>(rep.per_size.size()); ++n)
        std::cout << "n=" << n << ": " << rep.per_size[static_cast<std::size_t>(n)]
                  << " graphs\n";
    std::cout << "total " << rep.graphs << " graphs, " << rep.disagreements
              << " disagreements\n";
    std::cout << "buckets: Fano=" << rep.buckets[0]
              << " WeakFanoNotFano=" << rep.buckets[1]
              << " NotWeakFano=" << rep.buckets[2] << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph cubeahedron normal fans and their Fano classification"};
    app.require_subcommand(1);

    InputOptions in;
    bool json_out = false;

    CLI::App* classify = app.add_subcommand(
        "classify", "classify a graph via its fan and via the graph tests");
    add_input_options(classify, in);
    classify->add_flag("--json", json_out, "JSON output");

    CLI::App* fan = app.add_subcommand("fan", "dump rays and maximal cones");
    add_input_options(fan, in);
    fan->add_flag("--json", json_out, "JSON output");

    CLI::App* walls = app.add_subcommand("walls", "dump walls with intersection numbers");
    add_input_options(walls, in);
    walls->add_flag("--json", json_out, "JSON output");

    CLI::App* witness = app.add_subcommand(
        "witness", "pin a zero or negative wall to a structural feature of the graph");
    add_input_options(witness, in);

    CrosscheckOptions opts;
    std::string out_path;
    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "exhaustively compare fan and graph classifications");
    crosscheck->add_option("--max-nodes", opts.max_nodes, "largest node count")
        ->check(CLI::Range(1, 11));
    crosscheck->add_flag("--connected-only", opts.connected_only, "skip disconnected graphs");
    crosscheck->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::Range(1, 256));
    crosscheck->add_option("--out", out_path, "census JSONL path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(classify)) return run_classify(in, json_out);
        if (app.got_subcommand(fan)) return run_fan(in, json_out);
        if (app.got_subcommand(walls)) return run_walls(in, json_out);
        if (app.got_subcommand(witness)) return run_witness(in);
        if (app.got_subcommand(crosscheck)) return run_crosscheck(opts, out_path);
    } catch (const cubefan::FanIntegrityError& e) {
        std::cerr << "fan integrity error: " << e.what() << "\n";
        return 3;
    } catch (const cubefan::DisagreementError& e) {
        std::cerr << "disagreement: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
