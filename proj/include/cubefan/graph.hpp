#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubefan/errors.hpp"
#include "cubefan/node_set.hpp"

namespace cubefan {

// Simple undirected graph on nodes 1..n. No loops, no multiple edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int node_count() const { return n_; }
    NodeSet nodes() const { return NodeSet::full(n_); }
    NodeSet neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    int edge_count() const;

    // Validates range and rejects self-loops; adding an edge twice is a no-op.
    void add_edge(int u, int v);

    // Union of neighborhoods of the members of s, minus s itself.
    NodeSet boundary(NodeSet s) const;

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<NodeSet> adj_; // 1-based, adj_[0] unused
};

enum class GraphFormat { Auto, EdgeList, Graph6 };

// Edge-list format: first line "n", then lines "u v", '#' starts a comment.
Graph parse_edge_list(std::string_view text);

// One graph in printable-ASCII graph6 encoding.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// Auto mode dispatches on the first non-blank byte: digits and '#' mean
// edge list, anything else graph6.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

// True iff s is nonempty and the induced subgraph on s is connected.
bool is_connected(const Graph& g, NodeSet s);

// Maximal connected node sets, sorted by least element.
std::vector<NodeSet> connected_components(const Graph& g);

// Connected components of the induced subgraph on s, sorted by least element.
std::vector<NodeSet> components_within(const Graph& g, NodeSet s);

// All nonempty connected induced node subsets, sorted by (size, lex).
// Grown by neighbor extension from singletons, never by filtering 2^n subsets.
std::vector<NodeSet> enumerate_tubes(const Graph& g);

// True iff every connected component has at most two nodes.
bool graph_fano_test(const Graph& g);

} // namespace cubefan
