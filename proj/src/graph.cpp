#include "cubefan/graph.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace cubefan {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
    if (n < 0) throw FormatError("node count must be nonnegative");
    if (n > NodeSet::kMaxNodes)
        throw CapacityError("node count " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(NodeSet::kMaxNodes));
}

int Graph::edge_count() const {
    int deg = 0;
    for (int v = 1; v <= n_; ++v) deg += adj_[v].size();
    return deg / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw FormatError("node label out of range 1.." + std::to_string(n_));
    if (u == v) throw FormatError("self-loop at node " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

NodeSet Graph::boundary(NodeSet s) const {
    NodeSet out;
    for (int v : s) out |= adj_[v];
    return out - s;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n, 1);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

namespace {

bool parse_int(std::string_view s, std::size_t& pos, long& out) {
    std::size_t start = pos;
    long val = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        val = val * 10 + (s[pos] - '0');
        if (val > 1'000'000) return false;
        ++pos;
    }
    if (pos == start) return false;
    out = val;
    return true;
}

void skip_spaces(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::size_t pos = 0;
    int lineno = 0;
    bool have_header = false;
    Graph g;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++lineno;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::size_t cur = 0;
        skip_spaces(line, cur);
        if (cur < line.size() && line[cur] != '\r') {
            if (!have_header) {
                long n = 0;
                if (!parse_int(line, cur, n))
                    throw FormatError("line " + std::to_string(lineno) +
                                      ": expected node count");
                skip_spaces(line, cur);
                if (cur < line.size() && line[cur] != '\r')
                    throw FormatError("line " + std::to_string(lineno) +
                                      ": trailing characters after node count");
                g = Graph(static_cast<int>(n));
                have_header = true;
            } else {
                long u = 0, v = 0;
                if (!parse_int(line, cur, u))
                    throw FormatError("line " + std::to_string(lineno) + ": expected edge \"u v\"");
                skip_spaces(line, cur);
                if (!parse_int(line, cur, v))
                    throw FormatError("line " + std::to_string(lineno) + ": expected edge \"u v\"");
                skip_spaces(line, cur);
                if (cur < line.size() && line[cur] != '\r')
                    throw FormatError("line " + std::to_string(lineno) + ": trailing characters");
                try {
                    g.add_edge(static_cast<int>(u), static_cast<int>(v));
                } catch (const FormatError& e) {
                    throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
                }
            }
        }
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    if (!have_header) throw FormatError("empty input: missing node-count header");
    return g;
}

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw FormatError("graph6: empty input");

    std::size_t pos = 0;
    long n = 0;
    if (line[0] == '~') {
        // Long forms: "~" + 3 bytes (n < 2^18), or "~~" + 6 bytes.
        if (line.size() >= 2 && line[1] == '~') {
            if (line.size() < 8) throw FormatError("graph6: truncated node count");
            n = 0;
            for (int i = 2; i < 8; ++i) {
                int b = line[i] - 63;
                if (b < 0 || b > 63)
                    throw FormatError("graph6: byte out of range at offset " + std::to_string(i));
                n = n * 64 + b;
            }
            pos = 8;
        } else {
            if (line.size() < 4) throw FormatError("graph6: truncated node count");
            n = 0;
            for (int i = 1; i < 4; ++i) {
                int b = line[i] - 63;
                if (b < 0 || b > 63)
                    throw FormatError("graph6: byte out of range at offset " + std::to_string(i));
                n = n * 64 + b;
            }
            pos = 4;
        }
    } else {
        int b = line[0] - 63;
        if (b < 0 || b > 62) throw FormatError("graph6: invalid node-count byte at offset 0");
        n = b;
        pos = 1;
    }
    if (n > NodeSet::kMaxNodes)
        throw CapacityError("graph6: node count " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(NodeSet::kMaxNodes));

    Graph g(static_cast<int>(n));
    long pairs = n * (n - 1) / 2;
    long nbytes = (pairs + 5) / 6;
    if (static_cast<long>(line.size() - pos) != nbytes)
        throw FormatError("graph6: expected " + std::to_string(nbytes) + " edge bytes, got " +
                          std::to_string(line.size() - pos));

    long t = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i, ++t) {
            int b = line[pos + t / 6] - 63;
            if (b < 0 || b > 63)
                throw FormatError("graph6: byte out of range at offset " +
                                  std::to_string(pos + t / 6));
            if ((b >> (5 - t % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.node_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        out += static_cast<char>((n >> 12) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    }
    int acc = 0, nbits = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::EdgeList) return parse_edge_list(text);
    if (format == GraphFormat::Graph6) return parse_graph6(text);
    std::size_t pos = 0;
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
        ++pos;
    if (pos == text.size()) throw FormatError("empty input");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '#') return parse_edge_list(text);
    return parse_graph6(text.substr(pos));
}

bool is_connected(const Graph& g, NodeSet s) {
    if (s.empty()) return false;
    NodeSet reached = NodeSet::single(s.least());
    NodeSet frontier = reached;
    while (!frontier.empty()) {
        NodeSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next = (next & s) - reached;
        reached |= next;
        frontier = next;
    }
    return reached == s;
}

std::vector<NodeSet> components_within(const Graph& g, NodeSet s) {
    std::vector<NodeSet> out;
    NodeSet rest = s;
    while (!rest.empty()) {
        NodeSet comp = NodeSet::single(rest.least());
        NodeSet frontier = comp;
        while (!frontier.empty()) {
            NodeSet next;
            for (int v : frontier) next |= g.neighbors(v);
            next = (next & s) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

std::vector<NodeSet> connected_components(const Graph& g) {
    return components_within(g, g.nodes());
}

std::vector<NodeSet> enumerate_tubes(const Graph& g) {
    std::vector<NodeSet> out;
    std::unordered_set<std::uint64_t> seen;
    std::vector<NodeSet> stack;
    for (int v = 1; v <= g.node_count(); ++v) {
        NodeSet s = NodeSet::single(v);
        seen.insert(s.raw());
        stack.push_back(s);
        out.push_back(s);
    }
    while (!stack.empty()) {
        NodeSet s = stack.back();
        stack.pop_back();
        for (int v : g.boundary(s)) {
            NodeSet t = s;
            t.insert(v);
            if (seen.insert(t.raw()).second) {
                stack.push_back(t);
                out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

bool graph_fano_test(const Graph& g) {
    for (const NodeSet& comp : connected_components(g))
        if (comp.size() > 2) return false;
    return true;
}

} // namespace cubefan
