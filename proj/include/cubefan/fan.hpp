#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubefan/graph.hpp"
#include "cubefan/int_linalg.hpp"

namespace cubefan {

// A facet of the graph cubeahedron: a tube I (connected induced node set) or
// a bar, the cube facet opposite facet i.
struct FacetLabel {
    enum class Kind { Tube, Bar };

    Kind kind = Kind::Tube;
    NodeSet tube; // Kind::Tube
    int bar = 0;  // Kind::Bar

    static FacetLabel make_tube(NodeSet s) { return FacetLabel{Kind::Tube, s, 0}; }
    static FacetLabel make_bar(int v) { return FacetLabel{Kind::Bar, NodeSet(), v}; }
    bool is_tube() const { return kind == Kind::Tube; }
    bool operator==(const FacetLabel&) const = default;
};

// Canonical order: tubes by (size, lex), then bars by node index.
bool label_less(const FacetLabel& a, const FacetLabel& b);

// "{1,2}" for tubes, "~3" for bars.
std::string label_to_string(const FacetLabel& label);

using LatticeVector = std::vector<std::int64_t>;

// Tube I -> sum of basis vectors over I; bar i -> -e_i. Entries in {-1,0,1}.
LatticeVector ray_vector(const FacetLabel& label, int n);

// Facet intersection relation: two tubes are compatible iff nested or with
// disconnected union; a tube and a bar iff the bar's node avoids the tube;
// two bars always.
bool compatible(const FacetLabel& a, const FacetLabel& b, const Graph& g);

// The normal fan of the graph cubeahedron: rays indexed by facet labels,
// maximal cones as size-n sets of ray indices.
struct Fan {
    Graph graph;
    std::vector<FacetLabel> labels;               // canonical order, bars last
    std::vector<LatticeVector> rays;              // parallel to labels
    std::vector<std::vector<int>> maximal_cones;  // ascending ray indices, each size n

    int tube_count = 0;

    // Index of a label among the rays, -1 if absent.
    int label_index(const FacetLabel& label) const;

private:
    friend Fan build_fan(const Graph& g);
    std::unordered_map<std::uint64_t, int> tube_index_;
};

// All maximal pairwise-compatible label sets. Pivoting maximal-clique
// enumeration over the compatibility graph with bit-mask adjacency; each
// result must have exactly n elements or the compatibility predicate is
// broken.
std::vector<std::vector<FacetLabel>> maximal_nerve_sets(const Graph& g);

struct VerifyReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

// Structural checks: (a) every maximal cone unimodular, (b) every maximal
// cone of size n, (c) every wall shared by exactly two maximal cones,
// (d) sampled pairwise-compatible sets extend to enumerated cones.
VerifyReport verify_fan(const Fan& f);

// Generator matrix of a cone, columns in label order.
IntMatrix cone_matrix(const Fan& f, const std::vector<int>& cone);

// Assembles rays and maximal cones, then runs verify_fan; throws
// FanIntegrityError when a check fails. Requires n >= 1.
Fan build_fan(const Graph& g);

} // namespace cubefan
