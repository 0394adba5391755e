#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cubefan/graph.hpp"
#include "cubefan/wall.hpp"

namespace cubefan {

// Graph-side bucket from the two combinatorial tests.
FanClass classify_graph(const Graph& g);

struct CensusRecord {
    std::string graph6;
    int n = 0;
    int edges = 0;
    int tube_count = 0;
    long long cone_count = 0;
    long long wall_count = 0;
    std::int64_t min_number = 0;
    FanClass fan_class = FanClass::Fano;
    FanClass graph_class = FanClass::Fano;
    bool agree = true;
};

// Builds the fan, classifies it, classifies the graph, compares.
CensusRecord census_record(const Graph& g);

// 2^(n(n-1)/2); rejects counts that do not fit the mask counter.
std::uint64_t labeled_graph_count(int n);

// Graph whose edge set is the bit pattern of mask over pairs (i<j) in
// column-major order, the same pair order graph6 uses.
Graph graph_from_mask(int n, std::uint64_t mask);

// All labeled graphs on n nodes in mask order, optionally only the
// connected ones.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn,
                      bool connected_only = false);

struct CrosscheckOptions {
    int max_nodes = 4;
    bool connected_only = false;
    int jobs = 1;
};

struct CrosscheckReport {
    long long graphs = 0;
    long long disagreements = 0;
    std::array<long long, 3> buckets{}; // indexed by FanClass value
    std::vector<long long> per_size;    // [0] unused, [k] = graphs processed at n=k
};

// Classifies every labeled graph with 1 <= n <= max_nodes both ways and
// asserts agreement; the first mismatch in mask order raises
// DisagreementError naming the graph6 string and both classes. Work is
// sharded over jobs workers by edge-mask range; output (and the optional
// JSON-lines census stream) is merged in mask order, so it does not depend
// on the worker count.
CrosscheckReport cross_validate(const CrosscheckOptions& opts,
                                std::ostream* census_out = nullptr);

} // namespace cubefan
