#pragma once

#include <optional>

#include "cubefan/graph.hpp"

namespace cubefan {

enum class PatternKind { CycleGe4, Diamond, Claw };

const char* pattern_name(PatternKind kind);

struct ForbiddenWitness {
    PatternKind kind;
    NodeSet nodes;
};

// Checks that `w.nodes` really induces the claimed pattern in g, by degree
// sequence, edge count and connectivity.
bool witness_checks(const Graph& g, const ForbiddenWitness& w);

// No induced cycle of length >= 4. Maximum-cardinality search followed by a
// perfect-elimination-ordering check.
bool is_chordal(const Graph& g);

// Lexicographically smallest node set inducing the given pattern, if any.
std::optional<NodeSet> find_pattern(const Graph& g, PatternKind kind);

// Smallest induced C>=4 / diamond / claw, by node count then lexicographic.
// Long cycles are reached only when the 4-node scan is empty and the graph
// fails the chordality test.
std::optional<ForbiddenWitness> find_forbidden(const Graph& g);

// True iff find_forbidden(g) is empty.
bool graph_weakfano_test(const Graph& g);

// Given tubes j1, j2 whose intersection is nonempty and disconnected,
// constructs an induced cycle with >= 4 nodes or an induced diamond:
// joins paths through the two tubes into a simple cycle, removes arc chords
// by shortcutting, then resolves the remaining cross chords case by case.
// Throws std::invalid_argument if the preconditions fail.
ForbiddenWitness extract_cycle_or_diamond(const Graph& g, NodeSet j1, NodeSet j2);

} // namespace cubefan
