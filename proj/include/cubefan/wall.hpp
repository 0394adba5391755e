#pragma once

#include <array>
#include <optional>

#include "cubefan/fan.hpp"
#include "cubefan/forbidden.hpp"

namespace cubefan {

// An (n-1)-dimensional cone of the fan together with the two rays completing
// it to maximal cones, the integer relation coefficients and the
// anticanonical intersection number of its torus-invariant curve.
struct Wall {
    std::vector<int> base;            // n-1 ray indices, ascending
    std::array<int, 2> neighbors{};   // completing ray indices, ascending
    std::vector<std::int64_t> coefficients; // aligned with base; empty until solved
    std::int64_t number = 0;          // 2 + sum of coefficients

    bool solved = false;
};

// All walls, each once, sorted by base. Requires a verified fan; a base
// completable by anything but exactly two rays raises FanIntegrityError.
std::vector<Wall> enumerate_walls(const Fan& f);

// Unique integers a_1..a_{n-1} with e_J + e_J' + sum a_i e_{I_i} = 0, found by
// expressing e_J' in the unimodular basis {e_I_1,..,e_I_{n-1}, e_J} with exact
// integer elimination. The e_J coordinate must come out -1.
std::vector<std::int64_t> wall_relation(const Fan& f, const Wall& w);

// 2 + sum of the relation coefficients.
std::int64_t intersection_number(const std::vector<std::int64_t>& coefficients);

// Fills coefficients and number.
void solve_wall(const Fan& f, Wall& w);

// Wall whose base consists of the given n-1 labels, if present in the fan.
std::optional<Wall> find_wall(const Fan& f, const std::vector<FacetLabel>& base);

enum class FanClass { Fano, WeakFanoNotFano, NotWeakFano };

const char* fan_class_name(FanClass c);

struct Classification {
    FanClass kind = FanClass::Fano;
    std::int64_t min_number = 0; // over all walls
    Wall witness;                // a wall attaining the minimum
    long long wall_count = 0;
};

enum class ClassifyMode {
    Full,         // scan every wall; witness attains the true minimum
    FastNegative, // stop at the first number <= -1
};

// Fano iff every wall number >= 1, weak Fano iff >= 0.
Classification classify_fan(const Fan& f, ClassifyMode mode = ClassifyMode::Full);

enum class NerveCase { FanoComponent, CycleGe4, Diamond, Claw };

// Explicit wall base pinned to a structural feature of the graph, with the
// intersection number it forces.
struct NerveWitness {
    std::vector<FacetLabel> base; // n-1 labels
    FacetLabel neighbor_j;        // the two rays completing the wall
    FacetLabel neighbor_jp;
    std::int64_t expected = 0;    // 0 for FanoComponent, -1 otherwise
    NodeSet pattern_nodes;        // the feature the base is built on
};

// FanoComponent needs a connected component with >= 3 nodes and yields a wall
// of number 0; the other cases need the induced pattern and yield -1.
// Throws std::invalid_argument when the configuration is absent.
NerveWitness witness_nerve(const Graph& g, NerveCase c);

} // namespace cubefan
