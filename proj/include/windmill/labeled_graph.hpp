#pragma once

#include "windmill/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace windmill {

// Directed graph with edges labeled by words over a rose alphabet.  Arbitrary
// target graphs are handled by naming each target edge as a letter.
struct LabeledGraph {
    struct Edge {
        int src = 0;
        int dst = 0;
        Word label; // after subdivide_by_words: exactly one positive letter
    };
    int num_vertices = 0;
    int alphabet_size = 0;
    std::vector<Edge> edges;

    bool single_letter() const {
        for (const auto& e : edges)
            if (e.label.size() != 1 || e.label[0] < 0) return false;
        return true;
    }
};

// A dart is a directed traversal of an edge: (edge index, dir).
struct Dart {
    int edge = -1;
    int dir = +1; // +1 src->dst, -1 dst->src
    friend bool operator==(const Dart& a, const Dart& b) {
        return a.edge == b.edge && a.dir == b.dir;
    }
};
using DartPath = std::vector<Dart>;

Word path_label(const LabeledGraph& g, const DartPath& p);
DartPath path_reduce(DartPath p);

// Single letter per edge; empty labels become vertex identifications,
// trivial loops are discarded.  Component count and per-component b1 are
// preserved.
LabeledGraph subdivide_by_words(const LabeledGraph& g);

struct FoldEvent {
    Letter label = 0;     // signed label of the folded dart pair
    int edge1 = -1;       // original-edge representatives
    int edge2 = -1;
    bool rank_drop = false;
    int merged_v1 = -1;   // original far endpoints united (when !rank_drop)
    int merged_v2 = -1;
};

struct ComponentBetti {
    int representative = 0; // least original vertex id in the component
    int b1_before = 0;
    int b1_after = 0;
};

struct FoldResult {
    LabeledGraph folded;
    std::vector<FoldEvent> events;
    std::vector<ComponentBetti> betti;
    // quotient data against the input graph
    std::vector<int> vertex_class; // input vertex -> folded vertex
    std::vector<int> edge_class;   // input edge -> folded edge
    bool any_rank_drop() const {
        for (const auto& e : events)
            if (e.rank_drop) return true;
        return false;
    }
};

// Stallings folding with deterministic order (smallest vertex id, then
// smallest signed label).  Input must be single-letter; use
// subdivide_by_words first.
FoldResult fold_graph(const LabeledGraph& g);

struct InjectivityVerdict {
    bool injective = false;
    DartPath witness;     // nontrivial cycle of g with freely trivial image
    int witness_base = -1;
};

// Injective iff no folding event drops rank, component by component.
InjectivityVerdict is_pi1_injective(const LabeledGraph& g);

// Independent oracle: exhaustive search for a reduced cycle of length
// <= max_len whose image word freely reduces to the empty word.
std::optional<DartPath> short_kernel_witness(const LabeledGraph& g, int max_len);

int component_count(const LabeledGraph& g);
std::vector<int> component_of(const LabeledGraph& g);
std::vector<int> betti_per_component(const LabeledGraph& g);

// Canonical code of an immersed (folded) graph; equal codes iff isomorphic
// as labeled graphs.
std::string canonical_immersed_code(const LabeledGraph& g);

} // namespace windmill
