#pragma once

#include "windmill/labeled_graph.hpp"
#include "windmill/rational.hpp"
#include "windmill/two_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace windmill {

enum class SeparatorMode { BoundaryNeighborhood, GeneratorGraph, Loaded };

// A point of the separator graph on the 1-skeleton.  Construction-produced
// points sit on edge interiors; loaded chord data may also host points at
// vertices of X.
struct GammaPoint {
    bool on_edge = true;
    int edge = -1;
    Rational offset;   // along the edge direction, in (0,1)
    int end = -1;      // 0 = guards the tail end, 1 = the head end
    int vertex = -1;   // host vertex when !on_edge
};

struct ChordEnd {
    bool at_corner = false;
    int side = -1;     // boundary side index of the face
    Rational pos;      // position along the side, in (0,1)
    int corner = -1;
    int point = -1;    // GammaPoint id
    Rational circle(int length) const {
        return at_corner ? Rational(corner % length) : Rational(side) + pos;
    }
};

enum class ChordKind { Block, Connector };

struct Chord {
    ChordEnd end1, end2;
    Word label;                      // the A-path the chord runs parallel to
    ChordKind kind = ChordKind::Block;
    // The Y side is the boundary arc from end1 counterclockwise to end2.
    // Constructions always orient ends this way; loaded data is normalized.
};

struct ChordDiagram {
    int face = -1;
    int length = 0;
    std::vector<Chord> chords;
    std::vector<int> isolated_corners; // corners carrying isolated points of the separator
    char no_chord_label = 0;           // 'Y' or 'Z' when the face has no chords
    int block_chords() const {
        int n = 0;
        for (const auto& c : chords)
            if (c.kind == ChordKind::Block) ++n;
        return n;
    }
};

struct SeparatorGraph {
    SeparatorMode mode = SeparatorMode::Loaded;
    TwoComplex x;
    std::vector<bool> a_edges;     // edges on the A side
    std::vector<bool> a_vertices;  // closure
    std::vector<GammaPoint> points;
    std::vector<int> point_class;  // abstract identity (dense class ids)
    int num_classes = 0;
    std::vector<ChordDiagram> per_face;
    std::vector<int> degenerate_faces; // ðA: all-A or all-B boundaries

    // X¹ side structure for Z-membership queries
    struct EdgeSides {
        std::vector<int> points;        // sorted by offset
        std::vector<char> segment_side; // size points+1, 'Y'/'Z'
    };
    std::vector<EdgeSides> edge_sides;
    std::vector<char> vertex_side;

    int chord_gid(int face, int idx) const;
    int total_chords() const;
    const Chord& chord_by_gid(int gid) const;
    int face_of_gid(int gid) const;

    // X-vertex a class maps to under the retraction onto A.
    int class_target_vertex(int cls) const;
};

// Separator graph of the boundary of a regular neighborhood of a closed
// sub-1-complex a.
SeparatorGraph build_boundary_graph(const TwoComplex& x, const SubOneComplex& a);

// Generator graph: chords parallel to maximal A-blocks of each face
// boundary, endpoint identities glued through the B-edge ends.
SeparatorGraph build_generator_graph(const TwoComplex& x, const std::vector<bool>& edge_in_a);

// Word-labeled abstract graph: vertices = point classes, edges = block
// chords.  Labels are words over the edges of X restricted to A.
struct AbstractSeparator {
    LabeledGraph graph;                  // word labels, not subdivided
    std::vector<int> vertex_class;       // graph vertex -> separator class id
    std::vector<int> edge_gid;           // graph edge -> chord gid
};
AbstractSeparator abstract_separator(const SeparatorGraph& sep, bool include_isolated_classes);

// Planar region structure of one face disc cut by its chords.
struct FaceRegions {
    struct Interval {
        Rational from, to; // cyclic when from > to
        int region = 0;
    };
    std::vector<Interval> intervals;
    std::vector<std::pair<int, int>> chord_sides; // per chord: (inside, outside)
    int num_regions = 1;
    std::vector<int> merged;  // region -> representative after connector merging
    std::vector<char> label;  // per merged representative: 'Y'/'Z'/0
    bool consistent = true;
    std::string issue;
    int region_at(const Rational& pos) const;
    int z_region_count() const;
};
FaceRegions face_regions(const ChordDiagram& cd);

struct WindmillFaceVerdict {
    int face = -1;
    int block_chords = 0;
    int z_regions = 0;
    bool pass = false;
    std::string reason;
};
struct WindmillReport {
    std::vector<WindmillFaceVerdict> faces;
    bool overall = false;
};
WindmillReport check_windmill(const SeparatorGraph& sep);

struct EssenceResult {
    LabeledGraph graph;              // subdivided, ready to fold
    LabeledGraph word_graph;         // one edge per representative chord
    std::vector<int> chord_class;    // gid -> class, -1 for connectors
    std::vector<int> representative; // class -> gid
    std::vector<int> vertex_class;   // word_graph vertex -> separator class
    int num_classes = 0;
};
// Quotient by face redundancy and proper-power rotation; one representative
// chord per class.  Requires rotation-invariant chord diagrams on faces with
// exponent > 1.
EssenceResult compute_essence(const SeparatorGraph& sep);

enum class SplitVerdict { Certified, Refuted, Unknown };
struct SplittingCertificate {
    SplitVerdict verdict = SplitVerdict::Unknown;
    bool windmill = false;
    bool essence_injective = false;
    DartPath refutation; // essence-graph cycle with trivial image
    std::string detail;
};
// route_certified: verdict of an A -> X injectivity route from the
// hypotheses module.
SplittingCertificate certify_splitting_windmill(const SeparatorGraph& sep, bool route_certified);

// Overlay file lines: "gp <edge> <num>/<den>" and
// "chord <face> <end> <end> <yside>", ends as "<side>:<num>/<den>" or
// "c<corner>", yside in {ccw, cw} giving the side of end1->end2 that is Y.
SeparatorGraph parse_separator_overlay(const TwoComplex& x, const std::string& text);

} // namespace windmill
