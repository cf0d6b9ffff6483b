#pragma once

#include "windmill/presentation.hpp"
#include "windmill/word.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace windmill {

// Combinatorial 2-complex.  Directed edges come in implicit inverse pairs:
// a boundary word over edges uses the Letter encoding (+/- edge id).
struct TwoComplex {
    struct EdgeCell {
        int src = 0;
        int dst = 0;
        std::string name; // generator name for standard complexes
    };
    struct FaceCell {
        Word boundary;    // closed immersed edge path (cyclically reduced)
        Word period;      // boundary = period^exponent
        int exponent = 1;
    };

    int num_vertices = 0;
    std::vector<EdgeCell> edges;
    std::vector<FaceCell> faces;
    bool from_presentation = false; // one vertex, edge i <-> generator i

    int euler_characteristic() const {
        return num_vertices - static_cast<int>(edges.size()) +
               static_cast<int>(faces.size());
    }
    int edge_src(Letter dart) const {
        const auto& e = edges[letter_id(dart)];
        return dart > 0 ? e.src : e.dst;
    }
    int edge_dst(Letter dart) const {
        const auto& e = edges[letter_id(dart)];
        return dart > 0 ? e.dst : e.src;
    }
    std::vector<std::string> edge_names() const;
    void validate() const; // throws std::invalid_argument on broken invariants
};

TwoComplex build_standard_complex(const Presentation& p);

// Faces grouped by equality of boundary cycles (orientation preserving, any
// starting rotation).  Result: face -> class id, classes numbered densely.
struct RedundancyClasses {
    std::vector<int> class_of;
    int num_classes = 0;
    std::vector<std::vector<int>> members;
};
RedundancyClasses find_redundant_faces(const TwoComplex& x);

// Closed sub-1-complex of the 1-skeleton.
struct SubOneComplex {
    std::vector<bool> vertices;
    std::vector<bool> edges;

    static SubOneComplex closure_of_edges(const TwoComplex& x, const std::vector<int>& edge_ids);
    bool closed(const TwoComplex& x) const;
    bool empty() const;
};

// Line-based complex file: "v <id>", "e <id> <src> <dst>",
// "f <id> <signed edge list>".  Ids are arbitrary tokens, mapped densely in
// order of first appearance.
TwoComplex parse_complex_file(std::istream& in);
TwoComplex parse_complex_text(const std::string& text);

} // namespace windmill
