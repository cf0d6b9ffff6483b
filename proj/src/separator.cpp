#include "windmill/separator.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace windmill {

namespace {

constexpr Rational near_start_pos() { return Rational(1, 3); }
constexpr Rational near_end_pos() { return Rational(2, 3); }

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        p[b] = a;
    }
};

// edge offset of a point sitting at side position `pos` of dart d
Rational side_pos_to_edge_offset(Letter d, const Rational& pos) {
    return d > 0 ? pos : Rational(1) - pos;
}

} // namespace

int SeparatorGraph::chord_gid(int face, int idx) const {
    int off = 0;
    for (int f = 0; f < face; ++f) off += static_cast<int>(per_face[f].chords.size());
    return off + idx;
}

int SeparatorGraph::total_chords() const {
    int n = 0;
    for (const auto& cd : per_face) n += static_cast<int>(cd.chords.size());
    return n;
}

const Chord& SeparatorGraph::chord_by_gid(int gid) const {
    for (const auto& cd : per_face) {
        if (gid < static_cast<int>(cd.chords.size())) return cd.chords[gid];
        gid -= static_cast<int>(cd.chords.size());
    }
    throw std::out_of_range("chord gid");
}

int SeparatorGraph::face_of_gid(int gid) const {
    for (std::size_t f = 0; f < per_face.size(); ++f) {
        if (gid < static_cast<int>(per_face[f].chords.size())) return static_cast<int>(f);
        gid -= static_cast<int>(per_face[f].chords.size());
    }
    throw std::out_of_range("chord gid");
}

int SeparatorGraph::class_target_vertex(int cls) const {
    for (std::size_t p = 0; p < points.size(); ++p) {
        if (point_class[p] != cls) continue;
        const auto& gp = points[p];
        if (!gp.on_edge) return gp.vertex;
        return gp.end == 0 ? x.edges[gp.edge].src : x.edges[gp.edge].dst;
    }
    return -1;
}

namespace {

struct PointTable {
    std::map<std::pair<int, int>, int> by_edge_end; // (edge, end) -> point id
    std::vector<GammaPoint>* points;

    int get(int edge, int end) {
        auto key = std::make_pair(edge, end);
        auto it = by_edge_end.find(key);
        if (it != by_edge_end.end()) return it->second;
        GammaPoint gp;
        gp.on_edge = true;
        gp.edge = edge;
        gp.end = end;
        gp.offset = end == 0 ? Rational(1, 3) : Rational(2, 3);
        int id = static_cast<int>(points->size());
        points->push_back(gp);
        by_edge_end.emplace(key, id);
        return id;
    }
};

// point at the end of side dart d where the side terminates
int point_at_side_end(PointTable& pt, Letter d) {
    return d > 0 ? pt.get(letter_id(d), 1) : pt.get(letter_id(d), 0);
}
int point_at_side_start(PointTable& pt, Letter d) {
    return d > 0 ? pt.get(letter_id(d), 0) : pt.get(letter_id(d), 1);
}

void fill_side_tables(SeparatorGraph& sep) {
    const auto& x = sep.x;
    sep.edge_sides.assign(x.edges.size(), {});
    for (std::size_t p = 0; p < sep.points.size(); ++p)
        if (sep.points[p].on_edge) sep.edge_sides[sep.points[p].edge].points.push_back(static_cast<int>(p));
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        auto& es = sep.edge_sides[e];
        std::sort(es.points.begin(), es.points.end(), [&](int a, int b) {
            return sep.points[a].offset < sep.points[b].offset;
        });
        es.segment_side.assign(es.points.size() + 1, 'Z');
        if (es.points.empty()) {
            es.segment_side[0] = sep.a_edges[e] ? 'Y' : 'Z';
        } else {
            if (sep.points[es.points.front()].end == 0) es.segment_side.front() = 'Y';
            if (sep.points[es.points.back()].end == 1) es.segment_side.back() = 'Y';
        }
    }
    sep.vertex_side.assign(x.num_vertices, 'Z');
    for (int v = 0; v < x.num_vertices; ++v)
        if (sep.a_vertices[v]) sep.vertex_side[v] = 'Y';
}

} // namespace

SeparatorGraph build_boundary_graph(const TwoComplex& x, const SubOneComplex& a) {
    if (!a.closed(x))
        throw std::invalid_argument("build_boundary_graph: a is not a closed subcomplex");
    SeparatorGraph sep;
    sep.mode = SeparatorMode::BoundaryNeighborhood;
    sep.x = x;
    sep.a_edges = a.edges;
    sep.a_vertices = a.vertices;

    PointTable pt{{}, &sep.points};
    // every non-A edge end lying in A carries a point of the neighborhood
    // boundary, whether or not a face passes it
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        if (a.edges[e]) continue;
        if (a.vertices[x.edges[e].src]) pt.get(static_cast<int>(e), 0);
        if (a.vertices[x.edges[e].dst]) pt.get(static_cast<int>(e), 1);
    }

    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        const Word& w = x.faces[f].boundary;
        const int L = static_cast<int>(w.size());
        ChordDiagram cd;
        cd.face = static_cast<int>(f);
        cd.length = L;

        auto corner_in_a = [&](int i) { return a.vertices[x.edge_src(w[(i % L + L) % L])]; };
        auto side_in_a = [&](int i) { return a.edges[letter_id(w[(i % L + L) % L])]; };

        bool all = true, none = true;
        for (int i = 0; i < L; ++i) {
            if (side_in_a(i) || corner_in_a(i)) none = false;
            if (!side_in_a(i) || !corner_in_a(i)) all = false;
        }
        if (all) {
            cd.no_chord_label = 'Y';
            sep.per_face.push_back(std::move(cd));
            continue;
        }
        if (none) {
            cd.no_chord_label = 'Z';
            sep.per_face.push_back(std::move(cd));
            continue;
        }

        // maximal cyclic runs of A-material; runs begin and end at corners
        std::vector<std::pair<int, int>> runs; // (start corner, end corner), end >= start
        for (int c = 0; c < L; ++c) {
            if (!corner_in_a(c)) continue;
            if (side_in_a(c - 1) && corner_in_a(c - 1)) continue; // not a run start
            int e = c;
            while (side_in_a(e) && corner_in_a(e + 1) && e - c < L) ++e;
            runs.push_back({c, e});
        }
        for (auto [cs, ce] : runs) {
            Chord ch;
            Letter prev = w[((cs - 1) % L + L) % L];
            Letter next = w[ce % L];
            ch.end1.side = ((cs - 1) % L + L) % L;
            ch.end1.pos = near_end_pos();
            ch.end1.point = point_at_side_end(pt, prev);
            ch.end2.side = ce % L;
            ch.end2.pos = near_start_pos();
            ch.end2.point = point_at_side_start(pt, next);
            for (int s = cs; s < ce; ++s) ch.label.push_back(w[s % L]);
            ch.kind = ChordKind::Block;
            cd.chords.push_back(std::move(ch));
        }
        sep.per_face.push_back(std::move(cd));
    }

    sep.point_class.resize(sep.points.size());
    std::iota(sep.point_class.begin(), sep.point_class.end(), 0);
    sep.num_classes = static_cast<int>(sep.points.size());
    fill_side_tables(sep);
    return sep;
}

SeparatorGraph build_generator_graph(const TwoComplex& x, const std::vector<bool>& edge_in_a) {
    if (edge_in_a.size() != x.edges.size())
        throw std::invalid_argument("build_generator_graph: split size mismatch");
    bool any_a = false, any_b = false;
    for (bool b : edge_in_a) (b ? any_a : any_b) = true;
    if (!any_a || !any_b)
        throw std::invalid_argument("build_generator_graph: both sides must be nonempty");

    SeparatorGraph sep;
    sep.mode = SeparatorMode::GeneratorGraph;
    sep.x = x;
    sep.a_edges = edge_in_a;
    sep.a_vertices.assign(x.num_vertices, false);
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        if (edge_in_a[e]) {
            sep.a_vertices[x.edges[e].src] = true;
            sep.a_vertices[x.edges[e].dst] = true;
        }
    }

    PointTable pt{{}, &sep.points};
    std::vector<std::pair<int, int>> chain_merges; // point pairs

    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        const Word& w = x.faces[f].boundary;
        const int L = static_cast<int>(w.size());
        ChordDiagram cd;
        cd.face = static_cast<int>(f);
        cd.length = L;

        auto in_a = [&](int i) { return edge_in_a[letter_id(w[(i % L + L) % L])]; };
        bool all = true, none = true;
        for (int i = 0; i < L; ++i) (in_a(i) ? none : all) = false;
        if (all || none) {
            cd.no_chord_label = all ? 'Y' : 'Z';
            sep.degenerate_faces.push_back(static_cast<int>(f));
            sep.per_face.push_back(std::move(cd));
            continue;
        }

        for (int c = 0; c < L; ++c) {
            bool pa = in_a(c - 1), na = in_a(c);
            if (!pa && !na) {
                // B-B corner: the separator passes the corner; a short
                // connector arc keeps it continuous across this face
                Letter prev = w[((c - 1) % L + L) % L];
                Letter next = w[c];
                Chord ch;
                ch.kind = ChordKind::Connector;
                ch.end1.side = ((c - 1) % L + L) % L;
                ch.end1.pos = near_end_pos();
                ch.end1.point = point_at_side_end(pt, prev);
                ch.end2.side = c;
                ch.end2.pos = near_start_pos();
                ch.end2.point = point_at_side_start(pt, next);
                chain_merges.push_back({ch.end1.point, ch.end2.point});
                cd.chords.push_back(std::move(ch));
            }
        }
        // one block chord per maximal A-run
        for (int i = 0; i < L; ++i) {
            if (!in_a(i) || in_a(i - 1)) continue;
            int j = i;
            while (in_a(j + 1) && j - i < L) ++j;
            Chord ch;
            Letter prev = w[((i - 1) % L + L) % L];
            Letter next = w[(j + 1) % L];
            ch.end1.side = ((i - 1) % L + L) % L;
            ch.end1.pos = near_end_pos();
            ch.end1.point = point_at_side_end(pt, prev);
            ch.end2.side = (j + 1) % L;
            ch.end2.pos = near_start_pos();
            ch.end2.point = point_at_side_start(pt, next);
            for (int s = i; s <= j; ++s) ch.label.push_back(w[s % L]);
            ch.kind = ChordKind::Block;
            cd.chords.push_back(std::move(ch));
        }
        sep.per_face.push_back(std::move(cd));
    }

    UF uf(static_cast<int>(sep.points.size()));
    for (auto [a, b] : chain_merges) uf.unite(a, b);
    sep.point_class.assign(sep.points.size(), -1);
    int next = 0;
    for (std::size_t p = 0; p < sep.points.size(); ++p) {
        int r = uf.find(static_cast<int>(p));
        if (sep.point_class[r] < 0) sep.point_class[r] = next++;
        sep.point_class[p] = sep.point_class[r];
    }
    sep.num_classes = next;
    fill_side_tables(sep);
    return sep;
}

AbstractSeparator abstract_separator(const SeparatorGraph& sep, bool include_isolated_classes) {
    AbstractSeparator out;
    out.graph.alphabet_size = static_cast<int>(sep.x.edges.size());
    std::map<int, int> vid; // class -> vertex
    auto vertex_of = [&](int cls) {
        auto it = vid.find(cls);
        if (it != vid.end()) return it->second;
        int id = static_cast<int>(out.vertex_class.size());
        vid.emplace(cls, id);
        out.vertex_class.push_back(cls);
        return id;
    };
    if (include_isolated_classes)
        for (int c = 0; c < sep.num_classes; ++c) vertex_of(c);
    int gid = 0;
    for (const auto& cd : sep.per_face) {
        for (const auto& ch : cd.chords) {
            if (ch.kind == ChordKind::Block) {
                LabeledGraph::Edge e;
                e.src = vertex_of(sep.point_class[ch.end1.point]);
                e.dst = vertex_of(sep.point_class[ch.end2.point]);
                e.label = ch.label;
                out.graph.edges.push_back(std::move(e));
                out.edge_gid.push_back(gid);
            }
            ++gid;
        }
    }
    out.graph.num_vertices = static_cast<int>(out.vertex_class.size());
    return out;
}

// ---------------------------------------------------------------------------
// face regions

int FaceRegions::region_at(const Rational& pos) const {
    for (const auto& iv : intervals) {
        if (iv.from < iv.to) {
            if (iv.from < pos && pos < iv.to) return iv.region;
        } else {
            if (pos > iv.from || pos < iv.to) return iv.region;
        }
    }
    return intervals.empty() ? 0 : intervals.front().region;
}

int FaceRegions::z_region_count() const {
    std::set<int> z;
    for (int r = 0; r < num_regions; ++r)
        if (label[merged[r]] == 'Z') z.insert(merged[r]);
    return static_cast<int>(z.size());
}

FaceRegions face_regions(const ChordDiagram& cd) {
    FaceRegions fr;
    const int n = static_cast<int>(cd.chords.size());
    fr.num_regions = n + 1;
    fr.merged.assign(fr.num_regions, 0);
    std::iota(fr.merged.begin(), fr.merged.end(), 0);
    fr.label.assign(fr.num_regions, 0);
    fr.chord_sides.assign(n, {-1, -1});

    if (n == 0) {
        fr.intervals.push_back({Rational(0), Rational(cd.length), 0});
        if (cd.no_chord_label) fr.label[0] = cd.no_chord_label;
        return fr;
    }

    struct Event {
        Rational pos;
        int chord;
        bool is_end1;
    };
    std::vector<Event> ev;
    for (int c = 0; c < n; ++c) {
        ev.push_back({cd.chords[c].end1.circle(cd.length), c, true});
        ev.push_back({cd.chords[c].end2.circle(cd.length), c, false});
    }
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.pos < b.pos; });
    for (std::size_t i = 1; i < ev.size(); ++i) {
        if (ev[i].pos == ev[i - 1].pos) {
            fr.consistent = false;
            fr.issue = "coincident chord endpoints";
            return fr;
        }
    }

    // stack-discipline walk from the cut at position 0; region ids:
    // 0 = the region at the cut, chord c owns region c+1 on its bracket side
    std::vector<int> stack;
    std::vector<char> seen(n, 0);
    Rational prev = ev.back().pos; // wrap interval start
    auto current_region = [&]() { return stack.empty() ? 0 : stack.back() + 1; };
    // wrap interval is emitted last; walk intervals between events
    for (std::size_t i = 0; i < ev.size(); ++i) {
        const auto& e = ev[i];
        if (i > 0) fr.intervals.push_back({ev[i - 1].pos, e.pos, current_region()});
        if (!seen[e.chord]) {
            seen[e.chord] = 1;
            int outside = current_region();
            stack.push_back(e.chord);
            fr.chord_sides[e.chord] = {e.chord + 1, outside};
        } else {
            if (stack.empty() || stack.back() != e.chord) {
                fr.consistent = false;
                fr.issue = "linked chords";
                return fr;
            }
            stack.pop_back();
        }
    }
    fr.intervals.push_back({prev, ev.front().pos, 0}); // wrap: stack empty at cut
    if (!stack.empty()) {
        fr.consistent = false;
        fr.issue = "unbalanced chords";
        return fr;
    }

    // connector merging, then Y/Z demands from block chords
    UF uf(fr.num_regions);
    for (int c = 0; c < n; ++c)
        if (cd.chords[c].kind == ChordKind::Connector)
            uf.unite(fr.chord_sides[c].first, fr.chord_sides[c].second);
    for (int r = 0; r < fr.num_regions; ++r) fr.merged[r] = uf.find(r);

    auto demand = [&](int region, char side) {
        int r = fr.merged[region];
        if (fr.label[r] == 0) fr.label[r] = side;
        else if (fr.label[r] != side) {
            fr.consistent = false;
            fr.issue = "conflicting Y/Z side demands";
        }
    };
    for (int c = 0; c < n; ++c) {
        if (cd.chords[c].kind != ChordKind::Block) continue;
        const auto& ch = cd.chords[c];
        Rational p1 = ch.end1.circle(cd.length), p2 = ch.end2.circle(cd.length);
        bool y_inside = p1 < p2; // ccw arc end1->end2 avoids the cut iff p1 < p2
        demand(fr.chord_sides[c].first, y_inside ? 'Y' : 'Z');
        demand(fr.chord_sides[c].second, y_inside ? 'Z' : 'Y');
    }
    return fr;
}

WindmillReport check_windmill(const SeparatorGraph& sep) {
    WindmillReport rep;
    rep.overall = true;
    for (std::size_t f = 0; f < sep.per_face.size(); ++f) {
        const auto& cd = sep.per_face[f];
        WindmillFaceVerdict v;
        v.face = static_cast<int>(f);
        v.block_chords = cd.block_chords();
        FaceRegions fr = face_regions(cd);
        v.z_regions = fr.consistent ? fr.z_region_count()
                                    : -1;
        if (!fr.consistent) {
            v.pass = false;
            v.reason = fr.issue;
        } else if (v.block_chords < 2) {
            v.pass = false;
            v.reason = "fewer than two separating arcs";
        } else if (v.z_regions != 1) {
            v.pass = false;
            v.reason = "complement region not connected";
        } else {
            v.pass = true;
        }
        rep.overall = rep.overall && v.pass;
        rep.faces.push_back(std::move(v));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// essence

namespace {

// all rotations r with rotate(w, r) == v (w, v equal length)
std::vector<int> matching_rotations(const Word& w, const Word& v) {
    std::vector<int> out;
    const int L = static_cast<int>(w.size());
    for (int r = 0; r < L; ++r) {
        bool ok = true;
        for (int i = 0; i < L && ok; ++i)
            if (v[i] != w[(i + r) % L]) ok = false;
        if (ok) out.push_back(r);
    }
    return out;
}

} // namespace

EssenceResult compute_essence(const SeparatorGraph& sep) {
    EssenceResult out;
    const int total = sep.total_chords();
    UF uf(total);

    auto find_chord = [&](int face, int side1, const Rational& pos1, ChordKind kind) -> int {
        const auto& cd = sep.per_face[face];
        for (std::size_t c = 0; c < cd.chords.size(); ++c) {
            if (cd.chords[c].kind == kind && cd.chords[c].end1.side == side1 &&
                cd.chords[c].end1.pos == pos1)
                return static_cast<int>(c);
        }
        return -1;
    };

    auto redundancy = find_redundant_faces(sep.x);
    for (const auto& members : redundancy.members) {
        for (int f : members) {
            for (int g : members) {
                if (g < f) continue;
                const Word& wf = sep.x.faces[f].boundary;
                const Word& wg = sep.x.faces[g].boundary;
                for (int r : matching_rotations(wf, wg)) {
                    if (f == g && r == 0) continue;
                    // side i of face g corresponds to side (i + r) of face f
                    const auto& cdg = sep.per_face[g];
                    const int L = cdg.length;
                    for (std::size_t c = 0; c < cdg.chords.size(); ++c) {
                        const auto& ch = cdg.chords[c];
                        int target = find_chord(f, (ch.end1.side + r) % L, ch.end1.pos, ch.kind);
                        if (target < 0)
                            throw std::logic_error(
                                "compute_essence: chord diagram not rotation invariant");
                        uf.unite(sep.chord_gid(g, static_cast<int>(c)), sep.chord_gid(f, target));
                    }
                }
            }
        }
    }

    out.chord_class.assign(total, -1);
    out.representative.clear();
    std::map<int, int> cls_of_root;
    int gid = 0;
    for (const auto& cd : sep.per_face) {
        for (const auto& ch : cd.chords) {
            if (ch.kind == ChordKind::Block) {
                int root = uf.find(gid);
                auto it = cls_of_root.find(root);
                if (it == cls_of_root.end()) {
                    int cls = static_cast<int>(out.representative.size());
                    cls_of_root.emplace(root, cls);
                    out.representative.push_back(std::min(root, gid));
                    out.chord_class[gid] = cls;
                } else {
                    out.chord_class[gid] = it->second;
                    out.representative[it->second] = std::min(out.representative[it->second], gid);
                }
            }
            ++gid;
        }
    }
    out.num_classes = static_cast<int>(out.representative.size());

    // essence graph: one edge per representative chord
    out.word_graph.alphabet_size = static_cast<int>(sep.x.edges.size());
    std::map<int, int> vid;
    auto vertex_of = [&](int cls) {
        auto it = vid.find(cls);
        if (it != vid.end()) return it->second;
        int id = static_cast<int>(out.vertex_class.size());
        vid.emplace(cls, id);
        out.vertex_class.push_back(cls);
        return id;
    };
    for (int cls = 0; cls < out.num_classes; ++cls) {
        const Chord& ch = sep.chord_by_gid(out.representative[cls]);
        LabeledGraph::Edge e;
        e.src = vertex_of(sep.point_class[ch.end1.point]);
        e.dst = vertex_of(sep.point_class[ch.end2.point]);
        e.label = ch.label;
        out.word_graph.edges.push_back(std::move(e));
    }
    out.word_graph.num_vertices = static_cast<int>(out.vertex_class.size());
    out.graph = subdivide_by_words(out.word_graph);
    return out;
}

SplittingCertificate certify_splitting_windmill(const SeparatorGraph& sep, bool route_certified) {
    SplittingCertificate cert;
    WindmillReport wm = check_windmill(sep);
    cert.windmill = wm.overall;
    if (!wm.overall) {
        cert.verdict = SplitVerdict::Unknown;
        for (const auto& fv : wm.faces)
            if (!fv.pass) {
                cert.detail = "windmill predicate failed on face " + std::to_string(fv.face) +
                              ": " + fv.reason;
                break;
            }
        return cert;
    }
    EssenceResult ess = compute_essence(sep);
    InjectivityVerdict inj = is_pi1_injective(ess.graph);
    cert.essence_injective = inj.injective;
    if (!inj.injective) {
        cert.verdict = SplitVerdict::Refuted;
        cert.refutation = inj.witness;
        cert.detail = "essence fails to embed: folding drops rank";
        return cert;
    }
    if (!route_certified) {
        cert.verdict = SplitVerdict::Unknown;
        cert.detail = "inclusion of A into the complex not certified";
        return cert;
    }
    cert.verdict = SplitVerdict::Certified;
    return cert;
}

SeparatorGraph parse_separator_overlay(const TwoComplex& x, const std::string& text) {
    SeparatorGraph sep;
    sep.mode = SeparatorMode::Loaded;
    sep.x = x;
    sep.a_edges.assign(x.edges.size(), false);
    sep.a_vertices.assign(x.num_vertices, false);
    sep.per_face.resize(x.faces.size());
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        sep.per_face[f].face = static_cast<int>(f);
        sep.per_face[f].length = static_cast<int>(x.faces[f].boundary.size());
    }

    std::map<std::pair<int, std::pair<long, long>>, int> edge_points;
    std::map<int, int> vertex_points;
    auto edge_point = [&](int e, Rational off) {
        auto key = std::make_pair(e, std::make_pair(off.num, off.den));
        auto it = edge_points.find(key);
        if (it != edge_points.end()) return it->second;
        GammaPoint gp;
        gp.on_edge = true;
        gp.edge = e;
        gp.offset = off;
        int id = static_cast<int>(sep.points.size());
        sep.points.push_back(gp);
        edge_points.emplace(key, id);
        return id;
    };
    auto vertex_point = [&](int v) {
        auto it = vertex_points.find(v);
        if (it != vertex_points.end()) return it->second;
        GammaPoint gp;
        gp.on_edge = false;
        gp.vertex = v;
        int id = static_cast<int>(sep.points.size());
        sep.points.push_back(gp);
        vertex_points.emplace(v, id);
        return id;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& m) {
        throw std::invalid_argument("overlay line " + std::to_string(lineno) + ": " + m);
    };
    auto parse_end = [&](const std::string& tok, int face) {
        ChordEnd end;
        const Word& w = x.faces[face].boundary;
        if (tok[0] == 'c') {
            end.at_corner = true;
            end.corner = std::stoi(tok.substr(1));
            if (end.corner < 0 || end.corner >= static_cast<int>(w.size()))
                fail("corner out of range");
            end.point = vertex_point(x.edge_src(w[end.corner]));
        } else {
            auto colon = tok.find(':');
            auto slash = tok.find('/', colon);
            if (colon == std::string::npos || slash == std::string::npos)
                fail("expected <side>:<num>/<den>");
            end.side = std::stoi(tok.substr(0, colon));
            long num = std::stol(tok.substr(colon + 1, slash - colon - 1));
            long den = std::stol(tok.substr(slash + 1));
            end.pos = Rational(num, den);
            if (end.side < 0 || end.side >= static_cast<int>(w.size()))
                fail("side out of range");
            if (!(Rational(0) < end.pos && end.pos < Rational(1))) fail("position must be in (0,1)");
            Letter d = w[end.side];
            end.point = edge_point(letter_id(d), side_pos_to_edge_offset(d, end.pos));
        }
        return end;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        if (kind == "v" || kind == "e" || kind == "f") continue; // complex lines
        if (kind == "gp") {
            std::string e, frac;
            if (!(ls >> e >> frac)) fail("gp <edge> <num>/<den>");
            int eid = -1;
            for (std::size_t i = 0; i < x.edges.size(); ++i)
                if (x.edges[i].name == e) eid = static_cast<int>(i);
            if (eid < 0) fail("unknown edge '" + e + "'");
            auto slash = frac.find('/');
            if (slash == std::string::npos) fail("offset must be <num>/<den>");
            edge_point(eid, Rational(std::stol(frac.substr(0, slash)), std::stol(frac.substr(slash + 1))));
        } else if (kind == "chord") {
            int face;
            std::string t1, t2, yside;
            if (!(ls >> face >> t1 >> t2 >> yside)) fail("chord <face> <end> <end> <yside>");
            if (face < 0 || face >= static_cast<int>(x.faces.size())) fail("face out of range");
            Chord ch;
            ch.end1 = parse_end(t1, face);
            ch.end2 = parse_end(t2, face);
            if (yside == "cw")
                std::swap(ch.end1, ch.end2);
            else if (yside != "ccw")
                fail("yside must be ccw or cw");
            ch.kind = ChordKind::Block;
            sep.per_face[face].chords.push_back(std::move(ch));
        } else {
            fail("unknown record '" + kind + "'");
        }
    }

    // abstract identity: edge points by location, corner points by host vertex
    sep.point_class.resize(sep.points.size());
    std::iota(sep.point_class.begin(), sep.point_class.end(), 0);
    sep.num_classes = static_cast<int>(sep.points.size());

    // isolated corner bookkeeping
    std::set<int> gamma_vertices;
    for (const auto& gp : sep.points)
        if (!gp.on_edge) gamma_vertices.insert(gp.vertex);
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        const Word& w = x.faces[f].boundary;
        for (int c = 0; c < static_cast<int>(w.size()); ++c) {
            if (!gamma_vertices.count(x.edge_src(w[c]))) continue;
            bool used = false;
            for (const auto& ch : sep.per_face[f].chords)
                if ((ch.end1.at_corner && ch.end1.corner == c) ||
                    (ch.end2.at_corner && ch.end2.corner == c))
                    used = true;
            if (!used) sep.per_face[f].isolated_corners.push_back(c);
        }
    }

    fill_side_tables(sep);
    return sep;
}

} // namespace windmill
