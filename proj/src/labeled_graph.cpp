#include "windmill/labeled_graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace windmill {

Word path_label(const LabeledGraph& g, const DartPath& p) {
    Word w;
    for (const auto& d : p) {
        const Word& l = g.edges[d.edge].label;
        if (d.dir > 0)
            w.insert(w.end(), l.begin(), l.end());
        else {
            Word inv = inverse(l);
            w.insert(w.end(), inv.begin(), inv.end());
        }
    }
    return w;
}

DartPath path_reduce(DartPath p) {
    DartPath out;
    for (const auto& d : p) {
        if (!out.empty() && out.back().edge == d.edge && out.back().dir == -d.dir)
            out.pop_back();
        else
            out.push_back(d);
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // keep the smaller id as representative
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

} // namespace

LabeledGraph subdivide_by_words(const LabeledGraph& g) {
    LabeledGraph out;
    out.alphabet_size = g.alphabet_size;
    UnionFind uf(g.num_vertices);
    struct Pending { int src, dst; Word label; };
    std::vector<Pending> pend;
    int next_vertex = g.num_vertices;
    for (const auto& e : g.edges) {
        if (e.label.empty()) {
            uf.unite(e.src, e.dst);
            continue;
        }
        int cur = e.src;
        for (std::size_t i = 0; i < e.label.size(); ++i) {
            int nxt = (i + 1 == e.label.size()) ? e.dst : next_vertex++;
            Letter l = e.label[i];
            if (l > 0)
                pend.push_back({cur, nxt, {l}});
            else
                pend.push_back({nxt, cur, {-l}});
            cur = nxt;
        }
    }
    // compact vertex classes
    std::vector<int> remap(next_vertex, -1);
    int nv = 0;
    auto id_of = [&](int v) {
        int r = v < g.num_vertices ? uf.find(v) : v;
        if (remap[r] < 0) remap[r] = nv++;
        return remap[r];
    };
    for (int v = 0; v < g.num_vertices; ++v) id_of(v);
    for (const auto& p : pend)
        out.edges.push_back({id_of(p.src), id_of(p.dst), p.label});
    out.num_vertices = nv;
    return out;
}

namespace {

// Union-find over vertices with an explanation forest: every union records a
// path witness between two original vertices whose image is freely trivial.
struct ExplainedUnion {
    UnionFind uf;
    struct ForestEdge { int other; int e1, e2, dir; }; // path far(e1) -> far(e2)
    std::vector<std::vector<ForestEdge>> forest;

    explicit ExplainedUnion(int n) : uf(n), forest(n) {}

    bool unite(int x_orig, int y_orig, int e1, int e2, int dir) {
        if (uf.find(x_orig) == uf.find(y_orig)) return false;
        uf.unite(x_orig, y_orig);
        forest[x_orig].push_back({y_orig, e1, e2, dir});
        forest[y_orig].push_back({x_orig, e2, e1, dir});
        return true;
    }
};

} // namespace

namespace {

struct Folder {
    const LabeledGraph& g;
    UnionFind vclass;
    UnionFind eclass;
    ExplainedUnion expl;
    std::vector<FoldEvent> events;
    std::vector<char> edge_alive;

    explicit Folder(const LabeledGraph& gr)
        : g(gr),
          vclass(gr.num_vertices),
          eclass(static_cast<int>(gr.edges.size())),
          expl(gr.num_vertices),
          edge_alive(gr.edges.size(), 1) {}

    int near_orig(int e, int dir) const { return dir > 0 ? g.edges[e].src : g.edges[e].dst; }
    int far_orig(int e, int dir) const { return dir > 0 ? g.edges[e].dst : g.edges[e].src; }

    // dart witness path between two original vertices in the same class
    DartPath vertex_witness(int x, int y) const {
        if (x == y) return {};
        // BFS in the explanation forest
        std::vector<int> prev(g.num_vertices, -2);
        std::vector<int> prev_idx(g.num_vertices, -1);
        std::queue<int> q;
        q.push(x);
        prev[x] = -1;
        while (!q.empty() && prev[y] == -2) {
            int u = q.front();
            q.pop();
            for (std::size_t i = 0; i < expl.forest[u].size(); ++i) {
                int w = expl.forest[u][i].other;
                if (prev[w] != -2) continue;
                prev[w] = u;
                prev_idx[w] = static_cast<int>(i);
                q.push(w);
            }
        }
        assert(prev[y] != -2 && "witness endpoints not in one class");
        // reconstruct forest path x -> y, then expand each forest edge
        std::vector<std::pair<int, int>> steps; // (vertex reached, idx at prev)
        for (int v = y; v != x; v = prev[v]) steps.push_back({v, prev_idx[v]});
        std::reverse(steps.begin(), steps.end());
        DartPath out;
        int cur = x;
        for (auto [v, idx] : steps) {
            const auto& fe = expl.forest[cur][idx];
            // cur = far(fe.e1, dir), v = far(fe.e2, dir)
            DartPath seg;
            seg.push_back({fe.e1, -fe.dir});
            DartPath mid = vertex_witness(near_orig(fe.e1, fe.dir), near_orig(fe.e2, fe.dir));
            seg.insert(seg.end(), mid.begin(), mid.end());
            seg.push_back({fe.e2, fe.dir});
            out.insert(out.end(), seg.begin(), seg.end());
            cur = v;
        }
        return out;
    }

    void run() {
        bool changed = true;
        while (changed) {
            changed = false;
            // collect out-darts per vertex class: (class, signed label) -> edges
            std::map<std::pair<int, Letter>, std::vector<std::pair<int, int>>> at; // -> (edge, dir)
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                if (!edge_alive[e] || eclass.find(static_cast<int>(e)) != static_cast<int>(e))
                    continue;
                Letter a = g.edges[e].label[0];
                int s = vclass.find(g.edges[e].src);
                int t = vclass.find(g.edges[e].dst);
                at[{s, a}].push_back({static_cast<int>(e), +1});
                at[{t, -a}].push_back({static_cast<int>(e), -1});
            }
            for (auto& [key, darts] : at) {
                if (darts.size() < 2) continue;
                // deterministic: smallest two edge representatives
                std::sort(darts.begin(), darts.end());
                auto [e1, d1] = darts[0];
                auto [e2, d2] = darts[1];
                assert(d1 == d2);
                FoldEvent ev;
                ev.label = key.second;
                ev.edge1 = e1;
                ev.edge2 = e2;
                int f1 = far_orig(e1, d1), f2 = far_orig(e2, d2);
                if (vclass.find(f1) == vclass.find(f2)) {
                    ev.rank_drop = true;
                } else {
                    ev.merged_v1 = f1;
                    ev.merged_v2 = f2;
                    vclass.unite(f1, f2);
                    expl.unite(f1, f2, e1, e2, d1);
                }
                eclass.unite(e1, e2);
                edge_alive[std::max(e1, e2)] = 0;
                events.push_back(ev);
                changed = true;
                break; // re-scan from scratch for a stable deterministic order
            }
        }
    }

    DartPath rank_drop_witness(const FoldEvent& ev) const {
        assert(ev.rank_drop);
        int d = ev.label > 0 ? +1 : -1;
        // the folded darts leave a common class; witness cycle:
        //   e1 forward, far(e1) ~> far(e2), e2 backward, near(e2) ~> near(e1)
        DartPath out;
        out.push_back({ev.edge1, d});
        DartPath mid = vertex_witness(far_orig(ev.edge1, d), far_orig(ev.edge2, d));
        out.insert(out.end(), mid.begin(), mid.end());
        out.push_back({ev.edge2, -d});
        DartPath back = vertex_witness(near_orig(ev.edge2, d), near_orig(ev.edge1, d));
        out.insert(out.end(), back.begin(), back.end());
        return out;
    }
};

} // namespace

std::vector<int> component_of(const LabeledGraph& g) {
    UnionFind uf(g.num_vertices);
    for (const auto& e : g.edges) uf.unite(e.src, e.dst);
    std::vector<int> comp(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) comp[v] = uf.find(v);
    return comp;
}

int component_count(const LabeledGraph& g) {
    auto comp = component_of(g);
    std::set<int> s(comp.begin(), comp.end());
    return static_cast<int>(s.size());
}

std::vector<int> betti_per_component(const LabeledGraph& g) {
    auto comp = component_of(g);
    std::map<int, std::pair<int, int>> ve; // comp -> (V, E)
    for (int v = 0; v < g.num_vertices; ++v) ve[comp[v]].first++;
    for (const auto& e : g.edges) ve[comp[e.src]].second++;
    std::vector<int> out;
    for (auto& [c, p] : ve) out.push_back(p.second - p.first + 1);
    return out;
}

FoldResult fold_graph(const LabeledGraph& g) {
    if (!g.single_letter())
        throw std::invalid_argument("fold_graph requires single-letter edges");
    Folder f(g);

    // per-component Betti numbers before
    auto comp = component_of(g);
    std::map<int, std::pair<int, int>> ve;
    for (int v = 0; v < g.num_vertices; ++v) ve[comp[v]].first++;
    for (const auto& e : g.edges) ve[comp[e.src]].second++;

    f.run();

    FoldResult res;
    res.events = f.events;

    // build folded graph with dense ids, representatives in increasing order
    std::vector<int> vmap(g.num_vertices, -1);
    int nv = 0;
    for (int v = 0; v < g.num_vertices; ++v)
        if (f.vclass.find(v) == v) vmap[v] = nv++;
    res.folded.num_vertices = nv;
    res.folded.alphabet_size = g.alphabet_size;
    res.vertex_class.resize(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) res.vertex_class[v] = vmap[f.vclass.find(v)];
    std::vector<int> emap(g.edges.size(), -1);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (f.eclass.find(static_cast<int>(e)) != static_cast<int>(e)) continue;
        emap[e] = static_cast<int>(res.folded.edges.size());
        res.folded.edges.push_back({res.vertex_class[g.edges[e].src],
                                    res.vertex_class[g.edges[e].dst],
                                    g.edges[e].label});
    }
    res.edge_class.resize(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        res.edge_class[e] = emap[f.eclass.find(static_cast<int>(e))];

    // per-component Betti after (components are preserved by folding)
    auto b_after = betti_per_component(res.folded);
    auto comp_after = component_of(res.folded);
    std::map<int, int> rep_after; // folded comp rep -> b1
    {
        std::map<int, std::pair<int, int>> ve2;
        for (int v = 0; v < res.folded.num_vertices; ++v) ve2[comp_after[v]].first++;
        for (const auto& e : res.folded.edges) ve2[comp_after[e.src]].second++;
        for (auto& [c, p] : ve2) rep_after[c] = p.second - p.first + 1;
    }
    for (auto& [c, p] : ve) {
        ComponentBetti cb;
        cb.representative = c;
        cb.b1_before = p.second - p.first + 1;
        cb.b1_after = rep_after[comp_after[res.vertex_class[c]]];
        res.betti.push_back(cb);
    }
    return res;
}

InjectivityVerdict is_pi1_injective(const LabeledGraph& g0) {
    LabeledGraph g = g0.single_letter() ? g0 : subdivide_by_words(g0);
    if (!g0.single_letter()) {
        // witnesses must refer to the subdivided graph; acceptable, the
        // subdivision is canonical.  Callers needing original darts subdivide
        // themselves.
    }
    Folder f(g);
    f.run();
    InjectivityVerdict v;
    for (const auto& ev : f.events) {
        if (ev.rank_drop) {
            v.injective = false;
            DartPath w = path_reduce(f.rank_drop_witness(ev));
            assert(!w.empty() && "rank-drop witness must survive path reduction");
            Word img = normalize_word(path_label(g, w), ReduceMode::Free);
            assert(img.empty() && "witness image must be freely trivial");
            (void)img;
            v.witness = w;
            v.witness_base = f.near_orig(w.front().edge, w.front().dir);
            return v;
        }
    }
    v.injective = true;
    return v;
}

// Exhaustive depth-first search over path-reduced walks, tracking the freely
// reduced image as a stack.  The stack-versus-remaining-budget prune keeps
// this fast on the graph sizes the oracle is used for (<= 8 edges).
namespace {

struct SimpleKernelSearch {
    const LabeledGraph& g;
    std::vector<std::vector<Dart>> out_darts;

    explicit SimpleKernelSearch(const LabeledGraph& gr) : g(gr) {
        out_darts.resize(g.num_vertices);
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            out_darts[g.edges[e].src].push_back({e, +1});
            out_darts[g.edges[e].dst].push_back({e, -1});
        }
    }

    int dart_to(Dart d) const { return d.dir > 0 ? g.edges[d.edge].dst : g.edges[d.edge].src; }
    Letter dart_label(Dart d) const {
        Letter a = g.edges[d.edge].label[0];
        return d.dir > 0 ? a : -a;
    }

    bool dfs(int v, int start, int len, int max_len, DartPath& path, Word& stack,
             DartPath& found) {
        if (len > 0 && v == start && stack.empty()) {
            // cyclically reduced check on the cycle
            const Dart& first = path.front();
            const Dart& last = path.back();
            if (!(last.edge == first.edge && last.dir == -first.dir)) {
                found = path;
                return true;
            }
        }
        if (len >= max_len) return false;
        if (static_cast<int>(stack.size()) > max_len - len)
            return false; // cannot cancel in time
        for (const Dart& d : out_darts[v]) {
            if (!path.empty() && d.edge == path.back().edge && d.dir == -path.back().dir)
                continue; // not path-reduced
            Letter l = dart_label(d);
            path.push_back(d);
            bool popped = false;
            if (!stack.empty() && stack.back() == -l) {
                stack.pop_back();
                popped = true;
            } else {
                stack.push_back(l);
            }
            if (dfs(dart_to(d), start, len + 1, max_len, path, stack, found)) return true;
            if (popped)
                stack.push_back(-l);
            else
                stack.pop_back();
            path.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<DartPath> short_kernel_witness(const LabeledGraph& g0, int max_len) {
    if (max_len < 1) throw std::invalid_argument("short_kernel_witness: max_len >= 1");
    LabeledGraph g = g0.single_letter() ? g0 : subdivide_by_words(g0);
    SimpleKernelSearch s(g);
    for (int start = 0; start < g.num_vertices; ++start) {
        DartPath path, found;
        Word stack;
        if (s.dfs(start, start, 0, max_len, path, stack, found)) return found;
    }
    return std::nullopt;
}

std::string canonical_immersed_code(const LabeledGraph& g) {
    // out-dart map per vertex, unique per signed label (immersed)
    std::map<std::pair<int, Letter>, int> step; // (vertex, label) -> target
    std::map<int, std::vector<Letter>> labels_at;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        Letter a = g.edges[e].label.at(0);
        auto k1 = std::make_pair(g.edges[e].src, a);
        auto k2 = std::make_pair(g.edges[e].dst, -a);
        if (step.count(k1) || step.count(k2))
            throw std::invalid_argument("canonical_immersed_code: graph not immersed");
        step[k1] = g.edges[e].dst;
        step[k2] = g.edges[e].src;
        labels_at[g.edges[e].src].push_back(a);
        labels_at[g.edges[e].dst].push_back(-a);
    }
    auto comp = component_of(g);
    std::map<int, std::vector<int>> comps;
    for (int v = 0; v < g.num_vertices; ++v) comps[comp[v]].push_back(v);

    auto encode_from = [&](int root) {
        std::vector<int> id(g.num_vertices, -1);
        std::vector<int> order;
        id[root] = 0;
        order.push_back(root);
        std::ostringstream os;
        for (std::size_t qi = 0; qi < order.size(); ++qi) {
            int v = order[qi];
            auto ls = labels_at[v];
            std::sort(ls.begin(), ls.end());
            for (Letter a : ls) {
                int w = step[{v, a}];
                if (id[w] < 0) {
                    id[w] = static_cast<int>(order.size());
                    order.push_back(w);
                }
                os << a << ':' << id[w] << ';';
            }
            os << '|';
        }
        return os.str();
    };

    std::vector<std::string> codes;
    for (auto& [rep, verts] : comps) {
        std::string best;
        for (int v : verts) {
            std::string c = encode_from(v);
            if (best.empty() || c < best) best = c;
        }
        codes.push_back(best);
    }
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (auto& c : codes) out += c + "#";
    return out;
}

} // namespace windmill
