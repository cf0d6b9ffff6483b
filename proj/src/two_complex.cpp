#include "windmill/two_complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace windmill {

std::vector<std::string> TwoComplex::edge_names() const {
    std::vector<std::string> out;
    out.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        out.push_back(edges[i].name.empty() ? "e" + std::to_string(i) : edges[i].name);
    return out;
}

void TwoComplex::validate() const {
    for (const auto& e : edges)
        if (e.src < 0 || e.src >= num_vertices || e.dst < 0 || e.dst >= num_vertices)
            throw std::invalid_argument("edge endpoint out of range");
    for (const auto& f : faces) {
        if (f.boundary.empty())
            throw std::invalid_argument("face with empty boundary");
        const int n = static_cast<int>(f.boundary.size());
        for (int i = 0; i < n; ++i) {
            Letter cur = f.boundary[i];
            Letter nxt = f.boundary[(i + 1) % n];
            if (letter_id(cur) >= static_cast<int>(edges.size()))
                throw std::invalid_argument("face boundary uses unknown edge");
            if (edge_dst(cur) != edge_src(nxt))
                throw std::invalid_argument("face boundary is not a closed path");
            if (nxt == -cur)
                throw std::invalid_argument("face boundary is not immersed");
        }
        if (static_cast<int>(f.period.size()) * f.exponent != n)
            throw std::invalid_argument("face period/exponent mismatch");
        for (int i = 0; i < n; ++i)
            if (f.boundary[i] != f.period[i % f.period.size()])
                throw std::invalid_argument("face boundary is not period^exponent");
    }
}

TwoComplex build_standard_complex(const Presentation& p) {
    TwoComplex x;
    x.num_vertices = 1;
    x.from_presentation = true;
    for (const auto& g : p.generators) x.edges.push_back({0, 0, g.name});
    for (const auto& r : p.relators) {
        TwoComplex::FaceCell f;
        f.boundary = r.word; // generator ids coincide with edge ids
        f.period = r.period;
        f.exponent = r.exponent;
        x.faces.push_back(std::move(f));
    }
    x.validate();
    return x;
}

RedundancyClasses find_redundant_faces(const TwoComplex& x) {
    RedundancyClasses out;
    out.class_of.assign(x.faces.size(), -1);
    std::map<Word, int> seen;
    for (std::size_t f = 0; f < x.faces.size(); ++f) {
        Word key = canonical_rotation(x.faces[f].boundary);
        auto it = seen.find(key);
        if (it == seen.end()) {
            int cls = out.num_classes++;
            seen.emplace(std::move(key), cls);
            out.class_of[f] = cls;
            out.members.push_back({static_cast<int>(f)});
        } else {
            out.class_of[f] = it->second;
            out.members[it->second].push_back(static_cast<int>(f));
        }
    }
    return out;
}

SubOneComplex SubOneComplex::closure_of_edges(const TwoComplex& x, const std::vector<int>& edge_ids) {
    SubOneComplex s;
    s.vertices.assign(x.num_vertices, false);
    s.edges.assign(x.edges.size(), false);
    for (int e : edge_ids) {
        s.edges.at(e) = true;
        s.vertices[x.edges[e].src] = true;
        s.vertices[x.edges[e].dst] = true;
    }
    return s;
}

bool SubOneComplex::closed(const TwoComplex& x) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e] && (!vertices[x.edges[e].src] || !vertices[x.edges[e].dst]))
            return false;
    return true;
}

bool SubOneComplex::empty() const {
    for (bool v : vertices)
        if (v) return false;
    return true;
}

TwoComplex parse_complex_text(const std::string& text) {
    std::istringstream in(text);
    return parse_complex_file(in);
}

TwoComplex parse_complex_file(std::istream& in) {
    TwoComplex x;
    std::map<std::string, int> vid, eid;
    std::string line;
    int lineno = 0;
    auto vertex_of = [&](const std::string& tok) {
        auto it = vid.find(tok);
        if (it == vid.end())
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": unknown vertex '" + tok + "'");
        return it->second;
    };
    std::vector<Word> face_words;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        if (kind == "v") {
            std::string id;
            if (!(ls >> id)) throw std::invalid_argument("line " + std::to_string(lineno) + ": v <id>");
            if (!vid.emplace(id, x.num_vertices).second)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate vertex");
            ++x.num_vertices;
        } else if (kind == "e") {
            std::string id, s, t;
            if (!(ls >> id >> s >> t))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": e <id> <src> <dst>");
            if (!eid.emplace(id, static_cast<int>(x.edges.size())).second)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate edge");
            x.edges.push_back({vertex_of(s), vertex_of(t), id});
        } else if (kind == "f") {
            std::string id, tok;
            if (!(ls >> id))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": f <id> <edges>");
            Word w;
            while (ls >> tok) {
                bool invd = !tok.empty() && tok[0] == '-';
                std::string name = invd ? tok.substr(1) : tok;
                auto it = eid.find(name);
                if (it == eid.end())
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": unknown edge '" + name + "'");
                w.push_back(make_letter(it->second, invd));
            }
            if (w.empty())
                throw std::invalid_argument("line " + std::to_string(lineno) + ": empty face");
            face_words.push_back(std::move(w));
        } else if (kind == "gp" || kind == "chord") {
            // separator overlay lines are parsed elsewhere; ignore here
            continue;
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": unknown record '" + kind + "'");
        }
    }
    for (auto& w : face_words) {
        TwoComplex::FaceCell f;
        f.boundary = w;
        auto pd = period_decompose(w);
        f.period = pd.period;
        f.exponent = pd.exponent;
        x.faces.push_back(std::move(f));
    }
    x.validate();
    return x;
}

} // namespace windmill
