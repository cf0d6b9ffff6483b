#include "windmill/presentation.hpp"

#include <algorithm>
#include <cctype>

namespace windmill {

int Presentation::generator_id(const std::string& name) const {
    for (const auto& g : generators)
        if (g.name == name) return g.id;
    return -1;
}

std::vector<std::string> Presentation::names() const {
    std::vector<std::string> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.name);
    return out;
}

std::string Presentation::to_text() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ", ";
        out += generators[i].name;
    }
    out += " | ";
    const auto nm = names();
    for (std::size_t i = 0; i < relators.size(); ++i) {
        if (i) out += ", ";
        out += word_to_string(relators[i].word, nm);
    }
    out += ">";
    return out;
}

AlphabetSplit AlphabetSplit::of(const Presentation& p, const std::vector<std::string>& a_names) {
    AlphabetSplit s;
    s.in_a.assign(p.generators.size(), false);
    for (const auto& n : a_names) {
        int id = p.generator_id(n);
        if (id < 0) throw std::invalid_argument("unknown generator in split: " + n);
        s.in_a[id] = true;
    }
    return s;
}

std::vector<int> AlphabetSplit::a_ids() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < in_a.size(); ++i)
        if (in_a[i]) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> AlphabetSplit::b_ids() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < in_a.size(); ++i)
        if (!in_a[i]) out.push_back(static_cast<int>(i));
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(i, std::string("expected '") + c + "' " + what);
    }
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_name(Cursor& c) {
    c.skip_ws();
    if (c.i >= c.s.size() || !name_start(c.s[c.i]))
        throw ParseError(c.i, "expected generator name");
    std::size_t j = c.i;
    while (j < c.s.size() && name_char(c.s[j])) ++j;
    std::string out = c.s.substr(c.i, j - c.i);
    c.i = j;
    return out;
}

long read_int(Cursor& c) {
    c.skip_ws();
    std::size_t j = c.i;
    if (j < c.s.size() && (c.s[j] == '-' || c.s[j] == '+')) ++j;
    std::size_t digits = j;
    while (j < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[j]))) ++j;
    if (j == digits) throw ParseError(c.i, "expected integer exponent");
    long v = std::stol(c.s.substr(c.i, j - c.i));
    c.i = j;
    return v;
}

// Longest declared generator name matching at the cursor.
int match_generator(Cursor& c, const Presentation& p) {
    c.skip_ws();
    int best = -1;
    std::size_t best_len = 0;
    for (const auto& g : p.generators) {
        if (g.name.size() <= best_len) continue;
        if (c.s.compare(c.i, g.name.size(), g.name) == 0) {
            best = g.id;
            best_len = g.name.size();
        }
    }
    if (best >= 0) c.i += best_len;
    return best;
}

Word parse_word(Cursor& c, const Presentation& p, char stop1, char stop2);

Word parse_factor(Cursor& c, const Presentation& p, char stop1, char stop2) {
    Word base;
    if (c.accept('(')) {
        base = parse_word(c, p, ')', '\0');
        c.expect(')', "to close subword");
    } else {
        int id = match_generator(c, p);
        if (id < 0) throw ParseError(c.i, "expected a generator letter");
        base.push_back(make_letter(id));
    }
    if (c.accept('^')) {
        long e = read_int(c);
        Word out;
        const Word rep = e >= 0 ? base : inverse(base);
        for (long k = 0; k < (e >= 0 ? e : -e); ++k)
            out.insert(out.end(), rep.begin(), rep.end());
        return out;
    }
    return base;
}

Word parse_word(Cursor& c, const Presentation& p, char stop1, char stop2) {
    Word out;
    while (!c.eof()) {
        char ch = c.peek();
        if (ch == stop1 || ch == stop2 || ch == ',') break;
        Word f = parse_factor(c, p, stop1, stop2);
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    Cursor c{text};
    Presentation p;
    c.expect('<', "to open presentation");
    if (c.peek() != '|') {
        for (;;) {
            std::string n = read_name(c);
            if (p.generator_id(n) >= 0)
                throw ParseError(c.i, "duplicate generator name '" + n + "'");
            p.generators.push_back({n, static_cast<int>(p.generators.size())});
            if (!c.accept(',')) break;
        }
    }
    c.expect('|', "between generators and relators");
    if (c.peek() != '>') {
        for (;;) {
            std::size_t at = c.i;
            Word raw = parse_word(c, p, '>', '\0');
            Word norm = normalize_word(raw, ReduceMode::Cyclic);
            if (norm.empty())
                throw ParseError(at, "empty relator after reduction");
            Relator r;
            r.word = norm;
            r.normalized_from_input = (norm != raw);
            auto pd = period_decompose(norm);
            r.period = pd.period;
            r.exponent = pd.exponent;
            p.relators.push_back(std::move(r));
            if (!c.accept(',')) break;
        }
    }
    c.expect('>', "to close presentation");
    if (!c.eof()) throw ParseError(c.i, "trailing input after '>'");
    return p;
}

} // namespace windmill
