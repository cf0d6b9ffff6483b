#include "windmill/word.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace windmill {

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word normalize_word(Word w, ReduceMode mode) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    if (mode == ReduceMode::Cyclic) {
        std::size_t lo = 0, hi = out.size();
        while (hi - lo >= 2 && out[lo] == -out[hi - 1]) { ++lo; --hi; }
        out = Word(out.begin() + lo, out.begin() + hi);
    }
    return out;
}

bool is_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == -w[i - 1]) return false;
    return true;
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_reduced(w)) return false;
    return w.size() < 2 || w.front() != -w.back();
}

PeriodDecomposition period_decompose(const Word& w) {
    if (w.empty()) throw std::invalid_argument("period_decompose: empty word");
    const int n = static_cast<int>(w.size());
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (int i = d; i < n && periodic; ++i)
            if (w[i] != w[i % d]) periodic = false;
        if (periodic) {
            PeriodDecomposition pd;
            pd.period = Word(w.begin(), w.begin() + d);
            pd.exponent = n / d;
            return pd;
        }
    }
    return {w, 1}; // unreachable, d = n always matches
}

Word rotate(const Word& w, int k) {
    if (w.empty()) return w;
    const int n = static_cast<int>(w.size());
    k = ((k % n) + n) % n;
    Word out(w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return out;
}

Word pow(const Word& w, int n) {
    Word out;
    out.reserve(w.size() * n);
    for (int i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

Word canonical_rotation(const Word& w) {
    Word best = w;
    for (int k = 1; k < static_cast<int>(w.size()); ++k) {
        Word r = rotate(w, k);
        if (std::lexicographical_compare(r.begin(), r.end(), best.begin(), best.end()))
            best = r;
    }
    return best;
}

AlternationDecomposition alternation_decompose(const Word& w,
                                               const std::vector<bool>& in_a) {
    AlternationDecomposition out;
    if (w.empty()) { out.degenerate = true; return out; }
    auto side = [&](Letter l) { return in_a.at(letter_id(l)); };

    bool mixed = false;
    for (Letter l : w)
        if (side(l) != side(w[0])) { mixed = true; break; }
    if (!mixed) {
        out.blocks.push_back({side(w[0]), w});
        out.a_block_count = side(w[0]) ? 1 : 0;
        out.degenerate = true;
        return out;
    }

    // Rotate so the word starts at a B-block boundary: position 0 is a B
    // letter whose cyclic predecessor is an A letter.
    const int n = static_cast<int>(w.size());
    int start = -1;
    for (int i = 0; i < n; ++i) {
        if (!side(w[i]) && side(w[(i + n - 1) % n])) { start = i; break; }
    }
    assert(start >= 0);
    Word r = rotate(w, start);

    for (Letter l : r) {
        if (out.blocks.empty() || out.blocks.back().a_side != side(l))
            out.blocks.push_back({side(l), {}});
        out.blocks.back().word.push_back(l);
    }
    for (const auto& b : out.blocks)
        if (b.a_side) ++out.a_block_count;
    out.degenerate = out.a_block_count <= 1;
    return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        // collapse runs of the same letter into ^k for readability
        std::size_t j = i;
        while (j + 1 < w.size() && w[j + 1] == w[i]) ++j;
        const long run = static_cast<long>(j - i + 1);
        if (!out.empty()) out += ' ';
        out += names.at(letter_id(w[i]));
        if (letter_inverted(w[i]))
            out += "^-" + std::to_string(run);
        else if (run > 1)
            out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

} // namespace windmill
