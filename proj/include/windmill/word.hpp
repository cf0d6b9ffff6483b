#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace windmill {

// A letter is a signed symbol id: +(id+1) for the symbol, -(id+1) for its
// inverse.  The same encoding serves generators of a presentation and
// directed edges of a complex.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline int letter_id(Letter l) { return (l > 0 ? l : -l) - 1; }
inline bool letter_inverted(Letter l) { return l < 0; }
inline Letter make_letter(int id, bool inverted = false) {
    return inverted ? -(id + 1) : (id + 1);
}
inline Letter inverse(Letter l) { return -l; }

Word inverse(const Word& w);

enum class ReduceMode { Free, Cyclic };

// Free (and optionally cyclic) reduction.  Idempotent.
Word normalize_word(Word w, ReduceMode mode);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// w must be cyclically reduced and nonempty.  Returns (period, exponent)
// with w = period^exponent and exponent maximal.
struct PeriodDecomposition {
    Word period;
    int exponent = 1;
};
PeriodDecomposition period_decompose(const Word& w);

Word rotate(const Word& w, int k);
Word pow(const Word& w, int n);

// Canonical representative of the cyclic equivalence class: the
// lexicographically least rotation.
Word canonical_rotation(const Word& w);

// Maximal runs of same-side letters of a cyclically reduced word, rotated so
// that the first block lies on the B side whenever both sides occur.
struct AlternationBlock {
    bool a_side = false;
    Word word;
};
struct AlternationDecomposition {
    std::vector<AlternationBlock> blocks;
    int a_block_count = 0; // k
    bool degenerate = false; // single-sided or k <= 1
};
AlternationDecomposition alternation_decompose(const Word& w,
                                               const std::vector<bool>& in_a);

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

} // namespace windmill
