#pragma once

#include "windmill/word.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace windmill {

struct Generator {
    std::string name;
    int id = 0;
};

struct Relator {
    Word word;            // cyclically reduced, nonempty
    Word period;          // word = period^exponent
    int exponent = 1;
    bool normalized_from_input = false; // reduction changed the given spelling
};

struct Presentation {
    std::vector<Generator> generators;
    std::vector<Relator> relators;

    int generator_id(const std::string& name) const;
    std::vector<std::string> names() const;
    std::string to_text() const;
};

// Disjoint cover of the generator set.
struct AlphabetSplit {
    std::vector<bool> in_a; // indexed by generator id; false = B side

    static AlphabetSplit of(const Presentation& p, const std::vector<std::string>& a_names);
    std::vector<int> a_ids() const;
    std::vector<int> b_ids() const;
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar: '<' names '|' relators '>'; names are [A-Za-z][A-Za-z0-9_]*,
// comma separated; words are juxtaposed letters with optional ^<int>
// exponents and parenthesized subwords; whitespace insensitive.
Presentation parse_presentation(const std::string& text);

} // namespace windmill
