#pragma once

#include <string>
#include <vector>

namespace wlab {

/// Word over a generating set, as a sequence of letters. Letter l with
/// 0 <= l < ngens means generator l; ngens <= l < 2*ngens means the inverse
/// of generator l - ngens. The same encoding indexes coset-table columns.
using Word = std::vector<int>;

inline int inverse_letter(int letter, int ngens) {
    return letter < ngens ? letter + ngens : letter - ngens;
}

struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;  // freely reduced, nonempty

    int ngens() const { return static_cast<int>(generator_names.size()); }

    Word parse_word(const std::string& text) const;
    std::string word_to_string(const Word& w) const;
};

/// Text format, one declaration per line:
///   gens: s t
///   rel: s s s s
///   rel: s t s T S T
/// Uppercase token = inverse of the lowercase generator. Blank lines and
/// lines starting with '#' are ignored.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation_file(const std::string& path);

Word free_reduce(Word w, int ngens);

/// Built-in presentations used by tests and as the CLI default.
namespace catalog {
Presentation h1();                 // order-96 complex reflection group (Shephard-Todd G8)
Presentation symmetric3();         // S3 as a Coxeter group
Presentation cyclic(int n);
Presentation quaternion8();
std::string h1_text();             // file-format text of h1()
}  // namespace catalog

}  // namespace wlab
