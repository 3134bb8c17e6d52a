#include "wlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wlab {

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool is_upper_token(const std::string& s) {
    return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

}  // namespace

Word free_reduce(Word w, int ngens) {
    Word out;
    for (int letter : w) {
        if (!out.empty() && out.back() == inverse_letter(letter, ngens)) {
            out.pop_back();
        } else {
            out.push_back(letter);
        }
    }
    return out;
}

Word Presentation::parse_word(const std::string& text) const {
    Word w;
    for (const auto& tok : split_tokens(text)) {
        // exact generator name first, then uppercase-as-inverse
        auto it = std::find(generator_names.begin(), generator_names.end(), tok);
        if (it != generator_names.end()) {
            w.push_back(static_cast<int>(it - generator_names.begin()));
            continue;
        }
        if (is_upper_token(tok)) {
            std::string low = to_lower(tok);
            it = std::find(generator_names.begin(), generator_names.end(), low);
            if (it != generator_names.end()) {
                w.push_back(static_cast<int>(it - generator_names.begin()) + ngens());
                continue;
            }
        }
        throw std::invalid_argument("unknown generator token '" + tok + "'");
    }
    return free_reduce(std::move(w), ngens());
}

std::string Presentation::word_to_string(const Word& w) const {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0) os << ' ';
        int letter = w[i];
        if (letter < ngens()) {
            os << generator_names[letter];
        } else {
            std::string name = generator_names[letter - ngens()];
            std::transform(name.begin(), name.end(), name.begin(),
                           [](unsigned char c) { return std::toupper(c); });
            os << name;
        }
    }
    return os.str();
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::vector<std::string> pending_relators;
    while (std::getline(is, line)) {
        ++lineno;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        auto colon = trimmed.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("presentation parse error at line " +
                                        std::to_string(lineno) + ": expected 'gens:' or 'rel:'");
        }
        std::string key = trimmed.substr(0, colon);
        std::string rest = trimmed.substr(colon + 1);
        if (key == "gens") {
            if (!p.generator_names.empty()) {
                throw std::invalid_argument("presentation parse error at line " +
                                            std::to_string(lineno) + ": duplicate gens line");
            }
            p.generator_names = split_tokens(rest);
            if (p.generator_names.empty()) {
                throw std::invalid_argument("presentation parse error at line " +
                                            std::to_string(lineno) + ": empty generator list");
            }
        } else if (key == "rel") {
            pending_relators.push_back(rest);
        } else {
            throw std::invalid_argument("presentation parse error at line " +
                                        std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (p.generator_names.empty()) {
        throw std::invalid_argument("presentation parse error: missing gens line");
    }
    for (const auto& r : pending_relators) {
        Word w = p.parse_word(r);
        if (w.empty()) continue;  // freely trivial relator carries no information
        p.relators.push_back(std::move(w));
    }
    if (p.relators.empty()) {
        throw std::invalid_argument("presentation parse error: no nontrivial relators");
    }
    return p;
}

Presentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open presentation file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

namespace catalog {

std::string h1_text() {
    return "gens: s t\n"
           "rel: s s s s\n"
           "rel: t t t t\n"
           "rel: s t s T S T\n";
}

Presentation h1() { return parse_presentation(h1_text()); }

Presentation symmetric3() {
    return parse_presentation(
        "gens: s t\n"
        "rel: s s\n"
        "rel: t t\n"
        "rel: s t s t s t\n");
}

Presentation cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n must be positive");
    std::ostringstream os;
    os << "gens: a\nrel:";
    for (int i = 0; i < n; ++i) os << " a";
    os << "\n";
    return parse_presentation(os.str());
}

Presentation quaternion8() {
    return parse_presentation(
        "gens: a b\n"
        "rel: a a a a\n"
        "rel: b b A A\n"
        "rel: B a b a\n");
}

}  // namespace catalog

}  // namespace wlab
