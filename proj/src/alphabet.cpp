#include "slwin/alphabet.hpp"

#include <cctype>
#include <sstream>

namespace slwin {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw Error("alphabet must be non-empty");
    for (size_t i = 0; i < tokens_.size(); ++i) {
        const std::string& t = tokens_[i];
        if (t.empty()) throw Error("alphabet token must be non-empty");
        for (char c : t) {
            if (std::isspace(static_cast<unsigned char>(c)))
                throw Error("alphabet token may not contain whitespace: '" + t + "'");
        }
        if (!index_.emplace(t, static_cast<Symbol>(i)).second)
            throw Error("duplicate alphabet token: '" + t + "'");
    }
}

std::optional<Symbol> Alphabet::find(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Word Alphabet::parse_word(const std::string& space_separated) const {
    Word w;
    std::istringstream in(space_separated);
    std::string tok;
    while (in >> tok) {
        auto s = find(tok);
        if (!s) throw Error("token '" + tok + "' is not in the alphabet");
        w.push_back(*s);
    }
    return w;
}

std::string Alphabet::format_word(const Word& w) const {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(' ');
        out += token(w[i]);
    }
    return out;
}

}  // namespace slwin
