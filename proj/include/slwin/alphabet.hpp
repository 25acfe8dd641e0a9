#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "slwin/base.hpp"

namespace slwin {

/// Ordered set of distinct symbol tokens. The order is fixed at construction
/// and defines the canonical symbol order used by every deterministic
/// construction in the library. Tokens may be multi-character (e.g. "10").
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> tokens);

    int size() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(Symbol s) const { return tokens_.at(static_cast<size_t>(s)); }
    std::optional<Symbol> find(const std::string& token) const;
    const std::vector<std::string>& tokens() const { return tokens_; }

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }
    bool operator!=(const Alphabet& other) const { return tokens_ != other.tokens_; }

    Word parse_word(const std::string& space_separated) const;
    std::string format_word(const Word& w) const;

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Symbol> index_;
};

}  // namespace slwin
