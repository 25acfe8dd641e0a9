#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slwin {

using Symbol = int32_t;  // index into an Alphabet
using State = int32_t;
using Word = std::vector<Symbol>;
using BitString = std::vector<bool>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class BudgetError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Consistency failures: two routes that must agree disagreed, a witness
// failed to replay, an encoding collided. Always a bug, never user error.
class InternalError : public Error {
public:
    using Error::Error;
};

struct Budget {
    uint64_t max_subset_states = uint64_t(1) << 20;
    uint64_t max_explore_states = uint64_t(1) << 22;
    uint64_t max_monoid_elements = uint64_t(1) << 16;
    uint64_t max_window_states = uint64_t(1) << 20;
    uint64_t max_word_enumeration = uint64_t(1) << 22;
    uint64_t max_path_descriptions = 10000;
    uint64_t max_normalize_variants = 1000;
};

std::string bits_to_string(const BitString& bits);
BitString bits_from_string(const std::string& s);

// i-th bit string in length-lexicographic order: 0 -> "", 1 -> "0", 2 -> "1",
// 3 -> "00", ...  |code(i)| = floor(log2(i+1)).
BitString length_lex_code(uint64_t index);

Word reversed(const Word& w);

}  // namespace slwin
