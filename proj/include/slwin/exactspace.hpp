#pragma once

#include "slwin/streaming.hpp"

namespace slwin {

/// The Myhill-Nerode classes of all suffixes of a word, as states of the
/// minimal DFA: entry i is the state reached from the initial state on the
/// suffix starting at position i. Length equals the word length.
using SuffixClassSequence = std::vector<State>;

SuffixClassSequence suffix_classes(const Dfa& minimal_dfa, const Word& w);

/// L is trivial iff it is empty or universal.
bool language_trivial(const Dfa& l);

struct SuffixCountPair {
    uint64_t by_enumeration = 0;  // brute force over all words of length <= n
    uint64_t by_closure = 0;      // append-closure of the suffix-class automaton
};

/// Number of distinct suffix-class sequences over words of length <= n,
/// computed two independent ways. Disagreement is an internal error.
SuffixCountPair suffix_profile_count_both(const Dfa& minimal_dfa, int n,
                                          const Budget& budget = {});
uint64_t suffix_profile_count(const Dfa& minimal_dfa, int n, const Budget& budget = {});

/// Space-optimal variable-size algorithm: the state is the suffix-class
/// sequence of the current window; codes follow the first-reached-length
/// enumeration, so the measured space at window bound n is exactly
/// floor(log2 of the suffix-profile count). Rejects trivial languages.
AlgoPtr optimal_variable_algorithm(const Dfa& minimal_dfa, const Budget& budget = {});

/// Mealy machine over the transition monoid of the minimal DFA whose
/// right-to-left transduction computes the suffix-class sequence. The output
/// alphabet has one token "c<i>" per state of the minimal DFA.
MealyMachine suffix_class_transducer(const Dfa& minimal_dfa, const Budget& budget = {});

/// Minimal DFA of { w : the fixed window of length n over w belongs to L }.
Dfa window_language_dfa(const Dfa& l, int n, Symbol pad = 0, const Budget& budget = {});

/// Optimal fixed-size space in bits: floor(log2 of the minimal window-DFA
/// state count).
int exact_fixed_space_bits(const Dfa& l, int n, Symbol pad = 0, const Budget& budget = {});

/// Fixed-size algorithm for sparse languages: stores (length, witness index)
/// of the longest window suffix that is a prefix of some word of L of window
/// length; O(log |L ∩ Sigma^n| + log n) bits.
AlgoPtr sparse_fixed_algorithm(const Dfa& l, const FixedWindowSpec& spec,
                               const Budget& budget = {});

/// Fixed-size algorithm for constant-space languages: a ring buffer of the
/// last |Q| symbols; requires is_constant_fixed and window length >= |Q|.
AlgoPtr constant_fixed_algorithm(const Dfa& minimal_dfa, const FixedWindowSpec& spec);

int floor_log2(uint64_t x);  // floor(log2 x) for x >= 1

}  // namespace slwin
