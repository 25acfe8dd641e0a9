#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "slwin/alphabet.hpp"
#include "slwin/base.hpp"

namespace slwin {

/// Nondeterministic finite automaton. States are dense indices 0..n-1;
/// `state_names` carries the external names. An empty initial set denotes
/// the empty language (it arises from reversing an automaton with no final
/// states and keeps `reverse` total).
struct Nfa {
    Alphabet alphabet;
    std::vector<std::string> state_names;
    std::vector<State> initial;                            // sorted, distinct
    std::vector<bool> final_states;                        // indexed by state
    std::vector<std::vector<std::vector<State>>> targets;  // [state][symbol] -> sorted targets

    int num_states() const { return static_cast<int>(state_names.size()); }
    bool is_final(State q) const { return final_states[static_cast<size_t>(q)]; }
    bool accepts(const Word& w) const;
};

/// Deterministic finite automaton with a total transition function.
struct Dfa {
    Alphabet alphabet;
    std::vector<std::string> state_names;
    State initial = 0;
    std::vector<bool> final_states;
    std::vector<State> delta;  // num_states * |alphabet|, row-major by state

    int num_states() const { return static_cast<int>(state_names.size()); }
    bool is_final(State q) const { return final_states[static_cast<size_t>(q)]; }
    State step(State q, Symbol s) const {
        return delta[static_cast<size_t>(q) * static_cast<size_t>(alphabet.size()) +
                     static_cast<size_t>(s)];
    }
    State run(State q, const Word& w) const;
    bool accepts(const Word& w) const { return is_final(run(initial, w)); }
};

/// DFA with a partial transition function (-1 = undefined). Only used by the
/// decomposition pipeline, where trimming removes states that cannot lie on
/// an accepting run.
struct PartialDfa {
    Alphabet alphabet;
    std::vector<std::string> state_names;
    State initial = 0;
    std::vector<bool> final_states;
    std::vector<State> delta;  // -1 where undefined

    int num_states() const { return static_cast<int>(state_names.size()); }
    bool is_final(State q) const { return final_states[static_cast<size_t>(q)]; }
    State step(State q, Symbol s) const {
        return delta[static_cast<size_t>(q) * static_cast<size_t>(alphabet.size()) +
                     static_cast<size_t>(s)];
    }
    std::optional<State> run(State q, const Word& w) const;
    bool accepts(const Word& w) const;
    Nfa to_nfa() const;
};

struct SccComponent {
    std::vector<State> states;  // sorted
    bool is_trivial_cycle = false;
    bool is_cycle = false;  // every member has at most one distinct successor inside the component
    bool all_final = false;
    bool all_nonfinal = false;
};

/// Components in reverse-topological-compatible order: every condensation
/// successor of component i has an index < i.
struct SccPartition {
    std::vector<SccComponent> components;
    std::vector<int> component_of;               // state -> component index
    std::vector<std::vector<int>> condensation;  // component -> sorted successor components
};

struct StateDistance {
    static StateDistance infinite() { return StateDistance{-1}; }
    static StateDistance finite(int k) { return StateDistance{k}; }
    bool is_infinite() const { return raw < 0; }
    int value() const;
    bool operator==(const StateDistance& o) const { return raw == o.raw; }

    int raw = -1;
};

// --- construction helpers -------------------------------------------------

/// Builds a total DFA, adding a rejecting sink when transitions are missing.
Dfa make_dfa(Alphabet alphabet, std::vector<std::string> state_names, State initial,
             std::vector<State> finals,
             const std::vector<std::tuple<State, Symbol, State>>& transitions);

Nfa make_nfa(Alphabet alphabet, std::vector<std::string> state_names, std::vector<State> initial,
             std::vector<State> finals,
             const std::vector<std::tuple<State, Symbol, State>>& transitions);

Nfa to_nfa(const Dfa& a);
Dfa empty_language_dfa(const Alphabet& alphabet);
Dfa universal_dfa(const Alphabet& alphabet);

// --- core operations --------------------------------------------------------

/// Reachable power-set automaton; states are numbered in breadth-first
/// discovery order over the canonical symbol order.
Dfa determinize(const Nfa& a, const Budget& budget = {});

/// Reverses all transitions and swaps initial and final state sets.
Nfa reverse(const Nfa& a);

/// determinize(reverse(a)); recognizes L(a)^R.
Dfa reverse_determinize(const Nfa& a, const Budget& budget = {});
Dfa reverse_determinize(const Dfa& a, const Budget& budget = {});

/// Canonical minimal DFA: Hopcroft refinement followed by breadth-first
/// renaming, so equal languages over equal alphabets yield byte-identical
/// results.
Dfa minimize(const Dfa& a);

bool is_minimal(const Dfa& a);

enum class BoolOp { Union, Intersection, Difference, Complement };

/// Product / complement construction; the result is minimized.
Dfa combine(BoolOp op, const Dfa& a, const Dfa* b = nullptr);

/// Shortest, then lexicographically least, word accepted by exactly one of
/// the two automata. nullopt iff the languages are equal.
std::optional<Word> separating_word(const Dfa& a, const Dfa& b);
bool equivalent(const Dfa& a, const Dfa& b);

bool language_empty(const Dfa& a);
bool language_finite(const Dfa& a);
std::optional<Word> shortest_accepted(const Dfa& a);

SccPartition sccs(const Dfa& a);

/// d(p,q): least k such that delta(p,z) = delta(q,z) for every word z of
/// length k, via the monotone pair fixpoint; Infinite if no k <= |Q| works.
/// Requires a minimal automaton.
StateDistance distance(const Dfa& minimal_dfa, State p, State q);
std::vector<StateDistance> distance_table(const Dfa& minimal_dfa);  // |Q|*|Q|, row-major

// --- block code -------------------------------------------------------------

/// Block code for tuples of non-empty bit strings: first bit of each part
/// 0 -> 10 / 1 -> 11, later bits 0 -> 00 / 1 -> 01. Output length is exactly
/// twice the total input length and the code is uniquely decodable.
BitString encode_tuple(const std::vector<BitString>& parts);
std::vector<BitString> decode_tuple(const BitString& bits);

}  // namespace slwin
