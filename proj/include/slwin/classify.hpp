#pragma once

#include <optional>

#include "slwin/automata.hpp"

namespace slwin {

enum class FixedClass { Constant, Logarithmic, Linear };
enum class VariableClass { TrivialConstant, Logarithmic, Linear };

const char* to_string(FixedClass c);
const char* to_string(VariableClass c);

/// Space classes of the trichotomy, one per window model.
struct SpaceClass {
    FixedClass fixed = FixedClass::Constant;
    VariableClass variable = VariableClass::TrivialConstant;
};

/// Evidence that a DFA is not well-behaved: a pivot state p inside a
/// reachable SCC with two equal-length continuations u0, u1 to a non-final
/// state p0 and a final state p1, plus return paths v0, v1 closing both
/// loops with |u0 v0| = |u1 v1|. All paths replay inside the cited DFA.
struct NonWellBehavedWitness {
    Word u;   // initial -> pivot
    Word u0;  // pivot -> p0 (non-final), |u0| = |u1|
    Word v0;  // p0 -> pivot
    Word u1;  // pivot -> p1 (final)
    Word v1;  // p1 -> pivot, |u0 v0| = |u1 v1|
    State pivot = -1;
    State p0 = -1;
    State p1 = -1;
};

void verify_non_well_behaved_witness(const Dfa& b, const NonWellBehavedWitness& w);

struct WellBehavedResult {
    bool well_behaved = true;
    std::optional<NonWellBehavedWitness> witness;
};

/// Checks every SCC reachable from the initial state: from each diagonal
/// pair, pairs reachable by equal-length in-SCC paths must agree on
/// finality. Extracts a shortest witness when they do not.
WellBehavedResult is_well_behaved(const Dfa& b);

/// True iff membership of the length-n window is determined by the last |Q|
/// symbols for every n: every state pair reachable from the diagonal by
/// equal-length words has finite merge distance.
bool is_constant_fixed(const Dfa& minimal_dfa);

/// Words u0, u1 of equal positive length, u_i a suffix of w_i, such that the
/// state sets reachable via u_i followed by {w0, w1}* are disjoint; certifies
/// linear space.
struct CriticalTuple {
    Word u0, u1, w0, w1;
    std::vector<State> reachable0, reachable1;  // the two disjoint state sets
};

CriticalTuple critical_from_witness(const Dfa& minimal_dfa, const NonWellBehavedWitness& w);
void verify_critical_tuple(const Dfa& minimal_dfa, const CriticalTuple& t);

/// The 2^j words u u_{a_1} v_{a_1} ... u_{a_j} v_{a_j} over all bit vectors
/// a; a correct variable-size algorithm must give them pairwise distinct
/// states (after reversal into the analyzed language's orientation).
std::vector<Word> linear_witness_streams(const NonWellBehavedWitness& w, int j);

struct ClassifyResult {
    SpaceClass space;
    Dfa minimal;       // canonical minimal DFA of the input language
    Dfa reversal_dfa;  // subset automaton of the reversal; hosts the witness
    std::optional<NonWellBehavedWitness> linear_witness;
    std::optional<CriticalTuple> critical;

    ClassifyResult(Dfa minimal_dfa, Dfa reversal)
        : minimal(std::move(minimal_dfa)), reversal_dfa(std::move(reversal)) {}
};

ClassifyResult classify_dfa(const Dfa& a, const Budget& budget = {});

/// Determinizes (accepting the exponential cost), then classifies; also runs
/// the direct well-behavedness check on the reversal subset automaton of the
/// NFA itself and requires both routes to agree.
ClassifyResult classify_nfa(const Nfa& a, const Budget& budget = {});

/// Number of positions where dropping the first symbol of the suffix flips
/// membership; one right-to-left pass.
int64_t alt_count(const Dfa& minimal_dfa, const Word& x);

struct AlternationReport {
    std::optional<int64_t> bound;  // nullopt = unbounded
    Word witness;                  // bounded: word whose alt count equals the bound
    Word cycle_entry;              // unbounded: path to a toggle-carrying cycle ...
    Word cycle;                    // ... and the cycle itself (reversal-automaton words)
};

AlternationReport max_alternations(const Dfa& minimal_dfa);

/// Max merge distance over all state pairs: finite value k means the language
/// is k-suffix testable and not (k-1)-suffix testable.
StateDistance suffix_testable_k(const Dfa& minimal_dfa);

bool is_length_language(const Dfa& a);
bool is_left_ideal(const Dfa& a);
bool is_right_ideal(const Dfa& a);

/// Compressed run record: entry state of each visited SCC plus the number of
/// symbols read inside it.
struct PathSummary {
    std::vector<std::pair<State, int64_t>> entries;

    bool operator==(const PathSummary& o) const { return entries == o.entries; }
    bool operator<(const PathSummary& o) const { return entries < o.entries; }
};

PathSummary path_summary(const Dfa& b, State start, const Word& w);

/// Set D, |D| <= |Q| - 1, such that every pair of distinct states is
/// separated by some word in D.
std::vector<Word> distinguishing_set(const Dfa& minimal_dfa);

enum class DecisionProblem { Dfa1, DfaLog, Nfa1, NfaLog };

struct DecideResult {
    bool answer = false;
    Dfa minimal;
    Dfa reversal_dfa;
    std::optional<NonWellBehavedWitness> non_well_behaved;   // log-problem "no"
    std::optional<CriticalTuple> critical;                   // log-problem "no"
    std::optional<std::pair<Word, Word>> equal_length_words; // constant-problem "no"
    std::optional<std::pair<State, State>> unmerged_pair;    // constant-problem "no"

    DecideResult(Dfa minimal_dfa, Dfa reversal)
        : minimal(std::move(minimal_dfa)), reversal_dfa(std::move(reversal)) {}
};

DecideResult decide_dfa(DecisionProblem problem, const Dfa& a, const Budget& budget = {});
DecideResult decide_nfa(DecisionProblem problem, const Nfa& a, const Budget& budget = {});

}  // namespace slwin
