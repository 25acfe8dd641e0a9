#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "slwin/classify.hpp"
#include "slwin/exactspace.hpp"

namespace slwin {

using BigCount = boost::multiprecision::cpp_int;

/// Growth dichotomy of a regular language: polynomial iff, after trimming to
/// states on accepting paths, every SCC keeps at most one outgoing symbol per
/// state inside itself.
struct GrowthClass {
    bool polynomial = true;
    // exponential witness: a state carrying two distinct cycles
    State witness_state = -1;
    Word cycle_a, cycle_b;
    // polynomial: cycle word of each non-trivial SCC, keyed by a member state
    std::vector<std::pair<State, Word>> cycle_words;
    // longest condensation chain of non-trivial cycles minus one; estimate
    // only, no correctness contract
    int degree_hint = 0;
};

GrowthClass growth_class(const Dfa& l);

/// Number of accepted words of length <= n, exact arithmetic.
BigCount growth_count(const Dfa& l, int n);

/// Partial DFA whose SCCs are cycles arranged in a chain with single bridging
/// transitions and a single final state in the last component.
struct LinearCycleAutomaton {
    PartialDfa automaton;
    std::vector<std::vector<State>> chain;  // SCCs in chain order
};

void verify_linear_cycle_automaton(const LinearCycleAutomaton& lca);

/// Splits a polynomial-growth language into linear-cycle components, one per
/// path description of the trimmed minimal automaton; the union of component
/// languages equals the input language (machine-checked).
std::vector<LinearCycleAutomaton> linear_cycle_decomposition(const Dfa& l,
                                                             const Budget& budget = {});

/// Unrolls cycles so every non-trivial cycle has the same length (the lcm of
/// the input cycle lengths); the union over all offset choices is equivalent
/// to the input component.
std::vector<LinearCycleAutomaton> normalize_cycle_lengths(const LinearCycleAutomaton& lca,
                                                          const Budget& budget = {});

enum class LeafTag { LeftIdeal, RightIdeal, LengthLanguage, SuffixTestable, Finite };
const char* to_string(LeafTag t);

/// Boolean formula over automaton leaves, each carrying a machine-checkable
/// structural tag.
struct CertificateNode {
    enum class Kind { Leaf, Union, Intersection, Complement };
    Kind kind = Kind::Leaf;
    std::vector<CertificateNode> children;
    std::optional<Dfa> leaf;
    LeafTag tag = LeafTag::Finite;
    int suffix_k = 0;  // for SuffixTestable leaves

    static CertificateNode make_leaf(Dfa a, LeafTag tag, int suffix_k = 0);
    static CertificateNode make_union(std::vector<CertificateNode> children);
    static CertificateNode make_intersection(std::vector<CertificateNode> children);
    static CertificateNode make_complement(CertificateNode child);
};

struct DecompositionCertificate {
    Dfa target;
    CertificateNode formula;
};

Dfa evaluate_certificate(const CertificateNode& node, const Alphabet& alphabet);

/// Re-verifies every leaf tag via the classify predicates and checks that the
/// evaluated formula is language-equivalent to the target; throws on failure.
void verify_certificate(const DecompositionCertificate& cert);

/// Certificate L = (L Sigma*) & Pref(L) & Sigma^p (Sigma^q)* for a component
/// with uniform non-trivial cycle length q (exact length when there is none).
DecompositionCertificate lca_to_boolean_combination(const LinearCycleAutomaton& lca);

/// Full pipeline for the logarithmic (or constant) class: image under the
/// suffix-class transduction, reversal decomposition into right ideals and
/// length languages, reversal back, and leaf-wise pre-image, yielding left
/// ideals and length languages over the original alphabet.
DecompositionCertificate log_class_decomposition(const Dfa& l, const Budget& budget = {});

/// L as the parity union of the alternation-threshold left ideals
/// P_i = { x : alt(x) >= i }; requires a finite alternation bound.
DecompositionCertificate alternation_decomposition(const Dfa& l, const Budget& budget = {});

/// L = (L & Sigma^{<k}) | union over z in Sigma^k of (L z^-1) Sigma^k & Sigma* z,
/// with k the least bound making every right quotient a length language;
/// requires the constant fixed class.
DecompositionCertificate constant_decomposition(const Dfa& l, const Budget& budget = {});

}  // namespace slwin
