#pragma once

#include "slwin/automata.hpp"

namespace slwin {

/// Alphabet {0, ..., k} with decimal tokens.
Alphabet numeric_alphabet(int k);

/// The max-tracking family over {0,...,k}: a word belongs iff it is
/// non-empty, starts with 0, and every symbol is either 0 or differs from the
/// running maximum. Exactly k+3 states: start, trackers 0..k, sink.
Dfa lk_dfa(int k);

/// Direct membership check via the running-maximum criterion.
bool lk_member(const Word& w, int k);

/// Hard-instance words: z_0 in 0*, z_k = z_{k-1} k z_{k-1}.
bool zk_member(const Word& w, int k);
Dfa zk_dfa(int k, const Budget& budget = {});

/// All family members of the given total length, lexicographic order.
std::vector<Word> zk_words_of_length(int k, int n);

/// The first `count` members in length-then-lexicographic order.
std::vector<Word> zk_words(int k, int count);

/// Decision gadget for the constant class: a new state with an a-self-loop,
/// b-transitions from every final state, sole final; the result accepts
/// a* plus L(payload) b a*. Payload alphabet must be {a, b}.
Nfa rho_const(const Nfa& payload);

/// Decision gadget for the logarithmic class, over {a, b, c}.
Nfa rho_log(const Nfa& payload);

/// The reversal-dual gadget: reverse(rho_log(A)) equals sigma_gadget(reverse(A)).
Nfa sigma_gadget(const Nfa& payload);

/// Adds a final, non-initial state with a- and b-self-loops, which keeps the
/// empty subset unreachable when determinizing the reversal.
Nfa pad_for_reversal(const Nfa& payload);

}  // namespace slwin
