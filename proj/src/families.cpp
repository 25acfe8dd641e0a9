#include "slwin/families.hpp"

#include <algorithm>
#include <functional>

namespace slwin {

Alphabet numeric_alphabet(int k) {
    std::vector<std::string> tokens;
    tokens.reserve(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) tokens.push_back(std::to_string(i));
    return Alphabet(tokens);
}

Dfa lk_dfa(int k) {
    if (k < 0) throw Error("k must be >= 0");
    Alphabet alphabet = numeric_alphabet(k);
    // states: 0 = start, 1..k+1 = tracker for maximum 0..k, k+2 = sink
    std::vector<std::string> names{"start"};
    for (int i = 0; i <= k; ++i) names.push_back("max" + std::to_string(i));
    names.push_back("sink");
    State sink = static_cast<State>(k + 2);
    std::vector<std::tuple<State, Symbol, State>> transitions;
    for (Symbol t = 0; t <= k; ++t)
        transitions.emplace_back(0, t, t == 0 ? static_cast<State>(1) : sink);
    for (int cur = 0; cur <= k; ++cur) {
        State tracker = static_cast<State>(cur + 1);
        for (Symbol t = 0; t <= k; ++t) {
            State dst;
            if (t == 0)
                dst = tracker;
            else if (t == cur)
                dst = sink;  // repeats the running maximum
            else if (t > cur)
                dst = static_cast<State>(t + 1);
            else
                dst = tracker;  // 0 < t < max: allowed, maximum unchanged
            transitions.emplace_back(tracker, t, dst);
        }
    }
    for (Symbol t = 0; t <= k; ++t) transitions.emplace_back(sink, t, sink);
    std::vector<State> finals;
    for (int i = 0; i <= k; ++i) finals.push_back(static_cast<State>(i + 1));
    return make_dfa(alphabet, names, 0, finals, transitions);
}

bool lk_member(const Word& w, int k) {
    if (w.empty()) return false;
    if (w[0] != 0) return false;
    Symbol running_max = 0;
    for (Symbol a : w) {
        if (a < 0 || a > k) return false;
        if (a != 0 && a == running_max) return false;
        running_max = std::max(running_max, a);
    }
    return true;
}

bool zk_member(const Word& w, int k) {
    if (k == 0) {
        for (Symbol a : w)
            if (a != 0) return false;
        return true;
    }
    auto it = std::find(w.begin(), w.end(), static_cast<Symbol>(k));
    if (it == w.end()) return false;
    Word left(w.begin(), it), right(it + 1, w.end());
    return zk_member(left, k - 1) && zk_member(right, k - 1);
}

Dfa zk_dfa(int k, const Budget& budget) {
    if (k < 0) throw Error("k must be >= 0");
    if (k > 6) throw BudgetError("zk_dfa is capped at k <= 6");
    Alphabet alphabet = numeric_alphabet(k);
    // recursive concatenation: N_0 = 0*, N_j = N_{j-1} . j . N_{j-1}
    struct Piece {
        std::vector<State> initial;
        std::vector<State> finals;
        std::vector<std::tuple<State, Symbol, State>> transitions;
        int num_states;
    };
    std::function<Piece(int, State)> build = [&](int j, State base) -> Piece {
        if (j == 0) {
            Piece p;
            p.num_states = 1;
            p.initial = {base};
            p.finals = {base};
            p.transitions.emplace_back(base, 0, base);
            return p;
        }
        Piece left = build(j - 1, base);
        Piece right = build(j - 1, static_cast<State>(base + left.num_states));
        Piece p;
        p.num_states = left.num_states + right.num_states;
        p.initial = left.initial;
        p.finals = right.finals;
        p.transitions = left.transitions;
        p.transitions.insert(p.transitions.end(), right.transitions.begin(),
                             right.transitions.end());
        for (State f : left.finals)
            for (State i : right.initial)
                p.transitions.emplace_back(f, static_cast<Symbol>(j), i);
        return p;
    };
    Piece piece = build(k, 0);
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(piece.num_states));
    for (int i = 0; i < piece.num_states; ++i) names.push_back("z" + std::to_string(i));
    Nfa nfa = make_nfa(alphabet, names, piece.initial, piece.finals, piece.transitions);
    return minimize(determinize(nfa, budget));
}

std::vector<Word> zk_words_of_length(int k, int n) {
    if (n < 0) return {};
    if (k == 0) return {Word(static_cast<size_t>(n), 0)};
    int skeleton = (1 << k) - 1;  // every member has exactly 2^k - 1 non-zero symbols
    if (n < skeleton) return {};
    // w = left k right with a unique occurrence of the separator k
    std::vector<Word> out;
    for (int left_len = 0; left_len <= n - 1; ++left_len) {
        auto lefts = zk_words_of_length(k - 1, left_len);
        auto rights = zk_words_of_length(k - 1, n - 1 - left_len);
        for (const Word& lw : lefts)
            for (const Word& rw : rights) {
                Word w = lw;
                w.push_back(static_cast<Symbol>(k));
                w.insert(w.end(), rw.begin(), rw.end());
                out.push_back(std::move(w));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> zk_words(int k, int count) {
    std::vector<Word> out;
    int skeleton = k == 0 ? 0 : (1 << k) - 1;
    for (int n = skeleton; static_cast<int>(out.size()) < count && n <= skeleton + 4 * count + 8;
         ++n) {
        for (Word& w : zk_words_of_length(k, n)) {
            out.push_back(std::move(w));
            if (static_cast<int>(out.size()) == count) break;
        }
    }
    return out;
}

namespace {

Alphabet ab_alphabet() { return Alphabet({"a", "b"}); }
Alphabet abc_alphabet() { return Alphabet({"a", "b", "c"}); }

void require_ab(const Nfa& payload) {
    if (payload.alphabet != ab_alphabet())
        throw PreconditionError("gadget payload must use the alphabet {a, b}");
}

}  // namespace

Nfa rho_const(const Nfa& payload) {
    require_ab(payload);
    Nfa out = payload;
    State fresh = static_cast<State>(out.num_states());
    out.state_names.push_back("rho");
    std::fill(out.final_states.begin(), out.final_states.end(), false);
    out.final_states.push_back(true);
    out.targets.emplace_back(static_cast<size_t>(out.alphabet.size()));
    Symbol a = 0, b = 1;
    out.targets[static_cast<size_t>(fresh)][static_cast<size_t>(a)].push_back(fresh);
    for (State q = 0; q < payload.num_states(); ++q)
        if (payload.is_final(q))
            out.targets[static_cast<size_t>(q)][static_cast<size_t>(b)].push_back(fresh);
    out.initial.push_back(fresh);
    std::sort(out.initial.begin(), out.initial.end());
    for (auto& per_state : out.targets)
        for (auto& v : per_state) std::sort(v.begin(), v.end());
    return out;
}

namespace {

Nfa widen_to_abc(const Nfa& payload) {
    Nfa out{abc_alphabet(), payload.state_names, payload.initial, payload.final_states, {}};
    out.targets.assign(static_cast<size_t>(payload.num_states()),
                       std::vector<std::vector<State>>(3));
    for (State q = 0; q < payload.num_states(); ++q)
        for (Symbol s = 0; s < 2; ++s)
            out.targets[static_cast<size_t>(q)][static_cast<size_t>(s)] =
                payload.targets[static_cast<size_t>(q)][static_cast<size_t>(s)];
    return out;
}

}  // namespace

Nfa rho_log(const Nfa& payload) {
    require_ab(payload);
    Nfa out = widen_to_abc(payload);
    State fresh = static_cast<State>(out.num_states());
    Symbol a = 0, b = 1, c = 2;
    out.state_names.push_back("rho");
    std::fill(out.final_states.begin(), out.final_states.end(), false);
    out.final_states.push_back(true);
    out.targets.emplace_back(3);
    out.targets[static_cast<size_t>(fresh)][static_cast<size_t>(a)].push_back(fresh);
    out.targets[static_cast<size_t>(fresh)][static_cast<size_t>(b)].push_back(fresh);
    for (State q = 0; q < payload.num_states(); ++q) {
        if (payload.is_final(q))
            out.targets[static_cast<size_t>(q)][static_cast<size_t>(c)].push_back(fresh);
        out.targets[static_cast<size_t>(fresh)][static_cast<size_t>(c)].push_back(q);
    }
    out.initial.push_back(fresh);
    std::sort(out.initial.begin(), out.initial.end());
    for (auto& per_state : out.targets)
        for (auto& v : per_state) std::sort(v.begin(), v.end());
    return out;
}

Nfa sigma_gadget(const Nfa& payload) {
    require_ab(payload);
    Nfa out = widen_to_abc(payload);
    State fresh = static_cast<State>(out.num_states());
    Symbol a = 0, b = 1, c = 2;
    out.state_names.push_back("sigma");
    out.final_states.push_back(true);
    out.targets.emplace_back(3);
    out.targets[static_cast<size_t>(fresh)][static_cast<size_t>(a)].push_back(fresh);
    out.targets[static_cast<size_t>(fresh)][static_cast<size_t>(b)].push_back(fresh);
    for (State q = 0; q < payload.num_states(); ++q) {
        out.targets[static_cast<size_t>(q)][static_cast<size_t>(c)].push_back(fresh);
    }
    for (State q : out.initial)
        out.targets[static_cast<size_t>(fresh)][static_cast<size_t>(c)].push_back(q);
    out.initial = {fresh};
    for (auto& per_state : out.targets)
        for (auto& v : per_state) std::sort(v.begin(), v.end());
    return out;
}

Nfa pad_for_reversal(const Nfa& payload) {
    require_ab(payload);
    Nfa out = payload;
    State fresh = static_cast<State>(out.num_states());
    out.state_names.push_back("pad");
    out.final_states.push_back(true);
    out.targets.emplace_back(static_cast<size_t>(out.alphabet.size()));
    for (Symbol s = 0; s < 2; ++s)
        out.targets[static_cast<size_t>(fresh)][static_cast<size_t>(s)].push_back(fresh);
    return out;
}

}  // namespace slwin
