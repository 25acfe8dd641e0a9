#include "slwin/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

namespace slwin {

namespace {

std::string canonical_name(size_t i) { return "q" + std::to_string(i); }

struct VectorHash {
    size_t operator()(const std::vector<State>& v) const {
        size_t h = 1469598103934665603ull;
        for (State s : v) {
            h ^= static_cast<size_t>(s) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<bool> reachable_states(const Dfa& a) {
    std::vector<bool> seen(a.num_states(), false);
    std::deque<State> queue{a.initial};
    seen[static_cast<size_t>(a.initial)] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            State t = a.step(q, s);
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = true;
                queue.push_back(t);
            }
        }
    }
    return seen;
}

Dfa restrict_to_reachable(const Dfa& a) {
    std::vector<bool> keep = reachable_states(a);
    std::vector<State> remap(a.num_states(), -1);
    std::vector<std::string> names;
    std::vector<bool> finals;
    for (State q = 0; q < a.num_states(); ++q) {
        if (keep[static_cast<size_t>(q)]) {
            remap[static_cast<size_t>(q)] = static_cast<State>(names.size());
            names.push_back(a.state_names[static_cast<size_t>(q)]);
            finals.push_back(a.is_final(q));
        }
    }
    Dfa out{a.alphabet, std::move(names), remap[static_cast<size_t>(a.initial)], std::move(finals),
            {}};
    out.delta.assign(static_cast<size_t>(out.num_states()) * a.alphabet.size(), 0);
    for (State q = 0; q < a.num_states(); ++q) {
        if (!keep[static_cast<size_t>(q)]) continue;
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            out.delta[static_cast<size_t>(remap[static_cast<size_t>(q)]) * a.alphabet.size() +
                      static_cast<size_t>(s)] = remap[static_cast<size_t>(a.step(q, s))];
        }
    }
    return out;
}

// Breadth-first renaming over the canonical symbol order; the input must have
// every state reachable.
Dfa canonical_renumber(const Dfa& a) {
    std::vector<State> order;
    std::vector<State> remap(a.num_states(), -1);
    order.reserve(a.num_states());
    remap[static_cast<size_t>(a.initial)] = 0;
    order.push_back(a.initial);
    for (size_t i = 0; i < order.size(); ++i) {
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            State t = a.step(order[i], s);
            if (remap[static_cast<size_t>(t)] < 0) {
                remap[static_cast<size_t>(t)] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }
    if (order.size() != static_cast<size_t>(a.num_states()))
        throw InternalError("canonical_renumber: unreachable states present");
    Dfa out{a.alphabet, {}, 0, {}, {}};
    out.state_names.resize(order.size());
    out.final_states.resize(order.size());
    out.delta.assign(order.size() * a.alphabet.size(), 0);
    for (size_t i = 0; i < order.size(); ++i) {
        State old = order[i];
        out.state_names[i] = canonical_name(i);
        out.final_states[i] = a.is_final(old);
        for (Symbol s = 0; s < a.alphabet.size(); ++s)
            out.delta[i * a.alphabet.size() + static_cast<size_t>(s)] =
                remap[static_cast<size_t>(a.step(old, s))];
    }
    return out;
}

}  // namespace

int StateDistance::value() const {
    if (raw < 0) throw Error("StateDistance::value() on Infinite");
    return raw;
}

bool Nfa::accepts(const Word& w) const {
    std::vector<bool> cur(static_cast<size_t>(num_states()), false);
    for (State q : initial) cur[static_cast<size_t>(q)] = true;
    for (Symbol s : w) {
        std::vector<bool> next(static_cast<size_t>(num_states()), false);
        for (State q = 0; q < num_states(); ++q) {
            if (!cur[static_cast<size_t>(q)]) continue;
            for (State t : targets[static_cast<size_t>(q)][static_cast<size_t>(s)])
                next[static_cast<size_t>(t)] = true;
        }
        cur.swap(next);
    }
    for (State q = 0; q < num_states(); ++q)
        if (cur[static_cast<size_t>(q)] && is_final(q)) return true;
    return false;
}

State Dfa::run(State q, const Word& w) const {
    for (Symbol s : w) q = step(q, s);
    return q;
}

std::optional<State> PartialDfa::run(State q, const Word& w) const {
    for (Symbol s : w) {
        q = step(q, s);
        if (q < 0) return std::nullopt;
    }
    return q;
}

bool PartialDfa::accepts(const Word& w) const {
    auto q = run(initial, w);
    return q && is_final(*q);
}

Nfa PartialDfa::to_nfa() const {
    Nfa out{alphabet, state_names, {initial}, final_states, {}};
    out.targets.assign(static_cast<size_t>(num_states()),
                       std::vector<std::vector<State>>(static_cast<size_t>(alphabet.size())));
    for (State q = 0; q < num_states(); ++q)
        for (Symbol s = 0; s < alphabet.size(); ++s) {
            State t = step(q, s);
            if (t >= 0) out.targets[static_cast<size_t>(q)][static_cast<size_t>(s)].push_back(t);
        }
    return out;
}

Dfa make_dfa(Alphabet alphabet, std::vector<std::string> state_names, State initial,
             std::vector<State> finals,
             const std::vector<std::tuple<State, Symbol, State>>& transitions) {
    int n = static_cast<int>(state_names.size());
    if (n == 0) throw Error("automaton needs at least one state");
    if (initial < 0 || initial >= n) throw Error("initial state out of range");
    Dfa out{std::move(alphabet), std::move(state_names), initial, {}, {}};
    out.final_states.assign(static_cast<size_t>(n), false);
    for (State f : finals) {
        if (f < 0 || f >= n) throw Error("final state out of range");
        out.final_states[static_cast<size_t>(f)] = true;
    }
    out.delta.assign(static_cast<size_t>(n) * out.alphabet.size(), -1);
    for (const auto& [src, sym, dst] : transitions) {
        if (src < 0 || src >= n || dst < 0 || dst >= n) throw Error("transition endpoint out of range");
        if (sym < 0 || sym >= out.alphabet.size()) throw Error("transition symbol out of range");
        State& cell = out.delta[static_cast<size_t>(src) * out.alphabet.size() + static_cast<size_t>(sym)];
        if (cell >= 0 && cell != dst)
            throw Error("conflicting transitions from state '" +
                        out.state_names[static_cast<size_t>(src)] + "' on symbol '" +
                        out.alphabet.token(sym) + "'");
        cell = dst;
    }
    bool needs_sink = false;
    for (State v : out.delta)
        if (v < 0) needs_sink = true;
    if (needs_sink) {
        std::string sink_name = "_sink";
        while (std::find(out.state_names.begin(), out.state_names.end(), sink_name) !=
               out.state_names.end())
            sink_name += "_";
        State sink = static_cast<State>(out.num_states());
        out.state_names.push_back(sink_name);
        out.final_states.push_back(false);
        std::vector<State> delta2(static_cast<size_t>(out.num_states()) * out.alphabet.size(),
                                  sink);
        std::copy(out.delta.begin(), out.delta.end(), delta2.begin());
        for (State& v : delta2)
            if (v < 0) v = sink;
        out.delta = std::move(delta2);
    }
    return out;
}

Nfa make_nfa(Alphabet alphabet, std::vector<std::string> state_names, std::vector<State> initial,
             std::vector<State> finals,
             const std::vector<std::tuple<State, Symbol, State>>& transitions) {
    int n = static_cast<int>(state_names.size());
    if (n == 0) throw Error("automaton needs at least one state");
    Nfa out{std::move(alphabet), std::move(state_names), {}, {}, {}};
    out.final_states.assign(static_cast<size_t>(n), false);
    for (State f : finals) {
        if (f < 0 || f >= n) throw Error("final state out of range");
        out.final_states[static_cast<size_t>(f)] = true;
    }
    std::set<State> init_set;
    for (State q : initial) {
        if (q < 0 || q >= n) throw Error("initial state out of range");
        init_set.insert(q);
    }
    out.initial.assign(init_set.begin(), init_set.end());
    out.targets.assign(static_cast<size_t>(n),
                       std::vector<std::vector<State>>(static_cast<size_t>(out.alphabet.size())));
    for (const auto& [src, sym, dst] : transitions) {
        if (src < 0 || src >= n || dst < 0 || dst >= n) throw Error("transition endpoint out of range");
        if (sym < 0 || sym >= out.alphabet.size()) throw Error("transition symbol out of range");
        out.targets[static_cast<size_t>(src)][static_cast<size_t>(sym)].push_back(dst);
    }
    for (auto& per_state : out.targets)
        for (auto& v : per_state) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
    return out;
}

Nfa to_nfa(const Dfa& a) {
    Nfa out{a.alphabet, a.state_names, {a.initial}, a.final_states, {}};
    out.targets.assign(static_cast<size_t>(a.num_states()),
                       std::vector<std::vector<State>>(static_cast<size_t>(a.alphabet.size())));
    for (State q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < a.alphabet.size(); ++s)
            out.targets[static_cast<size_t>(q)][static_cast<size_t>(s)].push_back(a.step(q, s));
    return out;
}

Dfa empty_language_dfa(const Alphabet& alphabet) {
    Dfa out{alphabet, {canonical_name(0)}, 0, {false}, {}};
    out.delta.assign(static_cast<size_t>(alphabet.size()), 0);
    return out;
}

Dfa universal_dfa(const Alphabet& alphabet) {
    Dfa out = empty_language_dfa(alphabet);
    out.final_states[0] = true;
    return out;
}

Dfa determinize(const Nfa& a, const Budget& budget) {
    std::vector<State> start(a.initial);
    std::unordered_map<std::vector<State>, State, VectorHash> ids;
    std::vector<std::vector<State>> subsets;
    ids.emplace(start, 0);
    subsets.push_back(start);
    std::vector<State> delta;
    std::vector<bool> finals;
    for (size_t i = 0; i < subsets.size(); ++i) {
        std::vector<State> cur = subsets[i];  // copy: subsets grows below
        bool fin = false;
        for (State q : cur)
            if (a.is_final(q)) fin = true;
        finals.push_back(fin);
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            std::set<State> nxt;
            for (State q : cur)
                for (State t : a.targets[static_cast<size_t>(q)][static_cast<size_t>(s)])
                    nxt.insert(t);
            std::vector<State> key(nxt.begin(), nxt.end());
            auto [it, inserted] = ids.emplace(key, static_cast<State>(subsets.size()));
            if (inserted) {
                subsets.push_back(std::move(key));
                if (subsets.size() > budget.max_subset_states)
                    throw BudgetError("subset construction exceeds state budget (" +
                                      std::to_string(budget.max_subset_states) + " states)");
            }
            delta.push_back(it->second);
        }
    }
    Dfa out{a.alphabet, {}, 0, std::move(finals), std::move(delta)};
    out.state_names.resize(subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i) out.state_names[i] = canonical_name(i);
    return out;
}

Nfa reverse(const Nfa& a) {
    Nfa out{a.alphabet, a.state_names, {}, {}, {}};
    out.final_states.assign(static_cast<size_t>(a.num_states()), false);
    for (State q : a.initial) out.final_states[static_cast<size_t>(q)] = true;
    for (State q = 0; q < a.num_states(); ++q)
        if (a.is_final(q)) out.initial.push_back(q);
    out.targets.assign(static_cast<size_t>(a.num_states()),
                       std::vector<std::vector<State>>(static_cast<size_t>(a.alphabet.size())));
    for (State q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < a.alphabet.size(); ++s)
            for (State t : a.targets[static_cast<size_t>(q)][static_cast<size_t>(s)])
                out.targets[static_cast<size_t>(t)][static_cast<size_t>(s)].push_back(q);
    for (auto& per_state : out.targets)
        for (auto& v : per_state) std::sort(v.begin(), v.end());
    return out;
}

Dfa reverse_determinize(const Nfa& a, const Budget& budget) {
    return determinize(reverse(a), budget);
}

Dfa reverse_determinize(const Dfa& a, const Budget& budget) {
    return reverse_determinize(to_nfa(a), budget);
}

Dfa minimize(const Dfa& a0) {
    Dfa a = restrict_to_reachable(a0);
    int n = a.num_states();
    int k = a.alphabet.size();
    // Moore refinement: rounds are bounded by the automaton's distinguishing
    // depth, which stays small for every construction in this library.
    std::vector<int> block(static_cast<size_t>(n));
    for (State q = 0; q < n; ++q) block[static_cast<size_t>(q)] = a.is_final(q) ? 1 : 0;
    int num_blocks = 2;
    while (true) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next(static_cast<size_t>(n));
        for (State q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.reserve(static_cast<size_t>(k) + 1);
            sig.push_back(block[static_cast<size_t>(q)]);
            for (Symbol s = 0; s < k; ++s)
                sig.push_back(block[static_cast<size_t>(a.step(q, s))]);
            auto [it, _] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            next[static_cast<size_t>(q)] = it->second;
        }
        int new_count = static_cast<int>(sig_ids.size());
        block.swap(next);
        if (new_count == num_blocks) break;
        num_blocks = new_count;
    }
    Dfa quot{a.alphabet, {}, block[static_cast<size_t>(a.initial)], {}, {}};
    quot.state_names.resize(static_cast<size_t>(num_blocks));
    quot.final_states.assign(static_cast<size_t>(num_blocks), false);
    quot.delta.assign(static_cast<size_t>(num_blocks) * static_cast<size_t>(k), -1);
    for (State q = 0; q < n; ++q) {
        size_t b = static_cast<size_t>(block[static_cast<size_t>(q)]);
        quot.state_names[b] = canonical_name(b);
        if (a.is_final(q)) quot.final_states[b] = true;
        for (Symbol s = 0; s < k; ++s)
            quot.delta[b * static_cast<size_t>(k) + static_cast<size_t>(s)] =
                block[static_cast<size_t>(a.step(q, s))];
    }
    return canonical_renumber(quot);
}

bool is_minimal(const Dfa& a) {
    std::vector<bool> seen = reachable_states(a);
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
    return minimize(a).num_states() == a.num_states();
}

Dfa combine(BoolOp op, const Dfa& a, const Dfa* b) {
    if (op == BoolOp::Complement) {
        if (b != nullptr) throw Error("complement takes a single automaton");
        Dfa out = a;
        for (size_t i = 0; i < out.final_states.size(); ++i)
            out.final_states[i] = !out.final_states[i];
        return minimize(out);
    }
    if (b == nullptr) throw Error("binary boolean operation needs two automata");
    if (a.alphabet != b->alphabet) throw Error("alphabet mismatch");
    int k = a.alphabet.size();
    auto combine_final = [op](bool fa, bool fb) {
        switch (op) {
            case BoolOp::Union: return fa || fb;
            case BoolOp::Intersection: return fa && fb;
            case BoolOp::Difference: return fa && !fb;
            default: return false;
        }
    };
    std::unordered_map<std::vector<State>, State, VectorHash> ids;
    std::vector<std::pair<State, State>> pairs;
    auto intern = [&](State p, State q) {
        std::vector<State> key{p, q};
        auto [it, inserted] = ids.emplace(std::move(key), static_cast<State>(pairs.size()));
        if (inserted) pairs.emplace_back(p, q);
        return it->second;
    };
    intern(a.initial, b->initial);
    std::vector<State> delta;
    std::vector<bool> finals;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        finals.push_back(combine_final(a.is_final(p), b->is_final(q)));
        for (Symbol s = 0; s < k; ++s) delta.push_back(intern(a.step(p, s), b->step(q, s)));
    }
    Dfa prod{a.alphabet, {}, 0, std::move(finals), std::move(delta)};
    prod.state_names.resize(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) prod.state_names[i] = canonical_name(i);
    return minimize(prod);
}

std::optional<Word> separating_word(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet) throw Error("alphabet mismatch");
    int k = a.alphabet.size();
    std::unordered_map<std::vector<State>, int, VectorHash> seen;
    struct Node {
        State p, q;
        int parent;
        Symbol via;
    };
    std::vector<Node> nodes;
    auto push = [&](State p, State q, int parent, Symbol via) {
        std::vector<State> key{p, q};
        if (seen.emplace(std::move(key), static_cast<int>(nodes.size())).second) {
            nodes.push_back({p, q, parent, via});
            return true;
        }
        return false;
    };
    push(a.initial, b.initial, -1, -1);
    for (size_t i = 0; i < nodes.size(); ++i) {
        Node cur = nodes[i];
        if (a.is_final(cur.p) != b.is_final(cur.q)) {
            Word w;
            for (int at = static_cast<int>(i); nodes[static_cast<size_t>(at)].parent >= 0;
                 at = nodes[static_cast<size_t>(at)].parent)
                w.push_back(nodes[static_cast<size_t>(at)].via);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (Symbol s = 0; s < k; ++s)
            push(a.step(cur.p, s), b.step(cur.q, s), static_cast<int>(i), s);
    }
    return std::nullopt;
}

bool equivalent(const Dfa& a, const Dfa& b) { return !separating_word(a, b).has_value(); }

bool language_empty(const Dfa& a) {
    std::vector<bool> seen = reachable_states(a);
    for (State q = 0; q < a.num_states(); ++q)
        if (seen[static_cast<size_t>(q)] && a.is_final(q)) return false;
    return true;
}

std::optional<Word> shortest_accepted(const Dfa& a) {
    std::vector<int> parent(static_cast<size_t>(a.num_states()), -2);
    std::vector<Symbol> via(static_cast<size_t>(a.num_states()), -1);
    std::deque<State> queue{a.initial};
    parent[static_cast<size_t>(a.initial)] = -1;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        if (a.is_final(q)) {
            Word w;
            for (State at = q; parent[static_cast<size_t>(at)] >= 0;
                 at = static_cast<State>(parent[static_cast<size_t>(at)]))
                w.push_back(via[static_cast<size_t>(at)]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            State t = a.step(q, s);
            if (parent[static_cast<size_t>(t)] == -2) {
                parent[static_cast<size_t>(t)] = q;
                via[static_cast<size_t>(t)] = s;
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

bool language_finite(const Dfa& a) {
    // finite iff no cycle lies on a path initial ->* cycle ->* final
    std::vector<bool> reach = reachable_states(a);
    std::vector<bool> cor(static_cast<size_t>(a.num_states()), false);
    std::deque<State> queue;
    for (State q = 0; q < a.num_states(); ++q)
        if (a.is_final(q)) {
            cor[static_cast<size_t>(q)] = true;
            queue.push_back(q);
        }
    std::vector<std::vector<State>> preds(static_cast<size_t>(a.num_states()));
    for (State q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < a.alphabet.size(); ++s)
            preds[static_cast<size_t>(a.step(q, s))].push_back(q);
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State p : preds[static_cast<size_t>(q)])
            if (!cor[static_cast<size_t>(p)]) {
                cor[static_cast<size_t>(p)] = true;
                queue.push_back(p);
            }
    }
    // cycle detection on the useful subgraph
    std::vector<int> color(static_cast<size_t>(a.num_states()), 0);
    for (State root = 0; root < a.num_states(); ++root) {
        if (!reach[static_cast<size_t>(root)] || !cor[static_cast<size_t>(root)]) continue;
        if (color[static_cast<size_t>(root)] != 0) continue;
        std::vector<std::pair<State, Symbol>> stack{{root, 0}};
        color[static_cast<size_t>(root)] = 1;
        while (!stack.empty()) {
            auto& [q, s] = stack.back();
            if (s >= a.alphabet.size()) {
                color[static_cast<size_t>(q)] = 2;
                stack.pop_back();
                continue;
            }
            State t = a.step(q, s);
            ++s;
            if (!reach[static_cast<size_t>(t)] || !cor[static_cast<size_t>(t)]) continue;
            if (color[static_cast<size_t>(t)] == 1) return false;
            if (color[static_cast<size_t>(t)] == 0) {
                color[static_cast<size_t>(t)] = 1;
                stack.emplace_back(t, 0);
            }
        }
    }
    return true;
}

SccPartition sccs(const Dfa& a) {
    int n = a.num_states();
    int k = a.alphabet.size();
    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<size_t>(n), false);
    std::vector<State> stack;
    std::vector<int> comp_of(static_cast<size_t>(n), -1);
    std::vector<std::vector<State>> comps;
    int counter = 0;

    // iterative Tarjan
    struct Frame {
        State q;
        Symbol next_sym;
    };
    for (State root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next_sym < k) {
                State t = a.step(f.q, f.next_sym);
                ++f.next_sym;
                if (index[static_cast<size_t>(t)] == -1) {
                    index[static_cast<size_t>(t)] = low[static_cast<size_t>(t)] = counter++;
                    stack.push_back(t);
                    on_stack[static_cast<size_t>(t)] = true;
                    frames.push_back({t, 0});
                } else if (on_stack[static_cast<size_t>(t)]) {
                    low[static_cast<size_t>(f.q)] =
                        std::min(low[static_cast<size_t>(f.q)], index[static_cast<size_t>(t)]);
                }
            } else {
                State q = f.q;
                frames.pop_back();
                if (!frames.empty())
                    low[static_cast<size_t>(frames.back().q)] =
                        std::min(low[static_cast<size_t>(frames.back().q)],
                                 low[static_cast<size_t>(q)]);
                if (low[static_cast<size_t>(q)] == index[static_cast<size_t>(q)]) {
                    std::vector<State> comp;
                    while (true) {
                        State w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(w)] = false;
                        comp_of[static_cast<size_t>(w)] = static_cast<int>(comps.size());
                        comp.push_back(w);
                        if (w == q) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
            }
        }
    }

    SccPartition out;
    out.component_of = comp_of;
    out.condensation.assign(comps.size(), {});
    out.components.resize(comps.size());
    for (size_t c = 0; c < comps.size(); ++c) {
        SccComponent& sc = out.components[c];
        sc.states = comps[c];
        sc.all_final = true;
        sc.all_nonfinal = true;
        bool cycle = true;
        std::set<int> succs;
        for (State q : sc.states) {
            if (a.is_final(q))
                sc.all_nonfinal = false;
            else
                sc.all_final = false;
            std::set<State> inside;
            for (Symbol s = 0; s < k; ++s) {
                State t = a.step(q, s);
                if (comp_of[static_cast<size_t>(t)] == static_cast<int>(c))
                    inside.insert(t);
                else
                    succs.insert(comp_of[static_cast<size_t>(t)]);
            }
            if (inside.size() > 1) cycle = false;
        }
        sc.is_cycle = cycle;
        sc.is_trivial_cycle = false;
        if (sc.states.size() == 1) {
            State q = sc.states[0];
            bool self_loop = false;
            for (Symbol s = 0; s < k; ++s)
                if (a.step(q, s) == q) self_loop = true;
            sc.is_trivial_cycle = !self_loop;
        }
        out.condensation[c].assign(succs.begin(), succs.end());
    }
    return out;
}

std::vector<StateDistance> distance_table(const Dfa& a) {
    if (!is_minimal(a)) throw PreconditionError("distance requires a minimal DFA");
    int n = a.num_states();
    int k = a.alphabet.size();
    auto at = [n](State p, State q) { return static_cast<size_t>(p) * static_cast<size_t>(n) + static_cast<size_t>(q); };
    std::vector<int> d(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    for (State p = 0; p < n; ++p) d[at(p, p)] = 0;
    // C_{i+1} = { (p,q) : forall s, (delta(p,s), delta(q,s)) in C_i }
    for (int level = 1;; ++level) {
        bool changed = false;
        for (State p = 0; p < n; ++p) {
            for (State q = 0; q < n; ++q) {
                if (d[at(p, q)] >= 0) continue;
                bool ok = true;
                for (Symbol s = 0; s < k && ok; ++s) {
                    int dd = d[at(a.step(p, s), a.step(q, s))];
                    if (dd < 0 || dd >= level) ok = false;
                }
                if (ok) {
                    d[at(p, q)] = level;
                    changed = true;
                }
            }
        }
        if (!changed) break;
        if (level > n * n) throw InternalError("distance fixpoint failed to stabilize");
    }
    std::vector<StateDistance> out(d.size());
    for (size_t i = 0; i < d.size(); ++i)
        out[i] = d[i] < 0 ? StateDistance::infinite() : StateDistance::finite(d[i]);
    return out;
}

StateDistance distance(const Dfa& a, State p, State q) {
    if (p < 0 || p >= a.num_states() || q < 0 || q >= a.num_states())
        throw Error("state out of range");
    auto table = distance_table(a);
    return table[static_cast<size_t>(p) * static_cast<size_t>(a.num_states()) +
                 static_cast<size_t>(q)];
}

BitString encode_tuple(const std::vector<BitString>& parts) {
    BitString out;
    for (const BitString& part : parts) {
        if (part.empty()) throw Error("encode_tuple: empty part");
        for (size_t i = 0; i < part.size(); ++i) {
            out.push_back(i == 0);  // marker bit: 1 starts a part
            out.push_back(part[i]);
        }
    }
    return out;
}

std::vector<BitString> decode_tuple(const BitString& bits) {
    if (bits.size() % 2 != 0) throw Error("decode_tuple: odd length");
    std::vector<BitString> parts;
    for (size_t i = 0; i < bits.size(); i += 2) {
        if (bits[i]) {
            parts.emplace_back();
        } else if (parts.empty()) {
            throw Error("decode_tuple: continuation bit before any part");
        }
        parts.back().push_back(bits[i + 1]);
    }
    return parts;
}

}  // namespace slwin
