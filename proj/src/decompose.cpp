#include "slwin/decompose.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace slwin {

namespace {

std::string fresh_name(const std::string& base, std::set<std::string>& used) {
    std::string name = base;
    int suffix = 0;
    while (!used.insert(name).second) name = base + "_" + std::to_string(++suffix);
    return name;
}

/// Restrict to states both reachable from the initial state and co-reachable
/// to a final state. Returns nullopt when the language is empty.
std::optional<PartialDfa> trim_to_useful(const Dfa& a) {
    int n = a.num_states();
    std::vector<bool> reach(static_cast<size_t>(n), false);
    std::deque<State> queue{a.initial};
    reach[static_cast<size_t>(a.initial)] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            State t = a.step(q, s);
            if (!reach[static_cast<size_t>(t)]) {
                reach[static_cast<size_t>(t)] = true;
                queue.push_back(t);
            }
        }
    }
    std::vector<std::vector<State>> preds(static_cast<size_t>(n));
    for (State q = 0; q < n; ++q)
        for (Symbol s = 0; s < a.alphabet.size(); ++s)
            preds[static_cast<size_t>(a.step(q, s))].push_back(q);
    std::vector<bool> cor(static_cast<size_t>(n), false);
    for (State q = 0; q < n; ++q)
        if (a.is_final(q)) {
            cor[static_cast<size_t>(q)] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State p : preds[static_cast<size_t>(q)])
            if (!cor[static_cast<size_t>(p)]) {
                cor[static_cast<size_t>(p)] = true;
                queue.push_back(p);
            }
    }
    if (!cor[static_cast<size_t>(a.initial)]) return std::nullopt;
    std::vector<State> remap(static_cast<size_t>(n), -1);
    PartialDfa out{a.alphabet, {}, 0, {}, {}};
    for (State q = 0; q < n; ++q)
        if (reach[static_cast<size_t>(q)] && cor[static_cast<size_t>(q)]) {
            remap[static_cast<size_t>(q)] = static_cast<State>(out.state_names.size());
            out.state_names.push_back(a.state_names[static_cast<size_t>(q)]);
            out.final_states.push_back(a.is_final(q));
        }
    out.initial = remap[static_cast<size_t>(a.initial)];
    out.delta.assign(out.state_names.size() * static_cast<size_t>(a.alphabet.size()), -1);
    for (State q = 0; q < n; ++q) {
        if (remap[static_cast<size_t>(q)] < 0) continue;
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            State t = remap[static_cast<size_t>(a.step(q, s))];
            out.delta[static_cast<size_t>(remap[static_cast<size_t>(q)]) *
                          static_cast<size_t>(a.alphabet.size()) +
                      static_cast<size_t>(s)] = t;  // -1 when the target was trimmed
        }
    }
    return out;
}

std::vector<std::vector<State>> partial_sccs(const PartialDfa& p, std::vector<int>& comp_of) {
    int n = p.num_states();
    int k = p.alphabet.size();
    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<size_t>(n), false);
    std::vector<State> stack;
    std::vector<std::vector<State>> comps;
    comp_of.assign(static_cast<size_t>(n), -1);
    int counter = 0;
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
                State t = p.step(f.q, f.next_sym);
                ++f.next_sym;
                if (t < 0) continue;
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
                    low[static_cast<size_t>(frames.back().q)] = std::min(
                        low[static_cast<size_t>(frames.back().q)], low[static_cast<size_t>(q)]);
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
    return comps;
}

int in_scc_degree(const PartialDfa& p, const std::vector<int>& comp_of, State q) {
    int deg = 0;
    for (Symbol s = 0; s < p.alphabet.size(); ++s) {
        State t = p.step(q, s);
        if (t >= 0 && comp_of[static_cast<size_t>(t)] == comp_of[static_cast<size_t>(q)]) ++deg;
    }
    return deg;
}

std::optional<Word> partial_path(const PartialDfa& p, State from, State to,
                                 const std::vector<bool>* allowed) {
    struct Node {
        State q;
        int parent;
        Symbol via;
    };
    if (allowed && !(*allowed)[static_cast<size_t>(from)]) return std::nullopt;
    std::vector<Node> nodes{{from, -1, -1}};
    std::vector<bool> seen(static_cast<size_t>(p.num_states()), false);
    seen[static_cast<size_t>(from)] = true;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].q == to) {
            Word w;
            for (int at = static_cast<int>(i); nodes[static_cast<size_t>(at)].parent >= 0;
                 at = nodes[static_cast<size_t>(at)].parent)
                w.push_back(nodes[static_cast<size_t>(at)].via);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (Symbol s = 0; s < p.alphabet.size(); ++s) {
            State t = p.step(nodes[i].q, s);
            if (t < 0 || (allowed && !(*allowed)[static_cast<size_t>(t)])) continue;
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = true;
                nodes.push_back({t, static_cast<int>(i), s});
            }
        }
    }
    return std::nullopt;
}

Dfa partial_language(const PartialDfa& p) { return minimize(determinize(p.to_nfa())); }

}  // namespace

GrowthClass growth_class(const Dfa& l) {
    GrowthClass out;
    auto trimmed = trim_to_useful(l);
    if (!trimmed) {
        out.polynomial = true;
        return out;
    }
    const PartialDfa& p = *trimmed;
    std::vector<int> comp_of;
    auto comps = partial_sccs(p, comp_of);

    for (State q = 0; q < p.num_states(); ++q) {
        if (in_scc_degree(p, comp_of, q) <= 1) continue;
        // two symbols stay inside the SCC: two distinct cycles through q
        out.polynomial = false;
        out.witness_state = q;
        std::vector<bool> in_c(static_cast<size_t>(p.num_states()), false);
        for (State st : comps[static_cast<size_t>(comp_of[static_cast<size_t>(q)])])
            in_c[static_cast<size_t>(st)] = true;
        std::vector<Word> cycles;
        for (Symbol s = 0; s < p.alphabet.size() && cycles.size() < 2; ++s) {
            State t = p.step(q, s);
            if (t < 0 || !in_c[static_cast<size_t>(t)]) continue;
            auto back = partial_path(p, t, q, &in_c);
            if (!back) throw InternalError("in-SCC edge must close into a cycle");
            Word cyc{s};
            cyc.insert(cyc.end(), back->begin(), back->end());
            cycles.push_back(std::move(cyc));
        }
        out.cycle_a = cycles[0];
        out.cycle_b = cycles[1];
        if (p.run(q, out.cycle_a) != q || p.run(q, out.cycle_b) != q || out.cycle_a == out.cycle_b)
            throw InternalError("exponential-growth witness does not replay");
        return out;
    }

    out.polynomial = true;
    for (const auto& comp : comps) {
        State entry = comp[0];
        bool nontrivial = comp.size() > 1 || in_scc_degree(p, comp_of, entry) == 1;
        if (!nontrivial) continue;
        Word cycle;
        State cur = entry;
        do {
            bool advanced = false;
            for (Symbol s = 0; s < p.alphabet.size() && !advanced; ++s) {
                State t = p.step(cur, s);
                if (t >= 0 && comp_of[static_cast<size_t>(t)] == comp_of[static_cast<size_t>(entry)]) {
                    cycle.push_back(s);
                    cur = t;
                    advanced = true;
                }
            }
            if (!advanced) throw InternalError("cycle SCC must have an in-SCC successor");
        } while (cur != entry);
        out.cycle_words.emplace_back(entry, std::move(cycle));
    }
    // longest condensation chain counted in non-trivial cycles
    std::vector<int> depth(comps.size(), 0);
    for (size_t c = 0; c < comps.size(); ++c) {  // Tarjan order: successors first
        bool nontrivial =
            comps[c].size() > 1 || in_scc_degree(p, comp_of, comps[c][0]) == 1;
        int best = 0;
        for (State q : comps[c])
            for (Symbol s = 0; s < p.alphabet.size(); ++s) {
                State t = p.step(q, s);
                if (t >= 0 && comp_of[static_cast<size_t>(t)] != static_cast<int>(c))
                    best = std::max(best, depth[static_cast<size_t>(comp_of[static_cast<size_t>(t)])]);
            }
        depth[c] = best + (nontrivial ? 1 : 0);
    }
    int maxd = 0;
    for (int d : depth) maxd = std::max(maxd, d);
    out.degree_hint = std::max(0, maxd - 1);
    return out;
}

BigCount growth_count(const Dfa& l, int n) {
    std::vector<BigCount> cur(static_cast<size_t>(l.num_states()), 0);
    cur[static_cast<size_t>(l.initial)] = 1;
    BigCount total = 0;
    for (int t = 0;; ++t) {
        for (State q = 0; q < l.num_states(); ++q)
            if (l.is_final(q)) total += cur[static_cast<size_t>(q)];
        if (t == n) break;
        std::vector<BigCount> next(static_cast<size_t>(l.num_states()), 0);
        for (State q = 0; q < l.num_states(); ++q) {
            if (cur[static_cast<size_t>(q)] == 0) continue;
            for (Symbol s = 0; s < l.alphabet.size(); ++s)
                next[static_cast<size_t>(l.step(q, s))] += cur[static_cast<size_t>(q)];
        }
        cur.swap(next);
    }
    return total;
}

// --- linear cycle automata ----------------------------------------------------

void verify_linear_cycle_automaton(const LinearCycleAutomaton& lca) {
    const PartialDfa& p = lca.automaton;
    auto fail = [](const std::string& msg) {
        throw InternalError("invalid linear cycle automaton: " + msg);
    };
    int n = p.num_states();
    int k = p.alphabet.size();

    // (1) at most one connecting symbol per state pair
    for (State q = 0; q < n; ++q) {
        std::set<State> targets;
        for (Symbol s = 0; s < k; ++s) {
            State t = p.step(q, s);
            if (t < 0) continue;
            if (!targets.insert(t).second) fail("two symbols connect the same state pair");
        }
    }

    std::vector<int> comp_of;
    auto comps = partial_sccs(p, comp_of);

    // chain must be exactly the SCC partition
    if (lca.chain.size() != comps.size()) fail("chain does not cover the SCCs");
    std::vector<int> chain_pos(comps.size(), -1);
    std::set<State> covered;
    for (size_t i = 0; i < lca.chain.size(); ++i) {
        if (lca.chain[i].empty()) fail("empty chain component");
        int c = comp_of[static_cast<size_t>(lca.chain[i][0])];
        std::vector<State> sorted = lca.chain[i];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != comps[static_cast<size_t>(c)]) fail("chain entry is not an SCC");
        if (chain_pos[static_cast<size_t>(c)] != -1) fail("SCC repeated in chain");
        chain_pos[static_cast<size_t>(c)] = static_cast<int>(i);
        for (State q : sorted) covered.insert(q);
    }
    if (static_cast<int>(covered.size()) != n) fail("chain does not cover all states");

    // (2) every SCC is a cycle
    for (State q = 0; q < n; ++q)
        if (in_scc_degree(p, comp_of, q) > 1) fail("an SCC is not a cycle");

    // (3) exactly one transition between consecutive components, none other
    std::map<std::pair<int, int>, int> cross;
    for (State q = 0; q < n; ++q)
        for (Symbol s = 0; s < k; ++s) {
            State t = p.step(q, s);
            if (t < 0) continue;
            int cq = chain_pos[static_cast<size_t>(comp_of[static_cast<size_t>(q)])];
            int ct = chain_pos[static_cast<size_t>(comp_of[static_cast<size_t>(t)])];
            if (cq != ct) ++cross[{cq, ct}];
        }
    for (const auto& [edge, count] : cross)
        if (edge.second != edge.first + 1) fail("transition skips or reverses the chain");
    for (size_t i = 0; i + 1 < lca.chain.size(); ++i) {
        auto it = cross.find({static_cast<int>(i), static_cast<int>(i) + 1});
        if (it == cross.end() || it->second != 1)
            fail("consecutive components need exactly one bridging transition");
    }

    // (4) initial in the first component
    if (comp_of[static_cast<size_t>(p.initial)] != comp_of[static_cast<size_t>(lca.chain[0][0])])
        fail("initial state must lie in the first component");

    // (5) single final state in the last component
    int finals = 0;
    State final_state = -1;
    for (State q = 0; q < n; ++q)
        if (p.is_final(q)) {
            ++finals;
            final_state = q;
        }
    if (finals != 1) fail("exactly one final state required");
    if (comp_of[static_cast<size_t>(final_state)] !=
        comp_of[static_cast<size_t>(lca.chain.back()[0])])
        fail("final state must lie in the last component");

    // trimmed: every state reachable and co-reachable
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::deque<State> queue{p.initial};
    seen[static_cast<size_t>(p.initial)] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Symbol s = 0; s < k; ++s) {
            State t = p.step(q, s);
            if (t >= 0 && !seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = true;
                queue.push_back(t);
            }
        }
    }
    for (State q = 0; q < n; ++q) {
        if (!seen[static_cast<size_t>(q)]) fail("unreachable state");
        if (!partial_path(p, q, final_state, nullptr)) fail("state cannot reach the final state");
    }
}

namespace {

/// Orders the SCCs of a partial DFA into a chain starting at the initial
/// component and validates the result.
LinearCycleAutomaton finalize_lca(PartialDfa p) {
    std::vector<int> comp_of;
    auto comps = partial_sccs(p, comp_of);
    LinearCycleAutomaton lca;
    int cur = comp_of[static_cast<size_t>(p.initial)];
    std::set<int> emitted;
    while (true) {
        lca.chain.push_back(comps[static_cast<size_t>(cur)]);
        emitted.insert(cur);
        std::set<int> succs;
        for (State q : comps[static_cast<size_t>(cur)])
            for (Symbol s = 0; s < p.alphabet.size(); ++s) {
                State t = p.step(q, s);
                if (t >= 0 && comp_of[static_cast<size_t>(t)] != cur)
                    succs.insert(comp_of[static_cast<size_t>(t)]);
            }
        if (succs.empty()) break;
        if (succs.size() > 1)
            throw InternalError("linear cycle automaton chain must be a path");
        cur = *succs.begin();
        if (emitted.count(cur)) throw InternalError("cycle in component chain");
    }
    lca.automaton = std::move(p);
    verify_linear_cycle_automaton(lca);
    return lca;
}

}  // namespace

std::vector<LinearCycleAutomaton> linear_cycle_decomposition(const Dfa& l, const Budget& budget) {
    GrowthClass growth = growth_class(l);
    if (!growth.polynomial)
        throw PreconditionError("linear cycle decomposition requires polynomial growth");
    Dfa lmin = minimize(l);
    auto trimmed = trim_to_useful(lmin);
    std::vector<LinearCycleAutomaton> out;
    if (!trimmed) {
        // empty language: the union of zero components
        if (!language_empty(lmin)) throw InternalError("trim emptied a non-empty language");
        return out;
    }
    const PartialDfa& p = *trimmed;
    std::vector<int> comp_of;
    auto comps = partial_sccs(p, comp_of);

    // enumerate path descriptions: (entry, exit, bridge symbol) per component
    struct Hop {
        int comp;
        State entry;
        State exit;
        Symbol via;  // -1 for the last hop
    };
    std::vector<Hop> prefix;
    uint64_t emitted = 0;

    auto build_component = [&](const std::vector<Hop>& hops) {
        std::vector<State> remap(static_cast<size_t>(p.num_states()), -1);
        PartialDfa b{p.alphabet, {}, 0, {}, {}};
        for (const Hop& h : hops)
            for (State q : comps[static_cast<size_t>(h.comp)]) {
                remap[static_cast<size_t>(q)] = static_cast<State>(b.state_names.size());
                b.state_names.push_back(p.state_names[static_cast<size_t>(q)]);
                b.final_states.push_back(false);
            }
        b.delta.assign(b.state_names.size() * static_cast<size_t>(p.alphabet.size()), -1);
        auto add_edge = [&](State src, Symbol s, State dst) {
            b.delta[static_cast<size_t>(remap[static_cast<size_t>(src)]) *
                        static_cast<size_t>(p.alphabet.size()) +
                    static_cast<size_t>(s)] = remap[static_cast<size_t>(dst)];
        };
        for (size_t i = 0; i < hops.size(); ++i) {
            const Hop& h = hops[i];
            for (State q : comps[static_cast<size_t>(h.comp)])
                for (Symbol s = 0; s < p.alphabet.size(); ++s) {
                    State t = p.step(q, s);
                    if (t >= 0 && comp_of[static_cast<size_t>(t)] == h.comp) add_edge(q, s, t);
                }
            if (h.via >= 0) add_edge(h.exit, h.via, hops[i + 1].entry);
        }
        b.initial = remap[static_cast<size_t>(p.initial)];
        b.final_states[static_cast<size_t>(remap[static_cast<size_t>(hops.back().exit)])] = true;
        return finalize_lca(std::move(b));
    };

    std::function<void(int, State)> rec = [&](int comp, State entry) {
        for (State exit_state : comps[static_cast<size_t>(comp)]) {
            if (p.is_final(exit_state)) {
                prefix.push_back({comp, entry, exit_state, -1});
                if (++emitted > budget.max_path_descriptions)
                    throw BudgetError("path description count exceeds budget");
                out.push_back(build_component(prefix));
                prefix.pop_back();
            }
            for (Symbol s = 0; s < p.alphabet.size(); ++s) {
                State t = p.step(exit_state, s);
                if (t < 0 || comp_of[static_cast<size_t>(t)] == comp) continue;
                prefix.push_back({comp, entry, exit_state, s});
                rec(comp_of[static_cast<size_t>(t)], t);
                prefix.pop_back();
            }
        }
    };
    rec(comp_of[static_cast<size_t>(p.initial)], p.initial);

    // the union of the component languages must give back the language
    Dfa acc = empty_language_dfa(lmin.alphabet);
    for (const auto& lca : out) {
        Dfa lang = partial_language(lca.automaton);
        acc = combine(BoolOp::Union, acc, &lang);
    }
    if (!equivalent(acc, lmin))
        throw InternalError("linear cycle decomposition union mismatch");
    return out;
}

namespace {

struct CycleInfo {
    int chain_index;
    State entry;       // chain entry of the component (initial or bridge target)
    Word word;         // cycle word starting at entry
    std::vector<State> order;  // cycle states from entry, in cycle order
};

std::vector<CycleInfo> nontrivial_cycles(const LinearCycleAutomaton& lca) {
    const PartialDfa& p = lca.automaton;
    std::vector<int> comp_of;
    partial_sccs(p, comp_of);
    // entry per chain component: the initial state or the bridge target
    std::vector<State> entries(lca.chain.size(), -1);
    entries[0] = p.initial;
    for (size_t i = 0; i + 1 < lca.chain.size(); ++i) {
        std::set<State> members(lca.chain[i].begin(), lca.chain[i].end());
        for (State q : lca.chain[i])
            for (Symbol s = 0; s < p.alphabet.size(); ++s) {
                State t = p.step(q, s);
                if (t >= 0 && !members.count(t)) entries[i + 1] = t;
            }
    }
    std::vector<CycleInfo> out;
    for (size_t i = 0; i < lca.chain.size(); ++i) {
        State entry = entries[i];
        if (entry < 0) throw InternalError("chain entry not found");
        bool nontrivial = lca.chain[i].size() > 1;
        if (!nontrivial) {
            State q = lca.chain[i][0];
            for (Symbol s = 0; s < p.alphabet.size(); ++s)
                if (p.step(q, s) == q) nontrivial = true;
        }
        if (!nontrivial) continue;
        CycleInfo info;
        info.chain_index = static_cast<int>(i);
        info.entry = entry;
        State cur = entry;
        do {
            info.order.push_back(cur);
            bool advanced = false;
            for (Symbol s = 0; s < p.alphabet.size() && !advanced; ++s) {
                State t = p.step(cur, s);
                if (t >= 0 && comp_of[static_cast<size_t>(t)] ==
                                  comp_of[static_cast<size_t>(entry)]) {
                    info.word.push_back(s);
                    cur = t;
                    advanced = true;
                }
            }
            if (!advanced) throw InternalError("cycle must advance");
        } while (cur != entry);
        out.push_back(std::move(info));
    }
    return out;
}

}  // namespace

std::vector<LinearCycleAutomaton> normalize_cycle_lengths(const LinearCycleAutomaton& lca,
                                                          const Budget& budget) {
    verify_linear_cycle_automaton(lca);
    const PartialDfa& p = lca.automaton;
    std::vector<CycleInfo> cycles = nontrivial_cycles(lca);
    if (cycles.empty()) return {lca};

    int64_t m = 1;
    for (const auto& c : cycles) m = std::lcm(m, static_cast<int64_t>(c.word.size()));
    uint64_t variants = 1;
    for (const auto& c : cycles) {
        variants *= static_cast<uint64_t>(m) / c.word.size();
        if (variants > budget.max_normalize_variants)
            throw BudgetError("cycle normalization variant count exceeds budget");
    }

    std::vector<int64_t> choice(cycles.size(), 0);
    std::vector<LinearCycleAutomaton> out;
    while (true) {
        // build one variant: unroll every non-trivial cycle to length m after
        // a path of d_i * m_i fresh states
        std::vector<std::tuple<State, Symbol, State>> edges;  // in fresh numbering
        std::vector<std::string> names = p.state_names;
        std::set<std::string> used(names.begin(), names.end());
        std::vector<bool> finals(p.final_states);
        auto add_state = [&](const std::string& base) {
            State id = static_cast<State>(names.size());
            names.push_back(fresh_name(base, used));
            finals.push_back(false);
            return id;
        };
        std::set<std::pair<State, Symbol>> cycle_edges;  // original in-cycle edges to drop
        std::vector<State> redirect(static_cast<size_t>(p.num_states()), -1);
        for (size_t ci = 0; ci < cycles.size(); ++ci) {
            const CycleInfo& c = cycles[ci];
            int64_t mi = static_cast<int64_t>(c.word.size());
            for (size_t j = 0; j < c.order.size(); ++j)
                cycle_edges.insert({c.order[j], c.word[j]});
            // entry path of d_i laps
            int64_t d = choice[ci];
            State path_start = c.entry;
            if (d > 0) {
                std::vector<State> path_states;
                for (int64_t t = 0; t < d * mi; ++t)
                    path_states.push_back(add_state("u" + std::to_string(ci)));
                for (int64_t t = 0; t < d * mi; ++t) {
                    State src = path_states[static_cast<size_t>(t)];
                    State dst = (t + 1 < d * mi) ? path_states[static_cast<size_t>(t + 1)]
                                                 : c.entry;
                    edges.emplace_back(src, c.word[static_cast<size_t>(t % mi)], dst);
                }
                path_start = path_states[0];
                redirect[static_cast<size_t>(c.entry)] = path_start;
            }
            // unrolled cycle of length m
            std::vector<State> ring = c.order;
            for (int64_t t = mi; t < m; ++t) ring.push_back(add_state("r" + std::to_string(ci)));
            for (int64_t t = 0; t < m; ++t)
                edges.emplace_back(ring[static_cast<size_t>(t)],
                                   c.word[static_cast<size_t>(t % mi)],
                                   ring[static_cast<size_t>((t + 1) % m)]);
        }
        // copy every original edge that is not an unrolled in-cycle edge,
        // redirecting bridges into entry paths
        for (State q = 0; q < p.num_states(); ++q)
            for (Symbol s = 0; s < p.alphabet.size(); ++s) {
                State t = p.step(q, s);
                if (t < 0 || cycle_edges.count({q, s})) continue;
                State dst = redirect[static_cast<size_t>(t)] >= 0
                                ? redirect[static_cast<size_t>(t)]
                                : t;
                edges.emplace_back(q, s, dst);
            }
        PartialDfa variant{p.alphabet, names, p.initial, finals, {}};
        if (redirect[static_cast<size_t>(p.initial)] >= 0)
            variant.initial = redirect[static_cast<size_t>(p.initial)];
        variant.delta.assign(names.size() * static_cast<size_t>(p.alphabet.size()), -1);
        for (const auto& [src, s, dst] : edges) {
            State& cell = variant.delta[static_cast<size_t>(src) *
                                            static_cast<size_t>(p.alphabet.size()) +
                                        static_cast<size_t>(s)];
            if (cell >= 0) throw InternalError("normalization produced a nondeterministic edge");
            cell = dst;
        }
        out.push_back(finalize_lca(std::move(variant)));

        // odometer over the offset choices
        size_t pos = 0;
        while (pos < cycles.size()) {
            int64_t mi = static_cast<int64_t>(cycles[pos].word.size());
            if (++choice[pos] < m / mi) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == cycles.size()) break;
    }

    // union over all variants must reproduce the component language
    Dfa target = partial_language(p);
    Dfa acc = empty_language_dfa(p.alphabet);
    for (const auto& v : out) {
        Dfa lang = partial_language(v.automaton);
        acc = combine(BoolOp::Union, acc, &lang);
    }
    if (!equivalent(acc, target)) throw InternalError("cycle normalization union mismatch");
    return out;
}

// --- certificates ---------------------------------------------------------------

const char* to_string(LeafTag t) {
    switch (t) {
        case LeafTag::LeftIdeal: return "left-ideal";
        case LeafTag::RightIdeal: return "right-ideal";
        case LeafTag::LengthLanguage: return "length-language";
        case LeafTag::SuffixTestable: return "suffix-testable";
        case LeafTag::Finite: return "finite";
    }
    return "?";
}

CertificateNode CertificateNode::make_leaf(Dfa a, LeafTag tag, int suffix_k) {
    CertificateNode n;
    n.kind = Kind::Leaf;
    n.leaf = std::move(a);
    n.tag = tag;
    n.suffix_k = suffix_k;
    return n;
}

CertificateNode CertificateNode::make_union(std::vector<CertificateNode> children) {
    CertificateNode n;
    n.kind = Kind::Union;
    n.children = std::move(children);
    return n;
}

CertificateNode CertificateNode::make_intersection(std::vector<CertificateNode> children) {
    CertificateNode n;
    n.kind = Kind::Intersection;
    n.children = std::move(children);
    return n;
}

CertificateNode CertificateNode::make_complement(CertificateNode child) {
    CertificateNode n;
    n.kind = Kind::Complement;
    n.children.push_back(std::move(child));
    return n;
}

Dfa evaluate_certificate(const CertificateNode& node, const Alphabet& alphabet) {
    switch (node.kind) {
        case CertificateNode::Kind::Leaf: return minimize(*node.leaf);
        case CertificateNode::Kind::Complement: {
            Dfa child = evaluate_certificate(node.children.at(0), alphabet);
            return combine(BoolOp::Complement, child);
        }
        case CertificateNode::Kind::Union:
        case CertificateNode::Kind::Intersection: {
            bool is_union = node.kind == CertificateNode::Kind::Union;
            Dfa acc = is_union ? empty_language_dfa(alphabet) : universal_dfa(alphabet);
            for (const auto& child : node.children) {
                Dfa lang = evaluate_certificate(child, alphabet);
                acc = combine(is_union ? BoolOp::Union : BoolOp::Intersection, acc, &lang);
            }
            return acc;
        }
    }
    throw InternalError("unreachable certificate node kind");
}

void verify_certificate(const DecompositionCertificate& cert) {
    std::function<void(const CertificateNode&)> check_leaves = [&](const CertificateNode& node) {
        if (node.kind == CertificateNode::Kind::Leaf) {
            const Dfa& a = *node.leaf;
            bool ok = false;
            switch (node.tag) {
                case LeafTag::LeftIdeal: ok = is_left_ideal(a); break;
                case LeafTag::RightIdeal: ok = is_right_ideal(a); break;
                case LeafTag::LengthLanguage: ok = is_length_language(a); break;
                case LeafTag::SuffixTestable: {
                    StateDistance k = suffix_testable_k(minimize(a));
                    ok = !k.is_infinite() && k.value() <= node.suffix_k;
                    break;
                }
                case LeafTag::Finite: ok = language_finite(a); break;
            }
            if (!ok)
                throw InternalError(std::string("certificate leaf fails its tag check: ") +
                                    to_string(node.tag));
            return;
        }
        for (const auto& child : node.children) check_leaves(child);
    };
    check_leaves(cert.formula);
    Dfa lang = evaluate_certificate(cert.formula, cert.target.alphabet);
    if (!equivalent(lang, cert.target))
        throw InternalError("certificate formula is not equivalent to its target");
}

namespace {

CertificateNode simplify_node(const CertificateNode& node, const Alphabet& alphabet) {
    switch (node.kind) {
        case CertificateNode::Kind::Leaf: return node;
        case CertificateNode::Kind::Complement: {
            CertificateNode out;
            out.kind = CertificateNode::Kind::Complement;
            out.children.push_back(simplify_node(node.children.at(0), alphabet));
            return out;
        }
        case CertificateNode::Kind::Union: {
            std::vector<CertificateNode> kept;
            for (const auto& child : node.children) {
                CertificateNode s = simplify_node(child, alphabet);
                if (!language_empty(evaluate_certificate(s, alphabet))) kept.push_back(std::move(s));
            }
            if (kept.empty())
                return CertificateNode::make_leaf(empty_language_dfa(alphabet),
                                                  LeafTag::LengthLanguage);
            if (kept.size() == 1) return kept[0];
            return CertificateNode::make_union(std::move(kept));
        }
        case CertificateNode::Kind::Intersection: {
            std::vector<CertificateNode> kept;
            for (const auto& child : node.children) {
                CertificateNode s = simplify_node(child, alphabet);
                Dfa lang = evaluate_certificate(s, alphabet);
                Dfa co = combine(BoolOp::Complement, lang);
                if (!language_empty(co)) kept.push_back(std::move(s));  // drop universal children
            }
            if (kept.empty())
                return CertificateNode::make_leaf(universal_dfa(alphabet),
                                                  LeafTag::LengthLanguage);
            if (kept.size() == 1) return kept[0];
            return CertificateNode::make_intersection(std::move(kept));
        }
    }
    throw InternalError("unreachable certificate node kind");
}

Dfa length_residue_dfa(const Alphabet& alphabet, int64_t offset, int64_t period) {
    // Sigma^p (Sigma^q)* for period q >= 1; exact length Sigma^p for period 0
    std::vector<std::string> names;
    std::vector<std::tuple<State, Symbol, State>> transitions;
    if (period >= 1) {
        int64_t total = offset + period;
        for (int64_t i = 0; i < total; ++i) names.push_back("n" + std::to_string(i));
        for (int64_t i = 0; i < total; ++i) {
            State dst = (i + 1 < total) ? static_cast<State>(i + 1) : static_cast<State>(offset);
            for (Symbol s = 0; s < alphabet.size(); ++s)
                transitions.emplace_back(static_cast<State>(i), s, dst);
        }
        return minimize(
            make_dfa(alphabet, names, 0, {static_cast<State>(offset)}, transitions));
    }
    for (int64_t i = 0; i <= offset; ++i) names.push_back("n" + std::to_string(i));
    names.push_back("sink");
    State sink = static_cast<State>(offset + 1);
    for (int64_t i = 0; i <= offset; ++i) {
        State dst = (i < offset) ? static_cast<State>(i + 1) : sink;
        for (Symbol s = 0; s < alphabet.size(); ++s)
            transitions.emplace_back(static_cast<State>(i), s, dst);
    }
    for (Symbol s = 0; s < alphabet.size(); ++s) transitions.emplace_back(sink, s, sink);
    return minimize(make_dfa(alphabet, names, 0, {static_cast<State>(offset)}, transitions));
}

}  // namespace

DecompositionCertificate lca_to_boolean_combination(const LinearCycleAutomaton& lca) {
    verify_linear_cycle_automaton(lca);
    const PartialDfa& p = lca.automaton;
    Dfa target = partial_language(p);
    auto shortest = shortest_accepted(target);
    if (!shortest) throw InternalError("a linear cycle automaton accepts at least one word");
    int64_t offset = static_cast<int64_t>(shortest->size());

    std::vector<CycleInfo> cycles = nontrivial_cycles(lca);
    int64_t period = 0;
    for (const auto& c : cycles) {
        int64_t len = static_cast<int64_t>(c.word.size());
        if (period == 0)
            period = len;
        else if (period != len)
            throw PreconditionError("cycle lengths must be uniform (normalize first)");
    }

    // L . Sigma*: make the final state absorbing via extra self-loops
    Nfa ideal_nfa = p.to_nfa();
    for (State q = 0; q < p.num_states(); ++q)
        if (p.is_final(q))
            for (Symbol s = 0; s < p.alphabet.size(); ++s) {
                auto& v = ideal_nfa.targets[static_cast<size_t>(q)][static_cast<size_t>(s)];
                if (std::find(v.begin(), v.end(), q) == v.end()) v.push_back(q);
                std::sort(v.begin(), v.end());
            }
    Dfa right_ideal = minimize(determinize(ideal_nfa));

    // Pref(L): the trimmed partial automaton with every state final
    PartialDfa pref = p;
    std::fill(pref.final_states.begin(), pref.final_states.end(), true);
    Dfa pref_lang = partial_language(pref);
    Dfa co_pref = combine(BoolOp::Complement, pref_lang);

    Dfa length_lang =
        length_residue_dfa(p.alphabet, period >= 1 ? offset % period : offset, period);

    DecompositionCertificate cert;
    cert.target = target;
    cert.formula = CertificateNode::make_intersection({
        CertificateNode::make_leaf(right_ideal, LeafTag::RightIdeal),
        CertificateNode::make_complement(
            CertificateNode::make_leaf(co_pref, LeafTag::RightIdeal)),
        CertificateNode::make_leaf(length_lang, LeafTag::LengthLanguage),
    });
    verify_certificate(cert);
    return cert;
}

// --- log-class pipeline -----------------------------------------------------------

namespace {

/// NFA over the machine's output alphabet accepting { tau(y) : y in L(src) }.
Nfa image_via_transducer(const MealyMachine& m, const Dfa& src) {
    if (src.alphabet != m.input) throw Error("transducer input alphabet mismatch");
    std::map<std::pair<int, State>, State> ids;
    std::vector<std::pair<int, State>> items;
    auto intern = [&](int mq, State q) {
        auto [it, inserted] =
            ids.emplace(std::make_pair(mq, q), static_cast<State>(items.size()));
        if (inserted) items.emplace_back(mq, q);
        return it->second;
    };
    intern(m.initial, src.initial);
    std::vector<std::tuple<State, Symbol, State>> transitions;
    std::vector<State> finals;
    for (size_t i = 0; i < items.size(); ++i) {
        auto [mq, q] = items[i];
        if (src.is_final(q)) finals.push_back(static_cast<State>(i));
        for (Symbol a = 0; a < m.input.size(); ++a) {
            auto [mn, b] = m.step(mq, a);
            State j = intern(mn, src.step(q, a));
            transitions.emplace_back(static_cast<State>(i), b, j);
        }
    }
    std::vector<std::string> names;
    names.reserve(items.size());
    for (size_t i = 0; i < items.size(); ++i) names.push_back("p" + std::to_string(i));
    return make_nfa(m.output, names, {0}, finals, transitions);
}

/// DFA over the machine's input alphabet accepting { y : tau(y) in L(t) }.
Dfa preimage_via_transducer(const MealyMachine& m, const Dfa& t) {
    if (t.alphabet != m.output) throw Error("transducer output alphabet mismatch");
    std::map<std::pair<int, State>, State> ids;
    std::vector<std::pair<int, State>> items;
    auto intern = [&](int mq, State q) {
        auto [it, inserted] =
            ids.emplace(std::make_pair(mq, q), static_cast<State>(items.size()));
        if (inserted) items.emplace_back(mq, q);
        return it->second;
    };
    intern(m.initial, t.initial);
    std::vector<std::tuple<State, Symbol, State>> transitions;
    std::vector<State> finals;
    for (size_t i = 0; i < items.size(); ++i) {
        auto [mq, q] = items[i];
        if (t.is_final(q)) finals.push_back(static_cast<State>(i));
        for (Symbol a = 0; a < m.input.size(); ++a) {
            auto [mn, b] = m.step(mq, a);
            State j = intern(mn, t.step(q, b));
            transitions.emplace_back(static_cast<State>(i), a, j);
        }
    }
    std::vector<std::string> names;
    names.reserve(items.size());
    for (size_t i = 0; i < items.size(); ++i) names.push_back("p" + std::to_string(i));
    return minimize(make_dfa(m.input, names, 0, finals, transitions));
}

/// Pre-image of the right-to-left transduction: { x : tau^R(x) in L(t) }.
Dfa left_transduction_preimage(const MealyMachine& m, const Dfa& t) {
    Dfa t_rev = minimize(reverse_determinize(t));
    return minimize(reverse_determinize(preimage_via_transducer(m, t_rev)));
}

CertificateNode map_leaves(const CertificateNode& node,
                           const std::function<CertificateNode(const CertificateNode&)>& fn) {
    if (node.kind == CertificateNode::Kind::Leaf) return fn(node);
    CertificateNode out;
    out.kind = node.kind;
    for (const auto& child : node.children) out.children.push_back(map_leaves(child, fn));
    return out;
}

}  // namespace

DecompositionCertificate log_class_decomposition(const Dfa& l, const Budget& budget) {
    ClassifyResult cls = classify_dfa(l, budget);
    if (cls.space.fixed == FixedClass::Linear)
        throw PreconditionError(
            "log-class decomposition requires the logarithmic or constant class");
    const Dfa& lmin = cls.minimal;

    MealyMachine m = suffix_class_transducer(lmin, budget);
    // suffix-class image of L, reversed: forward image of L^R under the machine
    Dfa k_rev = minimize(determinize(image_via_transducer(m, cls.reversal_dfa), budget));
    if (!growth_class(k_rev).polynomial)
        throw InternalError("suffix-class image of a log-class language must grow polynomially");

    std::vector<CertificateNode> terms;
    for (const auto& component : linear_cycle_decomposition(k_rev, budget))
        for (const auto& variant : normalize_cycle_lengths(component, budget))
            terms.push_back(lca_to_boolean_combination(variant).formula);
    CertificateNode krev_formula =
        terms.empty() ? CertificateNode::make_leaf(empty_language_dfa(m.output),
                                                   LeafTag::LengthLanguage)
                      : CertificateNode::make_union(std::move(terms));

    // reverse leaf-wise: right ideals become left ideals, length languages stay
    CertificateNode k_formula = map_leaves(krev_formula, [&](const CertificateNode& leaf) {
        Dfa rev = minimize(reverse_determinize(*leaf.leaf));
        LeafTag tag = leaf.tag == LeafTag::RightIdeal ? LeafTag::LeftIdeal : leaf.tag;
        return CertificateNode::make_leaf(std::move(rev), tag, leaf.suffix_k);
    });

    // pull back through the suffix-class transduction
    CertificateNode formula = map_leaves(k_formula, [&](const CertificateNode& leaf) {
        Dfa pre = left_transduction_preimage(m, *leaf.leaf);
        return CertificateNode::make_leaf(std::move(pre), leaf.tag, leaf.suffix_k);
    });

    DecompositionCertificate cert;
    cert.target = lmin;
    cert.formula = simplify_node(formula, lmin.alphabet);
    verify_certificate(cert);
    return cert;
}

// --- alternation decomposition -------------------------------------------------------

namespace {

/// DFA for { x : alt(x) >= threshold }: reversal of the toggle-counting
/// automaton over the reversal of L.
Dfa alternation_threshold_dfa(const Dfa& lmin, const Dfa& b, int64_t threshold) {
    int n = b.num_states();
    int64_t cap = threshold;
    auto id = [&](State q, int64_t c) {
        return static_cast<State>(static_cast<int64_t>(q) + static_cast<int64_t>(n) * c);
    };
    std::vector<std::string> names;
    std::vector<std::tuple<State, Symbol, State>> transitions;
    std::vector<State> finals;
    for (int64_t c = 0; c <= cap; ++c)
        for (State q = 0; q < n; ++q) {
            names.push_back("t" + std::to_string(c) + "_" + std::to_string(q));
            if (c == cap) finals.push_back(id(q, c));
            for (Symbol s = 0; s < b.alphabet.size(); ++s) {
                State t = b.step(q, s);
                int64_t cn = std::min(cap, c + (b.is_final(q) != b.is_final(t) ? 1 : 0));
                transitions.emplace_back(id(q, c), s, id(t, cn));
            }
        }
    Dfa counting = make_dfa(lmin.alphabet, names, id(b.initial, 0), finals, transitions);
    return minimize(reverse_determinize(counting));
}

}  // namespace

DecompositionCertificate alternation_decomposition(const Dfa& l, const Budget& budget) {
    (void)budget;
    Dfa lmin = minimize(l);
    AlternationReport rep = max_alternations(lmin);
    if (!rep.bound)
        throw PreconditionError("alternation decomposition requires a finite alternation bound");
    int64_t k = *rep.bound;
    Dfa b = minimize(reverse_determinize(lmin));

    auto threshold = [&](int64_t i) { return alternation_threshold_dfa(lmin, b, i); };

    bool eps_in_l = lmin.is_final(lmin.initial);
    std::vector<CertificateNode> terms;
    // L is the union of (P_i \ P_{i+1}) over i <= k of membership parity;
    // the i = 0 term (Sigma* \ P_1) is emitted as a bare complement
    int64_t start = eps_in_l ? 0 : 1;
    for (int64_t i = start; i <= std::max<int64_t>(k, start); i += 2) {
        if (i == 0) {
            terms.push_back(
                CertificateNode::make_complement(
                    CertificateNode::make_leaf(threshold(1), LeafTag::LeftIdeal)));
        } else if (i > k) {
            break;
        } else if (i + 1 > k) {
            terms.push_back(CertificateNode::make_leaf(threshold(i), LeafTag::LeftIdeal));
        } else {
            terms.push_back(CertificateNode::make_intersection(
                {CertificateNode::make_leaf(threshold(i), LeafTag::LeftIdeal),
                 CertificateNode::make_complement(
                     CertificateNode::make_leaf(threshold(i + 1), LeafTag::LeftIdeal))}));
        }
    }
    DecompositionCertificate cert;
    cert.target = lmin;
    if (terms.empty())
        cert.formula =
            CertificateNode::make_leaf(empty_language_dfa(lmin.alphabet), LeafTag::LeftIdeal);
    else if (terms.size() == 1)
        cert.formula = std::move(terms[0]);
    else
        cert.formula = CertificateNode::make_union(std::move(terms));
    verify_certificate(cert);
    return cert;
}

// --- constant decomposition -----------------------------------------------------------

namespace {

Dfa suffix_word_dfa(const Alphabet& alphabet, const Word& z) {
    // Sigma* z
    std::vector<std::string> names{"s0"};
    for (size_t i = 0; i < z.size(); ++i) names.push_back("s" + std::to_string(i + 1));
    std::vector<std::tuple<State, Symbol, State>> transitions;
    for (Symbol s = 0; s < alphabet.size(); ++s) transitions.emplace_back(0, s, 0);
    for (size_t i = 0; i < z.size(); ++i)
        transitions.emplace_back(static_cast<State>(i), z[i], static_cast<State>(i + 1));
    Nfa nfa = make_nfa(alphabet, names, {0}, {static_cast<State>(z.size())}, transitions);
    return minimize(determinize(nfa));
}

Dfa append_fixed_length(const Dfa& base, int64_t k) {
    // L(base) . Sigma^k
    if (k == 0) return minimize(base);
    Nfa nfa = to_nfa(base);
    State first = static_cast<State>(nfa.num_states());
    std::set<std::string> used(nfa.state_names.begin(), nfa.state_names.end());
    for (int64_t i = 0; i < k; ++i) {
        nfa.state_names.push_back(fresh_name("a" + std::to_string(i), used));
        nfa.final_states.push_back(false);
        nfa.targets.emplace_back(static_cast<size_t>(nfa.alphabet.size()));
    }
    for (State q = 0; q < first; ++q)
        if (base.is_final(q))
            for (Symbol s = 0; s < nfa.alphabet.size(); ++s)
                nfa.targets[static_cast<size_t>(q)][static_cast<size_t>(s)].push_back(first);
    for (int64_t i = 0; i + 1 < k; ++i)
        for (Symbol s = 0; s < nfa.alphabet.size(); ++s)
            nfa.targets[static_cast<size_t>(first + i)][static_cast<size_t>(s)].push_back(
                static_cast<State>(first + i + 1));
    nfa.final_states[static_cast<size_t>(first + k - 1)] = true;
    for (auto& per_state : nfa.targets)
        for (auto& v : per_state) std::sort(v.begin(), v.end());
    return minimize(determinize(nfa));
}

Dfa bounded_length_intersection(const Dfa& l, int64_t max_len) {
    // L intersected with Sigma^{<= max_len}; empty language for max_len < 0
    if (max_len < 0) return empty_language_dfa(l.alphabet);
    int n = l.num_states();
    auto id = [&](State q, int64_t c) {
        return static_cast<State>(static_cast<int64_t>(q) + static_cast<int64_t>(n) * c);
    };
    std::vector<std::string> names;
    std::vector<std::tuple<State, Symbol, State>> transitions;
    std::vector<State> finals;
    for (int64_t c = 0; c <= max_len; ++c)
        for (State q = 0; q < n; ++q) {
            names.push_back("b" + std::to_string(c) + "_" + std::to_string(q));
            if (l.is_final(q)) finals.push_back(id(q, c));
            if (c < max_len)
                for (Symbol s = 0; s < l.alphabet.size(); ++s)
                    transitions.emplace_back(id(q, c), s, id(l.step(q, s), c + 1));
        }
    return minimize(make_dfa(l.alphabet, names, id(l.initial, 0), finals, transitions));
}

}  // namespace

DecompositionCertificate constant_decomposition(const Dfa& l, const Budget& budget) {
    Dfa lmin = minimize(l);
    if (!is_constant_fixed(lmin))
        throw PreconditionError("constant decomposition requires the constant fixed class");
    int nq = lmin.num_states();

    // least k <= |Q| such that every right quotient L z^-1 with |z| = k is a
    // length language; quotients are enumerated via distinct word actions
    std::vector<std::vector<State>> actions;
    {
        std::vector<State> identity(static_cast<size_t>(nq));
        for (State q = 0; q < nq; ++q) identity[static_cast<size_t>(q)] = q;
        actions.push_back(identity);
    }
    auto quotient_of_action = [&](const std::vector<State>& f) {
        Dfa quot = lmin;
        for (State q = 0; q < nq; ++q)
            quot.final_states[static_cast<size_t>(q)] =
                lmin.is_final(f[static_cast<size_t>(q)]);
        return minimize(quot);
    };
    int least_k = -1;
    for (int k = 0; k <= nq; ++k) {
        bool all_length = true;
        for (const auto& f : actions)
            if (!is_length_language(quotient_of_action(f))) {
                all_length = false;
                break;
            }
        if (all_length) {
            least_k = k;
            break;
        }
        // next level of word actions
        std::set<std::vector<State>> next;
        for (const auto& f : actions)
            for (Symbol s = 0; s < lmin.alphabet.size(); ++s) {
                std::vector<State> g(static_cast<size_t>(nq));
                for (State q = 0; q < nq; ++q)
                    g[static_cast<size_t>(q)] = lmin.step(f[static_cast<size_t>(q)], s);
                next.insert(std::move(g));
            }
        actions.assign(next.begin(), next.end());
    }
    if (least_k < 0)
        throw InternalError("constant-class language must admit a quotient bound k <= |Q|");

    DecompositionCertificate cert;
    cert.target = lmin;
    if (least_k == 0) {
        cert.formula = CertificateNode::make_leaf(lmin, LeafTag::LengthLanguage);
        verify_certificate(cert);
        return cert;
    }

    uint64_t z_count = 1;
    for (int i = 0; i < least_k; ++i) {
        z_count *= static_cast<uint64_t>(lmin.alphabet.size());
        if (z_count > budget.max_word_enumeration)
            throw BudgetError("quotient word enumeration exceeds budget");
    }

    std::vector<CertificateNode> terms;
    CertificateNode finite_leaf = CertificateNode::make_leaf(
        bounded_length_intersection(lmin, least_k - 1), LeafTag::Finite);
    terms.push_back(std::move(finite_leaf));

    // iterate z over Sigma^k in lexicographic order
    Word z(static_cast<size_t>(least_k), 0);
    while (true) {
        // right quotient L z^-1 via the z-action on states
        Dfa quot = lmin;
        for (State q = 0; q < nq; ++q)
            quot.final_states[static_cast<size_t>(q)] = lmin.is_final(lmin.run(q, z));
        quot = minimize(quot);
        if (!is_length_language(quot))
            throw InternalError("right quotient at the chosen k must be a length language");
        Dfa padded = append_fixed_length(quot, least_k);
        Dfa suffix = suffix_word_dfa(lmin.alphabet, z);
        terms.push_back(CertificateNode::make_intersection(
            {CertificateNode::make_leaf(std::move(padded), LeafTag::LengthLanguage),
             CertificateNode::make_leaf(std::move(suffix), LeafTag::SuffixTestable, least_k)}));
        int pos = least_k - 1;
        while (pos >= 0 && z[static_cast<size_t>(pos)] == lmin.alphabet.size() - 1) {
            z[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++z[static_cast<size_t>(pos)];
    }

    cert.formula = simplify_node(CertificateNode::make_union(std::move(terms)), lmin.alphabet);
    verify_certificate(cert);
    return cert;
}

}  // namespace slwin
