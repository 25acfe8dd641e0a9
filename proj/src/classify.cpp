#include "slwin/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace slwin {

namespace {

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word repeat(const Word& w, int64_t times) {
    Word out;
    out.reserve(w.size() * static_cast<size_t>(times));
    for (int64_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

/// Shortest (then lex-least) word from `from` to `to`, optionally restricted
/// to a set of allowed states (both endpoints and all intermediates).
std::optional<Word> shortest_path_word(const Dfa& a, State from, State to,
                                       const std::vector<bool>* allowed) {
    if (allowed && !(*allowed)[static_cast<size_t>(from)]) return std::nullopt;
    struct Node {
        State q;
        int parent;
        Symbol via;
    };
    std::vector<Node> nodes{{from, -1, -1}};
    std::vector<bool> seen(static_cast<size_t>(a.num_states()), false);
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
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            State t = a.step(nodes[i].q, s);
            if (allowed && !(*allowed)[static_cast<size_t>(t)]) continue;
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = true;
                nodes.push_back({t, static_cast<int>(i), s});
            }
        }
    }
    return std::nullopt;
}

std::vector<bool> reachable_from_initial(const Dfa& a) {
    std::vector<bool> seen(static_cast<size_t>(a.num_states()), false);
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

/// All pairs reachable from (init, init) by equal-length word pairs, with
/// parent data for witness extraction.
struct PairClosure {
    struct Node {
        State x, y;
        int parent;
        Symbol sx, sy;
    };
    std::vector<Node> nodes;

    std::pair<Word, Word> words_to(size_t idx) const {
        Word wx, wy;
        for (int at = static_cast<int>(idx); nodes[static_cast<size_t>(at)].parent >= 0;
             at = nodes[static_cast<size_t>(at)].parent) {
            wx.push_back(nodes[static_cast<size_t>(at)].sx);
            wy.push_back(nodes[static_cast<size_t>(at)].sy);
        }
        std::reverse(wx.begin(), wx.end());
        std::reverse(wy.begin(), wy.end());
        return {wx, wy};
    }
};

PairClosure synchronized_pair_closure(const Dfa& a) {
    PairClosure out;
    size_t n = static_cast<size_t>(a.num_states());
    std::vector<bool> seen(n * n, false);
    auto id = [n](State x, State y) { return static_cast<size_t>(x) * n + static_cast<size_t>(y); };
    seen[id(a.initial, a.initial)] = true;
    out.nodes.push_back({a.initial, a.initial, -1, -1, -1});
    for (size_t i = 0; i < out.nodes.size(); ++i) {
        auto cur = out.nodes[i];
        for (Symbol sx = 0; sx < a.alphabet.size(); ++sx)
            for (Symbol sy = 0; sy < a.alphabet.size(); ++sy) {
                State x = a.step(cur.x, sx), y = a.step(cur.y, sy);
                if (!seen[id(x, y)]) {
                    seen[id(x, y)] = true;
                    out.nodes.push_back({x, y, static_cast<int>(i), sx, sy});
                }
            }
    }
    return out;
}

}  // namespace

const char* to_string(FixedClass c) {
    switch (c) {
        case FixedClass::Constant: return "constant";
        case FixedClass::Logarithmic: return "logarithmic";
        case FixedClass::Linear: return "linear";
    }
    return "?";
}

const char* to_string(VariableClass c) {
    switch (c) {
        case VariableClass::TrivialConstant: return "trivial-constant";
        case VariableClass::Logarithmic: return "logarithmic";
        case VariableClass::Linear: return "linear";
    }
    return "?";
}

void verify_non_well_behaved_witness(const Dfa& b, const NonWellBehavedWitness& w) {
    auto fail = [](const std::string& msg) { throw InternalError("invalid witness: " + msg); };
    if (w.u0.size() != w.u1.size() || w.u0.empty()) fail("|u0| = |u1| >= 1 violated");
    if (w.u0.size() + w.v0.size() != w.u1.size() + w.v1.size())
        fail("|u0 v0| = |u1 v1| violated");
    if (b.run(b.initial, w.u) != w.pivot) fail("u does not reach the pivot");
    if (b.run(w.pivot, w.u0) != w.p0) fail("u0 does not reach p0");
    if (b.run(w.p0, w.v0) != w.pivot) fail("v0 does not return to the pivot");
    if (b.run(w.pivot, w.u1) != w.p1) fail("u1 does not reach p1");
    if (b.run(w.p1, w.v1) != w.pivot) fail("v1 does not return to the pivot");
    if (b.is_final(w.p0)) fail("p0 must be non-final");
    if (!b.is_final(w.p1)) fail("p1 must be final");
}

WellBehavedResult is_well_behaved(const Dfa& b) {
    std::vector<bool> reachable = reachable_from_initial(b);
    SccPartition parts = sccs(b);
    size_t n = static_cast<size_t>(b.num_states());

    for (size_t c = 0; c < parts.components.size(); ++c) {
        const SccComponent& comp = parts.components[c];
        bool comp_reachable = false;
        for (State q : comp.states) comp_reachable |= reachable[static_cast<size_t>(q)];
        if (!comp_reachable) continue;
        if (comp.all_final || comp.all_nonfinal) continue;

        std::vector<bool> in_c(n, false);
        for (State q : comp.states) in_c[static_cast<size_t>(q)] = true;

        // pairs reachable from the diagonal by equal-length paths that stay
        // inside the component
        struct Node {
            State x, y;
            int parent;
            Symbol sx, sy;
            State origin;
        };
        std::vector<Node> nodes;
        std::vector<bool> seen(n * n, false);
        auto id = [n](State x, State y) {
            return static_cast<size_t>(x) * n + static_cast<size_t>(y);
        };
        for (State q : comp.states) {
            seen[id(q, q)] = true;
            nodes.push_back({q, q, -1, -1, -1, q});
        }
        int found = -1;
        for (size_t i = 0; i < nodes.size() && found < 0; ++i) {
            Node cur = nodes[i];
            for (Symbol sx = 0; sx < b.alphabet.size() && found < 0; ++sx) {
                State x = b.step(cur.x, sx);
                if (!in_c[static_cast<size_t>(x)]) continue;
                for (Symbol sy = 0; sy < b.alphabet.size() && found < 0; ++sy) {
                    State y = b.step(cur.y, sy);
                    if (!in_c[static_cast<size_t>(y)]) continue;
                    if (seen[id(x, y)]) continue;
                    seen[id(x, y)] = true;
                    nodes.push_back(
                        {x, y, static_cast<int>(i), sx, sy, cur.origin});
                    if (b.is_final(x) != b.is_final(y))
                        found = static_cast<int>(nodes.size()) - 1;
                }
            }
        }
        if (found < 0) continue;

        // reconstruct the two equal-length legs
        Word wx, wy;
        State pivot = nodes[static_cast<size_t>(found)].origin;
        for (int at = found; nodes[static_cast<size_t>(at)].parent >= 0;
             at = nodes[static_cast<size_t>(at)].parent) {
            wx.push_back(nodes[static_cast<size_t>(at)].sx);
            wy.push_back(nodes[static_cast<size_t>(at)].sy);
        }
        std::reverse(wx.begin(), wx.end());
        std::reverse(wy.begin(), wy.end());
        State ex = nodes[static_cast<size_t>(found)].x;
        State ey = nodes[static_cast<size_t>(found)].y;

        NonWellBehavedWitness w;
        w.pivot = pivot;
        if (b.is_final(ex)) {
            w.u1 = wx;
            w.p1 = ex;
            w.u0 = wy;
            w.p0 = ey;
        } else {
            w.u1 = wy;
            w.p1 = ey;
            w.u0 = wx;
            w.p0 = ex;
        }
        auto u = shortest_path_word(b, b.initial, pivot, nullptr);
        auto v0 = shortest_path_word(b, w.p0, pivot, &in_c);
        auto v1 = shortest_path_word(b, w.p1, pivot, &in_c);
        if (!u || !v0 || !v1) throw InternalError("witness paths must exist inside the SCC");
        w.u = *u;
        w.v0 = *v0;
        w.v1 = *v1;
        // pump the return paths so both loops have the same length
        int64_t k = static_cast<int64_t>(w.u0.size() + w.v0.size());
        int64_t l = static_cast<int64_t>(w.u1.size() + w.v1.size());
        int64_t lcm = k / std::gcd(k, l) * l;
        w.v0 = concat(w.v0, repeat(concat(w.u0, w.v0), lcm / k - 1));
        w.v1 = concat(w.v1, repeat(concat(w.u1, w.v1), lcm / l - 1));
        verify_non_well_behaved_witness(b, w);
        return {false, w};
    }
    return {true, std::nullopt};
}

bool is_constant_fixed(const Dfa& a) {
    if (!is_minimal(a)) throw PreconditionError("is_constant_fixed requires a minimal DFA");
    PairClosure closure = synchronized_pair_closure(a);
    auto table = distance_table(a);
    size_t n = static_cast<size_t>(a.num_states());
    for (const auto& node : closure.nodes)
        if (table[static_cast<size_t>(node.x) * n + static_cast<size_t>(node.y)].is_infinite())
            return false;
    return true;
}

namespace {

std::vector<State> closure_under_word_actions(const Dfa& a, State start,
                                              const std::vector<Word>& generators) {
    std::set<State> seen{start};
    std::deque<State> queue{start};
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (const Word& g : generators) {
            State t = a.run(q, g);
            if (seen.insert(t).second) queue.push_back(t);
        }
    }
    return std::vector<State>(seen.begin(), seen.end());
}

}  // namespace

CriticalTuple critical_from_witness(const Dfa& a, const NonWellBehavedWitness& w) {
    CriticalTuple t;
    t.u0 = reversed(w.u0);
    t.u1 = reversed(w.u1);
    t.w0 = reversed(concat(w.u0, w.v0));
    t.w1 = reversed(concat(w.u1, w.v1));
    t.reachable0 = closure_under_word_actions(a, a.run(a.initial, t.u0), {t.w0, t.w1});
    t.reachable1 = closure_under_word_actions(a, a.run(a.initial, t.u1), {t.w0, t.w1});
    verify_critical_tuple(a, t);
    return t;
}

void verify_critical_tuple(const Dfa& a, const CriticalTuple& t) {
    auto fail = [](const std::string& msg) { throw InternalError("invalid critical tuple: " + msg); };
    if (t.u0.size() != t.u1.size() || t.u0.empty()) fail("|u0| = |u1| >= 1 violated");
    auto is_suffix = [](const Word& suffix, const Word& whole) {
        return suffix.size() <= whole.size() &&
               std::equal(suffix.rbegin(), suffix.rend(), whole.rbegin());
    };
    if (!is_suffix(t.u0, t.w0)) fail("u0 must be a suffix of w0");
    if (!is_suffix(t.u1, t.w1)) fail("u1 must be a suffix of w1");
    auto r0 = closure_under_word_actions(a, a.run(a.initial, t.u0), {t.w0, t.w1});
    auto r1 = closure_under_word_actions(a, a.run(a.initial, t.u1), {t.w0, t.w1});
    if (r0 != t.reachable0 || r1 != t.reachable1) fail("recorded state sets do not replay");
    std::vector<State> inter;
    std::set_intersection(r0.begin(), r0.end(), r1.begin(), r1.end(), std::back_inserter(inter));
    if (!inter.empty()) fail("reachable state sets intersect");
}

std::vector<Word> linear_witness_streams(const NonWellBehavedWitness& w, int j) {
    if (j < 0 || j > 30) throw Error("witness stream count out of range");
    Word block0 = concat(w.u0, w.v0);
    Word block1 = concat(w.u1, w.v1);
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(1) << j);
    for (uint32_t mask = 0; mask < (uint32_t(1) << j); ++mask) {
        Word x = w.u;
        for (int i = 0; i < j; ++i)
            x = concat(x, ((mask >> (j - 1 - i)) & 1) ? block1 : block0);
        out.push_back(std::move(x));
    }
    return out;
}

ClassifyResult classify_dfa(const Dfa& a, const Budget& budget) {
    Dfa lmin = minimize(a);
    Dfa reversal = reverse_determinize(lmin, budget);
    ClassifyResult res(std::move(lmin), std::move(reversal));
    bool trivial = res.minimal.num_states() == 1;
    bool constant = is_constant_fixed(res.minimal);
    WellBehavedResult wb = is_well_behaved(res.reversal_dfa);

    if (trivial && !constant)
        throw InternalError("a trivial language must be constant in the fixed model");
    if (constant && !trivial && !wb.well_behaved)
        throw InternalError("constant fixed space implies a well-behaved reversal automaton");

    res.space.fixed = constant ? FixedClass::Constant
                               : (wb.well_behaved ? FixedClass::Logarithmic : FixedClass::Linear);
    res.space.variable = trivial ? VariableClass::TrivialConstant
                                 : (wb.well_behaved ? VariableClass::Logarithmic
                                                    : VariableClass::Linear);
    if (!wb.well_behaved) {
        res.linear_witness = wb.witness;
        res.critical = critical_from_witness(res.minimal, *wb.witness);
    }
    return res;
}

ClassifyResult classify_nfa(const Nfa& a, const Budget& budget) {
    ClassifyResult res = classify_dfa(determinize(a, budget), budget);
    // second route: well-behavedness of the reversal subset automaton taken
    // directly from the NFA; both characterizations must agree
    WellBehavedResult direct = is_well_behaved(reverse_determinize(a, budget));
    bool log_or_better = res.space.fixed != FixedClass::Linear;
    if (direct.well_behaved != log_or_better)
        throw InternalError("NFA classification routes disagree");
    return res;
}

int64_t alt_count(const Dfa& a, const Word& x) {
    int n = static_cast<int>(x.size());
    // membership of each suffix, right-to-left by step-function composition
    std::vector<bool> member(static_cast<size_t>(n) + 1);
    int m = a.num_states();
    std::vector<State> g(static_cast<size_t>(m));
    for (State q = 0; q < m; ++q) g[static_cast<size_t>(q)] = q;
    member[static_cast<size_t>(n)] = a.is_final(a.initial);
    for (int i = n - 1; i >= 0; --i) {
        std::vector<State> next(static_cast<size_t>(m));
        for (State q = 0; q < m; ++q)
            next[static_cast<size_t>(q)] =
                g[static_cast<size_t>(a.step(q, x[static_cast<size_t>(i)]))];
        g.swap(next);
        member[static_cast<size_t>(i)] = a.is_final(g[static_cast<size_t>(a.initial)]);
    }
    int64_t count = 0;
    for (int i = 0; i < n; ++i)
        if (member[static_cast<size_t>(i)] != member[static_cast<size_t>(i) + 1]) ++count;
    return count;
}

AlternationReport max_alternations(const Dfa& a) {
    Dfa b = minimize(reverse_determinize(a));
    SccPartition parts = sccs(b);
    auto toggles = [&](State p, Symbol s) { return b.is_final(p) != b.is_final(b.step(p, s)); };

    // a toggle edge inside an SCC lies on a cycle: unbounded
    for (State p = 0; p < b.num_states(); ++p) {
        for (Symbol s = 0; s < b.alphabet.size(); ++s) {
            State q = b.step(p, s);
            if (parts.component_of[static_cast<size_t>(p)] !=
                parts.component_of[static_cast<size_t>(q)])
                continue;
            if (!toggles(p, s)) continue;
            AlternationReport rep;
            rep.bound = std::nullopt;
            std::vector<bool> in_c(static_cast<size_t>(b.num_states()), false);
            for (State st :
                 parts.components[static_cast<size_t>(parts.component_of[static_cast<size_t>(p)])]
                     .states)
                in_c[static_cast<size_t>(st)] = true;
            auto entry = shortest_path_word(b, b.initial, p, nullptr);
            auto back = shortest_path_word(b, q, p, &in_c);
            if (!entry || !back) throw InternalError("toggle cycle must be reachable and closed");
            rep.cycle_entry = *entry;
            rep.cycle = concat(Word{s}, *back);
            // replaying one more lap must strictly raise the alternation count
            Word once = reversed(concat(rep.cycle_entry, rep.cycle));
            Word twice = reversed(concat(rep.cycle_entry, concat(rep.cycle, rep.cycle)));
            if (alt_count(a, twice) <= alt_count(a, once))
                throw InternalError("toggle cycle does not grow the alternation count");
            return rep;
        }
    }

    // acyclic toggle structure: longest toggle-weighted path over the
    // condensation; components are in reverse topological order, so
    // successors are already solved
    size_t nc = parts.components.size();
    std::vector<int64_t> best(nc, 0);
    std::vector<std::optional<std::pair<State, Symbol>>> choice(nc);
    for (size_t c = 0; c < nc; ++c) {
        for (State p : parts.components[c].states) {
            for (Symbol s = 0; s < b.alphabet.size(); ++s) {
                State q = b.step(p, s);
                int cq = parts.component_of[static_cast<size_t>(q)];
                if (cq == static_cast<int>(c)) continue;
                int64_t cand = (toggles(p, s) ? 1 : 0) + best[static_cast<size_t>(cq)];
                if (cand > best[c]) {
                    best[c] = cand;
                    choice[c] = std::make_pair(p, s);
                }
            }
        }
    }
    AlternationReport rep;
    int c0 = parts.component_of[static_cast<size_t>(b.initial)];
    rep.bound = best[static_cast<size_t>(c0)];
    // materialize a path achieving the bound
    Word path;
    State cur = b.initial;
    int cc = c0;
    while (choice[static_cast<size_t>(cc)]) {
        auto [exit_state, s] = *choice[static_cast<size_t>(cc)];
        std::vector<bool> in_c(static_cast<size_t>(b.num_states()), false);
        for (State st : parts.components[static_cast<size_t>(cc)].states)
            in_c[static_cast<size_t>(st)] = true;
        auto hop = shortest_path_word(b, cur, exit_state, &in_c);
        if (!hop) throw InternalError("exit state must be reachable inside its SCC");
        path = concat(path, concat(*hop, Word{s}));
        cur = b.step(exit_state, s);
        cc = parts.component_of[static_cast<size_t>(cur)];
    }
    rep.witness = reversed(path);
    if (alt_count(a, rep.witness) != *rep.bound)
        throw InternalError("alternation witness does not replay to the reported bound");
    return rep;
}

StateDistance suffix_testable_k(const Dfa& a) {
    auto table = distance_table(a);
    int best = 0;
    for (const StateDistance& d : table) {
        if (d.is_infinite()) return StateDistance::infinite();
        best = std::max(best, d.value());
    }
    return StateDistance::finite(best);
}

bool is_length_language(const Dfa& a) {
    PairClosure closure = synchronized_pair_closure(a);
    for (const auto& node : closure.nodes)
        if (a.is_final(node.x) != a.is_final(node.y)) return false;
    return true;
}

namespace {

bool language_subset(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet) throw Error("alphabet mismatch");
    size_t n = static_cast<size_t>(a.num_states());
    size_t m = static_cast<size_t>(b.num_states());
    std::vector<bool> seen(n * m, false);
    std::deque<std::pair<State, State>> queue{{a.initial, b.initial}};
    seen[static_cast<size_t>(a.initial) * m + static_cast<size_t>(b.initial)] = true;
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        if (a.is_final(x) && !b.is_final(y)) return false;
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            State nx = a.step(x, s), ny = b.step(y, s);
            size_t idx = static_cast<size_t>(nx) * m + static_cast<size_t>(ny);
            if (!seen[idx]) {
                seen[idx] = true;
                queue.emplace_back(nx, ny);
            }
        }
    }
    return true;
}

}  // namespace

bool is_left_ideal(const Dfa& a) {
    // Sigma* L <= L iff for every symbol s: L <= s^-1 L
    for (Symbol s = 0; s < a.alphabet.size(); ++s) {
        Dfa shifted = a;
        shifted.initial = a.step(a.initial, s);
        if (!language_subset(a, shifted)) return false;
    }
    return true;
}

bool is_right_ideal(const Dfa& a) { return is_left_ideal(minimize(reverse_determinize(a))); }

PathSummary path_summary(const Dfa& b, State start, const Word& w) {
    SccPartition parts = sccs(b);
    PathSummary out;
    out.entries.emplace_back(start, 0);
    State cur = start;
    int cur_comp = parts.component_of[static_cast<size_t>(start)];
    for (Symbol s : w) {
        State next = b.step(cur, s);
        out.entries.back().second += 1;
        int next_comp = parts.component_of[static_cast<size_t>(next)];
        if (next_comp != cur_comp) {
            out.entries.emplace_back(next, 0);
            cur_comp = next_comp;
        }
        cur = next;
    }
    return out;
}

std::vector<Word> distinguishing_set(const Dfa& a) {
    if (!is_minimal(a)) throw PreconditionError("distinguishing_set requires a minimal DFA");
    int n = a.num_states();
    size_t nn = static_cast<size_t>(n);
    // shortest distinguishing distance per pair
    std::vector<int> dist(nn * nn, -1);
    auto at = [nn](State p, State q) { return static_cast<size_t>(p) * nn + static_cast<size_t>(q); };
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            if (a.is_final(p) != a.is_final(q)) dist[at(p, q)] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p)
            for (State q = 0; q < n; ++q) {
                if (p == q || dist[at(p, q)] >= 0) continue;
                int best = -1;
                for (Symbol s = 0; s < a.alphabet.size(); ++s) {
                    int d = dist[at(a.step(p, s), a.step(q, s))];
                    if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
                }
                if (best >= 0) {
                    dist[at(p, q)] = best;
                    changed = true;
                }
            }
    }
    auto word_for = [&](State p, State q) {
        Word w;
        while (dist[at(p, q)] > 0) {
            for (Symbol s = 0; s < a.alphabet.size(); ++s) {
                if (dist[at(a.step(p, s), a.step(q, s))] == dist[at(p, q)] - 1) {
                    w.push_back(s);
                    State np = a.step(p, s), nq = a.step(q, s);
                    p = np;
                    q = nq;
                    break;
                }
            }
        }
        return w;
    };

    // greedy refinement: split an unsplit pair with its shortest word, refine
    // every block by the new word's signature, repeat
    std::vector<int> block(nn, 0);
    std::vector<Word> set;
    while (true) {
        // among all unsplit pairs choose the shortest (then lex-least) word
        Word best;
        bool have = false;
        for (State p = 0; p < n; ++p)
            for (State q = p + 1; q < n; ++q) {
                if (block[static_cast<size_t>(p)] != block[static_cast<size_t>(q)]) continue;
                if (dist[at(p, q)] < 0)
                    throw InternalError("minimal DFA must distinguish every state pair");
                Word cand = word_for(p, q);
                if (!have || cand.size() < best.size() ||
                    (cand.size() == best.size() && cand < best)) {
                    best = cand;
                    have = true;
                }
            }
        if (!have) break;
        set.push_back(best);
        std::map<std::pair<int, bool>, int> remap;
        std::vector<int> next(nn);
        for (State q = 0; q < n; ++q) {
            auto key = std::make_pair(block[static_cast<size_t>(q)],
                                      a.is_final(a.run(q, best)));
            auto [it, _] = remap.emplace(key, static_cast<int>(remap.size()));
            next[static_cast<size_t>(q)] = it->second;
        }
        block.swap(next);
    }
    if (static_cast<int>(set.size()) > std::max(0, n - 1))
        throw InternalError("distinguishing set exceeds |Q| - 1 words");
    return set;
}

DecideResult decide_dfa(DecisionProblem problem, const Dfa& a, const Budget& budget) {
    if (problem != DecisionProblem::Dfa1 && problem != DecisionProblem::DfaLog)
        throw Error("decide_dfa handles dfa1 and dfalog");
    Dfa lmin = minimize(a);
    Dfa reversal = reverse_determinize(lmin, budget);
    DecideResult res(std::move(lmin), std::move(reversal));
    if (problem == DecisionProblem::Dfa1) {
        PairClosure closure = synchronized_pair_closure(res.minimal);
        auto table = distance_table(res.minimal);
        size_t n = static_cast<size_t>(res.minimal.num_states());
        for (size_t i = 0; i < closure.nodes.size(); ++i) {
            const auto& node = closure.nodes[i];
            if (table[static_cast<size_t>(node.x) * n + static_cast<size_t>(node.y)]
                    .is_infinite()) {
                res.answer = false;
                res.unmerged_pair = std::make_pair(node.x, node.y);
                res.equal_length_words = closure.words_to(i);
                return res;
            }
        }
        res.answer = true;
        return res;
    }
    WellBehavedResult wb = is_well_behaved(res.reversal_dfa);
    res.answer = wb.well_behaved;
    if (!wb.well_behaved) {
        res.non_well_behaved = wb.witness;
        res.critical = critical_from_witness(res.minimal, *wb.witness);
    }
    return res;
}

DecideResult decide_nfa(DecisionProblem problem, const Nfa& a, const Budget& budget) {
    if (problem != DecisionProblem::Nfa1 && problem != DecisionProblem::NfaLog)
        throw Error("decide_nfa handles nfa1 and nfalog");
    Dfa d = determinize(a, budget);
    return decide_dfa(problem == DecisionProblem::Nfa1 ? DecisionProblem::Dfa1
                                                       : DecisionProblem::DfaLog,
                      d, budget);
}

}  // namespace slwin
