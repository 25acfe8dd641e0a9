#include "slwin/exactspace.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "slwin/classify.hpp"

namespace slwin {

namespace {

struct SeqHash {
    size_t operator()(const SuffixClassSequence& v) const {
        size_t h = 1469598103934665603ull;
        for (State s : v) {
            h ^= static_cast<size_t>(s) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

uint64_t words_up_to(int sigma, int n) {
    uint64_t total = 0, level = 1;
    for (int t = 0; t <= n; ++t) {
        total += level;
        if (total > (uint64_t(1) << 62)) return total;
        level *= static_cast<uint64_t>(sigma);
    }
    return total;
}

}  // namespace

int floor_log2(uint64_t x) {
    if (x == 0) throw Error("floor_log2(0)");
    return std::bit_width(x) - 1;
}

SuffixClassSequence suffix_classes(const Dfa& a, const Word& w) {
    int n = static_cast<int>(w.size());
    int m = a.num_states();
    SuffixClassSequence out(static_cast<size_t>(n));
    // g[q] = state reached from q on the suffix strictly after position i;
    // one right-to-left pass composes the per-symbol step functions.
    std::vector<State> g(static_cast<size_t>(m));
    for (State q = 0; q < m; ++q) g[static_cast<size_t>(q)] = q;
    for (int i = n - 1; i >= 0; --i) {
        std::vector<State> next(static_cast<size_t>(m));
        for (State q = 0; q < m; ++q)
            next[static_cast<size_t>(q)] = g[static_cast<size_t>(a.step(q, w[static_cast<size_t>(i)]))];
        g.swap(next);
        out[static_cast<size_t>(i)] = g[static_cast<size_t>(a.initial)];
    }
    return out;
}

bool language_trivial(const Dfa& l) {
    if (language_empty(l)) return true;
    Dfa co = combine(BoolOp::Complement, l);
    return language_empty(co);
}

// --- suffix-class closure table ----------------------------------------------

namespace {

// Sequences bucketed by length (= first-reached window length); within a
// bucket, ids follow lexicographic order. Extended lazily one level at a
// time; ids of built levels never change.
class SuffixProfileTable {
public:
    SuffixProfileTable(Dfa minimal_dfa, Budget budget)
        : dfa_(std::move(minimal_dfa)), budget_(budget) {
        levels_.push_back({SuffixClassSequence{}});
        ids_.emplace(SuffixClassSequence{}, 0);
        total_ = 1;
    }

    const Dfa& dfa() const { return dfa_; }

    SuffixClassSequence append(const SuffixClassSequence& seq, Symbol s) const {
        SuffixClassSequence out;
        out.reserve(seq.size() + 1);
        for (State c : seq) out.push_back(dfa_.step(c, s));
        out.push_back(dfa_.step(dfa_.initial, s));
        return out;
    }

    static SuffixClassSequence drop_first(const SuffixClassSequence& seq) {
        if (seq.empty()) return seq;
        return SuffixClassSequence(seq.begin() + 1, seq.end());
    }

    uint64_t id_of(const SuffixClassSequence& seq) const {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure_level(static_cast<int>(seq.size()));
        auto it = ids_.find(seq);
        if (it == ids_.end())
            throw InternalError("suffix-class sequence missing from closure table");
        return it->second;
    }

    uint64_t count_up_to(int n) const {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure_level(n);
        uint64_t total = 0;
        for (int t = 0; t <= n; ++t) total += levels_[static_cast<size_t>(t)].size();
        return total;
    }

private:
    void ensure_level(int t) const {
        while (static_cast<int>(levels_.size()) <= t) {
            const auto& prev = levels_.back();
            std::set<SuffixClassSequence> next;
            for (const auto& seq : prev)
                for (Symbol s = 0; s < dfa_.alphabet.size(); ++s) next.insert(append(seq, s));
            uint64_t base = total_;
            std::vector<SuffixClassSequence> level(next.begin(), next.end());
            for (size_t i = 0; i < level.size(); ++i) ids_.emplace(level[i], base + i);
            total_ += level.size();
            if (total_ > budget_.max_explore_states)
                throw BudgetError("suffix-class closure exceeds budget");
            levels_.push_back(std::move(level));
        }
    }

    Dfa dfa_;
    Budget budget_;
    mutable std::mutex mutex_;
    mutable std::vector<std::vector<SuffixClassSequence>> levels_;
    mutable std::unordered_map<SuffixClassSequence, uint64_t, SeqHash> ids_;
    mutable uint64_t total_ = 0;
};

}  // namespace

SuffixCountPair suffix_profile_count_both(const Dfa& a, int n, const Budget& budget) {
    if (!is_minimal(a)) throw PreconditionError("suffix profile counting requires a minimal DFA");
    SuffixCountPair out;

    // Route (a): enumerate every word of length <= n and compute its
    // suffix-class sequence by running the DFA on each suffix separately.
    if (words_up_to(a.alphabet.size(), n) > budget.max_word_enumeration)
        throw BudgetError("word enumeration exceeds budget");
    std::set<SuffixClassSequence> seen;
    Word w;
    auto classes_brute = [&](const Word& word) {
        SuffixClassSequence seq(word.size());
        for (size_t i = 0; i < word.size(); ++i) {
            State q = a.initial;
            for (size_t j = i; j < word.size(); ++j) q = a.step(q, word[j]);
            seq[i] = q;
        }
        return seq;
    };
    // depth-first enumeration of all words of length <= n
    std::vector<Symbol> stack;
    seen.insert({});
    std::function<void()> rec = [&]() {
        if (static_cast<int>(w.size()) == n) return;
        for (Symbol s = 0; s < a.alphabet.size(); ++s) {
            w.push_back(s);
            seen.insert(classes_brute(w));
            rec();
            w.pop_back();
        }
    };
    rec();
    out.by_enumeration = seen.size();

    // Route (b): breadth-first closure under the append transition.
    SuffixProfileTable table(a, budget);
    out.by_closure = table.count_up_to(n);

    if (out.by_enumeration != out.by_closure)
        throw InternalError("suffix profile counts disagree: enumeration " +
                            std::to_string(out.by_enumeration) + " vs closure " +
                            std::to_string(out.by_closure));
    return out;
}

uint64_t suffix_profile_count(const Dfa& a, int n, const Budget& budget) {
    return suffix_profile_count_both(a, n, budget).by_enumeration;
}

// --- optimal variable-size algorithm ------------------------------------------

namespace {

class OptimalVariableAlgorithm final : public StreamingAlgorithm {
public:
    OptimalVariableAlgorithm(const Dfa& minimal_dfa, const Budget& budget)
        : table_(std::make_shared<SuffixProfileTable>(minimal_dfa, budget)) {}

    const Alphabet& alphabet() const override { return table_->dfa().alphabet; }
    bool supports_pop() const override { return true; }

    AlgoState initial_state() const override {
        return AlgoState{std::make_shared<const SuffixClassSequence>()};
    }

    AlgoState step(const AlgoState& state, const StreamToken& token) const override {
        const auto& seq = *static_cast<const SuffixClassSequence*>(state.ptr.get());
        if (token.is_pop)
            return AlgoState{
                std::make_shared<const SuffixClassSequence>(SuffixProfileTable::drop_first(seq))};
        return AlgoState{
            std::make_shared<const SuffixClassSequence>(table_->append(seq, token.sym))};
    }

    bool accepts(const AlgoState& state) const override {
        const auto& seq = *static_cast<const SuffixClassSequence*>(state.ptr.get());
        State c = seq.empty() ? table_->dfa().initial : seq.front();
        return table_->dfa().is_final(c);
    }

    BitString encode(const AlgoState& state) const override {
        const auto& seq = *static_cast<const SuffixClassSequence*>(state.ptr.get());
        return length_lex_code(table_->id_of(seq));
    }

    std::string state_key(const AlgoState& state) const override {
        const auto& seq = *static_cast<const SuffixClassSequence*>(state.ptr.get());
        std::string key;
        for (State c : seq) {
            key += std::to_string(c);
            key.push_back(',');
        }
        return key;
    }

private:
    std::shared_ptr<SuffixProfileTable> table_;
};

}  // namespace

AlgoPtr optimal_variable_algorithm(const Dfa& a, const Budget& budget) {
    if (!is_minimal(a))
        throw PreconditionError("optimal variable algorithm requires a minimal DFA");
    if (language_trivial(a))
        throw PreconditionError(
            "optimal variable algorithm is undefined for trivial languages (empty or universal)");
    return std::make_shared<OptimalVariableAlgorithm>(a, budget);
}

// --- suffix-class transducer ---------------------------------------------------

MealyMachine suffix_class_transducer(const Dfa& a, const Budget& budget) {
    if (!is_minimal(a)) throw PreconditionError("suffix_class_transducer requires a minimal DFA");
    int m = a.num_states();
    int k = a.alphabet.size();
    // per-symbol step functions
    std::vector<std::vector<State>> gen(static_cast<size_t>(k),
                                        std::vector<State>(static_cast<size_t>(m)));
    for (Symbol s = 0; s < k; ++s)
        for (State q = 0; q < m; ++q) gen[static_cast<size_t>(s)][static_cast<size_t>(q)] = a.step(q, s);

    // close the transition monoid under e -> e . f_s, i.e. e'(q) = e(f_s(q));
    // reading a word right to left then accumulates f_{av} = f_v . f_a.
    std::map<std::vector<State>, int> ids;
    std::vector<std::vector<State>> elements;
    std::vector<State> identity(static_cast<size_t>(m));
    for (State q = 0; q < m; ++q) identity[static_cast<size_t>(q)] = q;
    ids.emplace(identity, 0);
    elements.push_back(identity);
    std::vector<std::pair<int, Symbol>> delta;
    for (size_t i = 0; i < elements.size(); ++i) {
        for (Symbol s = 0; s < k; ++s) {
            std::vector<State> next(static_cast<size_t>(m));
            for (State q = 0; q < m; ++q)
                next[static_cast<size_t>(q)] =
                    elements[i][static_cast<size_t>(gen[static_cast<size_t>(s)][static_cast<size_t>(q)])];
            auto [it, inserted] = ids.emplace(next, static_cast<int>(elements.size()));
            if (inserted) {
                elements.push_back(next);
                if (elements.size() > budget.max_monoid_elements)
                    throw BudgetError("transition monoid exceeds budget");
            }
            delta.emplace_back(it->second, next[static_cast<size_t>(a.initial)]);
        }
    }

    std::vector<std::string> class_tokens;
    class_tokens.reserve(static_cast<size_t>(m));
    for (State q = 0; q < m; ++q) class_tokens.push_back("c" + std::to_string(q));
    std::vector<std::string> names;
    names.reserve(elements.size());
    for (size_t i = 0; i < elements.size(); ++i) names.push_back("m" + std::to_string(i));

    MealyMachine out{a.alphabet, Alphabet(class_tokens), std::move(names), 0, std::move(delta)};
    return out;
}

// --- exact fixed-size space -----------------------------------------------------

Dfa window_language_dfa(const Dfa& l, int n, Symbol pad, const Budget& budget) {
    if (n < 0) throw Error("window length must be >= 0");
    if (pad < 0 || pad >= l.alphabet.size()) throw Error("pad symbol not in alphabet");
    int k = l.alphabet.size();
    uint64_t count = 1;
    for (int i = 0; i < n; ++i) {
        count *= static_cast<uint64_t>(k);
        if (count > budget.max_window_states)
            throw BudgetError("window automaton exceeds budget (|Sigma|^n too large)");
    }
    // state = window contents encoded in base |Sigma|, first symbol most
    // significant; transitions drop the first symbol and append the new one
    uint64_t shift = count / static_cast<uint64_t>(std::max(k, 1));
    if (n == 0) shift = 0;
    Dfa win{l.alphabet, {}, 0, {}, {}};
    win.state_names.resize(count);
    win.final_states.resize(count);
    win.delta.resize(count * static_cast<uint64_t>(k));
    Word window(static_cast<size_t>(n));
    for (uint64_t w = 0; w < count; ++w) {
        uint64_t rest = w;
        for (int i = n - 1; i >= 0; --i) {
            window[static_cast<size_t>(i)] = static_cast<Symbol>(rest % static_cast<uint64_t>(k));
            rest /= static_cast<uint64_t>(k);
        }
        win.state_names[w] = "w" + std::to_string(w);
        win.final_states[w] = l.accepts(window);
        uint64_t tail = (n == 0) ? 0 : (w % shift) * static_cast<uint64_t>(k);
        for (Symbol s = 0; s < k; ++s)
            win.delta[w * static_cast<uint64_t>(k) + static_cast<uint64_t>(s)] =
                (n == 0) ? 0 : static_cast<State>(tail + static_cast<uint64_t>(s));
    }
    // initial window = pad^n
    uint64_t init = 0;
    for (int i = 0; i < n; ++i) init = init * static_cast<uint64_t>(k) + static_cast<uint64_t>(pad);
    win.initial = static_cast<State>(init);
    return minimize(win);
}

int exact_fixed_space_bits(const Dfa& l, int n, Symbol pad, const Budget& budget) {
    Dfa min_win = window_language_dfa(l, n, pad, budget);
    return floor_log2(static_cast<uint64_t>(min_win.num_states()));
}

// --- sparse fixed-size algorithm --------------------------------------------------

namespace {

class ConstantAnswerAlgorithm final : public StreamingAlgorithm {
public:
    ConstantAnswerAlgorithm(Alphabet alphabet, bool answer)
        : alphabet_(std::move(alphabet)), answer_(answer) {}
    const Alphabet& alphabet() const override { return alphabet_; }
    bool supports_pop() const override { return false; }
    AlgoState initial_state() const override { return AlgoState{std::make_shared<const int>(0)}; }
    AlgoState step(const AlgoState& state, const StreamToken& token) const override {
        if (token.is_pop)
            throw PreconditionError("fixed-size algorithms accept symbol tokens only");
        return state;
    }
    bool accepts(const AlgoState&) const override { return answer_; }
    BitString encode(const AlgoState&) const override { return {}; }
    std::string state_key(const AlgoState&) const override { return "unit"; }

private:
    Alphabet alphabet_;
    bool answer_;
};

class SparseFixedAlgorithm final : public StreamingAlgorithm {
public:
    SparseFixedAlgorithm(const Dfa& l, FixedWindowSpec spec, std::vector<Word> witnesses)
        : alphabet_(l.alphabet), spec_(spec), witnesses_(std::move(witnesses)) {
        n_ = spec_.length;
        int len_values = n_ + 1;
        width_len_ = 0;
        while ((1 << width_len_) < len_values) ++width_len_;
        width_idx_ = 0;
        while ((uint64_t(1) << width_idx_) < witnesses_.size()) ++width_idx_;
    }

    const Alphabet& alphabet() const override { return alphabet_; }
    bool supports_pop() const override { return false; }

    AlgoState initial_state() const override {
        Word padded(static_cast<size_t>(n_), spec_.pad);
        return make(longest_suffix_match(padded));
    }

    AlgoState step(const AlgoState& state, const StreamToken& token) const override {
        if (token.is_pop)
            throw PreconditionError("fixed-size algorithms accept symbol tokens only");
        const auto& cur = *static_cast<const std::pair<int, int>*>(state.ptr.get());
        auto [len, idx] = cur;
        // u = stored suffix extended by the arriving symbol
        Word u(witnesses_[static_cast<size_t>(idx)].begin(),
               witnesses_[static_cast<size_t>(idx)].begin() + len);
        u.push_back(token.sym);
        if (static_cast<int>(u.size()) <= n_) {
            if (auto j = find_with_prefix(u)) return make({static_cast<int>(u.size()), *j});
        }
        for (int t = static_cast<int>(u.size()) - 1; t >= 1; --t) {
            Word suffix(u.end() - t, u.end());
            if (auto j = find_with_prefix(suffix)) return make({t, *j});
        }
        return make({0, 0});
    }

    bool accepts(const AlgoState& state) const override {
        const auto& cur = *static_cast<const std::pair<int, int>*>(state.ptr.get());
        return cur.first == n_;
    }

    BitString encode(const AlgoState& state) const override {
        const auto& cur = *static_cast<const std::pair<int, int>*>(state.ptr.get());
        BitString bits;
        for (int b = width_len_ - 1; b >= 0; --b) bits.push_back((cur.first >> b) & 1);
        for (int b = width_idx_ - 1; b >= 0; --b) bits.push_back((cur.second >> b) & 1);
        return bits;
    }

    std::string state_key(const AlgoState& state) const override {
        const auto& cur = *static_cast<const std::pair<int, int>*>(state.ptr.get());
        return std::to_string(cur.first) + "," + std::to_string(cur.second);
    }

private:
    static AlgoState make(std::pair<int, int> v) {
        return AlgoState{std::make_shared<const std::pair<int, int>>(v)};
    }

    std::optional<int> find_with_prefix(const Word& prefix) const {
        auto it = std::lower_bound(witnesses_.begin(), witnesses_.end(), prefix);
        if (it == witnesses_.end()) return std::nullopt;
        if (it->size() < prefix.size()) return std::nullopt;
        if (!std::equal(prefix.begin(), prefix.end(), it->begin())) return std::nullopt;
        return static_cast<int>(it - witnesses_.begin());
    }

    std::pair<int, int> longest_suffix_match(const Word& window) const {
        for (int t = static_cast<int>(window.size()); t >= 1; --t) {
            Word suffix(window.end() - t, window.end());
            if (auto j = find_with_prefix(suffix)) return {t, *j};
        }
        return {0, 0};
    }

    Alphabet alphabet_;
    FixedWindowSpec spec_;
    std::vector<Word> witnesses_;  // L intersected with Sigma^n, sorted
    int n_;
    int width_len_;
    int width_idx_;
};

}  // namespace

AlgoPtr sparse_fixed_algorithm(const Dfa& l, const FixedWindowSpec& spec, const Budget& budget) {
    if (spec.length < 0) throw Error("window length must be >= 0");
    int k = l.alphabet.size();
    uint64_t count = 1;
    for (int i = 0; i < spec.length; ++i) {
        count *= static_cast<uint64_t>(k);
        if (count > budget.max_window_states)
            throw BudgetError("witness enumeration exceeds budget");
    }
    // enumerate L intersected with Sigma^n in lexicographic order
    std::vector<Word> witnesses;
    Word w;
    std::function<void(State)> rec = [&](State q) {
        if (static_cast<int>(w.size()) == spec.length) {
            if (l.is_final(q)) witnesses.push_back(w);
            return;
        }
        for (Symbol s = 0; s < k; ++s) {
            w.push_back(s);
            rec(l.step(q, s));
            w.pop_back();
        }
    };
    rec(l.initial);
    if (witnesses.empty()) return std::make_shared<ConstantAnswerAlgorithm>(l.alphabet, false);
    return std::make_shared<SparseFixedAlgorithm>(l, spec, std::move(witnesses));
}

// --- constant-space fixed-size algorithm --------------------------------------------

namespace {

class ConstantFixedAlgorithm final : public StreamingAlgorithm {
public:
    ConstantFixedAlgorithm(Dfa minimal_dfa, FixedWindowSpec spec)
        : dfa_(std::move(minimal_dfa)),
          spec_(spec),
          width_(std::max(0, [this] {
              int w = 0;
              while ((1 << w) < dfa_.alphabet.size()) ++w;
              return w;
          }())) {
        buffer_size_ = dfa_.num_states();
        // state after reading pad^(n - |Q|); window membership only depends
        // on the last |Q| symbols given the constant-space condition
        State q = dfa_.initial;
        for (int i = 0; i < spec_.length - buffer_size_; ++i) q = dfa_.step(q, spec_.pad);
        prefix_state_ = q;
    }

    const Alphabet& alphabet() const override { return dfa_.alphabet; }
    bool supports_pop() const override { return false; }

    AlgoState initial_state() const override {
        return AlgoState{std::make_shared<const Word>(static_cast<size_t>(buffer_size_), spec_.pad)};
    }

    AlgoState step(const AlgoState& state, const StreamToken& token) const override {
        if (token.is_pop)
            throw PreconditionError("fixed-size algorithms accept symbol tokens only");
        const Word& buf = *static_cast<const Word*>(state.ptr.get());
        Word next;
        next.reserve(buf.size());
        if (!buf.empty()) {
            next.assign(buf.begin() + 1, buf.end());
            next.push_back(token.sym);
        }
        return AlgoState{std::make_shared<const Word>(std::move(next))};
    }

    bool accepts(const AlgoState& state) const override {
        const Word& buf = *static_cast<const Word*>(state.ptr.get());
        State q = prefix_state_;
        for (Symbol s : buf) q = dfa_.step(q, s);
        return dfa_.is_final(q);
    }

    BitString encode(const AlgoState& state) const override {
        const Word& buf = *static_cast<const Word*>(state.ptr.get());
        BitString bits;
        for (Symbol s : buf)
            for (int b = width_ - 1; b >= 0; --b) bits.push_back((s >> b) & 1);
        return bits;
    }

    std::string state_key(const AlgoState& state) const override {
        const Word& buf = *static_cast<const Word*>(state.ptr.get());
        std::string key;
        for (Symbol s : buf) {
            key += std::to_string(s);
            key.push_back(',');
        }
        return key;
    }

private:
    Dfa dfa_;
    FixedWindowSpec spec_;
    int width_;
    int buffer_size_;
    State prefix_state_;
};

}  // namespace

AlgoPtr constant_fixed_algorithm(const Dfa& a, const FixedWindowSpec& spec) {
    if (!is_minimal(a)) throw PreconditionError("constant_fixed_algorithm requires a minimal DFA");
    if (!is_constant_fixed(a))
        throw PreconditionError(
            "constant_fixed_algorithm requires a constant-space language (is_constant_fixed)");
    if (spec.length < a.num_states())
        throw PreconditionError("constant_fixed_algorithm requires window length >= |Q|");
    return std::make_shared<ConstantFixedAlgorithm>(a, spec);
}

}  // namespace slwin
