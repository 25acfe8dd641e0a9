#include "slwin/streaming.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace slwin {

namespace {

template <typename T>
const T& state_as(const AlgoState& s) {
    return *static_cast<const T*>(s.ptr.get());
}

template <typename T, typename... Args>
AlgoState make_state(Args&&... args) {
    return AlgoState{std::make_shared<const T>(std::forward<Args>(args)...)};
}

int symbol_width(const Alphabet& alphabet) {
    int width = 0;
    while ((1 << width) < alphabet.size()) ++width;
    return width;  // ceil(log2 |Sigma|), 0 for a unary alphabet
}

void append_fixed_width(BitString& out, Symbol s, int width) {
    for (int b = width - 1; b >= 0; --b) out.push_back((s >> b) & 1);
}

std::string word_key(const Word& w) {
    std::string key;
    for (Symbol s : w) {
        key += std::to_string(s);
        key.push_back(',');
    }
    return key;
}

}  // namespace

Stream stream_of_word(const Word& w) {
    Stream out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(StreamToken::symbol(s));
    return out;
}

Word window_contents(const Stream& stream) {
    std::deque<Symbol> window;
    for (const StreamToken& t : stream) {
        if (t.is_pop) {
            if (!window.empty()) window.pop_front();
        } else {
            window.push_back(t.sym);
        }
    }
    return Word(window.begin(), window.end());
}

Word active_window(const Word& w, const FixedWindowSpec& spec) {
    size_t n = static_cast<size_t>(spec.length);
    Word out;
    out.reserve(n);
    if (w.size() >= n) {
        out.assign(w.end() - static_cast<long>(n), w.end());
    } else {
        out.assign(n - w.size(), spec.pad);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

AlgoState run_stream(const StreamingAlgorithm& alg, const Stream& stream) {
    AlgoState s = alg.initial_state();
    for (const StreamToken& t : stream) s = alg.step(s, t);
    return s;
}

bool accepts_stream(const StreamingAlgorithm& alg, const Stream& stream) {
    return alg.accepts(run_stream(alg, stream));
}

// --- trivial fixed-size algorithm -------------------------------------------

namespace {

class TrivialFixedAlgorithm final : public StreamingAlgorithm {
public:
    TrivialFixedAlgorithm(Dfa language, FixedWindowSpec spec)
        : language_(std::move(language)), spec_(spec), width_(symbol_width(language_.alphabet)) {
        if (spec_.length < 0) throw Error("window length must be >= 0");
        if (spec_.pad < 0 || spec_.pad >= language_.alphabet.size())
            throw Error("pad symbol not in alphabet");
    }

    const Alphabet& alphabet() const override { return language_.alphabet; }
    bool supports_pop() const override { return false; }

    AlgoState initial_state() const override {
        return make_state<Word>(static_cast<size_t>(spec_.length), spec_.pad);
    }

    AlgoState step(const AlgoState& state, const StreamToken& token) const override {
        if (token.is_pop)
            throw PreconditionError("fixed-size algorithms accept symbol tokens only");
        const Word& window = state_as<Word>(state);
        Word next;
        next.reserve(window.size());
        if (!window.empty()) {
            next.assign(window.begin() + 1, window.end());
            next.push_back(token.sym);
        }
        return make_state<Word>(std::move(next));
    }

    bool accepts(const AlgoState& state) const override {
        return language_.accepts(state_as<Word>(state));
    }

    BitString encode(const AlgoState& state) const override {
        const Word& window = state_as<Word>(state);
        BitString bits;
        bits.reserve(window.size() * static_cast<size_t>(width_));
        for (Symbol s : window) append_fixed_width(bits, s, width_);
        return bits;
    }

    std::string state_key(const AlgoState& state) const override {
        return word_key(state_as<Word>(state));
    }

private:
    Dfa language_;
    FixedWindowSpec spec_;
    int width_;
};

}  // namespace

AlgoPtr trivial_fixed_algorithm(const Dfa& language, const FixedWindowSpec& spec) {
    return std::make_shared<TrivialFixedAlgorithm>(language, spec);
}

// --- reference variable-size algorithm --------------------------------------

namespace {

class ReferenceVariableAlgorithm final : public StreamingAlgorithm {
public:
    explicit ReferenceVariableAlgorithm(Dfa language)
        : language_(std::move(language)),
          width_(std::max(1, symbol_width(language_.alphabet))) {}

    const Alphabet& alphabet() const override { return language_.alphabet; }
    bool supports_pop() const override { return true; }

    AlgoState initial_state() const override { return make_state<Word>(); }

    AlgoState step(const AlgoState& state, const StreamToken& token) const override {
        const Word& window = state_as<Word>(state);
        Word next;
        if (token.is_pop) {
            if (!window.empty()) next.assign(window.begin() + 1, window.end());
        } else {
            next = window;
            next.push_back(token.sym);
        }
        return make_state<Word>(std::move(next));
    }

    bool accepts(const AlgoState& state) const override {
        return language_.accepts(state_as<Word>(state));
    }

    BitString encode(const AlgoState& state) const override {
        const Word& window = state_as<Word>(state);
        if (window.empty()) return {};
        std::vector<BitString> parts;
        parts.reserve(window.size());
        for (Symbol s : window) {
            BitString part;
            append_fixed_width(part, s, width_);
            parts.push_back(std::move(part));
        }
        return encode_tuple(parts);
    }

    std::string state_key(const AlgoState& state) const override {
        return word_key(state_as<Word>(state));
    }

private:
    Dfa language_;
    int width_;
};

}  // namespace

AlgoPtr reference_variable_algorithm(const Dfa& language) {
    return std::make_shared<ReferenceVariableAlgorithm>(language);
}

// --- component tuples --------------------------------------------------------

namespace {

using TupleState = std::vector<AlgoState>;

// The all-components-initial tuple encodes as the empty string; any other
// tuple uses the block code over the component encodings, which are non-empty
// for every length-aware component beyond window length 0. A mixed tuple
// would break injectivity, so it is rejected.
BitString encode_components(const std::vector<BitString>& encs) {
    bool any_empty = false, all_empty = true;
    for (const auto& e : encs) {
        if (e.empty())
            any_empty = true;
        else
            all_empty = false;
    }
    if (all_empty) return {};
    if (any_empty)
        throw InternalError(
            "component tuple mixes empty and non-empty encodings; component encoding is not "
            "length-aware");
    return encode_tuple(encs);
}

std::string component_key(const std::vector<std::string>& keys) {
    std::string out;
    for (const auto& k : keys) {
        out += std::to_string(k.size());
        out.push_back(':');
        out += k;
    }
    return out;
}

class BooleanProductAlgorithm final : public StreamingAlgorithm {
public:
    BooleanProductAlgorithm(std::vector<AlgoPtr> parts,
                            std::function<bool(const std::vector<bool>&)> combine)
        : parts_(std::move(parts)), combine_(std::move(combine)) {
        if (parts_.empty()) throw Error("boolean product needs at least one component");
        for (const auto& p : parts_)
            if (p->alphabet() != parts_[0]->alphabet())
                throw Error("alphabet mismatch between product components");
    }

    const Alphabet& alphabet() const override { return parts_[0]->alphabet(); }

    bool supports_pop() const override {
        for (const auto& p : parts_)
            if (!p->supports_pop()) return false;
        return true;
    }

    AlgoState initial_state() const override {
        TupleState t;
        t.reserve(parts_.size());
        for (const auto& p : parts_) t.push_back(p->initial_state());
        return make_state<TupleState>(std::move(t));
    }

    AlgoState step(const AlgoState& state, const StreamToken& token) const override {
        const TupleState& cur = state_as<TupleState>(state);
        TupleState next;
        next.reserve(parts_.size());
        for (size_t i = 0; i < parts_.size(); ++i) next.push_back(parts_[i]->step(cur[i], token));
        return make_state<TupleState>(std::move(next));
    }

    bool accepts(const AlgoState& state) const override {
        const TupleState& cur = state_as<TupleState>(state);
        std::vector<bool> answers(parts_.size());
        for (size_t i = 0; i < parts_.size(); ++i) answers[i] = parts_[i]->accepts(cur[i]);
        return combine_(answers);
    }

    BitString encode(const AlgoState& state) const override {
        const TupleState& cur = state_as<TupleState>(state);
        std::vector<BitString> encs(parts_.size());
        for (size_t i = 0; i < parts_.size(); ++i) encs[i] = parts_[i]->encode(cur[i]);
        return encode_components(encs);
    }

    std::string state_key(const AlgoState& state) const override {
        const TupleState& cur = state_as<TupleState>(state);
        std::vector<std::string> keys(parts_.size());
        for (size_t i = 0; i < parts_.size(); ++i) keys[i] = parts_[i]->state_key(cur[i]);
        return component_key(keys);
    }

private:
    std::vector<AlgoPtr> parts_;
    std::function<bool(const std::vector<bool>&)> combine_;
};

}  // namespace

AlgoPtr boolean_product_algorithm(std::vector<AlgoPtr> parts,
                                  std::function<bool(const std::vector<bool>&)> combine) {
    return std::make_shared<BooleanProductAlgorithm>(std::move(parts), std::move(combine));
}

// --- Mealy machines ----------------------------------------------------------

Word transduce(const MealyMachine& m, int from, const Word& w) {
    Word out;
    out.reserve(w.size());
    int q = from;
    for (Symbol a : w) {
        auto [next, b] = m.step(q, a);
        out.push_back(b);
        q = next;
    }
    return out;
}

Word left_transduce(const MealyMachine& m, const Word& w) {
    return reversed(transduce(m, m.initial, reversed(w)));
}

namespace {

// Maintains the tuple (A(tau^R_{q_0}(wnd)), ..., A(tau^R_{q_{d-1}}(wnd))).
// On a symbol a: tau^R_{q_i}(wa) = tau^R_{p_i}(w) b_i where (p_i, b_i) =
// delta(q_i, a), so component i becomes component p_i stepped by b_i.
// On Pop both the window and each transduced word lose their first symbol.
class MealyReductionAlgorithm final : public StreamingAlgorithm {
public:
    MealyReductionAlgorithm(AlgoPtr inner, MealyMachine m)
        : inner_(std::move(inner)), m_(std::move(m)) {
        if (inner_->alphabet() != m_.output)
            throw Error("inner algorithm alphabet must equal the machine's output alphabet");
    }

    const Alphabet& alphabet() const override { return m_.input; }
    bool supports_pop() const override { return inner_->supports_pop(); }

    AlgoState initial_state() const override {
        TupleState t(static_cast<size_t>(m_.num_states()), inner_->initial_state());
        return make_state<TupleState>(std::move(t));
    }

    AlgoState step(const AlgoState& state, const StreamToken& token) const override {
        const TupleState& cur = state_as<TupleState>(state);
        TupleState next(cur.size());
        if (token.is_pop) {
            for (size_t i = 0; i < cur.size(); ++i) next[i] = inner_->step(cur[i], token);
        } else {
            for (int i = 0; i < m_.num_states(); ++i) {
                auto [p, b] = m_.step(i, token.sym);
                next[static_cast<size_t>(i)] =
                    inner_->step(cur[static_cast<size_t>(p)], StreamToken::symbol(b));
            }
        }
        return make_state<TupleState>(std::move(next));
    }

    bool accepts(const AlgoState& state) const override {
        const TupleState& cur = state_as<TupleState>(state);
        return inner_->accepts(cur[static_cast<size_t>(m_.initial)]);
    }

    BitString encode(const AlgoState& state) const override {
        const TupleState& cur = state_as<TupleState>(state);
        std::vector<BitString> encs(cur.size());
        for (size_t i = 0; i < cur.size(); ++i) encs[i] = inner_->encode(cur[i]);
        return encode_components(encs);
    }

    std::string state_key(const AlgoState& state) const override {
        const TupleState& cur = state_as<TupleState>(state);
        std::vector<std::string> keys(cur.size());
        for (size_t i = 0; i < cur.size(); ++i) keys[i] = inner_->state_key(cur[i]);
        return component_key(keys);
    }

private:
    AlgoPtr inner_;
    MealyMachine m_;
};

}  // namespace

AlgoPtr reduce_via_mealy(AlgoPtr algorithm_for_target, const MealyMachine& m) {
    return std::make_shared<MealyReductionAlgorithm>(std::move(algorithm_for_target), m);
}

// --- space measurement --------------------------------------------------------

namespace {

struct InjectivityChecker {
    std::unordered_map<std::string, std::string> enc_to_key;

    void check(const BitString& enc, const std::string& key) {
        auto [it, inserted] = enc_to_key.emplace(bits_to_string(enc), key);
        if (!inserted && it->second != key)
            throw InternalError("state encoding is not injective: states '" + it->second +
                                "' and '" + key + "' share encoding '" + bits_to_string(enc) +
                                "'");
    }
};

int explore_bounded(const StreamingAlgorithm& alg, int bound, const Budget& budget) {
    struct Item {
        AlgoState state;
        int len;
    };
    InjectivityChecker inj;
    std::unordered_set<std::string> seen;
    std::deque<Item> queue;
    AlgoState init = alg.initial_state();
    std::string init_key = alg.state_key(init) + "|0";
    seen.insert(init_key);
    int max_bits = static_cast<int>(alg.encode(init).size());
    inj.check(alg.encode(init), alg.state_key(init));
    queue.push_back({init, 0});
    const int k = alg.alphabet().size();
    while (!queue.empty()) {
        Item cur = queue.front();
        queue.pop_front();
        std::vector<std::pair<StreamToken, int>> moves;
        if (cur.len < bound)
            for (Symbol s = 0; s < k; ++s) moves.emplace_back(StreamToken::symbol(s), cur.len + 1);
        moves.emplace_back(StreamToken::pop(), std::max(cur.len - 1, 0));
        for (const auto& [token, next_len] : moves) {
            AlgoState next = alg.step(cur.state, token);
            std::string key = alg.state_key(next);
            if (!seen.insert(key + "|" + std::to_string(next_len)).second) continue;
            if (seen.size() > budget.max_explore_states)
                throw BudgetError("state exploration exceeds budget");
            BitString enc = alg.encode(next);
            inj.check(enc, key);
            max_bits = std::max(max_bits, static_cast<int>(enc.size()));
            queue.push_back({std::move(next), next_len});
        }
    }
    return max_bits;
}

}  // namespace

SpaceProfile exact_space_profile(const StreamingAlgorithm& alg, int max_n, const Budget& budget) {
    if (!alg.supports_pop())
        throw PreconditionError("variable-model profiling needs a pop-capable algorithm");
    SpaceProfile profile;
    profile.model = WindowModel::Variable;
    profile.bits.reserve(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        int bits = explore_bounded(alg, n, budget);
        if (!profile.bits.empty() && bits < profile.bits.back())
            throw InternalError("variable-model space profile must be monotone");
        profile.bits.push_back(bits);
    }
    return profile;
}

int measure_fixed_space_bits(const StreamingAlgorithm& alg, const Budget& budget) {
    InjectivityChecker inj;
    std::unordered_set<std::string> seen;
    std::deque<AlgoState> queue;
    AlgoState init = alg.initial_state();
    seen.insert(alg.state_key(init));
    inj.check(alg.encode(init), alg.state_key(init));
    int max_bits = static_cast<int>(alg.encode(init).size());
    queue.push_back(init);
    const int k = alg.alphabet().size();
    while (!queue.empty()) {
        AlgoState cur = queue.front();
        queue.pop_front();
        for (Symbol s = 0; s < k; ++s) {
            AlgoState next = alg.step(cur, StreamToken::symbol(s));
            std::string key = alg.state_key(next);
            if (!seen.insert(key).second) continue;
            if (seen.size() > budget.max_explore_states)
                throw BudgetError("state exploration exceeds budget");
            BitString enc = alg.encode(next);
            inj.check(enc, key);
            max_bits = std::max(max_bits, static_cast<int>(enc.size()));
            queue.push_back(std::move(next));
        }
    }
    return max_bits;
}

SpaceProfile exact_space_profile_fixed(const std::function<AlgoPtr(int)>& factory, int max_n,
                                       const Budget& budget) {
    SpaceProfile profile;
    profile.model = WindowModel::Fixed;
    profile.bits.reserve(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        profile.bits.push_back(measure_fixed_space_bits(*factory(n), budget));
    return profile;
}

}  // namespace slwin
