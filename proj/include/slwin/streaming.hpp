#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slwin/automata.hpp"

namespace slwin {

/// One item of a variable-size stream: a symbol arrival or a Pop (the
/// expiration of the oldest window element).
struct StreamToken {
    bool is_pop = false;
    Symbol sym = -1;

    static StreamToken pop() { return StreamToken{true, -1}; }
    static StreamToken symbol(Symbol s) { return StreamToken{false, s}; }
};

using Stream = std::vector<StreamToken>;

Stream stream_of_word(const Word& w);

/// Window content of a variable-size stream: symbols append on the right,
/// Pop drops the leftmost symbol (no-op on an empty window).
Word window_contents(const Stream& stream);

struct FixedWindowSpec {
    int length = 0;
    Symbol pad = 0;  // fills the window before enough symbols arrived

    FixedWindowSpec() = default;
    explicit FixedWindowSpec(int n, Symbol pad_symbol = 0) : length(n), pad(pad_symbol) {}
};

/// The active window of the fixed-size model: the last n symbols, left-padded
/// with the pad symbol while fewer than n symbols have arrived.
Word active_window(const Word& w, const FixedWindowSpec& spec);

/// State handle for streaming algorithms. Each implementation stores its own
/// state type behind the erased pointer.
struct AlgoState {
    std::shared_ptr<const void> ptr;
};

/// A deterministic (possibly infinite) transition system with an injective
/// bit-string encoding of its states. Stepping is pure: state in, state out.
class StreamingAlgorithm {
public:
    virtual ~StreamingAlgorithm() = default;

    virtual const Alphabet& alphabet() const = 0;
    /// Fixed-size algorithms reject Pop tokens (they are only meaningful in
    /// the variable-size model).
    virtual bool supports_pop() const = 0;
    virtual AlgoState initial_state() const = 0;
    virtual AlgoState step(const AlgoState& state, const StreamToken& token) const = 0;
    virtual bool accepts(const AlgoState& state) const = 0;
    virtual BitString encode(const AlgoState& state) const = 0;
    /// Canonical key, unique per distinct state; exploration uses it to
    /// verify that `encode` is injective on reachable states.
    virtual std::string state_key(const AlgoState& state) const = 0;
};

using AlgoPtr = std::shared_ptr<const StreamingAlgorithm>;

AlgoState run_stream(const StreamingAlgorithm& alg, const Stream& stream);
bool accepts_stream(const StreamingAlgorithm& alg, const Stream& stream);

/// Fixed-size algorithm storing the whole window in a ring buffer;
/// space n * ceil(log2 |Sigma|) bits.
AlgoPtr trivial_fixed_algorithm(const Dfa& language, const FixedWindowSpec& spec);

/// Variable-size oracle storing the exact window content; ground truth for
/// every other algorithm in differential tests.
AlgoPtr reference_variable_algorithm(const Dfa& language);

/// Runs component algorithms in lockstep and combines their answers;
/// realizes the Boolean-closure bound space <= 2 * sum of component spaces.
AlgoPtr boolean_product_algorithm(std::vector<AlgoPtr> parts,
                                  std::function<bool(const std::vector<bool>&)> combine);

struct MealyMachine {
    Alphabet input;
    Alphabet output;
    std::vector<std::string> state_names;
    int initial = 0;
    std::vector<std::pair<int, Symbol>> delta;  // [state * |input| + symbol] -> (state, output)

    int num_states() const { return static_cast<int>(state_names.size()); }
    std::pair<int, Symbol> step(int q, Symbol a) const {
        return delta[static_cast<size_t>(q) * static_cast<size_t>(input.size()) +
                     static_cast<size_t>(a)];
    }
};

/// Forward transduction tau_q: outputs one symbol per input symbol.
Word transduce(const MealyMachine& m, int from, const Word& w);

/// tau^R(w) = (tau(w^R))^R: the machine reads the word right to left.
Word left_transduce(const MealyMachine& m, const Word& w);

/// Given an algorithm for L over m's output alphabet and a Mealy machine m
/// whose right-to-left transduction reduces K to L, produces an algorithm for
/// K maintaining one component per machine state; measured space is at most
/// 2d times the component space.
AlgoPtr reduce_via_mealy(AlgoPtr algorithm_for_target, const MealyMachine& m);

enum class WindowModel { Fixed, Variable };

struct SpaceProfile {
    WindowModel model = WindowModel::Variable;
    std::vector<int> bits;  // bits[n], n = 0..max_n

    int at(int n) const { return bits.at(static_cast<size_t>(n)); }
};

/// Variable model: explores every state reachable by streams all of whose
/// prefixes keep the window length <= n, for each n up to max_n; entry n is
/// the maximum encoding length among those states. Checks encode injectivity.
SpaceProfile exact_space_profile(const StreamingAlgorithm& alg, int max_n,
                                 const Budget& budget = {});

/// Fixed model: the reachable state space under symbol input is finite;
/// returns the maximum encoding length (the algorithm's space for its n).
int measure_fixed_space_bits(const StreamingAlgorithm& alg, const Budget& budget = {});

/// Fixed model profile over a range of window sizes via the per-n factory.
SpaceProfile exact_space_profile_fixed(const std::function<AlgoPtr(int)>& factory, int max_n,
                                       const Budget& budget = {});

}  // namespace slwin
