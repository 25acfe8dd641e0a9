#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "slwin/decompose.hpp"
#include "slwin/exactspace.hpp"
#include "slwin/families.hpp"
#include "slwin/io.hpp"
#include "slwin/report.hpp"
#include "slwin/streaming.hpp"

namespace {

using namespace slwin;

struct GlobalOpts {
    std::string format = "text";  // text | json
    uint64_t budget_states = 0;   // 0 = defaults
    uint64_t seed = 0;
};

Budget make_budget(const GlobalOpts& g) {
    Budget b;
    if (g.budget_states) {
        b.max_subset_states = g.budget_states;
        b.max_window_states = g.budget_states;
        b.max_explore_states = g.budget_states;
        b.max_word_enumeration = g.budget_states;
    }
    return b;
}

struct TimedScope {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~TimedScope() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cerr << "elapsed: " << ms << " ms\n";
    }
};

ParsedAutomaton load_automaton(const std::string& path) {
    return parse_automaton(read_file(path));
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

Stream parse_stream_text(const Alphabet& alphabet, const std::string& text) {
    Stream stream;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "!") {
            stream.push_back(StreamToken::pop());
            continue;
        }
        auto s = alphabet.find(tok);
        if (!s) throw Error("stream token '" + tok + "' is not in the alphabet (and is not !)");
        stream.push_back(StreamToken::symbol(*s));
    }
    return stream;
}

int cmd_classify(const GlobalOpts& g, const std::string& input, const std::string& out_path) {
    TimedScope timer;
    std::string bytes = read_file(input);
    ParsedAutomaton parsed = parse_automaton(bytes);
    Budget budget = make_budget(g);
    ClassifyResult res =
        parsed.is_dfa() ? classify_dfa(parsed.dfa(), budget) : classify_nfa(parsed.nfa(), budget);

    if (g.format == "json") {
        Json j;
        j["command"] = "classify";
        j["input_digest"] = fnv1a_hex(bytes);
        j.update(classify_result_to_json(res));
        emit(out_path, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out << "input_digest: " << fnv1a_hex(bytes) << "\n";
    out << "fixed: " << to_string(res.space.fixed) << "\n";
    out << "variable: " << to_string(res.space.variable) << "\n";
    if (res.linear_witness) {
        const auto& w = *res.linear_witness;
        const Alphabet& ab = res.reversal_dfa.alphabet;
        out << "witness (non-well-behaved SCC of the reversal subset automaton):\n";
        out << "  u:  " << ab.format_word(w.u) << "\n";
        out << "  u0: " << ab.format_word(w.u0) << "\n";
        out << "  v0: " << ab.format_word(w.v0) << "\n";
        out << "  u1: " << ab.format_word(w.u1) << "\n";
        out << "  v1: " << ab.format_word(w.v1) << "\n";
    }
    if (res.critical) {
        const auto& t = *res.critical;
        const Alphabet& ab = res.minimal.alphabet;
        out << "critical tuple (over the minimal DFA):\n";
        out << "  u0: " << ab.format_word(t.u0) << "\n";
        out << "  u1: " << ab.format_word(t.u1) << "\n";
        out << "  w0: " << ab.format_word(t.w0) << "\n";
        out << "  w1: " << ab.format_word(t.w1) << "\n";
    }
    emit(out_path, out.str());
    return 0;
}

int cmd_measure(const GlobalOpts& g, const std::string& input, int max_n,
                const std::string& out_format, const std::string& out_path) {
    TimedScope timer;
    std::string bytes = read_file(input);
    ParsedAutomaton parsed = parse_automaton(bytes);
    Budget budget = make_budget(g);
    Dfa lmin =
        parsed.is_dfa() ? minimize(parsed.dfa()) : minimize(determinize(parsed.nfa(), budget));
    bool trivial = language_trivial(lmin);
    std::vector<std::string> notes;

    std::vector<std::optional<int>> f_bits(static_cast<size_t>(max_n) + 1);
    std::vector<std::optional<int>> v_bits(static_cast<size_t>(max_n) + 1);
    std::vector<std::optional<uint64_t>> psi_count(static_cast<size_t>(max_n) + 1);

    for (int n = 0; n <= max_n; ++n) {
        try {
            f_bits[static_cast<size_t>(n)] = exact_fixed_space_bits(lmin, n, 0, budget);
        } catch (const BudgetError&) {
            notes.push_back("F omitted for n=" + std::to_string(n) +
                            ": |Sigma|^n exceeds the window-state budget");
        }
        try {
            psi_count[static_cast<size_t>(n)] = suffix_profile_count(lmin, n, budget);
        } catch (const BudgetError&) {
            notes.push_back("psi count omitted for n=" + std::to_string(n) +
                            ": enumeration exceeds budget");
        }
    }
    if (trivial) {
        for (int n = 0; n <= max_n; ++n) v_bits[static_cast<size_t>(n)] = 0;
        notes.push_back(
            "trivial language: the optimal variable-size space is 0 even though the "
            "suffix-profile count is n+1");
    } else {
        try {
            AlgoPtr opt = optimal_variable_algorithm(lmin, budget);
            SpaceProfile profile = exact_space_profile(*opt, max_n, budget);
            for (int n = 0; n <= max_n; ++n) v_bits[static_cast<size_t>(n)] = profile.at(n);
        } catch (const BudgetError&) {
            notes.push_back("V omitted: exploration exceeds budget");
        }
    }

    if (out_format == "json") {
        Json j;
        j["command"] = "measure";
        j["input_digest"] = fnv1a_hex(bytes);
        Json rows = Json::array();
        for (int n = 0; n <= max_n; ++n) {
            Json row;
            row["n"] = n;
            row["F_bits"] = f_bits[static_cast<size_t>(n)]
                                ? Json(*f_bits[static_cast<size_t>(n)])
                                : Json(nullptr);
            row["V_bits"] = v_bits[static_cast<size_t>(n)]
                                ? Json(*v_bits[static_cast<size_t>(n)])
                                : Json(nullptr);
            row["psi_count"] = psi_count[static_cast<size_t>(n)]
                                   ? Json(*psi_count[static_cast<size_t>(n)])
                                   : Json(nullptr);
            rows.push_back(row);
        }
        j["rows"] = rows;
        j["notes"] = notes;
        emit(out_path, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out << "n,F_bits,V_bits,psi_count\n";
    for (int n = 0; n <= max_n; ++n) {
        out << n << ',';
        if (f_bits[static_cast<size_t>(n)]) out << *f_bits[static_cast<size_t>(n)];
        out << ',';
        if (v_bits[static_cast<size_t>(n)]) out << *v_bits[static_cast<size_t>(n)];
        out << ',';
        if (psi_count[static_cast<size_t>(n)]) out << *psi_count[static_cast<size_t>(n)];
        out << '\n';
    }
    emit(out_path, out.str());
    for (const auto& note : notes) std::cerr << "note: " << note << "\n";
    return 0;
}

int cmd_simulate(const GlobalOpts& g, const std::string& input, const std::string& algo,
                 const std::string& stream_path, int window, int random_tokens, bool verify) {
    TimedScope timer;
    std::string bytes = read_file(input);
    ParsedAutomaton parsed = parse_automaton(bytes);
    Budget budget = make_budget(g);
    Dfa lmin =
        parsed.is_dfa() ? minimize(parsed.dfa()) : minimize(determinize(parsed.nfa(), budget));
    FixedWindowSpec spec(window, 0);

    AlgoPtr alg;
    if (algo == "trivial")
        alg = trivial_fixed_algorithm(lmin, spec);
    else if (algo == "optimal-variable")
        alg = optimal_variable_algorithm(lmin, budget);
    else if (algo == "sparse")
        alg = sparse_fixed_algorithm(lmin, spec, budget);
    else if (algo == "constant")
        alg = constant_fixed_algorithm(lmin, spec);
    else
        throw Error("unknown algorithm '" + algo + "'");

    Stream stream;
    if (!stream_path.empty()) {
        stream = parse_stream_text(lmin.alphabet, read_file(stream_path));
    } else if (random_tokens > 0) {
        std::mt19937_64 rng(g.seed);
        int choices = lmin.alphabet.size() + (alg->supports_pop() ? 1 : 0);
        for (int i = 0; i < random_tokens; ++i) {
            int pick = static_cast<int>(rng() % static_cast<uint64_t>(choices));
            if (pick == lmin.alphabet.size())
                stream.push_back(StreamToken::pop());
            else
                stream.push_back(StreamToken::symbol(static_cast<Symbol>(pick)));
        }
    } else {
        throw Error("either --stream or --random is required");
    }

    AlgoPtr ref = reference_variable_algorithm(lmin);
    AlgoState state = alg->initial_state();
    AlgoState ref_state = ref->initial_state();
    Word ref_window;  // window for fixed-model verification
    size_t peak = alg->encode(state).size();
    int64_t mismatches = 0;

    std::ostringstream out;
    for (size_t i = 0; i < stream.size(); ++i) {
        const StreamToken& tok = stream[i];
        state = alg->step(state, tok);
        peak = std::max(peak, alg->encode(state).size());
        bool acc = alg->accepts(state);
        out << i << ' ' << (tok.is_pop ? "!" : lmin.alphabet.token(tok.sym)) << ' '
            << (acc ? "accept" : "reject") << ' ' << alg->encode(state).size() << "\n";
        if (verify) {
            bool expected;
            if (alg->supports_pop()) {
                ref_state = ref->step(ref_state, tok);
                expected = ref->accepts(ref_state);
            } else {
                ref_window.push_back(tok.sym);
                expected = lmin.accepts(active_window(ref_window, spec));
            }
            if (expected != acc) ++mismatches;
        }
    }
    out << "peak_bits " << peak << "\n";
    if (verify) out << "mismatches " << mismatches << "\n";
    std::cout << out.str();
    return (verify && mismatches > 0) ? 2 : 0;
}

int cmd_decide(const GlobalOpts& g, const std::string& problem, const std::string& input) {
    TimedScope timer;
    std::string bytes = read_file(input);
    ParsedAutomaton parsed = parse_automaton(bytes);
    Budget budget = make_budget(g);
    auto run = [&]() -> DecideResult {
        if (problem == "dfa1" || problem == "dfalog") {
            if (!parsed.is_dfa()) throw Error("problem '" + problem + "' expects a dfa input");
            return decide_dfa(problem == "dfa1" ? DecisionProblem::Dfa1 : DecisionProblem::DfaLog,
                              parsed.dfa(), budget);
        }
        if (problem == "nfa1" || problem == "nfalog") {
            if (parsed.is_dfa()) throw Error("problem '" + problem + "' expects an nfa input");
            return decide_nfa(problem == "nfa1" ? DecisionProblem::Nfa1 : DecisionProblem::NfaLog,
                              parsed.nfa(), budget);
        }
        throw Error("unknown problem '" + problem + "'");
    };
    DecideResult res = run();
    std::cout << (res.answer ? "yes" : "no") << "\n";
    if (!res.answer) {
        if (res.non_well_behaved) {
            Json j = witness_to_json(res.reversal_dfa, *res.non_well_behaved);
            if (res.critical) j["critical"] = critical_to_json(res.minimal, *res.critical);
            std::cout << j.dump(2) << "\n";
        }
        if (res.equal_length_words) {
            Json j;
            j["kind"] = "equal-length-unmerged-pair";
            j["x"] = word_to_json(res.minimal.alphabet, res.equal_length_words->first);
            j["y"] = word_to_json(res.minimal.alphabet, res.equal_length_words->second);
            j["p"] = res.minimal.state_names.at(static_cast<size_t>(res.unmerged_pair->first));
            j["q"] = res.minimal.state_names.at(static_cast<size_t>(res.unmerged_pair->second));
            std::cout << j.dump(2) << "\n";
        }
    }
    return res.answer ? 0 : 1;
}

int cmd_decompose(const GlobalOpts& g, const std::string& input, const std::string& kind,
                  const std::string& out_path) {
    TimedScope timer;
    std::string bytes = read_file(input);
    ParsedAutomaton parsed = parse_automaton(bytes);
    Budget budget = make_budget(g);
    Dfa lmin =
        parsed.is_dfa() ? minimize(parsed.dfa()) : minimize(determinize(parsed.nfa(), budget));
    DecompositionCertificate cert;
    if (kind == "log")
        cert = log_class_decomposition(lmin, budget);
    else if (kind == "constant")
        cert = constant_decomposition(lmin, budget);
    else if (kind == "alternation")
        cert = alternation_decomposition(lmin, budget);
    else
        throw Error("unknown decomposition kind '" + kind + "'");
    Json j = certificate_to_json(cert);
    j["command"] = "decompose";
    j["decomposition_kind"] = kind;
    j["input_digest"] = fnv1a_hex(bytes);
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_file(out_path, j.dump(2) + "\n");
        std::cout << "self-verification: ok\n";
    }
    return 0;
}

int cmd_generate(const GlobalOpts& g, const std::string& family, int k,
                 const std::string& payload_path, const std::string& out_path) {
    TimedScope timer;
    Budget budget = make_budget(g);
    auto write_nfa = [&](const Nfa& a) {
        emit(out_path, g.format == "json" ? format_automaton_json(a) : format_automaton_text(a));
    };
    auto write_dfa = [&](const Dfa& a) {
        emit(out_path, g.format == "json" ? format_automaton_json(a) : format_automaton_text(a));
    };
    if (family == "lk") {
        write_dfa(lk_dfa(k));
        return 0;
    }
    if (family == "zk") {
        write_dfa(zk_dfa(k, budget));
        return 0;
    }
    if (family == "rho-const" || family == "rho-log" || family == "sigma") {
        if (payload_path.empty()) throw Error("gadget families need --payload");
        ParsedAutomaton payload = load_automaton(payload_path);
        Nfa base = payload.as_nfa();
        if (family == "rho-const") write_nfa(rho_const(base));
        if (family == "rho-log") write_nfa(rho_log(base));
        if (family == "sigma") write_nfa(sigma_gadget(base));
        return 0;
    }
    throw Error("unknown family '" + family + "'");
}

int cmd_verify(const std::string& input) {
    TimedScope timer;
    Json j = Json::parse(read_file(input));
    verify_artifact_json(j);
    std::cout << "ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sliding-window space analysis for regular languages"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget-states", g.budget_states, "state budget for subset constructions");
    app.add_option("--seed", g.seed, "seed for randomized surfaces");

    std::string input, out_path, stream_path, payload_path;
    std::string problem, kind = "log", family, algo = "trivial", out_format = "csv";
    int max_n = 8, window = 0, random_tokens = 0, k = 0;
    bool verify_flag = false;

    auto* classify = app.add_subcommand("classify", "space trichotomy with witnesses");
    classify->add_option("input", input)->required();
    classify->add_option("--out", out_path);

    auto* measure = app.add_subcommand("measure", "exact space tables F, V, psi-count");
    measure->add_option("input", input)->required();
    measure->add_option("--max-n", max_n);
    measure->add_option("--out", out_format, "table format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    measure->add_option("--out-file", out_path);

    auto* simulate = app.add_subcommand("simulate", "run a streaming algorithm over a stream");
    simulate->add_option("input", input)->required();
    simulate->add_option("--algo", algo)
        ->check(CLI::IsMember({"trivial", "optimal-variable", "sparse", "constant"}));
    simulate->add_option("--stream", stream_path);
    simulate->add_option("--window", window);
    simulate->add_option("--random", random_tokens);
    simulate->add_flag("--verify", verify_flag);

    auto* decide = app.add_subcommand("decide", "decision problems dfa1 dfalog nfa1 nfalog");
    decide->add_option("problem", problem)->required();
    decide->add_option("input", input)->required();

    auto* decompose = app.add_subcommand("decompose", "structural decomposition certificates");
    decompose->add_option("input", input)->required();
    decompose->add_option("--kind", kind)->check(CLI::IsMember({"log", "constant", "alternation"}));
    decompose->add_option("--out", out_path);

    auto* generate = app.add_subcommand("generate", "example and gadget families");
    generate->add_option("family", family)->required();
    generate->add_option("--k", k);
    generate->add_option("--payload", payload_path);
    generate->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "re-verify an emitted artifact");
    verify->add_option("input", input)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(g, input, out_path);
        if (measure->parsed()) return cmd_measure(g, input, max_n, out_format, out_path);
        if (simulate->parsed())
            return cmd_simulate(g, input, algo, stream_path, window, random_tokens, verify_flag);
        if (decide->parsed()) return cmd_decide(g, problem, input);
        if (decompose->parsed()) return cmd_decompose(g, input, kind, out_path);
        if (generate->parsed()) return cmd_generate(g, family, k, payload_path, out_path);
        if (verify->parsed()) return cmd_verify(input);
    } catch (const slwin::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const slwin::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const slwin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
