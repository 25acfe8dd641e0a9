#include "slwin/io.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace slwin {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

struct RawAutomaton {
    std::string type;
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    std::vector<std::string> initial;
    std::vector<std::string> final;
    std::vector<std::array<std::string, 3>> transitions;  // src, symbol, dst
};

ParsedAutomaton build(const RawAutomaton& raw, int err_line) {
    auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, err_line); };
    if (raw.type != "dfa" && raw.type != "nfa") fail("type must be 'dfa' or 'nfa'");
    if (raw.alphabet.empty()) fail("missing alphabet");
    if (raw.states.empty()) fail("missing states");
    Alphabet alphabet(raw.alphabet);
    std::map<std::string, State> state_ids;
    for (size_t i = 0; i < raw.states.size(); ++i) {
        if (!state_ids.emplace(raw.states[i], static_cast<State>(i)).second)
            fail("duplicate state name '" + raw.states[i] + "'");
    }
    auto state_of = [&](const std::string& name) {
        auto it = state_ids.find(name);
        if (it == state_ids.end()) fail("unknown state '" + name + "'");
        return it->second;
    };
    std::vector<State> initial, finals;
    for (const auto& s : raw.initial) initial.push_back(state_of(s));
    for (const auto& s : raw.final) finals.push_back(state_of(s));
    std::vector<std::tuple<State, Symbol, State>> transitions;
    for (const auto& [src, sym, dst] : raw.transitions) {
        auto s = alphabet.find(sym);
        if (!s) fail("symbol '" + sym + "' is not in the alphabet");
        transitions.emplace_back(state_of(src), *s, state_of(dst));
    }
    if (raw.type == "dfa") {
        if (initial.size() != 1) fail("a dfa needs exactly one initial state");
        return ParsedAutomaton{
            make_dfa(alphabet, raw.states, initial[0], finals, transitions)};
    }
    return ParsedAutomaton{make_nfa(alphabet, raw.states, initial, finals, transitions)};
}

}  // namespace

ParsedAutomaton parse_automaton_text(const std::string& text) {
    RawAutomaton raw;
    bool saw_type = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int last_content_line = 1;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        last_content_line = line_no;
        auto rest = [&](size_t from) {
            return std::vector<std::string>(toks.begin() + static_cast<long>(from), toks.end());
        };
        if (toks[0] == "type:") {
            if (toks.size() != 2) throw ParseError("expected 'type: dfa|nfa'", line_no);
            raw.type = toks[1];
            saw_type = true;
        } else if (toks[0] == "alphabet:") {
            raw.alphabet = rest(1);
        } else if (toks[0] == "states:") {
            raw.states = rest(1);
        } else if (toks[0] == "initial:") {
            raw.initial = rest(1);
        } else if (toks[0] == "final:") {
            raw.final = rest(1);
        } else if (toks.size() == 4 && toks[2] == "->") {
            raw.transitions.push_back({toks[0], toks[1], toks[3]});
        } else {
            throw ParseError("unrecognized line '" + line + "'", line_no);
        }
        if (!saw_type) throw ParseError("the first item must be the 'type:' line", line_no);
        try {
            // validate incrementally so errors carry the offending line
            if (toks.size() == 4 && toks[2] == "->") {
                if (!raw.alphabet.empty()) {
                    Alphabet alphabet(raw.alphabet);
                    if (!alphabet.find(toks[1]))
                        throw ParseError("symbol '" + toks[1] + "' is not in the alphabet",
                                         line_no);
                }
            }
        } catch (const ParseError&) {
            throw;
        }
    }
    if (!saw_type) throw ParseError("empty automaton file", 1);
    try {
        return build(raw, last_content_line);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), last_content_line);
    }
}

ParsedAutomaton parse_automaton_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1);
    }
    auto str_list = [&](const char* key) {
        std::vector<std::string> out;
        if (!j.contains(key)) return out;
        for (const auto& v : j.at(key)) out.push_back(v.get<std::string>());
        return out;
    };
    RawAutomaton raw;
    try {
        raw.type = j.value("type", "");
        raw.alphabet = str_list("alphabet");
        raw.states = str_list("states");
        raw.initial = str_list("initial");
        raw.final = str_list("final");
        if (j.contains("transitions")) {
            for (const auto& t : j.at("transitions")) {
                if (!t.is_array() || t.size() != 3)
                    throw ParseError("each transition must be [src, symbol, dst]", 1);
                raw.transitions.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                                           t[2].get<std::string>()});
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid automaton JSON: ") + e.what(), 1);
    }
    try {
        return build(raw, 1);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), 1);
    }
}

ParsedAutomaton parse_automaton(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_automaton_json(text);
        break;
    }
    return parse_automaton_text(text);
}

namespace {

template <typename A>
void format_common(std::ostringstream& out, const A& a, const char* type,
                   const std::vector<std::string>& initial) {
    out << "type: " << type << "\n";
    out << "alphabet:";
    for (const auto& t : a.alphabet.tokens()) out << ' ' << t;
    out << "\nstates:";
    for (const auto& n : a.state_names) out << ' ' << n;
    out << "\ninitial:";
    for (const auto& n : initial) out << ' ' << n;
    out << "\nfinal:";
    for (State q = 0; q < a.num_states(); ++q)
        if (a.is_final(q)) out << ' ' << a.state_names[static_cast<size_t>(q)];
    out << "\n";
}

template <typename A>
nlohmann::ordered_json json_common(const A& a, const char* type,
                                   const std::vector<std::string>& initial) {
    nlohmann::ordered_json j;
    j["type"] = type;
    j["alphabet"] = a.alphabet.tokens();
    j["states"] = a.state_names;
    j["initial"] = initial;
    std::vector<std::string> finals;
    for (State q = 0; q < a.num_states(); ++q)
        if (a.is_final(q)) finals.push_back(a.state_names[static_cast<size_t>(q)]);
    j["final"] = finals;
    return j;
}

}  // namespace

std::string format_automaton_text(const Dfa& a) {
    std::ostringstream out;
    format_common(out, a, "dfa", {a.state_names[static_cast<size_t>(a.initial)]});
    for (State q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < a.alphabet.size(); ++s)
            out << a.state_names[static_cast<size_t>(q)] << ' ' << a.alphabet.token(s) << " -> "
                << a.state_names[static_cast<size_t>(a.step(q, s))] << "\n";
    return out.str();
}

std::string format_automaton_text(const Nfa& a) {
    std::ostringstream out;
    std::vector<std::string> initial;
    for (State q : a.initial) initial.push_back(a.state_names[static_cast<size_t>(q)]);
    format_common(out, a, "nfa", initial);
    for (State q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < a.alphabet.size(); ++s)
            for (State t : a.targets[static_cast<size_t>(q)][static_cast<size_t>(s)])
                out << a.state_names[static_cast<size_t>(q)] << ' ' << a.alphabet.token(s)
                    << " -> " << a.state_names[static_cast<size_t>(t)] << "\n";
    return out.str();
}

std::string format_automaton_json(const Dfa& a) {
    auto j = json_common(a, "dfa", {a.state_names[static_cast<size_t>(a.initial)]});
    nlohmann::ordered_json trans = nlohmann::ordered_json::array();
    for (State q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < a.alphabet.size(); ++s)
            trans.push_back({a.state_names[static_cast<size_t>(q)], a.alphabet.token(s),
                             a.state_names[static_cast<size_t>(a.step(q, s))]});
    j["transitions"] = trans;
    return j.dump(2) + "\n";
}

std::string format_automaton_json(const Nfa& a) {
    std::vector<std::string> initial;
    for (State q : a.initial) initial.push_back(a.state_names[static_cast<size_t>(q)]);
    auto j = json_common(a, "nfa", initial);
    nlohmann::ordered_json trans = nlohmann::ordered_json::array();
    for (State q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < a.alphabet.size(); ++s)
            for (State t : a.targets[static_cast<size_t>(q)][static_cast<size_t>(s)])
                trans.push_back({a.state_names[static_cast<size_t>(q)], a.alphabet.token(s),
                                 a.state_names[static_cast<size_t>(t)]});
    j["transitions"] = trans;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace slwin
