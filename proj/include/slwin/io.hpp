#pragma once

#include <string>
#include <variant>

#include "slwin/automata.hpp"

namespace slwin {

/// A parsed automaton file: either kind, as declared by its `type` line.
struct ParsedAutomaton {
    std::variant<Dfa, Nfa> value;

    bool is_dfa() const { return std::holds_alternative<Dfa>(value); }
    const Dfa& dfa() const { return std::get<Dfa>(value); }
    const Nfa& nfa() const { return std::get<Nfa>(value); }

    /// View as an NFA regardless of kind.
    Nfa as_nfa() const { return is_dfa() ? to_nfa(dfa()) : nfa(); }
};

ParsedAutomaton parse_automaton_text(const std::string& text);
ParsedAutomaton parse_automaton_json(const std::string& text);

/// Detects JSON by a leading '{'; otherwise parses the line format.
ParsedAutomaton parse_automaton(const std::string& text);

std::string format_automaton_text(const Dfa& a);
std::string format_automaton_text(const Nfa& a);
std::string format_automaton_json(const Dfa& a);
std::string format_automaton_json(const Nfa& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// FNV-1a/64 digest of raw bytes, as 16 hex digits. Used for input digests in
/// reports; stable across platforms.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace slwin
