#pragma once

#include <json.hpp>

#include "slwin/classify.hpp"
#include "slwin/decompose.hpp"
#include "slwin/io.hpp"

namespace slwin {

using Json = nlohmann::ordered_json;

Json word_to_json(const Alphabet& alphabet, const Word& w);
Word word_from_json(const Alphabet& alphabet, const Json& j);

Json automaton_to_json_obj(const Dfa& a);
Json automaton_to_json_obj(const Nfa& a);
Dfa dfa_from_json_obj(const Json& j);

std::vector<std::string> state_names_of(const Dfa& a, const std::vector<State>& states);

Json witness_to_json(const Dfa& b, const NonWellBehavedWitness& w);
NonWellBehavedWitness witness_from_json(const Dfa& b, const Json& j);

Json critical_to_json(const Dfa& minimal_dfa, const CriticalTuple& t);
CriticalTuple critical_from_json(const Dfa& minimal_dfa, const Json& j);

Json certificate_to_json(const DecompositionCertificate& cert);
DecompositionCertificate certificate_from_json(const Json& j);

Json classify_result_to_json(const ClassifyResult& res);

/// Re-verifies a serialized artifact (classification report or decomposition
/// certificate); throws on any mismatch.
void verify_artifact_json(const Json& j);

}  // namespace slwin
