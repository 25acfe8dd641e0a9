#include "slwin/report.hpp"

#include <algorithm>

namespace slwin {

Json word_to_json(const Alphabet& alphabet, const Word& w) {
    Json arr = Json::array();
    for (Symbol s : w) arr.push_back(alphabet.token(s));
    return arr;
}

Word word_from_json(const Alphabet& alphabet, const Json& j) {
    Word w;
    for (const auto& tok : j) {
        auto s = alphabet.find(tok.get<std::string>());
        if (!s) throw Error("token '" + tok.get<std::string>() + "' is not in the alphabet");
        w.push_back(*s);
    }
    return w;
}

Json automaton_to_json_obj(const Dfa& a) { return Json::parse(format_automaton_json(a)); }
Json automaton_to_json_obj(const Nfa& a) { return Json::parse(format_automaton_json(a)); }

Dfa dfa_from_json_obj(const Json& j) {
    ParsedAutomaton parsed = parse_automaton_json(j.dump());
    if (!parsed.is_dfa()) throw Error("expected a dfa");
    return parsed.dfa();
}

std::vector<std::string> state_names_of(const Dfa& a, const std::vector<State>& states) {
    std::vector<std::string> out;
    out.reserve(states.size());
    for (State q : states) out.push_back(a.state_names.at(static_cast<size_t>(q)));
    return out;
}

namespace {

State state_by_name(const Dfa& a, const std::string& name) {
    for (State q = 0; q < a.num_states(); ++q)
        if (a.state_names[static_cast<size_t>(q)] == name) return q;
    throw Error("unknown state name '" + name + "'");
}

}  // namespace

Json witness_to_json(const Dfa& b, const NonWellBehavedWitness& w) {
    Json j;
    j["kind"] = "non-well-behaved";
    j["u"] = word_to_json(b.alphabet, w.u);
    j["u0"] = word_to_json(b.alphabet, w.u0);
    j["v0"] = word_to_json(b.alphabet, w.v0);
    j["u1"] = word_to_json(b.alphabet, w.u1);
    j["v1"] = word_to_json(b.alphabet, w.v1);
    j["pivot"] = b.state_names.at(static_cast<size_t>(w.pivot));
    j["p0"] = b.state_names.at(static_cast<size_t>(w.p0));
    j["p1"] = b.state_names.at(static_cast<size_t>(w.p1));
    return j;
}

NonWellBehavedWitness witness_from_json(const Dfa& b, const Json& j) {
    NonWellBehavedWitness w;
    w.u = word_from_json(b.alphabet, j.at("u"));
    w.u0 = word_from_json(b.alphabet, j.at("u0"));
    w.v0 = word_from_json(b.alphabet, j.at("v0"));
    w.u1 = word_from_json(b.alphabet, j.at("u1"));
    w.v1 = word_from_json(b.alphabet, j.at("v1"));
    w.pivot = state_by_name(b, j.at("pivot").get<std::string>());
    w.p0 = state_by_name(b, j.at("p0").get<std::string>());
    w.p1 = state_by_name(b, j.at("p1").get<std::string>());
    return w;
}

Json critical_to_json(const Dfa& a, const CriticalTuple& t) {
    Json j;
    j["kind"] = "critical-tuple";
    j["u0"] = word_to_json(a.alphabet, t.u0);
    j["u1"] = word_to_json(a.alphabet, t.u1);
    j["w0"] = word_to_json(a.alphabet, t.w0);
    j["w1"] = word_to_json(a.alphabet, t.w1);
    j["qset0"] = state_names_of(a, t.reachable0);
    j["qset1"] = state_names_of(a, t.reachable1);
    return j;
}

CriticalTuple critical_from_json(const Dfa& a, const Json& j) {
    CriticalTuple t;
    t.u0 = word_from_json(a.alphabet, j.at("u0"));
    t.u1 = word_from_json(a.alphabet, j.at("u1"));
    t.w0 = word_from_json(a.alphabet, j.at("w0"));
    t.w1 = word_from_json(a.alphabet, j.at("w1"));
    for (const auto& name : j.at("qset0")) t.reachable0.push_back(state_by_name(a, name));
    for (const auto& name : j.at("qset1")) t.reachable1.push_back(state_by_name(a, name));
    std::sort(t.reachable0.begin(), t.reachable0.end());
    std::sort(t.reachable1.begin(), t.reachable1.end());
    return t;
}

namespace {

Json node_to_json(const CertificateNode& node) {
    Json j;
    switch (node.kind) {
        case CertificateNode::Kind::Leaf: {
            j["op"] = "leaf";
            j["tag"] = to_string(node.tag);
            if (node.tag == LeafTag::SuffixTestable) j["suffix_k"] = node.suffix_k;
            j["automaton"] = automaton_to_json_obj(*node.leaf);
            return j;
        }
        case CertificateNode::Kind::Union: j["op"] = "union"; break;
        case CertificateNode::Kind::Intersection: j["op"] = "intersection"; break;
        case CertificateNode::Kind::Complement: j["op"] = "complement"; break;
    }
    Json children = Json::array();
    for (const auto& child : node.children) children.push_back(node_to_json(child));
    j["children"] = children;
    return j;
}

LeafTag tag_from_string(const std::string& s) {
    if (s == "left-ideal") return LeafTag::LeftIdeal;
    if (s == "right-ideal") return LeafTag::RightIdeal;
    if (s == "length-language") return LeafTag::LengthLanguage;
    if (s == "suffix-testable") return LeafTag::SuffixTestable;
    if (s == "finite") return LeafTag::Finite;
    throw Error("unknown leaf tag '" + s + "'");
}

CertificateNode node_from_json(const Json& j) {
    std::string op = j.at("op").get<std::string>();
    if (op == "leaf") {
        LeafTag tag = tag_from_string(j.at("tag").get<std::string>());
        int suffix_k = j.value("suffix_k", 0);
        return CertificateNode::make_leaf(dfa_from_json_obj(j.at("automaton")), tag, suffix_k);
    }
    std::vector<CertificateNode> children;
    for (const auto& child : j.at("children")) children.push_back(node_from_json(child));
    if (op == "union") return CertificateNode::make_union(std::move(children));
    if (op == "intersection") return CertificateNode::make_intersection(std::move(children));
    if (op == "complement") {
        if (children.size() != 1) throw Error("complement takes one child");
        return CertificateNode::make_complement(std::move(children[0]));
    }
    throw Error("unknown formula op '" + op + "'");
}

}  // namespace

Json certificate_to_json(const DecompositionCertificate& cert) {
    Json j;
    j["kind"] = "decomposition-certificate";
    j["target"] = automaton_to_json_obj(cert.target);
    j["formula"] = node_to_json(cert.formula);
    return j;
}

DecompositionCertificate certificate_from_json(const Json& j) {
    DecompositionCertificate cert;
    cert.target = dfa_from_json_obj(j.at("target"));
    cert.formula = node_from_json(j.at("formula"));
    return cert;
}

Json classify_result_to_json(const ClassifyResult& res) {
    Json j;
    j["kind"] = "classification";
    j["fixed"] = to_string(res.space.fixed);
    j["variable"] = to_string(res.space.variable);
    j["minimal"] = automaton_to_json_obj(res.minimal);
    j["reversal"] = automaton_to_json_obj(res.reversal_dfa);
    if (res.linear_witness) j["witness"] = witness_to_json(res.reversal_dfa, *res.linear_witness);
    if (res.critical) j["critical"] = critical_to_json(res.minimal, *res.critical);
    return j;
}

void verify_artifact_json(const Json& j) {
    std::string kind = j.value("kind", "");
    if (kind == "decomposition-certificate") {
        DecompositionCertificate cert = certificate_from_json(j);
        verify_certificate(cert);
        return;
    }
    if (kind == "classification") {
        Dfa minimal = dfa_from_json_obj(j.at("minimal"));
        ClassifyResult res = classify_dfa(minimal);
        if (std::string(to_string(res.space.fixed)) != j.at("fixed").get<std::string>() ||
            std::string(to_string(res.space.variable)) != j.at("variable").get<std::string>())
            throw InternalError("classification in the report does not re-derive");
        if (j.contains("witness")) {
            Dfa reversal = dfa_from_json_obj(j.at("reversal"));
            NonWellBehavedWitness w = witness_from_json(reversal, j.at("witness"));
            verify_non_well_behaved_witness(reversal, w);
        }
        if (j.contains("critical")) {
            CriticalTuple t = critical_from_json(minimal, j.at("critical"));
            verify_critical_tuple(minimal, t);
        }
        return;
    }
    throw Error("unrecognized artifact kind '" + kind + "'");
}

}  // namespace slwin
