#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "comlang/commutative.hpp"
#include "comlang/dfa.hpp"
#include "comlang/partial.hpp"
#include "comlang/shuffle.hpp"

namespace comlang {

using Json = nlohmann::ordered_json;

/// {"alphabet","states","start","finals","delta":[{letter: target}]}
Json to_json(const Dfa& d);
/// NFA form: "starts" instead of "start", targets are sorted arrays and ""
/// labels epsilon edges.
Json to_json(const Nfa& n);
Json to_json(const CommutativeProfile& p);
Json to_json(const ClassificationReport& r);
Json to_json(const BoundReport& r);

/// Throws InvalidFormat for malformed documents and InvalidAutomaton for
/// out-of-range indices.
Dfa dfa_from_json(const Json& j);
Nfa nfa_from_json(const Json& j);
/// Accepts either form; an NFA document is determinized and minimized.
Dfa automaton_from_json(const Json& j);

/// Parses text; InvalidFormat on syntax errors.
Json parse_json(std::string_view text);

/// Deterministic DOT rendering; parallel edges are merged into one label.
std::string to_dot(const Dfa& d);

std::string to_markdown(const ClassificationReport& r);

}  // namespace comlang
