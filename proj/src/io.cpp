#include "comlang/io.hpp"

#include <map>
#include <set>

#include "comlang/automata.hpp"
#include "comlang/error.hpp"

namespace comlang {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidFormat, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    bad(std::string(what) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Alphabet alphabet_of(const Json& j) {
  const Json& a = field(j, "alphabet");
  if (!a.is_string()) bad("alphabet must be a string");
  try {
    return Alphabet(a.get<std::string>());
  } catch (const Error& e) {
    bad(e.what());
  }
}

Letter letter_key(const Alphabet& sigma, const std::string& key) {
  if (key.size() != 1 || !sigma.contains(key[0])) bad("unknown letter key '" + key + "'");
  return sigma.index_of(key[0]);
}

std::vector<State> index_list(const Json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array");
  std::vector<State> out;
  for (const auto& x : v) out.push_back(static_cast<State>(as_index(x, what)));
  return out;
}

Json tuple_list(const std::vector<ParikhTuple>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(t);
  return out;
}

}  // namespace

Json to_json(const Dfa& d) {
  Json j;
  j["alphabet"] = d.alphabet().symbols();
  j["states"] = d.state_count();
  j["start"] = d.start();
  j["finals"] = d.finals();
  Json delta = Json::array();
  for (State q = 0; q < d.state_count(); ++q) {
    Json row = Json::object();
    for (Letter a = 0; a < d.letter_count(); ++a) {
      row[std::string(1, d.alphabet().symbol(a))] = d.next(q, a);
    }
    delta.push_back(std::move(row));
  }
  j["delta"] = std::move(delta);
  return j;
}

Json to_json(const Nfa& n) {
  Json j;
  j["alphabet"] = n.alphabet().symbols();
  j["states"] = n.state_count();
  j["starts"] = n.starts();
  j["finals"] = n.finals();
  Json delta = Json::array();
  for (State q = 0; q < n.state_count(); ++q) {
    std::map<std::string, std::set<State>> grouped;
    for (const auto& e : n.edges(q)) {
      std::string key = e.label ? std::string(1, n.alphabet().symbol(*e.label)) : std::string();
      grouped[key].insert(e.target);
    }
    Json row = Json::object();
    for (const auto& [key, targets] : grouped) {
      row[key] = std::vector<State>(targets.begin(), targets.end());
    }
    delta.push_back(std::move(row));
  }
  j["delta"] = std::move(delta);
  return j;
}

Json to_json(const CommutativeProfile& p) {
  Json j;
  j["index"] = p.index;
  j["period"] = p.period;
  j["finals"] = tuple_list(p.final_parikh);
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["partition"] = r.partition;
  j["commutativeUnderPartition"] = r.closed;
  j["recognizesL"] = r.recognizes_l;
  j["l1"] = r.l1;
  j["l2"] = r.l2;
  j["l3"] = r.l3;
  j["l4"] = r.l4;
  j["sc"] = r.sc;
  j["canonicalStates"] = r.canonical_states;
  j["canonicalFinals"] = r.canonical_finals;
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json x;
    x["sizeSi"] = b.size_si;
    x["scProjection"] = b.sc_projection;
    blocks.push_back(std::move(x));
  }
  j["blocks"] = std::move(blocks);
  Json w = Json::object();
  for (const auto& [name, text] : r.witnesses) w[name] = text;
  j["witnesses"] = std::move(w);
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["operation"] = r.operation;
  j["n"] = r.n;
  j["m"] = r.m ? Json(*r.m) : Json(nullptr);
  j["measured"] = r.measured;
  j["bound"] = r.bound;
  j["slack"] = r.slack;
  j["formula"] = r.formula;
  j["profileA"] = to_json(r.profile_a);
  j["profileB"] = r.profile_b ? to_json(*r.profile_b) : Json(nullptr);
  return j;
}

Dfa dfa_from_json(const Json& j) {
  Alphabet sigma = alphabet_of(j);
  std::size_t n = as_index(field(j, "states"), "states");
  State start = static_cast<State>(as_index(field(j, "start"), "start"));
  std::vector<State> finals = index_list(field(j, "finals"), "finals");
  const Json& rows = field(j, "delta");
  if (!rows.is_array() || rows.size() != n) bad("delta must have one entry per state");
  std::vector<State> delta(n * sigma.size(), 0);
  for (std::size_t q = 0; q < n; ++q) {
    const Json& row = rows[q];
    if (!row.is_object() || row.size() != sigma.size()) {
      bad("delta row " + std::to_string(q) + " must map every letter");
    }
    for (const auto& [key, target] : row.items()) {
      Letter a = letter_key(sigma, key);
      delta[q * sigma.size() + a] = static_cast<State>(as_index(target, "delta target"));
    }
  }
  return Dfa(sigma, n, start, std::move(finals), std::move(delta));
}

Nfa nfa_from_json(const Json& j) {
  Alphabet sigma = alphabet_of(j);
  std::size_t n = as_index(field(j, "states"), "states");
  Nfa out(sigma, n);
  try {
    for (State s : index_list(field(j, "starts"), "starts")) out.add_start(s);
    for (State f : index_list(field(j, "finals"), "finals")) out.add_final(f);
    const Json& rows = field(j, "delta");
    if (!rows.is_array() || rows.size() != n) bad("delta must have one entry per state");
    for (std::size_t q = 0; q < n; ++q) {
      if (!rows[q].is_object()) bad("delta rows must be objects");
      for (const auto& [key, targets] : rows[q].items()) {
        std::optional<Letter> label;
        if (!key.empty()) label = letter_key(sigma, key);
        for (State t : index_list(targets, "delta targets")) {
          out.add_edge(static_cast<State>(q), label, t);
        }
      }
    }
  } catch (const std::out_of_range& e) {
    throw Error(ErrorKind::InvalidAutomaton, e.what());
  }
  return out;
}

Dfa automaton_from_json(const Json& j) {
  if (j.is_object() && j.contains("starts")) return minimize(determinize(nfa_from_json(j)));
  return dfa_from_json(j);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(e.what());
  }
}

std::string to_dot(const Dfa& d) {
  std::string out = "digraph dfa {\n  rankdir=LR;\n  init [shape=point];\n";
  for (State q = 0; q < d.state_count(); ++q) {
    out += "  " + std::to_string(q) + " [shape=" +
           (d.is_final(q) ? "doublecircle" : "circle") + "];\n";
  }
  out += "  init -> " + std::to_string(d.start()) + ";\n";
  for (State q = 0; q < d.state_count(); ++q) {
    std::map<State, std::string> labels;
    for (Letter a = 0; a < d.letter_count(); ++a) {
      std::string& l = labels[d.next(q, a)];
      if (!l.empty()) l += ",";
      l.push_back(d.alphabet().symbol(a));
    }
    for (const auto& [target, label] : labels) {
      out += "  " + std::to_string(q) + " -> " + std::to_string(target) + " [label=\"" + label +
             "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string to_markdown(const ClassificationReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out = "| property | value |\n|---|---|\n";
  out += "| partition | " + r.partition + " |\n";
  out += std::string("| closed under partition | ") + yn(r.closed) + " |\n";
  out += std::string("| L(C) = L | ") + yn(r.recognizes_l) + " |\n";
  out += std::string("| L1 | ") + yn(r.l1) + " |\n";
  out += std::string("| L2 | ") + yn(r.l2) + " |\n";
  out += std::string("| L3 | ") + yn(r.l3) + " |\n";
  out += std::string("| L4 | ") + yn(r.l4) + " |\n";
  out += "| sc(L) | " + std::to_string(r.sc) + " |\n";
  out += "| canonical states | " + std::to_string(r.canonical_states) + " |\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    out += "| block " + std::to_string(i + 1) + ": S_i / sc(projection) | " +
           std::to_string(r.blocks[i].size_si) + " / " +
           std::to_string(r.blocks[i].sc_projection) + " |\n";
  }
  for (const auto& [name, text] : r.witnesses) out += "| witness " + name + " | " + text + " |\n";
  return out;
}

}  // namespace comlang
