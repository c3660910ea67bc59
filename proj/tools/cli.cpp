#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/error.hpp"
#include "comlang/expr.hpp"
#include "comlang/group.hpp"
#include "comlang/io.hpp"
#include "comlang/partial.hpp"
#include "comlang/shuffle.hpp"
#include "comlang/verify/checks.hpp"
#include "comlang/verify/fixtures.hpp"
#include "comlang/verify/random.hpp"

namespace comlang::cli {
namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string alphabet;
  std::string partition;
  std::string format = "json";
  std::string table_format = "md";
  std::string out_path;
  bool dot = false;
  std::size_t guard = kDefaultStateGuard;
  std::uint64_t seed = verify::kDefaultSeed;
  bool slow = false;

  std::string method = "parikh";
  std::string op;
  std::string keep;
  std::string family;
  std::string params;
  std::string only;
  std::string suite = "all";
  std::string gen_family;
  std::vector<std::size_t> p;
  std::vector<std::size_t> q;
  std::vector<std::size_t> n;
  std::size_t k = 2;
  std::size_t samples = 200;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A path to an existing JSON file, otherwise an expression over --alphabet.
Dfa load(const std::string& arg, const RunConfig& cfg) {
  if (std::filesystem::is_regular_file(arg)) return automaton_from_json(parse_json(read_file(arg)));
  if (cfg.alphabet.empty()) {
    throw Error(ErrorKind::InvalidFormat,
                "'" + arg + "' is not a file; expressions need --alphabet");
  }
  return eval(arg, Alphabet(cfg.alphabet), DeterminizeOptions{cfg.guard});
}

Alphabet alphabet_or(const RunConfig& cfg, const char* fallback) {
  return Alphabet(cfg.alphabet.empty() ? fallback : cfg.alphabet);
}

void emit(std::ostream& out, const RunConfig& cfg, const Json& j) {
  std::string text = j.dump();
  if (!cfg.out_path.empty()) {
    std::ofstream(cfg.out_path, std::ios::binary) << text << "\n";
    return;
  }
  out << text << "\n";
}

void emit_dfa(std::ostream& out, const RunConfig& cfg, const Dfa& d) {
  if (cfg.dot) {
    if (!cfg.out_path.empty()) {
      std::ofstream(cfg.out_path, std::ios::binary) << to_dot(d);
    } else {
      out << to_dot(d);
    }
    return;
  }
  emit(out, cfg, to_json(d));
}

std::vector<Letter> letters_of(const Alphabet& sigma, const std::string& s) {
  std::vector<Letter> out;
  for (char c : s) out.push_back(sigma.index_of(c));
  return out;
}

std::string fmt_ratio(double x) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(4) << x;
  return o.str();
}

// Bound tables ------------------------------------------------------------

struct Row {
  std::string label;
  BoundReport report;
};

void print_rows(std::ostream& out, const RunConfig& cfg, const std::vector<Row>& rows) {
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j = to_json(r.report);
      j["case"] = r.label;
      arr.push_back(std::move(j));
    }
    Json doc;
    doc["seed"] = cfg.seed;
    doc["rows"] = std::move(arr);
    out << doc.dump() << "\n";
    return;
  }
  const bool csv = cfg.format == "csv";
  auto m_text = [](const BoundReport& r) { return r.m ? std::to_string(*r.m) : std::string("-"); };
  if (csv) {
    out << "case,operation,n,m,formula,bound,measured,slack\n";
  } else {
    out << "| case | operation | n | m | upper bound | value | measured | slack |\n"
        << "|---|---|---|---|---|---|---|---|\n";
  }
  for (const auto& row : rows) {
    const auto& r = row.report;
    if (csv) {
      out << row.label << "," << r.operation << "," << r.n << "," << m_text(r) << ","
          << r.formula << "," << r.bound << "," << r.measured << "," << r.slack << "\n";
    } else {
      out << "| " << row.label << " | " << r.operation << " | " << r.n << " | " << m_text(r)
          << " | " << r.formula << " | " << r.bound << " | " << r.measured << " | " << r.slack
          << " |\n";
    }
  }
}

std::vector<std::size_t> params_of(const RunConfig& cfg, std::vector<std::size_t> fallback) {
  if (cfg.params.empty()) return fallback;
  std::vector<std::size_t> out;
  std::stringstream s(cfg.params);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidFormat, "bad --params entry '" + item + "'");
    }
  }
  return out;
}

int bounds(std::ostream& out, const RunConfig& cfg) {
  std::vector<Row> rows;
  if (cfg.family == "coprime") {
    auto pq = params_of(cfg, {2, 3});
    if (pq.size() != 2) throw Error(ErrorKind::InvalidFormat, "coprime needs --params p,q");
    std::string letters = std::string("abcdefghij").substr(0, std::max<std::size_t>(cfg.k, 1));
    Alphabet sigma(cfg.alphabet.empty() ? letters : cfg.alphabet);
    auto [u, v] = gen_coprime_pair(pq[0], pq[1], sigma);
    std::string tag = "p=" + std::to_string(pq[0]) + " q=" + std::to_string(pq[1]) +
                      " k=" + std::to_string(sigma.size());
    rows.push_back({tag, verify_bound(BoundOp::Shuffle, u, &v)});
    rows.push_back({tag, verify_bound(BoundOp::ShuffleIndexPeriod, u, &v)});
    rows.push_back({tag, verify_bound(BoundOp::Union, u, &v)});
    rows.push_back({tag, verify_bound(BoundOp::Intersection, u, &v)});
    for (BoundOp op : {BoundOp::UpwardClosure, BoundOp::DownwardClosure, BoundOp::UpwardInterior,
                       BoundOp::DownwardInterior}) {
      rows.push_back({tag + " U", verify_bound(op, u)});
    }
    const Letter first[] = {0};
    rows.push_back({tag + " U", verify_bound(BoundOp::Projection, u, nullptr, first)});
  } else if (cfg.family == "remark5") {
    auto pq = params_of(cfg, {13, 17});
    if (pq.size() != 2) throw Error(ErrorKind::InvalidFormat, "remark5 needs --params p,q");
    auto [u, v] = gen_remark5(pq[0], pq[1]);
    std::string tag = "p=" + std::to_string(pq[0]) + " q=" + std::to_string(pq[1]);
    rows.push_back({tag, verify_bound(BoundOp::Shuffle, u, &v)});
  } else if (cfg.family == "closures") {
    std::vector<std::pair<std::string, Dfa>> langs;
    if (cfg.inputs.empty()) {
      const Alphabet ab("ab");
      langs.emplace_back(verify::fixtures::kFourAs, eval(verify::fixtures::kFourAs, ab));
      langs.emplace_back(verify::fixtures::kPeriodFourTwo,
                         eval(verify::fixtures::kPeriodFourTwo, ab));
    }
    for (const auto& in : cfg.inputs) langs.emplace_back(in, load(in, cfg));
    for (const auto& [name, d] : langs) {
      for (BoundOp op : {BoundOp::UpwardClosure, BoundOp::DownwardClosure,
                         BoundOp::UpwardInterior, BoundOp::DownwardInterior}) {
        rows.push_back({name, verify_bound(op, d)});
      }
    }
  } else if (cfg.family == "ratio-search") {
    verify::Rng rng(cfg.seed);
    const Alphabet sigma = alphabet_or(cfg, "ab");
    double best = 0;
    Json best_case;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      Dfa u = verify::random_product_form(rng, sigma);
      Dfa v = verify::random_product_form(rng, sigma);
      BoundReport r = verify_bound(BoundOp::Shuffle, u, &v);
      double ratio = static_cast<double>(r.measured) / static_cast<double>(r.n * *r.m);
      if (ratio > best) {
        best = ratio;
        best_case = to_json(r);
        best_case["sample"] = i;
      }
    }
    Json doc;
    doc["seed"] = cfg.seed;
    doc["samples"] = cfg.samples;
    doc["maxMeasuredOverNm"] = fmt_ratio(best);
    doc["maxMeasuredOver2nm"] = fmt_ratio(best / 2);
    doc["witness"] = best_case;
    out << doc.dump() << "\n";
    return 0;
  } else {
    throw Error(ErrorKind::InvalidFormat, "unknown family '" + cfg.family + "'");
  }
  print_rows(out, cfg, rows);
  for (const auto& r : rows) {
    if (r.report.slack < 0) return 1;
  }
  return 0;
}

// Subcommands ---------------------------------------------------------------

Json pair_json(const std::pair<Dfa, Dfa>& p) {
  Json j;
  j["u"] = to_json(p.first);
  j["v"] = to_json(p.second);
  return j;
}

int gen(std::ostream& out, const RunConfig& cfg) {
  std::string letters = std::string("abcdefghij").substr(0, std::max<std::size_t>(cfg.k, 1));
  Alphabet sigma(cfg.alphabet.empty() ? letters : cfg.alphabet);
  auto one = [&](const char* what, const std::vector<std::size_t>& v) {
    if (v.size() != 1) {
      throw Error(ErrorKind::InvalidFormat, std::string("--") + what + " takes one number");
    }
    return v[0];
  };
  if (cfg.gen_family == "threshold") {
    std::string th = std::string("abcdefghij").substr(0, cfg.n.size());
    Alphabet s(cfg.alphabet.empty() ? th : cfg.alphabet);
    emit_dfa(out, cfg, gen_threshold_language(cfg.n, s));
  } else if (cfg.gen_family == "sharp-group") {
    emit(out, cfg, pair_json(gen_sharp_group_pair(one("p", cfg.p), one("q", cfg.q), sigma)));
  } else if (cfg.gen_family == "coprime") {
    emit(out, cfg, pair_json(gen_coprime_pair(one("p", cfg.p), one("q", cfg.q), sigma)));
  } else if (cfg.gen_family == "remark5") {
    emit(out, cfg, pair_json(gen_remark5(one("p", cfg.p), one("q", cfg.q))));
  } else {
    throw Error(ErrorKind::InvalidFormat, "unknown family '" + cfg.gen_family + "'");
  }
  return 0;
}

Json canonical_json(const CanonicalAutomaton& c) {
  Json j;
  j["partition"] = c.partition.str();
  j["states"] = c.product.state_count();
  Json finals = Json::array();
  for (const auto& t : c.finals) finals.push_back(t);
  j["finalTuples"] = std::move(finals);
  Json blocks = Json::array();
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    Json b;
    b["letters"] = c.factors[i].alphabet.symbols();
    b["members"] = c.factors[i].members;
    b["finals"] = c.finals_per_block[i];
    b["automaton"] = to_json(c.factors[i].automaton);
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  j["product"] = to_json(c.product);
  return j;
}

int check(std::ostream& out, const RunConfig& cfg) {
  std::vector<verify::NamedCheck> checks;
  if (cfg.suite != "properties") checks = verify::acceptance_checks();
  if (cfg.suite != "acceptance") {
    for (auto& c : verify::property_checks()) checks.push_back(std::move(c));
  }
  bool slow = cfg.slow;
  if (!cfg.only.empty()) {
    std::erase_if(checks, [&](const verify::NamedCheck& c) { return c.id != cfg.only; });
    slow = true;
  }
  out << "seed " << cfg.seed << "\n";
  int failed = 0;
  verify::run_checks(checks, cfg.seed, slow, [&](const verify::CheckResult& r) {
    out << verify::format_result(r) << "\n" << std::flush;
    failed += !r.passed && !r.skipped;
  });
  out << failed << " failed\n";
  return failed ? 1 : 0;
}

std::size_t env_guard() {
  if (const char* g = std::getenv("COMLANG_STATE_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(g, &end, 10);
    if (end != g && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultStateGuard;
}

void domain_error(std::ostream& err, const Error& e) {
  Json j;
  j["error"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  if (e.value()) j["value"] = *e.value();
  err << j.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.guard = env_guard();
  CLI::App app{"Commutative and partially commutative regular languages"};
  app.name("comlang");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--guard", cfg.guard, "determinization state guard (env COMLANG_STATE_GUARD)");
  app.add_option("--seed", cfg.seed, "random seed");

  auto input = [&](CLI::App* sub, std::size_t count) {
    sub->add_option("input", cfg.inputs, "JSON automaton file or expression")
        ->expected(static_cast<int>(count))
        ->required();
    sub->add_option("--alphabet", cfg.alphabet, "alphabet for expression inputs");
  };
  auto outputs = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "write to a file instead of stdout");
    sub->add_flag("--dot", cfg.dot, "emit DOT instead of JSON");
  };

  CLI::App* min = app.add_subcommand("min", "minimal DFA");
  input(min, 1);
  outputs(min);
  CLI::App* ev = app.add_subcommand("eval", "evaluate an expression");
  ev->add_option("expr", cfg.inputs, "expression")->expected(1)->required();
  ev->add_option("--alphabet", cfg.alphabet, "declared alphabet")->required();
  outputs(ev);
  CLI::App* prof = app.add_subcommand("profile", "index, period and final tuples");
  input(prof, 1);
  CLI::App* pf = app.add_subcommand("product-form", "decide the product-form property");
  input(pf, 1);
  CLI::App* sh = app.add_subcommand("shuffle", "shuffle of two languages");
  input(sh, 2);
  outputs(sh);
  sh->add_option("--method", cfg.method, "nfa or parikh")
      ->check(CLI::IsMember({"nfa", "parikh"}));
  CLI::App* cl = app.add_subcommand("closure", "closures and interiors");
  input(cl, 1);
  outputs(cl);
  cl->add_option("--op", cfg.op, "up, down, up-int or down-int")
      ->required()
      ->check(CLI::IsMember({"up", "down", "up-int", "down-int"}));
  CLI::App* pr = app.add_subcommand("project", "projection onto a sub-alphabet");
  input(pr, 1);
  outputs(pr);
  pr->add_option("--keep", cfg.keep, "letters to keep")->required();
  CLI::App* can = app.add_subcommand("canonical", "canonical automaton for a partition");
  input(can, 1);
  can->add_option("--partition", cfg.partition, "blocks joined by '|'")->required();
  can->add_flag("--dot", cfg.dot, "emit the product automaton as DOT");
  can->add_option("--out", cfg.out_path, "write to a file instead of stdout");
  CLI::App* cls = app.add_subcommand("classify", "membership in L1..L4");
  input(cls, 1);
  cls->add_option("--partition", cfg.partition, "blocks joined by '|'")->required();
  cls->add_option("--format", cfg.format, "json or md")->check(CLI::IsMember({"json", "md"}));
  CLI::App* gb = app.add_subcommand("group-bounds", "gcd/lcm shuffle bound");
  gb->add_option("--p", cfg.p, "period vector")->delimiter(',')->required();
  gb->add_option("--q", cfg.q, "period vector")->delimiter(',')->required();
  CLI::App* gn = app.add_subcommand("gen", "generate a language family");
  gn->add_option("family", cfg.gen_family, "threshold, sharp-group, coprime or remark5")
      ->required()
      ->check(CLI::IsMember({"threshold", "sharp-group", "coprime", "remark5"}));
  gn->add_option("--p", cfg.p)->delimiter(',');
  gn->add_option("--q", cfg.q)->delimiter(',');
  gn->add_option("--n", cfg.n, "threshold vector")->delimiter(',');
  gn->add_option("--k", cfg.k, "alphabet size");
  gn->add_option("--alphabet", cfg.alphabet);
  outputs(gn);
  CLI::App* bd = app.add_subcommand("bounds", "bound verification table");
  bd->add_option("--family", cfg.family, "coprime, remark5, closures or ratio-search")
      ->required()
      ->check(CLI::IsMember({"coprime", "remark5", "closures", "ratio-search"}));
  bd->add_option("--params", cfg.params, "comma separated parameters, e.g. 2,3");
  bd->add_option("--k", cfg.k, "alphabet size for coprime");
  bd->add_option("--samples", cfg.samples, "pairs tried by ratio-search");
  bd->add_option("--format", cfg.table_format, "md, csv or json")
      ->check(CLI::IsMember({"json", "md", "csv"}));
  bd->add_option("--alphabet", cfg.alphabet);
  bd->add_option("input", cfg.inputs, "languages for the closures family");
  CLI::App* ck = app.add_subcommand("check", "run acceptance and property suites");
  ck->add_flag("--slow", cfg.slow, "include slow checks");
  ck->add_option("--only", cfg.only, "run a single check by id");
  ck->add_option("--suite", cfg.suite, "acceptance, properties or all")
      ->check(CLI::IsMember({"acceptance", "properties", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const DeterminizeOptions opts{cfg.guard};
    if (*min) {
      emit_dfa(out, cfg, minimize(load(cfg.inputs[0], cfg)));
    } else if (*ev) {
      emit_dfa(out, cfg, eval(cfg.inputs[0], Alphabet(cfg.alphabet), opts));
    } else if (*prof) {
      emit(out, cfg, to_json(profile(load(cfg.inputs[0], cfg))));
    } else if (*pf) {
      auto r = product_form(load(cfg.inputs[0], cfg));
      Json j;
      j["productForm"] = r.product_form;
      j["sc"] = r.sc;
      j["cStates"] = r.c_states;
      emit(out, cfg, j);
    } else if (*sh) {
      Dfa a = load(cfg.inputs[0], cfg);
      Dfa b = load(cfg.inputs[1], cfg);
      emit_dfa(out, cfg, cfg.method == "nfa" ? shuffle_nfa(a, b, opts) : shuffle_commutative(a, b));
    } else if (*cl) {
      Dfa d = load(cfg.inputs[0], cfg);
      Dfa r = cfg.op == "up"       ? upward_closure(d, opts)
              : cfg.op == "down"   ? downward_closure(d, opts)
              : cfg.op == "up-int" ? upward_interior(d, opts)
                                   : downward_interior(d, opts);
      emit_dfa(out, cfg, r);
    } else if (*pr) {
      Dfa d = load(cfg.inputs[0], cfg);
      emit_dfa(out, cfg, projection(d, letters_of(d.alphabet(), cfg.keep), cfg.guard));
    } else if (*can) {
      Dfa d = load(cfg.inputs[0], cfg);
      auto c = canonical_automaton(d, Partition::parse(d.alphabet(), cfg.partition));
      if (cfg.dot) {
        emit_dfa(out, cfg, c.product);
      } else {
        emit(out, cfg, canonical_json(c));
      }
    } else if (*cls) {
      Dfa d = load(cfg.inputs[0], cfg);
      auto r = classify(d, Partition::parse(d.alphabet(), cfg.partition));
      if (cfg.format == "md") {
        out << to_markdown(r);
      } else {
        out << to_json(r).dump() << "\n";
      }
    } else if (*gb) {
      auto b = group_shuffle_bound(cfg.p, cfg.q);
      Json j;
      j["bound"] = b.bound;
      j["index"] = b.index;
      j["period"] = b.period;
      out << j.dump() << "\n";
    } else if (*gn) {
      return gen(out, cfg);
    } else if (*bd) {
      cfg.format = cfg.table_format;
      return bounds(out, cfg);
    } else if (*ck) {
      return check(out, cfg);
    }
  } catch (const Error& e) {
    domain_error(err, e);
    return 1;
  }
  return 0;
}

}  // namespace comlang::cli
