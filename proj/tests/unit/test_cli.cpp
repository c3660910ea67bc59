#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "comlang/io.hpp"
#include "comlang/verify/fixtures.hpp"

using namespace comlang;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "comlang");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("comlang_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("product-form on a json file") {
  std::string count_json = temp_file("count.json", to_json(verify::fixtures::count_language_minimal()).dump());
  auto r = run({"product-form", count_json});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"productForm\":false,\"sc\":3,\"cStates\":4}\n");
}

TEST_CASE("classify a two-block commutative example") {
  auto r = run({"classify", "--partition", "a|b", "--alphabet", "ab",
                verify::fixtures::kL3L4NotL2});
  REQUIRE(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["l3"] == true);
  CHECK(j["l4"] == true);
  CHECK(j["l2"] == false);
  auto md = run({"classify", "--partition", "a|b", "--alphabet", "ab", "--format", "md",
                 verify::fixtures::kL3L4NotL2});
  CHECK(md.out.find("| L3 | yes |") != std::string::npos);
}

TEST_CASE("min keeps the empty automaton") {
  std::string body = R"({"alphabet":"ab","states":1,"start":0,"finals":[],"delta":[{"a":0,"b":0}]})";
  std::string empty = temp_file("empty.json", body);
  auto r = run({"min", empty});
  CHECK(r.code == 0);
  CHECK(r.out == body + "\n");
}

TEST_CASE("eval, shuffle, closures and projection") {
  auto e = run({"eval", "--alphabet", "ab", verify::fixtures::kTwelveStates});
  CHECK(parse_json(e.out)["states"] == 12);
  auto dot = run({"eval", "--alphabet", "ab", "--dot", verify::fixtures::kCountLanguage});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  auto s1 = run({"shuffle", "--alphabet", "ab", "(aa)*&(bb)*", "(aaaa)*&b*"});
  auto s2 = run({"shuffle", "--alphabet", "ab", "--method", "nfa", "(aa)*&(bb)*", "(aaaa)*&b*"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  auto up = run({"closure", "--op", "up", "--alphabet", "ab", verify::fixtures::kFourAs});
  CHECK(parse_json(up.out)["states"] == 5);
  auto pr = run({"project", "--keep", "b", "--alphabet", "ab", "a*&bbbbb*"});
  CHECK(parse_json(pr.out)["states"] == 5);
  auto prof = run({"profile", "--alphabet", "ab", verify::fixtures::kPeriodFourTwo});
  CHECK(parse_json(prof.out)["period"] == Json::array({4, 2}));
}

TEST_CASE("canonical and generators") {
  std::string four = temp_file("four_state.json", to_json(verify::fixtures::partial_four_state()).dump());
  auto c = run({"canonical", "--partition", "ac|b", four});
  REQUIRE(c.code == 0);
  CHECK(c.out.find("\"states\":8") != std::string::npos);
  auto g = run({"gen", "threshold", "--n", "2", "--n", "3", "--alphabet", "ab"});
  CHECK(parse_json(g.out)["states"] == 12);
  auto gb = run({"group-bounds", "--p", "2", "--p", "2", "--q", "3", "--q", "3"});
  CHECK(parse_json(gb.out)["bound"] == 36);
  auto b = run({"bounds", "--family", "coprime", "--params", "2,3", "--format", "csv"});
  CHECK(b.code == 0);
  CHECK(b.out.find("36") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto usage = run({"frob"});
  CHECK(usage.code == 2);
  auto none = run({});
  CHECK(none.code == 2);
  auto bad = run({"gen", "coprime", "--p", "2", "--q", "4", "--alphabet", "ab"});
  CHECK(bad.code == 1);
  CHECK(parse_json(bad.err)["error"] == "NotCoprime");
  auto nf = run({"classify", "--partition", "a|b", "missing-file.json"});
  CHECK(nf.code == 1);
  auto syntax = run({"eval", "--alphabet", "ab", "a|("});
  CHECK(syntax.code == 1);
  CHECK(parse_json(syntax.err)["error"] == "SyntaxError");
}

TEST_CASE("state guard surfaces as a domain error") {
  auto r = run({"--guard", "2", "eval", "--alphabet", "ab", "(a|b)*a(a|b)(a|b)"});
  CHECK(r.code == 1);
  Json j = parse_json(r.err);
  CHECK(j["error"] == "StateBlowup");
}
