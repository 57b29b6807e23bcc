#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  json j; // parsed when the output is a single json document
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(RSQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!r.out.empty() && (r.out[0] == '{' || r.out[0] == '['))
    r.j = json::parse(r.out, nullptr, false);
  return r;
}

std::string fixture_dir() {
  static std::string dir = [] {
    std::string d = "/tmp/rsq-cli-test-" + std::to_string(getpid());
    std::string mk = "mkdir -p " + d;
    REQUIRE(std::system(mk.c_str()) == 0);
    return d;
  }();
  return dir;
}

std::string write_fixture(const std::string& name, const std::string& text) {
  std::string path = fixture_dir() + "/" + name;
  std::ofstream f(path);
  REQUIRE(f.good());
  f << text;
  f.close();
  return path;
}

const char* kCone = R"({"components": [{"id": "c1", "euler": -2, "genus": 0, "reality": "real+"}]})";
const char* kDot = R"({"components": [{"id": "c1", "euler": -2, "genus": 0, "reality": "real0"}]})";
const char* kA2 = R"({
  "components": [
    {"id": "c1", "euler": -2, "genus": 0, "reality": "real+"},
    {"id": "c2", "euler": -2, "genus": 0, "reality": "real+"}],
  "points": [{"id": "p1", "at": ["c1", "c2"], "reality": "real"}]
})";
const char* kMinusOne = R"({"components": [{"id": "c1", "euler": -1, "genus": 0, "reality": "real+"}]})";
const char* kPencil4 = R"({"k": 2, "lines": [[1, 0, 0], [1, 1, 0], [1, 2, 0], [1, 3, 0]], "region": "plus"})";
const char* kQuad = R"({"k": 2, "lines": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]], "region": "plus"})";
const char* kNiceEvents = R"({
  "initial": {"cp2": 1},
  "events": [
    {"type": "create_node"},
    {"type": "a3_minus", "direction": "into_nodal"},
    {"type": "a3_minus", "direction": "out_of_nodal"},
    {"type": "resolve_node"}]
})";
const char* kUnderflow = R"({"events": [{"type": "resolve_node"}]})";
const char* kDotted = R"({
  "events": [
    {"type": "bad_dot_node", "other_curve_real_nonempty": true},
    {"type": "create_node"}]
})";
const char* kHopeless = R"({
  "events": [
    {"type": "bad_dot_node"},
    {"type": "create_node"},
    {"type": "bad_dot_node", "other_curve_real_nonempty": false}]
})";

} // namespace

TEST_CASE("sfcheck answers yes and no through the exit code") {
  auto yes = run_cli("sfcheck " + write_fixture("cone.json", kCone));
  CHECK(yes.code == 0);
  CHECK(yes.j.at("sf") == true);
  CHECK(yes.j.at("command") == "sfcheck");
  CHECK(yes.j.at("quotient").at("contractible") == true);
  CHECK(yes.j.at("quotient").at("euler_char") == 1);

  auto no = run_cli("sfcheck " + write_fixture("dot.json", kDot));
  CHECK(no.code == 1);
  CHECK(no.j.at("sf") == false);
  REQUIRE(!no.j.at("reasons").empty());
  CHECK(no.j.at("reasons")[0].at("kind") == "empty_real_locus");
}

TEST_CASE("missing files and broken json map to exit 2") {
  auto missing = run_cli("sfcheck /nonexistent/nope.json");
  CHECK(missing.code == 2);
  CHECK(missing.j.at("error").at("kind") == "input");

  auto broken = run_cli("sfcheck " + write_fixture("broken.json", "{"));
  CHECK(broken.code == 2);

  auto extra = run_cli("sfcheck " +
                       write_fixture("extra.json", R"({"components": [], "bogus": 1})"));
  CHECK(extra.code == 2);
  CHECK(extra.j.at("error").at("message").get<std::string>().find("bogus") != std::string::npos);
}

TEST_CASE("plumb matrix, definite, reduce, boundary") {
  std::string a2 = write_fixture("a2.json", kA2);
  auto m = run_cli("plumb matrix " + a2);
  CHECK(m.code == 0);
  CHECK(m.j.at("determinant") == "3");
  CHECK(m.j.at("matrix")[0][1] == 1);

  auto d = run_cli("plumb definite " + a2);
  CHECK(d.code == 0);
  CHECK(d.j.at("negative_definite") == true);

  auto bad = run_cli("plumb definite " +
                     write_fixture("indef.json", R"({
    "components": [
      {"id": "c1", "euler": -2, "genus": 0, "reality": "real+"},
      {"id": "c2", "euler": -1, "genus": 0, "reality": "real+"},
      {"id": "c3", "euler": -2, "genus": 0, "reality": "real+"}],
    "points": [
      {"id": "p1", "at": ["c1", "c2"], "reality": "real"},
      {"id": "p2", "at": ["c2", "c3"], "reality": "real"}]
  })"));
  CHECK(bad.code == 1);
  CHECK(bad.j.at("negative_definite") == false);

  std::string one = write_fixture("minus_one.json", kMinusOne);
  auto r = run_cli("plumb reduce " + one);
  CHECK(r.code == 0);
  CHECK(r.j.at("final_component_count") == 0);
  CHECK(r.j.at("steps").size() == 1);

  auto s3 = run_cli("plumb boundary " + one);
  CHECK(s3.code == 0);
  CHECK(s3.j.at("kind") == "sphere3");

  auto lens = run_cli("plumb boundary " + a2);
  CHECK(lens.code == 1);
  CHECK(lens.j.at("kind") == "not_sphere3");

  auto marked = run_cli("plumb matrix " + write_fixture("marked.json", R"({
    "components": [{"id": "c1", "euler": -2, "genus": 0, "reality": "real+",
                    "self_nodes": ["real"]}]
  })"));
  CHECK(marked.code == 2); // self-nodes are not good plumbing data
}

TEST_CASE("deform run reports the ledger walk") {
  auto ok = run_cli("deform run " + write_fixture("nice.json", kNiceEvents));
  CHECK(ok.code == 0); // S4 base, no circle summands: trivial
  CHECK(ok.j.at("nice") == true);
  CHECK(ok.j.at("bus_trivial") == true);
  CHECK(ok.j.at("final").at("node_count") == 0);
  CHECK(ok.j.at("final").at("conj_cp2") == 0);
  CHECK(ok.j.at("normal_form").at("cp2") == 1);

  auto under = run_cli("deform run " + write_fixture("under.json", kUnderflow));
  CHECK(under.code == 2);
  CHECK(under.j.at("error").at("event_index") == 0);

  auto strict = run_cli("deform run " + write_fixture("dotted.json", kDotted));
  CHECK(strict.code == 2);
  CHECK(strict.j.at("error").at("event_index") == 1);

  auto loose = run_cli("deform run --allow-untracked " + fixture_dir() + "/dotted.json");
  CHECK(loose.code == 1); // runs, but the class is no longer tracked
  CHECK(loose.j.at("skipped_events") == 1);
  CHECK(loose.j.at("bus_trivial").is_null());
  CHECK(loose.j.at("normal_form").at("tracked") == false);
}

TEST_CASE("deform repair trades dots or explains why it cannot") {
  auto ok = run_cli("deform repair " + fixture_dir() + "/dotted.json");
  CHECK(ok.code == 0);
  CHECK(ok.j.at("ok") == true);
  CHECK(ok.j.at("events")[0].at("type") == "real_curve_node");
  CHECK(ok.j.at("nice") == true);

  auto no = run_cli("deform repair " + write_fixture("hopeless.json", kHopeless));
  CHECK(no.code == 1);
  CHECK(no.j.at("ok") == false);
  REQUIRE(no.j.at("unrepairable").size() == 2);
  CHECK(no.j.at("unrepairable")[0] == 0);
  CHECK(no.j.at("unrepairable")[1] == 2);
  CHECK(!no.j.at("advice").get<std::string>().empty());
}

TEST_CASE("arrange analyze emits the full report") {
  std::string quad = write_fixture("quad.json", kQuad);
  auto r = run_cli("arrange analyze " + quad);
  CHECK(r.code == 0);
  CHECK(r.j.at("V") == 6);
  CHECK(r.j.at("E") == 12);
  CHECK(r.j.at("F") == 7);
  CHECK(r.j.at("invariants").at("chi_Xbar") == 3);
  CHECK(r.j.at("invariants").at("chi_Xbar_route1") == r.j.at("invariants").at("chi_Xbar_route2"));
  CHECK(r.j.at("decomposition").at("kind") == "not_applicable");
  CHECK(r.j.at("special_class").at("kind") == "not_special");
  CHECK(r.j.at("even_multiplicity_blowups").at("count") == 0);

  auto nonor = run_cli("arrange analyze --nonorientable " + quad);
  CHECK(nonor.code == 0);
  CHECK(nonor.j.at("decomposition").at("kind") == "non_orientable");
  CHECK(nonor.j.at("decomposition").at("cp2") == 0);
  CHECK(nonor.j.at("decomposition").at("conj_cp2") == 1);

  std::string pencil = write_fixture("pencil4.json", kPencil4);
  auto p = run_cli("arrange analyze " + pencil);
  CHECK(p.code == 0);
  CHECK(p.j.at("special_class").at("kind") == "pencil");
  CHECK(p.j.at("special_class").at("ledger").at("s1xs3") == 1);
  CHECK(p.j.at("special_class").at("bus_trivial") == false);

  // the pencil quotient has chi 1: an orientable splitting is impossible
  auto ori = run_cli("arrange analyze --orientable " + pencil);
  CHECK(ori.code == 3);
  CHECK(ori.j.at("error").at("kind") == "internal");

  // orientable and nonorientable exclude each other
  auto both = run_cli("arrange analyze --orientable --nonorientable " + quad);
  CHECK(both.code == 2);

  // substituted smooth model: parity obstruction on an odd-k generic family
  auto par = run_cli("doubleplane --k 3");
  CHECK(par.code == 0); // plain analysis fine ...
  auto pert = run_cli("arrange analyze --perturbed " +
                      write_fixture("gen3.json", par.j.at("arrangement").dump()));
  CHECK(pert.code == 2); // ... but the substitution is refused
  CHECK(pert.j.at("error").at("kind") == "domain");
}

TEST_CASE("doubleplane families") {
  auto g = run_cli("doubleplane --k 2");
  CHECK(g.code == 0);
  CHECK(g.j.at("family") == "generic");
  CHECK(g.j.at("V") == 6);
  CHECK(g.j.at("invariants").at("b2_plus") == 0);

  auto p = run_cli("doubleplane --k 3 --pencil");
  CHECK(p.code == 0);
  CHECK(p.j.at("special_class").at("kind") == "pencil");
  CHECK(p.j.at("special_class").at("ledger").at("s1xs3") == 2);

  auto ap = run_cli("doubleplane --k 3 --almost-pencil");
  CHECK(ap.code == 0);
  CHECK(ap.j.at("special_class").at("kind") == "almost_pencil");
  CHECK(ap.j.at("special_class").at("bus_trivial") == true);

  auto bad = run_cli("doubleplane --k 1 --almost-pencil");
  CHECK(bad.code == 2); // needs k >= 2

  auto conflict = run_cli("doubleplane --k 2 --pencil --almost-pencil");
  CHECK(conflict.code == 2);
}

TEST_CASE("swvanish gate") {
  CHECK(run_cli("swvanish --pg-res 1 --pg-prime 2").code == 0);
  CHECK(run_cli("swvanish --pg-res 2 --pg-prime 2").code == 1);
  CHECK(run_cli("swvanish --pg-res 0 --pg-prime 5").code == 1);
  auto r = run_cli("swvanish --pg-res 3 --pg-prime 7");
  CHECK(r.j.at("vanishes") == true);
}

TEST_CASE("certify through the command line") {
  auto ok = run_cli("certify --deg-b 2 --deg-c 2 --rb0 --rc1");
  CHECK(ok.code == 0);
  CHECK(ok.j.at("ok") == true);
  CHECK(ok.j.at("bus_trivial") == true);
  CHECK(ok.j.at("stages").size() == 2);

  auto aux = run_cli("certify --deg-b 2 --deg-c 2 --rb0 --rb1");
  CHECK(aux.code == 0);
  CHECK(aux.j.at("aux_used") == true);

  auto no = run_cli("certify --deg-b 2 --deg-c 2 --rb1 --rc1");
  CHECK(no.code == 1);
  CHECK(no.j.at("ok") == false);

  auto odd = run_cli("certify --deg-b 2 --deg-c 1 --rb0 --rc1");
  CHECK(odd.code == 2);

  auto missing = run_cli("certify --deg-b 2");
  CHECK(missing.code == 2); // --deg-c is required
}

TEST_CASE("output is deterministic and machine-parseable") {
  std::string quad = fixture_dir() + "/quad.json";
  auto a = run_cli("arrange analyze " + quad);
  auto b = run_cli("arrange analyze " + quad);
  CHECK(a.out == b.out);
  CHECK(!a.j.is_discarded());
  CHECK(a.out.find('\n') == a.out.size() - 1); // single line by default

  auto pretty = run_cli("--pretty arrange analyze " + quad);
  CHECK(pretty.code == 0);
  CHECK(pretty.j.at("V") == 6);
  CHECK(pretty.out.find('\n') < pretty.out.size() - 1);

  auto c1 = run_cli("certify --deg-b 3 --deg-c 3 --rb0 --rc0 --rb1 --rc1");
  auto c2 = run_cli("certify --deg-b 3 --deg-c 3 --rb0 --rc0 --rb1 --rc1");
  CHECK(c1.out == c2.out);
  CHECK(c1.j.at("input_digest") == c2.j.at("input_digest"));
}

TEST_CASE("no subcommand is a usage error") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
}
