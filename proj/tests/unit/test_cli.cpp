#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "hybridres/cli.hpp"
#include "hybridres/errors.hpp"
#include "hybridres/standard_basis.hpp"

using namespace hybridres;
using cli::runCommand;

namespace {

const std::string kData = HYBRIDRES_DATA_DIR;
const std::string kGolden = HYBRIDRES_GOLDEN_DIR;

std::string ex61() { return kData + "/ex61.ideal"; }
std::string ex62() { return kData + "/ex62.ideal"; }

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string writeTemp(const std::string& name, const std::string& text) {
  std::string path = std::string(HYBRIDRES_TMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("ideal files") {
  auto f = cli::loadIdealFile(ex61());
  CHECK(f.ring->names() == std::vector<std::string>{"x", "y", "z", "w", "v"});
  CHECK(f.order.isLocal());
  CHECK(idealEquals(f.ideal, fixtures::ideal61(), fixtures::grevlex(f.ring)));
  auto g = cli::parseIdealFile("ring: x, y\norder: degrevlex\ngen: x^2 + y\n");
  CHECK(g.order.isGlobal());
  CHECK_THROWS_AS(cli::parseIdealFile("ring: x\ngen: y\n"), Error);
  try {
    cli::parseIdealFile("ring: x, y\n\ngen: x + $\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  CHECK_THROWS_AS(cli::loadIdealFile("/nonexistent/file.ideal"), cli::IoError);
  CHECK(cli::parseIdealFile(cli::demoFixture("ex62")).ideal.generators() == fixtures::ideal62().generators());
}

TEST_CASE("orderings by name") {
  auto r = makeRing({"x", "y", "z"});
  CHECK(cli::parseOrdering("ds", *r).isLocal());
  CHECK(cli::parseOrdering("dp", *r).isGlobal());
  CHECK(cli::parseOrdering("lex", *r).isGlobal());
  CHECK(cli::parseOrdering("negdegrevlex z,y,x", *r) == fixtures::order62());
  CHECK_THROWS_AS(cli::parseOrdering("nonsense", *r), Error);
}

TEST_CASE("command outputs") {
  auto o = runCommand({"order", ex61()});
  CHECK(o.exitCode == cli::kOk);
  CHECK(o.out == "2\n");
  CHECK(runCommand({"hs", ex61(), "--max-degree", "3"}).out == "1 5 14 30\n");
  CHECK(runCommand({"hs", ex61()}).out == "1 5 14 30\n");
  CHECK(runCommand({"hs", ex61(), "--cumulative"}).out == "1 6 20 50\n");
  auto b = runCommand({"blowup", ex61(), "--center", "x,y,z,w,v", "--chart", "y", "--transform", "strict"});
  CHECK(b.exitCode == cli::kOk);
  CHECK(b.out.find("    z^2 + x^3*y^4\n    v^3 + x^5 + w^5\n") != std::string::npos);
  auto h = runCommand({"hybrid", ex62(), "--center-only"});
  CHECK(h.out.find("V(x,y,z)") != std::string::npos);
  auto inv = runCommand({"invariant", ex61()});
  CHECK(inv.out.find("(5,5) (inf,0)") != std::string::npos);
  auto q = runCommand({"--quiet", "order", ex61()});
  CHECK(q.exitCode == cli::kOk);
  CHECK(q.out.empty());
}

TEST_CASE("exit codes") {
  CHECK(runCommand({"order", "/nonexistent/file.ideal"}).exitCode == cli::kParseOrIo);
  CHECK(runCommand({"order", writeTemp("bad.ideal", "ring: x\ngen: x +\n")}).exitCode == cli::kParseOrIo);
  CHECK(runCommand({"order", writeTemp("unknown.ideal", "ring: x\ngen: q\n")}).exitCode == cli::kParseOrIo);
  CHECK(runCommand({"hs", writeTemp("unit.ideal", "ring: x\ngen: 1 + x\n")}).exitCode == cli::kDomain);
  CHECK(runCommand({}).exitCode == cli::kUsage);
  CHECK(runCommand({"frobnicate"}).exitCode == cli::kUsage);
  CHECK(runCommand({"coeff", ex61()}).exitCode == cli::kUsage);
  CHECK(runCommand({"blowup", ex61(), "--center", "x", "--transform", "strict"}).exitCode == cli::kDomain);
  CHECK(runCommand({"demo", "ex99"}).exitCode == cli::kUsage);
  CHECK_THROWS_AS(cli::demoScenario("ex99", false), std::invalid_argument);
}

TEST_CASE("determinism") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"sb", ex62()}, {"delta", ex61()}, {"--json", "hybrid", ex62()}, {"demo", "ex62"}}) {
    auto a = runCommand(args);
    auto b = runCommand(args);
    CHECK(a.exitCode == cli::kOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("JSON output reparses") {
  auto r = runCommand({"--json", "blowup", ex61(), "--center", "x,y,z,w,v", "--transform", "weak"});
  REQUIRE(r.exitCode == cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("ring"));
  CHECK(j.contains("order"));
  CHECK(j.contains("generators"));
  std::vector<std::string> names = j["ring"];
  auto ring = makeRing(names);
  auto g = fixtures::grevlex(ring);
  CHECK(idealEquals(fixtures::ideal(ring, j["generators"].get<std::vector<std::string>>()), fixtures::ideal61(), g));
  REQUIRE(j["charts"].size() == 5);
  for (const auto& chart : j["charts"]) {
    auto gens = chart["generators"].get<std::vector<std::string>>();
    auto I = fixtures::ideal(ring, gens);
    for (std::size_t k = 0; k < gens.size(); ++k) CHECK(formatCanonical(I.generators()[k], fixtures::order61()) == gens[k]);
  }
  auto h = nlohmann::json::parse(runCommand({"--json", "hybrid", ex62()}).out);
  CHECK(h["hybrid"].dump().find("\"798336\"") != std::string::npos);
}

TEST_CASE("demo reports") {
  CHECK(cli::demoScenario("ex61", false) == readFile(kGolden + "/demo_ex61.txt"));
  CHECK(cli::demoScenario("ex62", false) == readFile(kGolden + "/demo_ex62.txt"));
  auto text = cli::demoScenario("ex61", false);
  CHECK(text.find("J = <z^5 + x^3*y^3*z^3, x^5 + w^5 + y^2*v^3>") != std::string::npos);
  for (int c = 1; c <= 5; ++c) CHECK(text.find("chart " + std::to_string(c) + ":") != std::string::npos);
  auto t62 = cli::demoScenario("ex62", false);
  CHECK(t62.find("center: V(x,y,z)") != std::string::npos);
  CHECK(t62.find("already non-singular") != std::string::npos);
  auto j = nlohmann::json::parse(cli::demoScenario("ex62", true));
  CHECK(j.is_object());
  CHECK(runCommand({"demo", "ex61"}).out == text);
}
