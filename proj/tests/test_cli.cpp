#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bimon/cli.hpp"
#include "bimon/zoo.hpp"
#include "fixtures.hpp"

using namespace bimon;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("bimon-cli-" + std::to_string(::getpid()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

fs::path scratch() {
  static const Scratch s;
  return s.dir;
}

std::string file(const std::string& name) { return (scratch() / name).string(); }

std::string demo_file(const std::string& name, int dim_l = 1) {
  const auto path = file(name + "-" + std::to_string(dim_l) + ".json");
  if (!fs::exists(path)) REQUIRE(run({"demo", name, "--dim-l", std::to_string(dim_l), "-o", path}).code == 0);
  return path;
}

const fs::path golden(BIMON_GOLDEN_DIR);

const std::vector<std::string> kDemos{"kplusl",           "kplusl-flip",      "kplusl-coring",      "trivial-ring-q",
                                      "trivial-ring-qxq", "trivial-ring-upper2", "tensor-flip-pair", "flip-c1",
                                      "flip-c2",          "flip-c3"};

int count_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

int process_exit(const std::string& args) {
  const int status = std::system((std::string(BIMON_EXE) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("demo output matches the golden files") {
  CHECK(run({"demo", "kplusl", "--dim-l", "1"}).out == slurp(golden / "kplusl1.json"));
  CHECK(run({"demo", "flip-c2"}).out == slurp(golden / "flip-c2.json"));
  CHECK(run({"demo", "kplusl"}).out == slurp(golden / "kplusl1.json"));
}

TEST_CASE("golden files hold the expected matrices") {
  const Workspace ws(parse_structure(slurp(golden / "kplusl1.json")));
  CHECK(ws.morphism("mu").map == fixture::mu());
  CHECK(ws.morphism("eta").map == fixture::eta());
  CHECK(ws.morphism("delta").map == fixture::delta());
  CHECK(ws.morphism("eps").map == fixture::eps());
  CHECK(ws.morphism("hbar").map == fixture::hbar());

  const Workspace c2(parse_structure(slurp(golden / "flip-c2.json")));
  CHECK(c2.morphism("hbar").map == fixture::tau());
  CHECK(c2.morphism("mu").map == LinMap::from_rows(fixture::BB, fixture::B, {{1, 0, 0, 1}, {0, 1, 1, 0}}));
  CHECK(c2.morphism("delta").map == LinMap::from_rows(fixture::B, fixture::BB, {{1, 0}, {0, 0}, {0, 0}, {0, 1}}));

  const Workspace w(parse_structure(slurp(golden / "tensor-flip-pair-wreath.json")));
  const auto& mul = w.morphism("product_mul").map;
  for (std::size_t t = 0; t < 2; ++t)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t t2 = 0; t2 < 2; ++t2)
        for (std::size_t a2 = 0; a2 < 2; ++a2) {
          const std::size_t want = ((t + t2) % 2) * 2 + (a + a2) % 2;
          for (std::size_t o = 0; o < 4; ++o) CHECK(mul(o, (t * 2 + a) * 4 + t2 * 2 + a2) == (o == want ? 1 : 0));
        }
}

TEST_CASE("build wreath-product on the tensor flip pair matches the golden file") {
  const auto out = file("tfp-wreath.json");
  REQUIRE(run({"build", demo_file("tensor-flip-pair"), "--construct", "wreath-product", "-o", out}).code == 0);
  CHECK(slurp(out) == slurp(golden / "tensor-flip-pair-wreath.json"));
  CHECK(run({"check", out, "--law", "monoid"}).code == 0);
}

TEST_CASE("check exit codes and text output") {
  const auto ddl = run({"check", demo_file("kplusl"), "--law", "ddl"});
  CHECK(ddl.code == 0);
  CHECK(count_lines(ddl.out, "PASS ") == 8);
  CHECK(count_lines(ddl.out, "FAIL ") == 0);

  const auto flip = run({"check", demo_file("kplusl-flip"), "--law", "bimonoid"});
  CHECK(flip.code == 1);
  CHECK(flip.out.find("FAIL comul multiplicative: (μ⊗μ)∘(B⊗ħ⊗B)∘(Δ⊗Δ) ≠ Δ∘μ\n"
                      "  at e1⊗e1 → e1⊗e1: lhs 2, rhs 0, residual 2\n") != std::string::npos);
  CHECK(flip.out.find("verdict: FAIL") != std::string::npos);

  const auto missing = run({"check", demo_file("kplusl"), "--law", "wreath"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("MissingRole") != std::string::npos);

  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(run({"check", demo_file("kplusl", n), "--law", "bimonoid"}).code == 0);
    CHECK(run({"check", demo_file("kplusl", n), "--law", "ddl"}).code == 0);
  }
}

TEST_CASE("json check report") {
  const auto r = run({"check", demo_file("kplusl-flip"), "--law", "bimonoid", "--format", "json"});
  CHECK(r.code == 1);
  const auto j = Json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["verdict"] == "FAIL");
  CHECK(j["consistent"] == true);
  CHECK_FALSE(j.contains("elapsed_ms"));
  const auto& sec = j["sections"][0];
  CHECK(sec["decisive"] == true);
  int failing = 0;
  for (const auto& a : sec["axioms"]) {
    if (a["passed"] == true) continue;
    ++failing;
    CHECK(a["name"].get<std::string>().rfind("comul multiplicative", 0) == 0);
    REQUIRE(a["residuals"].size() == 1);
    CHECK(a["residuals"][0]["residual"] == "2");
    CHECK(a["residuals"][0]["row_label"] == "e1⊗e1");
  }
  CHECK(failing == 1);
  CHECK(Json::parse(run({"check", demo_file("kplusl"), "--law", "ddl", "--format", "json", "--timing"}).out)
            .contains("elapsed_ms"));
}

TEST_CASE("input errors") {
  const auto bad_json = file("bad.json");
  spit(bad_json, "{\"schema_version\": 1,");
  const auto r = run({"check", bad_json, "--law", "monoid"});
  CHECK(r.code == 2);
  CHECK(r.err.find("ParseError") != std::string::npos);

  auto j = Json::parse(slurp(golden / "kplusl1.json"));
  auto cols = j;
  cols["morphisms"]["mu"]["matrix"][0].push_back("0");
  spit(file("cols.json"), cols.dump());
  const auto c = run({"check", file("cols.json"), "--law", "monoid"});
  CHECK(c.code == 2);
  CHECK(c.err.find("SchemaError") != std::string::npos);

  auto zero = j;
  zero["morphisms"]["mu"]["matrix"][0][0] = "1/0";
  spit(file("zero.json"), zero.dump());
  const auto z = run({"check", file("zero.json"), "--law", "monoid"});
  CHECK(z.code == 2);
  CHECK(z.err.find("SchemaError") != std::string::npos);

  auto dangling = j;
  dangling["roles"]["monoid"]["mul"] = "nosuch";
  spit(file("dangling.json"), dangling.dump());
  CHECK(run({"check", file("dangling.json"), "--law", "monoid"}).code == 2);

  CHECK(run({"check", file("does-not-exist.json"), "--law", "monoid"}).code == 2);
  CHECK(run({"demo", "nosuch"}).code == 2);
  CHECK(run({"demo", "kplusl", "--dim-l", "0"}).code == 2);
  CHECK(run({"check", demo_file("kplusl"), "--law", "nosuch"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("build refuses a failing double distributive law") {
  auto j = Json::parse(slurp(golden / "kplusl1.json"));
  j["morphisms"]["hbar"]["matrix"][0][0] = "2";
  spit(file("bad-ddl.json"), j.dump());
  const auto r = run({"build", file("bad-ddl.json"), "--construct", "induced-monoid", "-o", file("never.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("double distributive law") != std::string::npos);
  CHECK_FALSE(fs::exists(file("never.json")));
}

TEST_CASE("builds re-check cleanly") {
  const auto src = demo_file("kplusl");
  const std::vector<std::pair<std::string, std::string>> builds{{"induced-monoid", "monoid"},
                                                                {"induced-comonoid", "comonoid"},
                                                                {"wreath-product", "monoid"},
                                                                {"cowreath-product", "comonoid"}};
  for (const auto& [construct, law] : builds) {
    CAPTURE(construct);
    const auto out = file("built-" + construct + ".json");
    REQUIRE(run({"build", src, "--construct", construct, "-o", out}).code == 0);
    CHECK(run({"check", out, "--law", law}).code == 0);
  }
  CHECK(slurp(file("built-induced-monoid.json")).find("induced_mul") != std::string::npos);
  const auto a = Workspace(parse_structure(slurp(file("built-induced-monoid.json"))));
  const auto b = Workspace(parse_structure(slurp(file("built-wreath-product.json"))));
  CHECK(a.monoid(a.role("monoid")).mul.map == b.monoid(b.role("monoid")).mul.map);

  for (const auto& [construct, role] : std::vector<std::pair<std::string, std::string>>{
           {"universal-cowreath", "gamma"}, {"universal-wreath", "Phi"}}) {
    const auto out = file("built-" + construct + ".json");
    REQUIRE(run({"build", src, "--construct", construct, "-o", out}).code == 0);
    const Workspace ws(parse_structure(slurp(out)));
    CHECK(ws.morphism(role).map == LinMap::identity({4, "B⊗B"}));
  }
}

TEST_CASE("every demo round-trips and passes its report") {
  for (const auto& name : kDemos) {
    CAPTURE(name);
    const auto text = run({"demo", name}).out;
    const auto parsed = parse_structure(text);
    CHECK(emit_structure(parsed) == text);
    CHECK(parse_structure(emit_structure(parsed)) == parsed);
    const auto path = demo_file(name);
    const auto rep = run({"report", path});
    CHECK(rep.code == (name == "kplusl-flip" ? 1 : 0));
    const auto j = Json::parse(run({"report", path, "--format", "json"}).out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["verdict"] == (name == "kplusl-flip" ? "FAIL" : "PASS"));
  }
}

TEST_CASE("commands are deterministic") {
  const auto k3 = demo_file("kplusl", 3);
  const std::vector<std::vector<std::string>> commands{
      {"demo", "kplusl", "--dim-l", "2"},
      {"demo", "trivial-ring-upper2"},
      {"check", k3, "--law", "bimonoid"},
      {"check", k3, "--law", "em:la", "--format", "json"},
      {"report", demo_file("kplusl-coring"), "--format", "json"},
      {"report", demo_file("kplusl-flip")},
  };
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
  const auto out1 = file("det1.json"), out2 = file("det2.json");
  run({"build", demo_file("kplusl", 2), "--construct", "cowreath-product", "-o", out1});
  run({"build", demo_file("kplusl", 2), "--construct", "cowreath-product", "-o", out2});
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("mutated files always end in a defined exit code") {
  std::mt19937_64 rng(9);
  const auto base = slurp(golden / "kplusl1.json");
  const std::string alphabet = "0123456789-/\"[]{},: ";
  for (int trial = 0; trial < 60; ++trial) {
    auto text = base;
    const int edits = 1 + static_cast<int>(rng() % 3);
    for (int e = 0; e < edits; ++e) text[rng() % text.size()] = alphabet[rng() % alphabet.size()];
    spit(file("mutant.json"), text);
    for (const auto* law : {"ddl", "bimonoid", "em:rc"}) {
      const int code = run({"check", file("mutant.json"), "--law", law}).code;
      CHECK((code == 0 || code == 1 || code == 2));
    }
  }
}

TEST_CASE("the executable reports exit codes") {
  CHECK(process_exit("demo nosuch") == 2);
  CHECK(process_exit("check " + demo_file("kplusl") + " --law ddl") == 0);
  CHECK(process_exit("check " + demo_file("kplusl-flip") + " --law bimonoid") == 1);
}
