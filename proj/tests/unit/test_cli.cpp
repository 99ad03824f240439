#include "kfloer/cli.hpp"
#include "kfloer/constructors.hpp"
#include "kfloer/pl_function.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kfloer;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

PLFunction pl_from_json(const Json& j) {
  std::vector<Breakpoint> pts;
  for (const auto& b : j["breakpoints"])
    pts.push_back({Rational::parse(b["x"].get<std::string>()), Rational::parse(b["y"].get<std::string>())});
  return PLFunction::from_points(std::move(pts));
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "kfloer_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("upsilon JSON for T(3,4)") {
  const Result r = run({"upsilon", "T(3,4)", "--json"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["infinite"] == "none");
  const auto& pieces = j["pieces"];
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[0]["slope"] == "-3/1");
  CHECK(pieces[0]["intercept"] == "0/1");
  CHECK(pieces[1]["slope"] == "0/1");
  CHECK(pieces[1]["intercept"] == "-2/1");
  CHECK(pieces[2]["slope"] == "3/1");
  CHECK(pieces[2]["intercept"] == "-6/1");
  for (const auto& b : j["breakpoints"]) {
    CHECK(b["x"].is_string());
    CHECK(b["y"].get<std::string>().find('/') != std::string::npos);
  }
}

TEST_CASE("upsilon2 JSON for T(5,7) at 2/5") {
  const Result r = run({"upsilon2", "T(5,7)", "--t", "2/5", "--json"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  REQUIRE(j["pieces"].size() == 1);
  CHECK(j["pieces"][0]["slope"] == "-11/1");
  CHECK(j["pieces"][0]["intercept"] == "14/5");
  CHECK(j["t"] == "2/5");
  CHECK(j["disjoint"] == true);
}

TEST_CASE("human output") {
  const Result r = run({"upsilon2", "T(5,7)", "--t", "4/5"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("8/5 - 4s") != std::string::npos);
  CHECK(r.out.find("18/5 - 6s") != std::string::npos);
  const Result v = run({"v2", "-box(2)"});
  CHECK(v.code == 0);
  CHECK(v.out.find("+inf") != std::string::npos);
  CHECK(v.out.find("note:") != std::string::npos);
  const Result b = run({"v2", "box(1)#box(2)#box(3)", "--json"});
  CHECK(b.json()["v2"] == "-6/1");
}

TEST_CASE("infinite results carry notes in JSON") {
  const Result r = run({"upsilon2", "-T(3,4)", "--t", "2/3", "--json"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["infinite"] == "+inf");
  CHECK(j["breakpoints"].empty());
  CHECK_FALSE(j["notes"].empty());
  CHECK(run({"v2", "-box(1)", "--json"}).json()["v2"] == "+inf");
}

TEST_CASE("pivots and bounds") {
  const Json p = run({"pivots", "T(3,4)", "--t", "2/3", "--json"}).json();
  CHECK(p["p_minus"] == Json::array({0, 3}));
  CHECK(p["p_plus"] == Json::array({1, 1}));
  CHECK(p["delta_upsilon_prime"] == "3/1");
  const Json b = run({"bounds", "nK(2)", "--json"}).json();
  CHECK(b["combined"] == 6);
  const Json b57 = run({"bounds", "T(5,7)", "--t", "2/5", "--t", "4/5", "--json"}).json();
  CHECK(b57["parts"].size() == 3);
  CHECK(b57["parts"][1]["slope_bound"] == 11);
}

TEST_CASE("validate on a file with nonzero d^2 names the generator") {
  const auto path = temp_dir() / "bad.txt";
  {
    std::ofstream f(path);
    f << "gen a 0 0 0\ngen x 1 1 1\ngen y 0 0 1\ngen w -1 0 0\nd x = y\nd y = w\n";
  }
  const Result r = run({"validate", "@" + path.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("d-squared") != std::string::npos);
  CHECK(r.err.find("x") != std::string::npos);
  CHECK(run({"upsilon", "@" + path.string()}).code == 1);
  CHECK(run({"validate", "T(3,4)"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"upsilon"}).code == 2);
  CHECK(run({"upsilon2", "T(3,4)"}).code == 2);
  CHECK(run({"upsilon2", "T(3,4)", "--t", "x/y"}).code == 2);
  CHECK(run({"upsilon2", "T(3,4)", "--t", "3"}).code == 1);
  CHECK(run({"upsilon", "T(3,4"}).code == 2);
  CHECK(run({"upsilon", "T(2,4)"}).code == 1);
  CHECK(run({"upsilon", "@/nonexistent/file.txt"}).code == 2);
  CHECK(run({"upsilon", "unknot + unknot"}).code == 1);
  CHECK(run({"upsilon", "T(3,4)", "--csv", "x.csv", "--samples", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("parse errors point at the offending byte") {
  const Result r = run({"upsilon", "T(3,4) # bogus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("offset 9") != std::string::npos);
  CHECK(r.err.find("          ^") != std::string::npos);
}

TEST_CASE("quiet suppresses standard output") {
  const Result r = run({"upsilon", "T(3,4)", "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("catalog and show") {
  const Json c = run({"catalog", "--json"}).json();
  CHECK(c.size() == catalog_names().size());
  for (const auto& e : c) CHECK(e["role"] == "K-complex");
  const Result s = run({"show", "T(3,4)"});
  CHECK(s.out.find("d b1 = a1 + a2") != std::string::npos);
}

TEST_CASE("CSV samples agree with the exact pieces") {
  const auto path = (temp_dir() / "u2.csv").string();
  const std::size_t n = 41;
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"upsilon2", "hom-K", "--t", "1"},
        std::vector<std::string>{"upsilon", "T(5,7)"}}) {
    auto args = cmd;
    args.insert(args.end(), {"--json", "--csv", path, "--samples", std::to_string(n)});
    const Result r = run(args);
    REQUIRE(r.code == 0);
    const PLFunction f = pl_from_json(r.json());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    std::size_t k = 0;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      const double x = std::stod(line.substr(0, comma));
      const double y = std::stod(line.substr(comma + 1));
      const Rational exact_x(BigInt(2 * k), BigInt(n - 1));
      CHECK(std::abs(x - exact_x.to_double()) < 1e-12);
      CHECK(std::abs(y - f.evaluate(exact_x).value().to_double()) < 1e-12);
      ++k;
    }
    CHECK(k == n);
  }
}

TEST_CASE("serialized catalog complexes give identical invariant output") {
  const auto dir = temp_dir();
  for (const auto& name : catalog_names()) {
    const auto path = dir / "roundtrip.txt";
    {
      std::ofstream f(path);
      f << run({"show", name}).out;
    }
    const std::string file = "@" + path.string();
    for (const std::vector<std::string>& tail :
         {std::vector<std::string>{"upsilon"}, {"upsilon2", "--t", "1"}, {"v2"}, {"bounds"}}) {
      auto a = tail, b = tail;
      a.insert(a.begin() + 1, name);
      b.insert(b.begin() + 1, file);
      a.push_back("--json");
      b.push_back("--json");
      Json ja = run(a).json(), jb = run(b).json();
      ja.erase("expression");
      jb.erase("expression");
      CHECK_MESSAGE(ja == jb, name << " " << tail[0]);
    }
  }
  std::filesystem::remove_all(dir);
}
