#include "doctest.h"

#include "pjl/cli.hpp"

#include "json.hpp"

#include <filesystem>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = pjl::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("count") {
  auto r = run({"count", "multiplex", "-b", "2", "-n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "45\n");
  CHECK(run({"count", "normal", "-n", "5"}).out == "23\n");
  CHECK(run({"count", "passing", "-n", "3", "-k", "2"}).out == "4\n");
  CHECK(run({"count", "bound-b", "-b", "3", "-n", "3"}).out == "11\n");
  CHECK(run({"count", "normal", "-b", "3", "-n", "3"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "colored", "-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "formula 2, oracle 2, AGREE\n");
  auto j = run({"--format", "json", "verify", "normal", "-n", "2", "--to", "4"});
  CHECK(j.code == 0);
  auto ls = lines(j.out);
  REQUIRE(ls.size() == 3u);
  for (const auto& l : ls) CHECK(nlohmann::json::parse(l)["agree"] == true);
}

TEST_CASE("table mpx") {
  auto r = run({"table", "mpx", "--to", "30"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 31u);
  CHECK(ls[0] == "n,multiplex");
  CHECK(ls[5] == "5,45");
  CHECK(ls[17] == "17,401061");
  CHECK(ls[30] == "30,4007533072");
}

TEST_CASE("table gamma-b") {
  auto ls = lines(run({"table", "gamma-b"}).out);
  REQUIRE(ls.size() == 6u);
  CHECK(ls[1] == "3,0.3333,2.7043");
  CHECK(ls[5] == "7,0.1428,226.7906");
}

TEST_CASE("usage errors") {
  CHECK(run({"--bogus", "count", "normal", "-n", "2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"count", "normal"}).code == 2);
  CHECK(run({"--format", "xml", "count", "normal", "-n", "2"}).code == 2);
  CHECK(run({"oracle", "unicorn", "-n", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("formats") {
  auto csv = lines(run({"--format", "csv", "count", "normal", "-n", "1", "--to", "3"}).out);
  REQUIRE(csv.size() == 4u);
  CHECK(csv[0] == "variant,b,n,k,value");
  CHECK(csv[3] == "normal,2,3,2,5");
  auto js = run({"--format", "json", "oracle", "multiplex", "-n", "3"});
  auto j = nlohmann::json::parse(lines(js.out).at(0));
  CHECK(j["count"] == 9);
  CHECK(j["cap_stable"] == true);
}

TEST_CASE("oracle and enumerate") {
  CHECK(run({"oracle", "normal", "-n", "5"}).out == "23\n");
  CHECK(run({"oracle", "normal", "-n", "3", "--through", "11"}).out == "3\n");
  CHECK(run({"oracle", "colored", "-n", "4", "--quotient-colors"}).out == "7\n");
  CHECK(run({"--cap", "4", "oracle", "normal", "-n", "2"}).out == "2\n");
  auto e = lines(run({"enumerate", "normal", "-n", "3"}).out);
  REQUIRE(e.size() == 5u);
  CHECK(e[0] == "normal;2;3;11|101|011;C2 C2 C0");
  // progress goes to the diagnostic stream only
  auto r = run({"oracle", "normal", "-n", "4"});
  CHECK(r.out == "10\n");
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("cache hit and miss give identical output") {
  auto dir = std::filesystem::temp_directory_path() / "pjl_cli_test_cache";
  std::filesystem::remove_all(dir);
  std::vector<std::vector<std::string>> cmds{
      {"--cache-dir", dir.string(), "--format", "json", "oracle", "normal", "-n", "6"},
      {"--cache-dir", dir.string(), "table", "mpx", "--to", "12"},
      {"--cache-dir", dir.string(), "count", "base", "-n", "8"}};
  for (const auto& cmd : cmds) {
    auto miss = run(cmd);
    auto hit = run(cmd);
    CHECK(miss.code == 0);
    CHECK(miss.out == hit.out);
  }
  CHECK(std::filesystem::exists(dir / "oracle.jsonl"));
  CHECK(std::filesystem::exists(dir / "partitions.jsonl"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("asymptotics, ferrers, infinite") {
  CHECK(run({"--precision", "4", "asymptotics", "gamma"}).out == "1.3296\n");
  CHECK(run({"asymptotics", "bounds"}).code == 0);
  auto q = lines(run({"--format", "csv", "asymptotics", "q", "-t", "4"}).out);
  CHECK(q.at(1).rfind("4,3/44,", 0) == 0);
  auto fam = nlohmann::json::parse(run({"--format", "json", "ferrers", "family", "-b", "3", "-n", "3"}).out);
  CHECK(fam["distinct"] == 11);
  CHECK(fam["words"] == 13);
  auto cnt = lines(run({"--format", "csv", "ferrers", "count", "--partition", "1", "-b", "3"}).out);
  CHECK(cnt.at(1) == "1,1,1,3");
  CHECK(lines(run({"--format", "csv", "infinite", "fr", "0011"}).out).at(1) == "0011,0111");
  CHECK(run({"infinite", "check", "--max-len", "10", "--window", "6", "--state-len", "4", "--walk", "3"}).code == 0);
}
