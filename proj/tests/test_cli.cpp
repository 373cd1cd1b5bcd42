#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperrad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = hyperrad::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir() : path_(fs::temp_directory_path() / ("hyperrad_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  fs::path operator/(const std::string& name) const { return path_ / name; }

private:
  fs::path path_;
};

}  // namespace

TEST_CASE("cli bounds") {
  TempDir dir;
  const std::string p3 = dir.file("p3.txt", "3 2 2\n1 2\n2 3\n");

  const Outcome adj = run({"bounds", p3});
  CHECK(adj.code == 0);
  const auto j = nlohmann::json::parse(adj.out);
  CHECK(j["kind"] == "adjacency");
  CHECK(j["argmin_s"] == 2);
  CHECK(j["min_value"].get<double>() == doctest::Approx(1.41421356237).epsilon(1e-12));
  CHECK(j["per_s"].size() == 3);
  CHECK(adj.out.find("1.41421356237,") == std::string::npos);
  CHECK(adj.out.find("\"min_value\": 1.41421356237\n") != std::string::npos);

  const Outcome sig = run({"bounds", p3, "--kind", "signless"});
  CHECK(nlohmann::json::parse(sig.out)["min_value"].get<double>() == doctest::Approx(2.561552812809).epsilon(1e-11));

  const Outcome csv = run({"bounds", p3, "--format", "csv"});
  CHECK(csv.out == "s,value\n1,2\n2,1.41421356237\n3,1.41421356237\nargmin=2,1.41421356237\n");

  const Outcome empty = run({"bounds", dir.file("e.txt", "4 2 0\n")});
  CHECK(empty.code == 0);
  CHECK(nlohmann::json::parse(empty.out)["min_value"] == 0.0);

  const Outcome bad = run({"bounds", dir.file("bad.txt", "3 2 2\n1 2\n2 1\n")});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("duplicate edge") != std::string::npos);

  CHECK(run({"bounds", (dir / "missing.txt").string()}).code == 2);
}

TEST_CASE("cli rho and q") {
  TempDir dir;
  const Outcome e3 = run({"rho", dir.file("e3.txt", "3 3 1\n1 2 3\n")});
  CHECK(e3.code == 0);
  const auto j = nlohmann::json::parse(e3.out);
  CHECK(std::fabs(j["value"].get<double>() - 1.0) < 1e-8);
  CHECK(j["converged"] == true);
  CHECK(j["operator"] == "adjacency");
  CHECK(j["component_count"] == 1);
  for (const char* key : {"operator", "n", "k", "m", "value", "lower", "upper", "iterations", "converged",
                          "component_count"}) {
    CHECK(j.contains(key));
  }

  const std::string p3 = dir.file("p3.txt", "3 2 2\n1 2\n2 3\n");
  const auto q = nlohmann::json::parse(run({"q", p3}).out);
  CHECK(std::fabs(q["value"].get<double>() - 3.0) < 1e-6);
  CHECK(q["operator"] == "signless");

  const Outcome k43 = run({"rho", dir.file("k43.txt", "4 3 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n")});
  CHECK(std::fabs(nlohmann::json::parse(k43.out)["value"].get<double>() - 3.0) < 1e-6);

  const Outcome capped = run({"rho", dir.file("p6.txt", "6 2 5\n1 2\n2 3\n3 4\n4 5\n5 6\n"), "--max-iter", "2"});
  CHECK(capped.code == 3);
  CHECK(nlohmann::json::parse(capped.out)["converged"] == false);
}

TEST_CASE("cli validate") {
  TempDir dir;
  const std::string p3 = dir.file("p3.txt", "3 2 2\n1 2\n2 3\n");
  const Outcome fixed = run({"validate", "--kind", "signless", "--input", p3});
  CHECK(fixed.code == 4);
  const auto j = nlohmann::json::parse(fixed.out);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["bound"].get<double>() == doctest::Approx(2.561553).epsilon(1e-6));
  CHECK(std::fabs(j["violations"][0]["computed"].get<double>() - 3.0) < 1e-6);

  const Outcome campaign = run({"validate", "--kind", "adjacency", "--n", "8", "--k", "2,3", "--trials", "20",
                                "--seed", "9"});
  CHECK(campaign.code == 0);
  CHECK(nlohmann::json::parse(campaign.out)["trials"] == 20);

  const Outcome once = run({"validate", "--trials", "1", "--seed", "5"});
  CHECK(once.out == run({"validate", "--trials", "1", "--seed", "5"}).out);
}

TEST_CASE("cli identities") {
  const Outcome small = run({"identities", "--n-max", "4", "--k-max", "2"});
  CHECK(small.code == 0);
  CHECK(small.out == "n,s,k,first,middle,third,first_eq_third,middle_eq_third,eq3\n4,3,2,1,1,1,true,true,true\n");

  const Outcome full = run({"identities", "--format", "json"});
  CHECK(full.code == 0);
  const auto j = nlohmann::json::parse(full.out);
  CHECK(j["all_hold"] == true);
  bool found = false;
  for (const auto& row : j["rows"]) {
    CHECK(row["first_eq_third"] == true);
    CHECK(row["eq3"] == true);
    if (row["n"] == 5 && row["s"] == 3 && row["k"] == 3) {
      found = true;
      CHECK(row["middle_eq_third"] == false);
      CHECK(row["middle"] == 5);
      CHECK(row["third"] == 3);
    }
  }
  CHECK(found);
  CHECK(run({"identities", "--n-max", "3"}).code == 2);
}

TEST_CASE("cli gen") {
  TempDir dir;
  CHECK(run({"gen", "complete", "--n", "4", "--k", "3"}).out == "4 3 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
  CHECK(run({"gen", "single-edge", "--n", "5", "--k", "3"}).out == "5 3 1\n1 2 3\n");

  const std::string a = (dir / "a.txt").string();
  const std::string b = (dir / "b.txt").string();
  CHECK(run({"gen", "random-m", "--n", "6", "--k", "3", "--m", "10", "--seed", "7", "--out", a}).code == 0);
  CHECK(run({"gen", "random-m", "--n", "6", "--k", "3", "--m", "10", "--seed", "7", "--out", b}).code == 0);
  std::ifstream fa(a), fb(b);
  const std::string ta((std::istreambuf_iterator<char>(fa)), {});
  const std::string tb((std::istreambuf_iterator<char>(fb)), {});
  CHECK(ta == tb);
  CHECK(ta.rfind("6 3 10\n", 0) == 0);

  const std::string c = (dir / "c.txt").string();
  CHECK(run({"gen", "random-m", "--n", "4", "--k", "3", "--m", "9", "--out", c}).code == 2);
  CHECK_FALSE(fs::exists(c));
  CHECK(run({"gen", "bogus", "--n", "4", "--k", "3"}).code == 2);
}
