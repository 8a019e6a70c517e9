#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bohrkit/cli.hpp"
#include "bohrkit/serialize.hpp"

namespace fs = std::filesystem;
using bohrkit::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bohrkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("bohrkit_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name, std::ios::binary) << text;
    return (path / name).string();
  }
};

const std::string fixtures = BOHRKIT_FIXTURES;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("lift of 2^-s - 3^-s") {
    const auto r = run({"lift", "--in", fixtures + "/diff23.json"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(fixtures + "/diff23_lifted.json"));
    const auto back = run({"unlift", "--in", fixtures + "/diff23_lifted.json"});
    CHECK(back.out == slurp(fixtures + "/diff23.json"));
  }

  TEST_CASE("witness n = 1") {
    const auto r = run({"witness", "--n", "1"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["tuple"][1].dump() ==
          R"({"terms":[{"n":"1","re":"1","im":"0"},{"n":"6","re":"-1","im":"0"}]})");
    CHECK(j["cofactors"][0].dump() == R"({"terms":[{"n":"3","re":"1","im":"0"}]})");
    CHECK(j["residual"]["terms"].empty());
  }

  TEST_CASE("eval of the constant one") {
    TempDir tmp;
    const auto one = tmp.write("one.json", R"({"terms":[{"n":"1","re":"1","im":"0"}]})");
    const auto r = run({"eval", "--in", one, "--s", "1+0i"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"value\":[1.0,0.0]}\n");
    const auto csv = run({"--csv", "eval", "--in", one, "--s", "2"});
    CHECK(csv.out == "re,im\n1.0,0.0\n");
  }

  TEST_CASE("mul reproduces the witness g") {
    TempDir tmp;
    const auto a = tmp.write("a.json", R"({"terms":[{"n":"1","re":"1","im":"0"},{"n":"10","re":"-1","im":"0"}]})");
    const auto b = tmp.write("b.json", R"({"terms":[{"n":"1","re":"1","im":"0"},{"n":"21","re":"-1","im":"0"}]})");
    const auto r = run({"mul", "--in", a, "--rhs", b});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(fixtures + "/witness_g_n2.json"));
  }

  TEST_CASE("fixed point report") {
    TempDir tmp;
    const auto h = tmp.write("h.json", R"([{"terms":[{"exps":[],"re":"1/2","im":"0"}]}])");
    const auto r = run({"fixedpoint", "--n", "1", "--h", h});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(std::abs(j["zStar"][0][0].get<double>() - (1 - std::sqrt(2.0))) < 1e-10);
    CHECK(j["certified"] == true);
    CHECK(j["inOpenPolydisk"] == true);
    CHECK(j.contains("seed"));
    const auto unreachable = run({"fixedpoint", "--n", "1", "--h", h, "--tol", "1e-30"});
    CHECK(unreachable.code == 3);
  }

  TEST_CASE("syzygy and membership") {
    TempDir tmp;
    const auto tuple = tmp.write(
        "t.json", R"([{"terms":[{"exps":[[2,1]],"re":"-1","im":"0"},{"exps":[[1,1]],"re":"1","im":"0"}]},)"
                  R"({"terms":[{"exps":[[3,1]],"re":"-1","im":"0"},{"exps":[[2,1]],"re":"1","im":"0"}]}])");
    const auto r = run({"syzygy", "--tuple", tuple, "--deg", "2"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["dimension"] == 4);
    CHECK(j["basis"].size() == 4);

    const auto kz = tmp.write(
        "k.json", R"([{"terms":[{"exps":[[3,1]],"re":"-1","im":"0"},{"exps":[[2,1]],"re":"1","im":"0"}]},)"
                  R"({"terms":[{"exps":[[2,1]],"re":"1","im":"0"},{"exps":[[1,1]],"re":"-1","im":"0"}]}])");
    const auto gens = tmp.write("g.json", "[" + slurp(kz) + "]");
    const auto m = run({"syzygy", "member", "--candidate", kz, "--gens", gens, "--cap", "0"});
    REQUIRE(m.code == 0);
    CHECK(Json::parse(m.out)["member"] == true);
    const auto none = tmp.write("none.json", "[]");
    const auto e = run({"syzygy", "member", "--candidate", kz, "--gens", none});
    CHECK(Json::parse(e.out)["member"] == false);

    // budget exhaustion
    const auto cfg = tmp.write("tight.json", R"({"budgets":{"matrixCells":10}})");
    CHECK(run({"--config", cfg, "syzygy", "--tuple", tuple, "--deg", "3"}).code == 3);
  }

  TEST_CASE("norm, kronecker, and section-check") {
    TempDir tmp;
    const auto f = tmp.write("f.json", R"({"terms":[{"n":"1","re":"1","im":"0"},{"n":"2","re":"-1","im":"0"}]})");
    const auto n = run({"norm", "--in", f, "--strategy", "l1,vertical,grid", "--count", "2048"});
    REQUIRE(n.code == 0);
    const Json j = Json::parse(n.out);
    CHECK(j["estimates"][0]["estimate"] == 2.0);
    CHECK(j["estimates"][0]["kind"] == "l1-upper-bound");
    CHECK(j["estimates"][1]["estimate"].get<double>() >= 1.99);
    CHECK(j["estimates"][2]["estimate"].get<double>() >= 1.99);
    const auto csv = run({"--csv", "--seed", "4", "norm", "--in", f, "--strategy", "random"});
    CHECK(csv.out.rfind("# seed=4\nstrategy,kind,samples,estimate,argmax1_re,argmax1_im\nrandom,", 0) == 0);

    const auto k = run({"kronecker", "--m", "1", "--target", "-1", "--eps", "1e-6"});
    REQUIRE(k.code == 0);
    CHECK(std::abs(Json::parse(k.out)["t"].get<double>() - std::numbers::pi / std::numbers::ln2) < 1e-6);
    const auto miss = run({"kronecker", "--m", "3", "--target", "1,-1,i", "--eps", "1e-9", "--tmax", "5"});
    CHECK(miss.code == 3);
    const auto orbit = run({"kronecker", "--m", "2", "--count", "100"});
    CHECK(Json::parse(orbit.out)["points"].size() == 100);

    const auto s = run({"section-check", "--in", f, "--m", "0", "--l", "3", "--count", "200"});
    REQUIRE(s.code == 0);
    CHECK(Json::parse(s.out)["violations"] == 0);
  }

  TEST_CASE("determinism: same argv and seed give identical bytes") {
    TempDir tmp;
    const auto f = tmp.write("f.json", R"({"terms":[{"n":"2","re":"1","im":"0"},{"n":"15","re":"-1/2","im":"1"}]})");
    const auto h = tmp.write("h.json", R"([{"terms":[{"exps":[[1,1]],"re":"1/3","im":"0"},{"exps":[[2,1]],"re":"-1/4","im":"0"}]}])");
    const std::vector<std::vector<std::string>> commands = {
        {"--seed", "9", "norm", "--in", f, "--strategy", "vertical,random,kronecker,grid"},
        {"--seed", "9", "section-check", "--in", f, "--m", "1", "--l", "4"},
        {"--seed", "9", "fixedpoint", "--n", "1", "--h", h},
    };
    for (const auto& c : commands) {
      const auto a = run(c);
      const auto b = run(c);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
    CHECK(run(commands[0]).out != run({"--seed", "10", "norm", "--in", f, "--strategy", "random"}).out);
  }

  TEST_CASE("seed precedence: flag over config over environment") {
    TempDir tmp;
    const auto f = tmp.write("f.json", R"({"terms":[{"n":"2","re":"1","im":"0"},{"n":"5","re":"1","im":"0"}]})");
    const auto env_cfg = tmp.write("env.json", R"({"seed":5})");
    const auto file_cfg = tmp.write("file.json", R"({"seed":6})");
    auto seed_of = [&](std::vector<std::string> prefix) {
      prefix.insert(prefix.end(), {"section-check", "--in", f, "--m", "1", "--l", "3", "--count", "5"});
      return Json::parse(run(prefix).out)["seed"].get<int>();
    };
    ::setenv("BOHRKIT_CONFIG", env_cfg.c_str(), 1);
    CHECK(seed_of({}) == 5);
    CHECK(seed_of({"--config", file_cfg}) == 6);
    CHECK(seed_of({"--config", file_cfg, "--seed", "7"}) == 7);
    ::unsetenv("BOHRKIT_CONFIG");
    CHECK(seed_of({}) == 0);
  }

  TEST_CASE("inputs are never modified") {
    TempDir tmp;
    const std::string text = R"({"terms":[{"n":"6","re":"3","im":"0"},{"n":"4","re":"1","im":"0"}]})";
    const auto f = tmp.write("f.json", text);
    const auto before = fs::last_write_time(f);
    run({"lift", "--in", f});
    run({"norm", "--in", f});
    run({"mul", "--in", f, "--rhs", f});
    CHECK(slurp(f) == text);
    CHECK(fs::last_write_time(f) == before);
    CHECK(run({"--out", f, "lift", "--in", f}).code == 2);
    CHECK(slurp(f) == text);
  }

  TEST_CASE("--out writes only on success") {
    TempDir tmp;
    const auto out = (tmp.path / "o.json").string();
    CHECK(run({"--out", out, "witness", "--n", "2"}).code == 0);
    CHECK(Json::parse(slurp(out))["valid"] == true);
    const auto bad = (tmp.path / "bad.json").string();
    CHECK(run({"--out", bad, "witness", "--n", "0"}).code == 2);
    CHECK_FALSE(fs::exists(bad));
  }

  TEST_CASE("exit codes for usage and validation errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"lift"}).code == 2);
    CHECK(run({"lift", "--in", "/nonexistent/f.json"}).code == 2);
    CHECK(run({"witness", "--n", "0"}).code == 2);
    CHECK(run({"--csv", "witness", "--n", "1"}).code == 2);
    CHECK(run({"--config", fixtures + "/zero.json", "witness", "--n", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("malformed corpus exits 2") {
    int seen = 0;
    for (const auto& e : fs::directory_iterator(fixtures + "/malformed")) {
      CAPTURE(e.path().string());
      const auto r = run({"eval", "--in", e.path().string(), "--s", "1"});
      CHECK(r.code == 2);
      CHECK(r.err.find("error:") != std::string::npos);
      ++seen;
    }
    CHECK(seen == 10);
  }
}
