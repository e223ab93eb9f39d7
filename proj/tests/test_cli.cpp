#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "parker/cli.hpp"

using namespace parker;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run analyze_inline(const std::string& text, Config config = {}) {
  std::ostringstream out, err;
  DessinSource src;
  src.text = text;
  const int code = cmd_analyze(src, config, out, err);
  return {code, out.str(), err.str()};
}

Run machine(const std::string& text) {
  Config c;
  c.format = OutputFormat::Machine;
  return analyze_inline(text, c);
}

Run selftest(const std::string& filter) {
  std::ostringstream out, err;
  const int code = cmd_selftest({}, filter, out, err);
  return {code, out.str(), err.str()};
}

std::string without_timings(const std::string& doc) {
  auto j = nlohmann::ordered_json::parse(doc);
  j.erase("timings_ms");
  return j.dump();
}

}  // namespace

TEST_CASE("analyze exit codes") {
  const auto triv = analyze_inline("n=1 a=() b=()");
  CHECK(triv.code == exit_code::kOk);
  CHECK(triv.err.empty());

  const auto disconnected = analyze_inline("n=3 a=(1 2) b=(1 2)");
  CHECK(disconnected.code == exit_code::kInput);
  CHECK(disconnected.err.find('\n') == disconnected.err.size() - 1);

  CHECK(analyze_inline("n=3 a=(1 2 3) b=(1 2)").code == exit_code::kOk);
  CHECK(analyze_inline("n=3 a=(1 2 x) b=()").code == exit_code::kInput);

  Config small;
  small.analysis.group_cap = 10;
  const auto big = analyze_inline("n=4 a=(1 2 3 4) b=(1 2)", small);
  CHECK(big.code == exit_code::kSize);
  CHECK(big.err.find("group_cap") != std::string::npos);

  Config dense;
  dense.analysis.strategy = Strategy::Dense;
  CHECK(analyze_inline("n=5 a=(1 2 3 4 5) b=(1 2 3)", dense).code == exit_code::kSize);
}

TEST_CASE("eigenvalues outside the exponent field give exit 5") {
  const auto r = analyze_inline("n=5 a=(1 2 3 4 5) b=(1 2 3)");
  CHECK(r.code == exit_code::kEigenvalueField);
  CHECK_FALSE(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("input from a file") {
  const auto path = std::filesystem::temp_directory_path() / "parker_cli_test.dessin";
  {
    std::ofstream f(path);
    f << "n=3\na=(1 2 3)\nb=(1 2)\n";
  }
  std::ostringstream out, err;
  DessinSource src;
  src.path = path.string();
  CHECK(cmd_analyze(src, {}, out, err) == exit_code::kOk);
  src.path = (path.parent_path() / "does_not_exist.dessin").string();
  CHECK(cmd_analyze(src, {}, out, err) == exit_code::kInput);
  std::filesystem::remove(path);
}

TEST_CASE("machine output is deterministic") {
  for (const char* text : {"n=1 a=() b=()", "n=3 a=(1 2 3) b=(1 2)", "n=4 a=(1 2 3) b=(1 2)(3 4)",
                           "n=5 a=(1 2 3 4 5) b=(2 5)(3 4)"}) {
    const auto r1 = machine(text), r2 = machine(text);
    REQUIRE(r1.code == exit_code::kOk);
    CHECK(without_timings(r1.out) == without_timings(r2.out));
  }
}

TEST_CASE("machine document keys") {
  const auto r = machine("n=3 a=(1 2 3) b=(1 2)");
  const auto j = nlohmann::ordered_json::parse(r.out);
  for (const char* key : {"group_order", "exponent", "genus", "passport", "min_poly", "squarefree_min_poly", "field_k",
                          "field_L", "field_K", "predicted_eigenvalues", "checks", "strategy", "timings_ms"})
    CHECK_MESSAGE(j.contains(key), key);
  CHECK(j["group_order"] == 6);
  CHECK(j["genus"] == 0);
  CHECK(j["min_poly"] == nlohmann::ordered_json::array({"0", "324", "0", "-45", "0", "1"}));
  CHECK(j["field_k"]["degree"] == 1);
  CHECK(std::prev(j.end()).key() == "timings_ms");
}

TEST_CASE("text and machine renderings agree") {
  for (const char* text : {"n=3 a=(1 2 3) b=(1 2 3)", "n=5 a=(1 2 3 4 5) b=(2 5)(3 4)", "n=4 a=(1 2 3) b=(1 2)(3 4)"}) {
    const auto j = nlohmann::ordered_json::parse(machine(text).out);
    const auto t = analyze_inline(text).out;
    CHECK(t.find(j["field_L"]["text"].get<std::string>()) != std::string::npos);
    CHECK(t.find(j["field_k"]["text"].get<std::string>()) != std::string::npos);
    CHECK(t.find(std::to_string(j["group_order"].get<int>())) != std::string::npos);
  }
}

TEST_CASE("selftest filters") {
  const auto abelian = selftest("abelian");
  CHECK(abelian.code == exit_code::kOk);
  CHECK(abelian.out.find("z4") != std::string::npos);
  CHECK(abelian.out.find("s3") == std::string::npos);
  CHECK(selftest("no-such-dessin").code == exit_code::kInput);
  CHECK(selftest("dense").code == exit_code::kOk);
}
