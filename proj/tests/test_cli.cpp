#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "glat/cli.hpp"
#include "json.hpp"

using glat::run_cli;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "glat");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kWorked = GLAT_WORKED_WORKSPACE;

std::string temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

void check_error(const Run& r, int code, const std::string& error_code) {
  CHECK(r.code == code);
  CHECK(r.out.empty());
  const Json j = Json::parse(r.err);
  CHECK(j.at("error").at("code") == error_code);
  CHECK(j.at("error").at("message").is_string());
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  check_error(run({}), 2, "UsageError");
  check_error(run({"artin"}), 2, "UsageError");
  check_error(run({"artin", "c2_sign"}), 2, "InvalidArgument");
  check_error(run({"artin", "nope", "--workspace", kWorked}), 2, "UnknownName");
  check_error(run({"artin", "c2_sign", "--workspace", "/nonexistent/ws.json"}), 2, "ParseError");
  check_error(run({"check", "--coord-bound", "99"}), 2, "UsageError");
  check_error(run({"check", "--json", "--table"}), 2, "UsageError");
}

TEST_CASE("malformed workspaces are input errors") {
  check_error(run({"artin", "x", "--workspace", temp_file("glat_bad.json", "{ not json")}), 2,
              "ParseError");
  const auto bad_perm = temp_file("glat_bad_perm.json",
                                  R"({"format":1,"groups":{"G":{"points":2,"generators":[[0,0]]}}})");
  const Run r = run({"group-info", "G", "--workspace", bad_perm});
  CHECK(r.code != 0);
  CHECK(Json::parse(r.err).contains("error"));
}

TEST_CASE("group-info") {
  const Run r = run({"group-info", "S3", "--workspace", kWorked});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("format") == 1);
  CHECK(j.at("info").at("order") == 6);
  CHECK(j.at("info").at("classes").size() == 3);
  CHECK(j.at("info").at("cyclic_subgroup_reps").size() == 3);

  const Json c1 = Json::parse(run({"group-info", "C1", "--workspace", kWorked}).out);
  CHECK(c1.at("info").at("order") == 1);
  CHECK(c1.at("info").at("classes").size() == 1);
  CHECK(c1.at("info").at("cyclic_subgroup_reps").size() == 1);
}

TEST_CASE("artin and ono") {
  Run r = run({"artin", "c2_sign", "--workspace", kWorked});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("artin").at("r") == 1);
  CHECK(j.at("artin").at("m") == Json::parse("[1,0]"));
  CHECK(j.at("artin").at("n") == Json::parse("[0,1]"));

  r = run({"ono", "c2_sign", "--workspace", kWorked});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j.at("ono").at("index") == 2);
  CHECK(j.at("ono").at("embedding").at("matrix").at("entries") == Json::parse("[[1,-1],[1,1]]"));

  r = run({"ono", "c2_sign", "--workspace", kWorked, "--table"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("ono.index: 2") != std::string::npos);
}

TEST_CASE("twist") {
  for (const std::string x : {"trivial_c2", "swap_c2"}) {
    const Run r = run({"twist", "regular_over_C2_by_C2", x, "--workspace", kWorked});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("permutation").at("verdict") == "YES");
  }
  const Run bad = run({"twist", "s3_standard", "swap_c2", "--workspace", kWorked});
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.err).at("error").at("code") == "GroupMismatch");
}

TEST_CASE("reduce") {
  Run r = run({"reduce", "hf_c2_sign", "--workspace", kWorked});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("report").at("m") == 2);
  CHECK(j.at("report").at("A").at("invariant_factors") == Json::parse("[2,4]"));
  CHECK(j.at("report").at("kernel_order_of_F") == 8);
  CHECK(j.at("report").at("narrative").size() == 5);

  r = run({"reduce", "gamma_c2_sign", "--workspace", kWorked, "--narrative-only"});
  REQUIRE(r.code == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 5);
  CHECK(r.out.rfind("step 0:", 0) == 0);
}

TEST_CASE("check") {
  Run r = run({"check"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("all_passed") == true);
  r = run({"check", "--workspace", kWorked, "--seedless"});
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j.at("all_passed") == true);
  CHECK(j.at("lattices").get<int>() > 18);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", "--workspace", kWorked},
           {"reduce", "hf_c2_sign", "--workspace", kWorked},
           {"ono", "s3_standard", "--workspace", kWorked, "--table"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
