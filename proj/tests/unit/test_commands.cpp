#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "gammakit/commands.hpp"
#include "gammakit/instance_io.hpp"
#include "oracles.hpp"

using namespace gammakit;
using namespace gammakit::cli;

namespace {

  std::string data(std::string const& name) {
    return std::string(GAMMAKIT_TEST_DATA) + "/" + name;
  }

  std::string golden(std::string const& name) {
    return std::string(GAMMAKIT_TEST_GOLDEN) + "/" + name;
  }

  std::string read_file(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::vector<std::string> lines(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream       in(text);
    for (std::string line; std::getline(in, line);) {
      out.push_back(line);
    }
    return out;
  }

  struct TempFile {
    std::string path;
    explicit TempFile(std::string const& name)
        : path((std::filesystem::temp_directory_path()
                / ("gammakit_test_" + std::to_string(::getpid()) + "_" + name))
                   .string()) {}
    ~TempFile() {
      std::remove(path.c_str());
    }
  };

}  // namespace

TEST_CASE("validate exit codes") {
  std::ostringstream out, err;
  CHECK(cmd_validate(data("sl2.json"), out, err) == ok);
  CHECK(out.str() == "valid\n");

  out.str("");
  CHECK(cmd_validate(data("nonassoc.json"), out, err) == invalid);
  CHECK(out.str() == "invalid\n");
  auto const issues = lines(err.str());
  CHECK(issues.size() == 8);
  CHECK(issues.front().find("NotAssociative") == 0);
  // The labelled witness (0, γ, 0, γ, 0).
  CHECK(issues.front().find("(0,γ,0,γ,0)") != std::string::npos);

  err.str("");
  CHECK(cmd_validate(data("truncated.json"), out, err) == usage);
  CHECK(err.str().find("malformed JSON") != std::string::npos);
  CHECK(cmd_validate(data("no_such_file.json"), out, err) == usage);
}

TEST_CASE("analyze --json matches the golden reports") {
  for (std::string name : {"rz", "null"}) {
    CAPTURE(name);
    std::ostringstream out, err;
    REQUIRE(cmd_analyze(data(std::string(name) + ".json"), true, out, err) == ok);
    auto const doc = ordered_json::parse(out.str());
    CHECK(doc == ordered_json::parse(read_file(golden(std::string("analyze_") + name + ".json"))));
    // Re-serialising the parsed report reproduces it byte for byte.
    CHECK(doc.dump(2) + "\n" == out.str());
  }
}

TEST_CASE("analyze text report") {
  std::ostringstream out, err;
  REQUIRE(cmd_analyze(data("sl2.json"), false, out, err) == ok);
  auto const text = out.str();
  CHECK(text.find("elements: 2, gammas: 1") == 0);
  CHECK(text.find("intra-regular: true") != std::string::npos);
  CHECK(cmd_analyze(data("nonassoc.json"), false, out, err) == invalid);
}

TEST_CASE("check") {
  std::ostringstream out, err;
  CheckOptions       options;
  options.theorem = Theorem::intra_regular;
  CHECK(cmd_check(data("null.json"), options, out, err) == ok);
  CHECK(out.str().find("all seven conditions agree (false)") != std::string::npos);
  CHECK(out.str().find("witness:") != std::string::npos);

  out.str("");
  options.json = true;
  options.theorem = Theorem::left_regular_duo;
  CHECK(cmd_check(data("rz.json"), options, out, err) == ok);
  auto const doc = ordered_json::parse(out.str());
  CHECK(doc["theorem"] == 6);
  CHECK(doc["all_equal"] == true);
  CHECK(doc["conditions"].size() == 7);
  CHECK(doc["conditions"][0]["witness"]["kind"] == "not-duo");
  CHECK(doc["conditions"][0]["witness"]["element"] == "a");

  out.str("");
  options.theorem = Theorem::right_regular_duo;
  CHECK(cmd_check(data("rz.json"), options, out, err) == ok);
  CHECK(ordered_json::parse(out.str())["conditions"][3]["witness"].is_null());

  // The left-and-right reading of "simple" makes conditions (5) and (6)
  // disagree with the others on the left-zero semigroup.
  options.json       = false;
  options.theorem    = Theorem::intra_regular;
  options.simplicity = Simplicity::left_and_right;
  out.str("");
  CHECK(cmd_check(data("lz.json"), options, out, err) == equivalence_violation);
  CHECK(out.str().find("CONDITIONS DISAGREE") != std::string::npos);

  options.simplicity = Simplicity::two_sided;
  options.mode       = DecompositionMode::witness;
  CHECK(cmd_check(data("lz.json"), options, out, err) == ok);
  CHECK(cmd_check(data("truncated.json"), options, out, err) == usage);
}

TEST_CASE("decompose writes a quotient that validates") {
  for (std::string name : {"sl2g2", "rz", "null", "triv"}) {
    CAPTURE(name);
    TempFile           quotient(std::string(name) + "_quotient.json");
    std::ostringstream out, err;
    REQUIRE(cmd_decompose(data(std::string(name) + ".json"), quotient.path, out, err)
            == ok);
    CHECK(out.str().find("quotient is idempotent and commutative: true")
          != std::string::npos);
    std::ostringstream vout;
    CHECK(cmd_validate(quotient.path, vout, err) == ok);
  }
  std::ostringstream out, err;
  REQUIRE(cmd_decompose(data("rz.json"), std::nullopt, out, err) == ok);
  CHECK(out.str().find("N-classes: 1") == 0);
  CHECK(out.str().find("left-simple: false  right-simple: true") != std::string::npos);
}

TEST_CASE("enumerate") {
  std::ostringstream out, err;
  EnumerateOptions   options;
  options.n = 2;
  options.k = 1;
  CHECK(cmd_enumerate(options, out, err) == ok);
  auto const records = lines(out.str());
  CHECK(records.size() == 8);
  for (auto const& line : records) {
    auto const doc = ordered_json::parse(line);
    CHECK(validate(instance_from_json(doc["instance"])).ok());
    CHECK(doc["flags"]["theorem3-all-equal"] == true);
    CHECK(doc["canonical_key"].is_string());
  }
  CHECK(err.str().find("isomorphism classes: 5") != std::string::npos);

  SUBCASE("filter") {
    // Count intra-regular (2,1) tables independently of the library.
    std::size_t expected = 0;
    oracle::tables_by_brute_force(2, 1, [&](GammaSemigroup const& s) {
      expected += oracle::intra_regular_by_search(s);
    });
    std::ostringstream fout, ferr;
    options.filter = "intra-regular";
    CHECK(cmd_enumerate(options, fout, ferr) == ok);
    CHECK(lines(fout.str()).size() == expected);
    CHECK(expected == 6);

    options.filter = "nonsense";
    CHECK(cmd_enumerate(options, fout, ferr) == usage);
  }

  SUBCASE("sample mode is deterministic") {
    options.n      = 4;
    options.k      = 2;
    options.sample = 20;
    options.seed   = 77;
    std::ostringstream a, b, e;
    CHECK(cmd_enumerate(options, a, e) == ok);
    CHECK(cmd_enumerate(options, b, e) == ok);
    CHECK(a.str() == b.str());
    CHECK(lines(a.str()).size() == 20);
  }

  SUBCASE("records to a file") {
    TempFile           file("records.jsonl");
    std::ostringstream rout, rerr;
    options.out_path = file.path;
    CHECK(cmd_enumerate(options, rout, rerr) == ok);
    CHECK(lines(read_file(file.path)).size() == 8);
    CHECK(rout.str().find("enumerated instances: 8") == 0);
  }

  SUBCASE("size limits") {
    std::ostringstream sout, serr;
    options.n = 4;
    CHECK(cmd_enumerate(options, sout, serr) == usage);
    options.n = 1;
    CHECK(cmd_enumerate(options, sout, serr) == ok);
    CHECK(lines(sout.str()).size() == 1);
  }
}
