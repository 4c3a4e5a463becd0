#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

#include "cli.hpp"

using oddcox::cli::execute;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "oddcox_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const std::string kStar33 = R"({"rank":3,"edges":[{"u":1,"v":2,"m":3},{"u":1,"v":3,"m":3}]})";
const std::string kPath33 = R"({"rank":3,"edges":[{"u":1,"v":2,"m":3},{"u":2,"v":3,"m":3}]})";
const std::string kStar35 = R"({"rank":3,"edges":[{"u":1,"v":2,"m":3},{"u":1,"v":3,"m":5}]})";
const std::string kStar333 =
    R"({"rank":4,"edges":[{"u":1,"v":2,"m":3},{"u":1,"v":3,"m":3},{"u":1,"v":4,"m":3}]})";

bool has_line(const oddcox::cli::CommandResult& r, const std::string& line) {
  return std::find(r.lines.begin(), r.lines.end(), line) != r.lines.end();
}

}  // namespace

TEST_CASE("iso, reduce and out") {
  const std::string star = write_temp("star33.json", kStar33);
  const std::string path = write_temp("path33.json", kPath33);
  const std::string s35 = write_temp("star35.json", kStar35);

  auto iso = execute({"iso", star, path});
  CHECK(iso.exit_code == 0);
  CHECK(iso.lines == std::vector<std::string>{"isomorphic: true"});
  CHECK(has_line(execute({"iso", star, s35}), "isomorphic: false"));

  auto red = execute({"reduce", path, "1 2 1 2"});
  CHECK(red.exit_code == 0);
  CHECK(red.lines == std::vector<std::string>{"word: 2 1", "length: 2"});

  CHECK(has_line(execute({"equal", path, "1 2 1", "2 1 2"}), "equal: true"));
  CHECK(has_line(execute({"multiply", s35, "1", "1"}), "word: e"));

  auto out = execute({"out", write_temp("l5.json", kStar333)});
  CHECK(out.exit_code == 0);
  CHECK(has_line(out, "out_order: 24"));
  CHECK(has_line(execute({"out", s35}), "out_order: 4"));
}

TEST_CASE("classification and canonical star") {
  const std::string path = write_temp("path33.json", kPath33);
  auto c = execute({"classify", path});
  CHECK(has_line(c, "in_tw: true"));

  auto canon = execute({"canonical-star", path});
  REQUIRE(canon.exit_code == 0);
  CHECK(has_line(canon, "t: 3 3"));
  std::string json;
  for (const auto& line : canon.lines) {
    if (line.rfind("system: ", 0) == 0) json = line.substr(8);
  }
  const std::string round = write_temp("canon.json", json);
  CHECK(has_line(execute({"iso", round, path}), "isomorphic: true"));
  CHECK(has_line(execute({"canonical-star", round}), "system: " + json));
}

TEST_CASE("ball and search") {
  const std::string star = write_temp("star33.json", kStar33);
  auto ball = execute({"--radius", "2", "ball", star});
  CHECK(has_line(ball, "size: 10"));
  auto cent = execute({"--radius", "4", "search", star, "centralizer", "1"});
  CHECK(has_line(cent, "count: 2"));
}

TEST_CASE("ln and twisted") {
  CHECK(execute({"ln", "pi", "4", "1 2 1"}).lines == std::vector<std::string>{"permutation: (1 3)"});
  CHECK(execute({"ln", "rank", "4"}).lines == std::vector<std::string>{"index: 24", "free_rank: 5"});
  CHECK(has_line(execute({"ln", "witness", "4"}), "image: (1 3 4)"));
  CHECK(execute({"twisted", "--cyclic", "3", "--multiplier", "2"}).lines == std::vector<std::string>{"classes: 1"});
  CHECK(has_line(execute({"twisted", "--degree", "3", "--gens", "(1 2)", "(2 3)", "--images", "(1 2)", "(2 3)"}),
                 "classes: 3"));
}

TEST_CASE("json format") {
  const std::string path = write_temp("path33.json", kPath33);
  auto r = execute({"--format", "json", "reduce", path, "2 1 2"});
  CHECK(r.exit_code == 0);
  CHECK(r.lines == std::vector<std::string>{R"({"word":"1 2 1","length":"3"})"});
}

TEST_CASE("exit codes") {
  const std::string path = write_temp("path33.json", kPath33);
  auto budget = execute({"--budget", "2", "reduce", path, "1 2 1 2 1 2"});
  CHECK(budget.exit_code == 1);
  REQUIRE_FALSE(budget.lines.empty());
  CHECK(budget.lines.front().rfind("error: budget", 0) == 0);

  CHECK(execute({}).exit_code == 2);
  CHECK(execute({"no-such-command"}).exit_code == 2);
  CHECK(execute({"reduce", path}).exit_code == 2);
  CHECK(execute({"--help"}).exit_code == 0);

  auto missing = execute({"validate", "/nonexistent/file.json"});
  CHECK(missing.exit_code == 1);
  CHECK(missing.lines.front().rfind("error: parse", 0) == 0);

  auto even = execute({"validate", write_temp("even.json", R"({"rank":2,"edges":[{"u":1,"v":2,"m":4}]})")});
  CHECK(even.exit_code == 1);
  CHECK(even.lines.front().rfind("error: even-or-small-exponent", 0) == 0);
}
