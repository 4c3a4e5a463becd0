#include <doctest.h>

#include <string>

#include "oddcox/error.hpp"
#include "oddcox/system_io.hpp"

using namespace oddcox;

namespace {

struct Failure {
  ErrorKind kind = ErrorKind::Internal;
  std::string message;
};

Failure failure_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return {e.kind(), e.what()};
  }
  FAIL("expected an error");
  return {};
}

}  // namespace

TEST_CASE("parse a system") {
  const CoxeterSystem sys = parse_system_json(R"({"rank": 3, "edges": [{"u": 1, "v": 2, "m": 3}, {"u": 3, "v": 1, "m": 5}]})");
  CHECK(sys.rank() == 3);
  CHECK(sys.m(1, 2).value() == 3);
  CHECK(sys.m(1, 3).value() == 5);
  CHECK_FALSE(sys.m(2, 3).finite());

  const CoxeterSystem lone = parse_system_json(R"({"rank": 1})");
  CHECK(lone.rank() == 1);
}

TEST_CASE("round trip") {
  for (const CoxeterSystem& sys : {star_system({3, 5, 7}), path_system({3, 9, 3}), star_system({3})}) {
    CHECK(parse_system_json(system_to_json(sys)) == sys);
  }
}

TEST_CASE("bad systems name the line and field") {
  const std::string duplicate =
      "{\n"
      "  \"rank\": 3,\n"
      "  \"edges\": [\n"
      "    {\"u\": 1, \"v\": 2, \"m\": 3},\n"
      "    {\"u\": 2, \"v\": 1, \"m\": 5}\n"
      "  ]\n"
      "}\n";
  const Failure dup = failure_of([&] { parse_system_json(duplicate); });
  CHECK(dup.kind == ErrorKind::Parse);
  CHECK(dup.message.find("line 5") != std::string::npos);
  CHECK(dup.message.find("edges[1]") != std::string::npos);
  CHECK(dup.message.find("duplicate") != std::string::npos);

  const std::string loop =
      "{\"rank\": 2,\n"
      " \"edges\": [{\"u\": 2, \"v\": 2, \"m\": 3}]}";
  const Failure self = failure_of([&] { parse_system_json(loop); });
  CHECK(self.kind == ErrorKind::Parse);
  CHECK(self.message.find("line 2") != std::string::npos);
  CHECK(self.message.find("self-loop") != std::string::npos);

  const std::string even =
      "{\"rank\": 2,\n"
      " \"edges\": [\n"
      "   {\"u\": 1, \"v\": 2, \"m\": 4}]}";
  const Failure ev = failure_of([&] { parse_system_json(even); });
  CHECK(ev.kind == ErrorKind::EvenOrSmallExponent);
  CHECK(ev.message.find("line 3") != std::string::npos);
  CHECK(ev.message.find("edges[0].m") != std::string::npos);

  CHECK(failure_of([] { parse_system_json(R"({"rank": 2, "edges": [{"u": 1, "v": 3, "m": 3}]})"); }).kind ==
        ErrorKind::Parse);
  CHECK(failure_of([] { parse_system_json(R"({"edges": []})"); }).kind == ErrorKind::Parse);
  CHECK(failure_of([] { parse_system_json("{\"rank\": 2,\n \"edges\": [}"); }).message.find("line 2") !=
        std::string::npos);
  CHECK(failure_of([] { load_system("/nonexistent/system.json"); }).kind == ErrorKind::Parse);
}

TEST_CASE("endomorphism json") {
  const Endomorphism e = parse_endomorphism_json(R"({"images": [[1], [1, 2, 1], []]})");
  REQUIRE(e.images.size() == 3);
  CHECK(e.image(2) == Word{1, 2, 1});
  CHECK(e.image(3).empty());
  CHECK(parse_endomorphism_json(endomorphism_to_json(e)) == e);

  CHECK(failure_of([] { parse_endomorphism_json(R"({"images": [[0]]})"); }).kind == ErrorKind::Parse);
  CHECK(failure_of([] { parse_endomorphism_json(R"({"maps": []})"); }).kind == ErrorKind::Parse);
}
