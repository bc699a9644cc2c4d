#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "gp/json_io.hpp"

using namespace gp;

TEST_CASE("text round trip is a fixpoint") {
  std::mt19937_64 rng(157);
  for (int rep = 0; rep < 60; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 4, 8);
    const std::string once = p.serialize();
    GaussParagraph q = GaussParagraph::parse(once);
    CHECK(p == q);
    CHECK(q.serialize() == once);
  }
}

TEST_CASE("serializer emits canonical rotations") {
  GaussParagraph p = GaussParagraph::parse("b a b a\n");
  CHECK(p.serialize() == "a b a b\n");
}

TEST_CASE("partition json round trip") {
  GaussParagraph p = GaussParagraph::parse("a b c a\nb d c d\n");
  for (const WordWisePartition& P : enumerate_partitions(p)) {
    nlohmann::json j = partition_to_json(P);
    CHECK(partition_from_json(j) == P);
    // Letters are sorted within each array.
    for (const auto& w : j["words"]) {
      auto a = w["A"].get<std::vector<Letter>>();
      CHECK(std::is_sorted(a.begin(), a.end()));
    }
  }
  CHECK_THROWS_AS(partition_from_json(nlohmann::json::array()), Error);
}

TEST_CASE("string json round trip") {
  std::mt19937_64 rng(163);
  for (int rep = 0; rep < 30; ++rep) {
    VirtualString alpha = random_virtual_string(rng, 6, 3);
    CHECK(vstring_from_json(vstring_to_json(alpha)) == alpha);
  }

  nlohmann::json j = {{"circles", {{"a+", "b-", "a-", "b+"}}}};
  VirtualString alpha = vstring_from_json(j);
  CHECK(alpha.labels() == std::set<Letter>{"a", "b"});
  CHECK(alpha.tail("a") == EndpointRef{0, 0});

  // One + and one - per label is enforced.
  CHECK_THROWS_AS(
      vstring_from_json(nlohmann::json{{"circles", {{"a+", "a+"}}}}),
      LetterCountError);
  CHECK_THROWS_AS(vstring_from_json(nlohmann::json{{"circles", {{"a"}}}}),
                  Error);
}

TEST_CASE("report json carries all seven conditions") {
  GaussParagraph p = GaussParagraph::parse("a b a b\n");
  WordWisePartition P = enumerate_partitions(p).front();
  ConditionReport report = check_conditions(p, P, enumerate_Dp(p));
  nlohmann::json j = report_to_json(report);
  for (const char* name : kConditionNames) {
    REQUIRE(j.contains(name));
    CHECK(j[name].contains("pass"));
    CHECK(j[name].contains("witness"));
  }
  CHECK(j["i"]["pass"] == false);
  CHECK(j["ii"]["pass"] == true);
  CHECK(j["ii"]["witness"].is_null());
}

TEST_CASE("surface json") {
  GaussParagraph aa = GaussParagraph::parse("a a\n");
  WordWisePartition P = enumerate_partitions(aa).front();
  nlohmann::json j = surface_to_json(genus(construct_from_pair(aa, P)));
  CHECK(j["genus"] == 0);
  CHECK(j["boundary"] == 3);
  CHECK(j["euler"] == -1);
  CHECK(j["planar"] == true);
}
