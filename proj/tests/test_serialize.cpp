#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "fincat/generators.hpp"
#include "fincat/serialize.hpp"
#include "test_support.hpp"

using namespace fincat;

namespace {

std::string parse_message(const std::string& text) {
  try {
    category_from_json(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  FAIL("expected a throw");
  return "";
}

}  // namespace

TEST_CASE("round-trip preserves tables and names", "[serialize]") {
  for (const CorpusSpec& spec : default_corpus()) {
    FinCategory c = build_corpus_member(spec);
    FinCategory back = category_from_json(category_to_json(c));
    INFO(spec.label());
    CHECK(back == c);
    CHECK(identical_tables(back, c));
  }
}

TEST_CASE("serialization is byte-stable", "[serialize]") {
  for (const CorpusSpec& spec : default_corpus()) {
    const std::string once = category_to_json(build_corpus_member(spec));
    INFO(spec.label());
    CHECK(category_to_json(category_from_json(once)) == once);
  }
}

TEST_CASE("file save and load round-trip", "[serialize]") {
  const std::string path = "/tmp/fincat_roundtrip_test.json";
  FinCategory c = gen_m3();
  save_category(c, path);
  FinCategory back = load_category(path);
  CHECK(back == c);
  CHECK(back.object_name(0) == "bot");
  std::remove(path.c_str());

  REQUIRE_THROWS_AS(load_category("/tmp/no_such_dir_fincat/x.json"), DocumentError);
}

TEST_CASE("parse errors carry the position", "[serialize]") {
  const std::string message = parse_message("{ \"format\": ");
  CHECK(message.find("line") != std::string::npos);
  CHECK(message.find("column") != std::string::npos);
}

TEST_CASE("malformed documents are rejected with the reason", "[serialize]") {
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(category_to_json(gen_chain(2)));

  auto rejected = [](nlohmann::ordered_json broken, const std::string& needle) {
    const std::string message = parse_message(broken.dump());
    INFO(message);
    CHECK(message.find(needle) != std::string::npos);
  };

  {
    auto broken = doc;
    broken["format"] = "fincat/2";
    rejected(broken, "format tag");
  }
  {
    auto broken = doc;
    broken.erase("identities");
    rejected(broken, "identities");
  }
  {
    auto broken = doc;
    broken["identites"] = broken["identities"];
    rejected(broken, "unknown field");
  }
  {
    auto broken = doc;
    broken["morphisms"][1]["id"] = 0;
    rejected(broken, "duplicate morphism id");
  }
  {
    auto broken = doc;
    broken["morphisms"][0]["src"] = 7;
    rejected(broken, "out of range");
  }
  {
    auto broken = doc;
    broken["objects"]["names"] = {"only-one"};
    rejected(broken, "one name per object");
  }
  {
    auto broken = doc;
    broken["composition"][0] = {0, 1};
    rejected(broken, "triples");
  }
}

TEST_CASE("missing composition triple names the pair", "[serialize]") {
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(category_to_json(gen_chain(2)));
  auto& triples = doc["composition"];
  const auto dropped = triples.back();
  triples.erase(triples.size() - 1);

  try {
    category_from_json(doc.dump());
    FAIL("expected a throw");
  } catch (const ValidationError& e) {
    const std::string message = e.what();
    CHECK(message.find("composition-total") != std::string::npos);
    REQUIRE(e.report.failures.size() == 1);
    CHECK(e.report.failures[0].law == "composition-total");
    CHECK(e.report.failures[0].where ==
          std::vector<Mor>{dropped[0].get<Mor>(), dropped[1].get<Mor>()});
  }
}

TEST_CASE("law violations load as validation errors", "[serialize]") {
  FinCategory broken = testsupport::rebuild_with_composite(testsupport::cyclic_monoid(3), 1, 1, 0);
  const std::string text = category_to_json(broken);
  try {
    category_from_json(text);
    FAIL("expected a throw");
  } catch (const ValidationError& e) {
    CHECK_FALSE(e.report.ok);
    CHECK_FALSE(e.report.failures.empty());
  }
}
