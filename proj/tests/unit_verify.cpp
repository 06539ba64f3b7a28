#include <doctest.h>

#include "polycx/io.hpp"
#include "polycx/verify.hpp"

using namespace polycx;

namespace {

const Check* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("suite names") {
  for (Suite s : {Suite::cubes, Suite::sageev, Suite::crossing, Suite::curvature, Suite::all})
    CHECK(suite_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(suite_from_string("everything"), Error);
}

TEST_CASE("status names") {
  for (Status s : {Status::pass, Status::fail, Status::skipped_out_of_assumption, Status::no_qualifying_instances})
    CHECK(status_from_string(to_string(s)) == s);
  CHECK(to_string(Status::skipped_out_of_assumption) == "skipped-out-of-assumption");
}

TEST_CASE("engine self-consistency") {
  for (const char* text : {"0,0:7", "0,1:4", "1,1:", "0,0:2+1"}) {
    CAPTURE(text);
    SurfaceContext ctx(parse_signature(text));
    const auto r = verify_engine(ctx);
    CHECK(r.passed());
    CHECK(r.count(Status::fail) == 0);
  }
}

TEST_CASE("full verification passes on regular surfaces") {
  for (const char* text : {"0,0:6", "0,1:3", "0,1:4"}) {
    CAPTURE(text);
    auto en = enumerate_full(parse_signature(text));
    const auto r = verify(en.complex, en, Suite::all, Execution::parallel);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.counterexample);
      CHECK(c.status != Status::fail);
      CHECK(c.status != Status::skipped_out_of_assumption);
    }
  }
}

TEST_CASE("exceptional surfaces report skipped checks") {
  auto en = enumerate_full(parse_signature("0,3:"));
  const auto r = verify(en.complex, en, Suite::all, Execution::parallel);
  CHECK(r.passed());
  CHECK(r.count(Status::skipped_out_of_assumption) > 0);
  CHECK(r.count(Status::fail) == 0);
}

TEST_CASE("a corrupted edge orientation is caught with a counterexample") {
  auto en = enumerate_full(parse_signature("0,0:6"));
  auto doc = complex_to_json(en.complex);
  auto& edge = doc["edges"][4];
  edge["orientation"] = edge["orientation"] == edge["v"] ? edge["w"] : edge["v"];
  doc.erase("content_digest");
  doc["content_digest"] = sha256_hex(doc.dump());
  const auto loaded = complex_from_json(doc);
  CHECK_FALSE(compare_complexes(loaded, en.complex).empty());
  const auto r = verify(loaded, en, Suite::cubes, Execution::parallel);
  CHECK_FALSE(r.passed());
  const auto* c = find(r, "document matches enumeration");
  REQUIRE(c != nullptr);
  CHECK(c->status == Status::fail);
  CHECK_FALSE(c->counterexample.empty());
}

TEST_CASE("a corrupted arc label is caught") {
  auto en = enumerate_full(parse_signature("0,0:6"));
  auto doc = complex_to_json(en.complex);
  doc["edges"][0]["arc"] = doc["edges"][0]["arc"].get<int>() == 0 ? 1 : 0;
  doc.erase("content_digest");
  doc["content_digest"] = sha256_hex(doc.dump());
  bool caught = false;
  try {
    const auto loaded = complex_from_json(doc);
    caught = !verify(loaded, en, Suite::cubes, Execution::parallel).passed();
  } catch (const IoError&) {
    caught = true;
  }
  CHECK(caught);
}

TEST_CASE("ball verification") {
  auto en = enumerate_ball(parse_signature("0,0:2+1"), 6);
  const auto r = verify(en.complex, en, Suite::all, Execution::parallel);
  CHECK(r.passed());
  const auto* pentagon = find(r, "pentagon detours exist");
  REQUIRE(pentagon != nullptr);
  CHECK(pentagon->status == Status::pass);
  CHECK(pentagon->instances >= 1);
}
