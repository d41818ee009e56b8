#include <doctest.h>

#include <filesystem>

#include "covgpd/error.hpp"
#include "covgpd/fixtures.hpp"
#include "covgpd/io.hpp"

using namespace covgpd;

namespace {

const std::filesystem::path kFixtures = FIXTURE_DIR;

std::string error_of(const Json& doc) {
  try {
    groupoid_from_json(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("group table shorthand") {
  const FiniteGroupoid g = groupoid_from_json(read_json_file(kFixtures / "s3.json"));
  CHECK(g.num_objects() == 1);
  CHECK(g.num_arrows() == 6);
  CHECK(validate(g).ok());
  CHECK(g.find_arrow("(123)").has_value());
  CHECK(find_isomorphism(vertex_group(g, ObjId(0)).group, FiniteGroup::symmetric(3)).has_value());
}

TEST_CASE("full form") {
  auto g = share(groupoid_from_json(read_json_file(kFixtures / "i2.json")));
  CHECK(validate(*g).ok());
  CHECK(g->num_arrows() == 4);
  bool iso = false;
  for (const auto& m : enumerate_morphisms(g, fixtures::i2())) iso = iso || is_isomorphism(m);
  CHECK(iso);
}

TEST_CASE("errors carry JSON paths") {
  CHECK(error_of(Json::array()) == "$: expected an object");
  CHECK(error_of(Json{{"objects", {"a"}}}).find("$: missing \"arrows\"") != std::string::npos);
  const Json bad_arrow = Json::parse(R"({"objects": ["a"], "arrows": [{"name": "1", "dom": "a", "cod": "b"}],
                                         "compose": []})");
  CHECK(error_of(bad_arrow) == "$.arrows[0].cod: unknown object b");
  const Json bad_table = Json::parse(R"({"group_table": [[0, 1], [1]]})");
  CHECK(error_of(bad_table) == "$.group_table[1]: expected 2 entries");
  const Json dup = Json::parse(R"({"objects": ["a", "a"], "arrows": [], "compose": []})");
  CHECK(error_of(dup) == "$.objects[1]: duplicate name a");
  const Json conflict = Json::parse(R"({"objects": ["a"], "arrows": [{"name": "1", "dom": "a", "cod": "a"}],
                                        "compose": [["1", "1", "1"], ["1", "1", "2"]]})");
  CHECK(error_of(conflict) == "$.compose[1][2]: unknown arrow 2");
  CHECK_THROWS_AS(read_json_file(kFixtures / "missing.json"), InputError);
}

TEST_CASE("stated inverses are checked") {
  Json doc = read_json_file(kFixtures / "i2.json");
  doc["inverse"] = {{"f", "g"}};
  CHECK_NOTHROW(groupoid_from_json(doc));
  doc["inverse"] = {{"f", "f"}};
  CHECK(error_of(doc) == "$.inverse.f: stated inverse disagrees with the composition table");
}

TEST_CASE("groupoid round trip") {
  for (auto& [name, g] : fixtures::bases()) {
    const Json doc = groupoid_to_json(*g);
    const FiniteGroupoid back = groupoid_from_json(doc);
    CHECK(back.same_structure(*g));
    CHECK(render(groupoid_to_json(back)) == render(doc));
  }
  const Covering u = universal_cover(fixtures::s3(), ObjId(0));
  CHECK(groupoid_from_json(groupoid_to_json(u.total())).same_structure(u.total()));
}

TEST_CASE("morphism documents") {
  const MorphismDoc id = morphism_from_json(read_json_file(kFixtures / "id_c4.json"), kFixtures);
  CHECK(is_functorial(id.morphism));
  CHECK(is_covering(id.morphism).covering.has_value());
  const CoverCheck collapse = covering_from_json(read_json_file(kFixtures / "collapse_i2.json"), kFixtures);
  CHECK_FALSE(collapse.covering.has_value());

  Json broken = read_json_file(kFixtures / "id_c4.json");
  broken["arrows"]["r"] = "r2";
  CHECK_THROWS_AS(morphism_from_json(broken, kFixtures), InputError);
  broken["arrows"].erase("r");
  CHECK_THROWS_WITH(morphism_from_json(broken, kFixtures), "$.arrows: no image for arrow r");

  const Covering u = universal_cover(fixtures::c4(), ObjId(0));
  const CoverCheck back = covering_from_json(covering_to_json(u), kFixtures);
  REQUIRE(back.covering.has_value());
  CHECK(back.covering->marked() == u.marked());
  CHECK(back.covering->morphism().same_maps(u.morphism()));
}

TEST_CASE("presheaf and action documents") {
  const Presheaf f = presheaf_from_json(read_json_file(kFixtures / "s3_points.json"), kFixtures);
  CHECK(f.sizes == std::vector<std::size_t>{3});
  CHECK(presheaf_problems(f).empty());
  const Presheaf g = presheaf_from_json(presheaf_to_json(f), kFixtures);
  CHECK(g.maps == f.maps);
  CHECK(g.names == f.names);

  const GroupAction a = action_from_json(read_json_file(kFixtures / "swap_i2.json"), kFixtures);
  CHECK(action_problems(a).empty());
  CHECK(a.act.size() == 2);
}
