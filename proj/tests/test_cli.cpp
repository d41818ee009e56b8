#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "covgpd/classify.hpp"
#include "covgpd/cli.hpp"
#include "covgpd/fixtures.hpp"
#include "covgpd/io.hpp"
#include "covgpd/topos.hpp"

using namespace covgpd;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "covgpd_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const Json& doc) {
  const fs::path path = scratch() / name;
  std::ofstream(path, std::ios::binary) << render(doc);
  return path.string();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = 0; (pos = text.find(needle, pos)) != std::string::npos; ++pos) ++n;
  return n;
}

}  // namespace

TEST_CASE("check-cover on the identity") {
  const Run r = cli({"check-cover", fixture("id_c4.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "{\n  \"covering\": true,\n  \"fold\": 1\n}\n");
}

TEST_CASE("check-cover on a collapse") {
  const Run r = cli({"check-cover", fixture("collapse_i2.json")});
  CHECK(r.code == 1);
  const Json doc = r.json();
  CHECK(doc["covering"] == false);
  const Json& d = doc["defects"][0];
  CHECK(d["object"] == "x");
  CHECK(d["total_star"] == 2);
  CHECK(d["base_star"] == 1);
}

TEST_CASE("lattice as DOT and JSON") {
  const Run dot = cli({"lattice", fixture("s3.json"), "--dot"});
  CHECK(dot.code == 0);
  CHECK(count(dot.out, "[label=\"fold=") == 6);
  CHECK(count(dot.out, "regular=-") == 3);
  CHECK(count(dot.out, " -> ") == 8);
  CHECK(dot.out.find("rankdir=BT;") != std::string::npos);
  const Run json = cli({"lattice", fixture("s3.json")});
  CHECK(json.code == 0);
  CHECK(json.json()["nodes"].size() == 6);
  CHECK(json.json()["findings"]["r_conjugate"] == true);
  const Run chain = cli({"lattice", fixture("c4.json"), "--dot"});
  CHECK(count(chain.out, " -> ") == 2);
}

TEST_CASE("exit codes for bad input") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"no-such-command"}).code == 2);
  CHECK(cli({"fold"}).code == 2);
  CHECK(cli({"fold", fixture("missing.json")}).code == 2);
  CHECK(cli({"fold", fixture("c4.json")}).code == 2);  // a groupoid is not a morphism document
  CHECK(cli({"star", fixture("c4.json"), "--object", "nowhere"}).code == 2);
  const std::string junk = (scratch() / "junk.json").string();
  std::ofstream(junk) << "{ not json";
  const Run r = cli({"validate", junk});
  CHECK(r.code == 2);
  CHECK(r.err.find("junk.json") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"-h"}).code == 2);
}

TEST_CASE("validate reports law violations") {
  CHECK(cli({"validate", fixture("i2.json")}).code == 0);
  const std::string bad = write("bad.json", Json::parse(R"({"objects": ["a"],
      "arrows": [{"name": "1", "dom": "a", "cod": "a"}, {"name": "s", "dom": "a", "cod": "a"}],
      "compose": [["1", "1", "1"], ["1", "s", "s"], ["s", "1", "s"], ["s", "s", "s"]]})"));
  const Run r = cli({"validate", bad});
  CHECK(r.code == 1);
  CHECK(r.json()["valid"] == false);
  CHECK(cli({"star", bad}).code == 2);
}

TEST_CASE("basic groupoid queries") {
  const Run star = cli({"star", fixture("i2.json"), "--object", "y"});
  CHECK(star.json()["arrows"] == Json::parse(R"(["1_y", "f"])"));
  CHECK(cli({"components", fixture("i2.json")}).json()["count"] == 1);
  const Json vg = cli({"vertex-group", fixture("s3.json")}).json();
  CHECK(vg["order"] == 6);
  CHECK(vg["abelian"] == false);
}

TEST_CASE("covers built from subgroups") {
  const fs::path dir = scratch();
  const std::string half = (dir / "half.json").string();
  const std::string u4 = (dir / "u4.json").string();
  const std::string t12 = (dir / "t12.json").string();
  REQUIRE(cli({"build-cover", fixture("c4.json"), "--subgroup", "r2", "--out", half}).code == 0);
  REQUIRE(cli({"universal", fixture("c4.json"), "--out", u4}).code == 0);
  REQUIRE(cli({"build-cover", fixture("s3.json"), "--subgroup", "(12)", "--out", t12}).code == 0);
  CHECK(cli({"build-cover", fixture("s3.json"), "--subgroup", "nope"}).code == 2);

  CHECK(cli({"fold", half}).json()["fold"] == 2);
  CHECK(cli({"fiber", half}).json()["groupoid"]["objects"].size() == 2);
  const Json lift = cli({"lift-arrow", u4, "--arrow", "r", "--at", "[e]"}).json();
  CHECK(lift["dom"] == "[r]");
  CHECK(cli({"lift-morphism", half, fixture("c2_in_c4.json")}).code == 0);
  const Run no = cli({"lift-morphism", u4, fixture("c2_in_c4.json")});
  CHECK(no.code == 1);
  CHECK(no.json()["criterion"] == false);
  const Json mono = cli({"monodromy", t12}).json();
  CHECK(mono["transitive"] == true);
  CHECK(mono["stabilizers"]["[e]"] == Json::parse(R"j(["e", "(12)"])j"));
  CHECK(cli({"cov-group", u4}).json()["order"] == 4);
  CHECK(cli({"cov-group", t12}).json()["order"] == 1);
  CHECK(cli({"regular", half}).code == 0);
  CHECK(cli({"regular", t12}).code == 1);
  const Json iso = cli({"normalizer-iso", half}).json();
  CHECK(iso["quotient_order"] == 2);
  CHECK(cli({"equiv", half, half, "--pointed"}).code == 0);
  CHECK(cli({"equiv", half, u4}).code == 1);
  CHECK(cli({"equiv", u4, u4, "--free-base"}).code == 0);
  const Run pb = cli({"pullback", u4, u4});
  CHECK(pb.code == 0);
  CHECK(pb.json()["source"]["objects"].size() == 16);
  const std::string e = (dir / "expo.json").string();
  CHECK(cli({"expo", half, half, "--out", e}).code == 0);
  CHECK(cli({"fold", e}).json()["fold"] == 4);
  CHECK(cli({"expo", u4, u4, "--limit", "10"}).code == 2);
  CHECK(cli({"adjunction", half, half, fixture("id_c4.json")}).json()["bijective"] == true);
  CHECK(cli({"subobjects", half}).json()["count"] == 2);
}

TEST_CASE("emitted groupoids re-parse") {
  const Json cover = cli({"universal", fixture("s3.json")}).json();
  const FiniteGroupoid total = groupoid_from_json(cover["source"]);
  auto base = share(groupoid_from_json(read_json_file(kFixtures / "s3.json")));
  CHECK(total.same_structure(universal_cover(base, ObjId(0)).total()));
}

TEST_CASE("output is byte-identical across runs") {
  const Run a = cli({"lattice", fixture("s3.json")});
  const Run b = cli({"lattice", fixture("s3.json")});
  CHECK(a.out == b.out);
  CHECK(a.out.find('\r') == std::string::npos);
  const Run c = cli({"universal", fixture("s3.json")});
  CHECK(c.out == cli({"universal", fixture("s3.json")}).out);
}

TEST_CASE("orbit groupoid of the swap action") {
  const Run r = cli({"orbit", "--action", fixture("swap_i2.json")});
  CHECK(r.code == 0);
  CHECK(r.json()["quotient"]["objects"].size() == 1);
  CHECK(r.json()["quotient"]["arrows"].size() == 2);
  CHECK(cli({"orbit", "--action", fixture("swap_i2.json"), "--shuffle-seed", "7"}).out == r.out);
}

TEST_CASE("presheaf round trip") {
  const std::string cover = (scratch() / "points.json").string();
  REQUIRE(cli({"from-presheaf", fixture("s3_points.json"), "--out", cover}).code == 0);
  CHECK(cli({"fold", cover}).json()["fold"] == 3);
  const Json back = cli({"to-presheaf", cover}).json();
  const Json orig = read_json_file(kFixtures / "s3_points.json");
  CHECK(back["maps"] == orig["maps"]);
  CHECK(back["sets"] == orig["sets"]);
}

TEST_CASE("omega, characteristic morphisms and pushouts") {
  auto c4 = fixtures::c4();
  const Covering om = omega(c4);
  const Run r = cli({"omega", fixture("c4.json")});
  CHECK(r.json()["objects"]["false.*"] == "*");

  const Covering h = covering_sum(identity_covering(c4), universal_cover(c4, ObjId(0)));
  const Subcovering s = restrict_to_components(h, 2);
  const std::string hf = write("h.json", covering_to_json(h));
  const std::string sf = write("s.json", morphism_to_json(s.inclusion));
  const Run ch = cli({"char", hf, "--sub", sf});
  CHECK(ch.code == 0);
  const Json objects = ch.json()["objects"];
  std::size_t to_true = 0;
  for (auto it = objects.begin(); it != objects.end(); ++it) to_true += it.value() == "true.*";
  CHECK(to_true == 4);

  const GaloisLattice lat = build_lattice(fixtures::s3(), ObjId(0));
  const std::string u = write("u6.json", covering_to_json(lat.universal));
  const std::string left = write("left.json", covering_to_json(lat.nodes[1].upper));
  const std::string right = write("right.json", covering_to_json(lat.nodes[2].upper));
  const Run po = cli({"pushout", u, left, right});
  CHECK(po.code == 0);
  CHECK(po.json()["source"]["objects"].size() == 1);
}

TEST_CASE("selftest runs single criteria") {
  const Run r = cli({"selftest", "--criterion", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("[PASS] AC10", 0) == 0);
  CHECK(cli({"selftest", "--criterion", "11"}).code == 2);
}
