#include "covgpd/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "covgpd/acceptance.hpp"
#include "covgpd/classify.hpp"
#include "covgpd/construct.hpp"
#include "covgpd/error.hpp"
#include "covgpd/io.hpp"
#include "covgpd/topos.hpp"
#include "covgpd/transform.hpp"

namespace covgpd {
namespace {

namespace fs = std::filesystem;

/// A negative answer together with its report.
struct Negative {
  Json report;
};

struct Output {
  std::string text;
  int code = kExitOk;
};

Output json_out(const Json& doc, int code = kExitOk) { return {render(doc), code}; }

fs::path dir_of(const std::string& path) { return fs::path(path).parent_path(); }

GroupoidPtr load_groupoid(const std::string& path) {
  FiniteGroupoid g = groupoid_from_json(read_json_file(path), path);
  require_valid(g, path);
  return share(std::move(g));
}

ObjId object_in(const FiniteGroupoid& g, const std::string& name, const std::string& what) {
  if (name.empty()) {
    if (g.empty()) throw InputError(what + ": the groupoid has no objects");
    return ObjId(0);
  }
  auto x = g.find_object(name);
  if (!x) throw InputError(what + ": unknown object " + name);
  return *x;
}

ArrId arrow_in(const FiniteGroupoid& g, const std::string& name, const std::string& what) {
  auto a = g.find_arrow(name);
  if (!a) throw InputError(what + ": unknown arrow " + name);
  return *a;
}

Json arrow_names(const FiniteGroupoid& g, std::span<const ArrId> arrows) {
  Json out = Json::array();
  for (ArrId a : arrows) out.push_back(g.arrow_name(a));
  return out;
}

Json object_names(const FiniteGroupoid& g, std::span<const ObjId> objects) {
  Json out = Json::array();
  for (ObjId x : objects) out.push_back(g.object_name(x));
  return out;
}

Json loop_names(const VertexGroup& vg, const FiniteGroupoid& g, const Subgroup& s) {
  Json out = Json::array();
  for (Elem e : s.elements) out.push_back(g.arrow_name(vg.arrow(e)));
  return out;
}

Json defect_report(const GroupoidMorphism& m, const std::vector<StarDefect>& defects) {
  Json list = Json::array();
  for (const StarDefect& d : defects)
    list.push_back({{"object", m.source->object_name(d.object)},
                    {"over", m.target->object_name(m(d.object))},
                    {"total_star", d.total_star},
                    {"base_star", d.base_star},
                    {"injective", d.injective},
                    {"surjective", d.surjective}});
  return {{"covering", false}, {"defects", list}};
}

Covering load_covering(const std::string& path) {
  MorphismDoc doc = morphism_from_json(read_json_file(path), dir_of(path), path);
  CoverCheck check = is_covering(doc.morphism);
  if (!check.covering) throw Negative{defect_report(doc.morphism, check.defects)};
  return doc.marked ? check.covering->with_marked(*doc.marked) : *check.covering;
}

GroupoidMorphism load_morphism(const std::string& path) {
  return morphism_from_json(read_json_file(path), dir_of(path), path).morphism;
}

Json group_table(const FiniteGroup& g) {
  Json rows = Json::array();
  for (Elem a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (Elem b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------------------

Output cmd_validate(const std::string& path) {
  const FiniteGroupoid g = groupoid_from_json(read_json_file(path), path);
  const ValidationReport report = validate(g);
  Json violations = Json::array();
  for (const Violation& v : report.violations) violations.push_back({{"law", v.law}, {"detail", v.detail}});
  Json doc{{"valid", report.ok()},
           {"objects", g.num_objects()},
           {"arrows", g.num_arrows()},
           {"violations", violations}};
  return json_out(doc, report.ok() ? kExitOk : kExitNegative);
}

Output cmd_star(const std::string& path, const std::string& object) {
  const auto g = load_groupoid(path);
  const ObjId x = object_in(*g, object, "--object");
  return json_out({{"object", g->object_name(x)}, {"arrows", arrow_names(*g, g->star(x))}});
}

Output cmd_components(const std::string& path) {
  const auto g = load_groupoid(path);
  const Components c = components(*g);
  Json blocks = Json::array();
  for (const auto& b : c.blocks) blocks.push_back(object_names(*g, b));
  return json_out({{"count", c.size()}, {"components", blocks}});
}

Output cmd_vertex_group(const std::string& path, const std::string& object) {
  const auto g = load_groupoid(path);
  const VertexGroup vg = vertex_group(*g, object_in(*g, object, "--object"));
  return json_out({{"object", g->object_name(vg.at)},
                   {"order", vg.group.order()},
                   {"elements", arrow_names(*g, vg.loops)},
                   {"table", group_table(vg.group)},
                   {"abelian", vg.group.is_abelian()}});
}

Output cmd_check_cover(const std::string& path) {
  const Covering p = load_covering(path);
  Json doc{{"covering", true}};
  try {
    doc["fold"] = fold(p);
  } catch (const InputError&) {
    Json fibers = Json::object();
    for (std::size_t c = 0; c < p.base().num_objects(); ++c)
      fibers[p.base().object_name(ObjId(c))] = p.over(ObjId(c)).size();
    doc["fibers"] = fibers;
  }
  return json_out(doc);
}

Output cmd_fiber(const std::string& path, const std::string& object) {
  const Covering p = load_covering(path);
  const Fiber f = fiber(p, object_in(p.base(), object, "--object"));
  return json_out({{"over", p.base().object_name(f.over)}, {"groupoid", groupoid_to_json(*f.groupoid)}});
}

Output cmd_lift_arrow(const std::string& path, const std::string& arrow, const std::string& at) {
  const Covering p = load_covering(path);
  const ArrId a = arrow_in(p.base(), arrow, "--arrow");
  const ObjId x = object_in(p.total(), at, "--at");
  const ArrId lifted = lift_arrow(p, a, x);
  return json_out({{"arrow", p.base().arrow_name(a)},
                   {"at", p.total().object_name(x)},
                   {"lift", p.total().arrow_name(lifted)},
                   {"dom", p.total().object_name(p.total().dom(lifted))}});
}

Output cmd_lift_morphism(const std::string& cover, const std::string& morphism, const std::string& seed,
                         const std::string& at) {
  const Covering p = load_covering(cover);
  const GroupoidMorphism f = load_morphism(morphism);
  const ObjId s = object_in(*f.source, seed, "--seed");
  if (f.target->num_objects() != p.base().num_objects()) throw InputError("the morphism does not end at the base");
  if (at.empty() && p.over(f(s)).empty()) throw InputError("--at: the fiber over the seed image is empty");
  const ObjId x = at.empty() ? p.over(f(s)).front() : object_in(p.total(), at, "--at");
  const bool criterion = lifting_criterion(p, f, s, x);
  const auto lift = lift_morphism(p, f, s, x);
  if (criterion != lift.has_value()) throw VerificationFailure("lifting criterion disagrees with the lift");
  Json doc{{"criterion", criterion}, {"exists", lift.has_value()}};
  if (lift) doc["lift"] = morphism_to_json(*lift);
  return json_out(doc, lift ? kExitOk : kExitNegative);
}

Output cmd_fold(const std::string& path) { return json_out({{"fold", fold(load_covering(path))}}); }

Output cmd_monodromy(const std::string& path, const std::string& object) {
  const Covering p = load_covering(path);
  const MonodromyAction m = monodromy(p, object_in(p.base(), object, "--object"));
  Json stabilizers = Json::object();
  for (std::size_t i = 0; i < m.carrier.size(); ++i)
    stabilizers[p.total().object_name(m.carrier[i])] = loop_names(m.group, p.base(), m.stabilizer(i));
  return json_out({{"over", p.base().object_name(m.over)},
                   {"points", object_names(p.total(), m.carrier)},
                   {"elements", arrow_names(p.base(), m.group.loops)},
                   {"table", m.table},
                   {"transitive", m.is_transitive()},
                   {"stabilizers", stabilizers}});
}

Output cmd_build_cover(const std::string& path, const std::string& object, const std::string& subgroup) {
  const auto g = load_groupoid(path);
  const ObjId g0 = object_in(*g, object, "--object");
  const VertexGroup vg = vertex_group(*g, g0);
  std::vector<Elem> elements{vg.group.identity()};
  for (const std::string& name : split_names(subgroup)) {
    const ArrId a = arrow_in(*g, name, "--subgroup");
    if (!vg.element_of[a.index()]) throw InputError("--subgroup: " + name + " is not a loop at the base object");
    elements.push_back(*vg.element_of[a.index()]);
  }
  const Subgroup gamma = generated_subgroup(vg.group, elements);
  return json_out(covering_to_json(covering_from_subgroup(g, g0, gamma)));
}

Output cmd_universal(const std::string& path, const std::string& object) {
  const auto g = load_groupoid(path);
  return json_out(covering_to_json(universal_cover(g, object_in(*g, object, "--object"))));
}

Output cmd_orbit(const std::string& path, std::optional<std::uint64_t> seed) {
  const GroupAction a = action_from_json(read_json_file(path), dir_of(path));
  const OrbitGroupoid o = orbit_groupoid(a, seed);
  return json_out({{"quotient", groupoid_to_json(*o.quotient)}, {"projection", morphism_to_json(o.projection)}});
}

Json cov_json(const CovGroup& cov) {
  const auto& total = cov.covering.total();
  Json elements = Json::array();
  for (std::size_t e = 0; e < cov.elements.size(); ++e) {
    Json objects = Json::object();
    for (std::size_t x = 0; x < total.num_objects(); ++x)
      objects[total.object_name(ObjId(x))] = total.object_name(cov.elements[e](ObjId(x)));
    elements.push_back({{"base_image", total.object_name(cov.image_of_base[e])}, {"objects", objects}});
  }
  return {{"base_point", total.object_name(cov.base_point)},
          {"order", cov.group.order()},
          {"elements", elements},
          {"table", group_table(cov.group)}};
}

Output cmd_cov_group(const std::string& path) {
  return json_out(cov_json(covering_transformations(load_covering(path))));
}

Output cmd_regular(const std::string& path) {
  const Covering p = load_covering(path);
  const bool regular = is_regular(p);
  const ObjId at = p.marked_or_first();
  const Subgroup pushed = pushforward_vertex(p, at);
  const VertexGroup vg = vertex_group(p.base(), p.project(at));
  return json_out({{"regular", regular},
                   {"at", p.total().object_name(at)},
                   {"pushforward", loop_names(vg, p.base(), pushed)},
                   {"transformations", covering_transformations(p).elements.size()}},
                  regular ? kExitOk : kExitNegative);
}

Output cmd_normalizer_iso(const std::string& path, const std::string& at) {
  const Covering p = load_covering(path);
  const std::optional<ObjId> x = at.empty() ? std::nullopt : std::optional(object_in(p.total(), at, "--at"));
  const NormalizerIso iso = cov_normalizer_iso(p, x);
  const VertexGroup vg = vertex_group(p.base(), p.project(iso.at));
  Json map = Json::array();
  for (std::size_t q = 0; q < iso.quotient.cosets.size(); ++q) {
    Json coset = Json::array();
    for (Elem local : iso.quotient.cosets[q])
      coset.push_back(p.base().arrow_name(vg.arrow(iso.normalizer_group.embedding[local])));
    map.push_back({{"coset", coset},
                   {"transformation", iso.map[q]},
                   {"sends_base_to", p.total().object_name(iso.cov.image_of_base[iso.map[q]])}});
  }
  return json_out({{"at", p.total().object_name(iso.at)},
                   {"pushforward", loop_names(vg, p.base(), iso.pushforward)},
                   {"normalizer", loop_names(vg, p.base(), iso.normalizer)},
                   {"quotient_order", iso.quotient.group.order()},
                   {"map", map}});
}

Output cmd_equiv(const std::string& left, const std::string& right, bool pointed, bool free_base) {
  const Covering p = load_covering(left);
  const Covering q = load_covering(right);
  const auto e = equivalent_coverings(p, q, EquivalenceOptions{!free_base, pointed});
  Json doc{{"equivalent", e.has_value()}};
  if (e) {
    Json objects = Json::object();
    for (std::size_t x = 0; x < p.total().num_objects(); ++x)
      objects[p.total().object_name(ObjId(x))] = q.total().object_name(e->phi(ObjId(x)));
    doc["objects"] = objects;
  }
  return json_out(doc, e ? kExitOk : kExitNegative);
}

Output cmd_pullback(const std::string& cover, const std::string& morphism) {
  const Pullback pb = pullback_covering(load_covering(cover), load_morphism(morphism));
  return json_out(covering_to_json(pb.covering));
}

Output cmd_pushout(const std::string& universal, const std::string& left, const std::string& right) {
  const Pushout po = pushout_covering(load_covering(universal), load_covering(left), load_covering(right));
  return json_out(covering_to_json(po.covering));
}

Output cmd_lattice(const std::string& path, const std::string& object, bool dot) {
  const auto g = load_groupoid(path);
  const GaloisLattice lat = build_lattice(g, object_in(*g, object, "--object"));
  if (dot) return {lattice_to_dot(lat), kExitOk};
  const auto& total = lat.universal.total();
  Json nodes = Json::array();
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    Json sub = Json::array();
    for (Elem e : lat.nodes[i].pi.elements) sub.push_back(total.object_name(lat.cov.image_of_base[e]));
    nodes.push_back({{"id", "n" + std::to_string(i)},
                     {"subgroup", sub},
                     {"fold", lat.nodes[i].fold},
                     {"regular", lat.nodes[i].regular}});
  }
  Json order = Json::array();
  for (std::size_t i = 0; i < lat.nodes.size(); ++i)
    for (std::size_t j = 0; j < lat.nodes.size(); ++j)
      if (i != j && lat.below[i][j]) order.push_back({"n" + std::to_string(i), "n" + std::to_string(j)});
  const LatticeFindings& f = lat.findings;
  return json_out({{"cov_order", lat.cov.group.order()},
                   {"nodes", nodes},
                   {"below", order},
                   {"meet", lat.meet},
                   {"join", lat.join},
                   {"findings",
                    {{"coverings_classified", f.coverings_classified},
                     {"r_choices", f.r_choices},
                     {"r_splits", f.r_splits},
                     {"r_conjugate", f.r_conjugate}}}});
}

Output cmd_omega(const std::string& path) { return json_out(covering_to_json(omega(load_groupoid(path)))); }

Output cmd_char(const std::string& cover, const std::string& sub) {
  const Covering h = load_covering(cover);
  const GroupoidMorphism s = load_morphism(sub);
  CoverCheck s_check = is_covering(compose(h.morphism(), s));
  if (!s_check.covering) throw InputError("--sub: the subobject does not cover the base");
  const Covering om = omega(h.base_ptr());
  const GroupoidMorphism phi = characteristic_morphism(h, *s_check.covering, s, om);
  return json_out(morphism_to_json(phi));
}

Output cmd_subobjects(const std::string& path) {
  const Covering h = load_covering(path);
  const SubobjectLattice lat = subobjects(h);
  const Components comps = components(h.total());
  Json blocks = Json::array();
  for (const auto& b : comps.blocks) blocks.push_back(object_names(h.total(), b));
  Json subs = Json::array();
  for (std::uint64_t mask : lat.masks) {
    Json chosen = Json::array();
    for (std::size_t k = 0; k < lat.components; ++k)
      if (mask >> k & 1U) chosen.push_back(k);
    subs.push_back(chosen);
  }
  return json_out({{"components", blocks}, {"count", lat.masks.size()}, {"boolean", lat.boolean}, {"subobjects", subs}});
}

Output cmd_expo(const std::string& h, const std::string& k, std::size_t limit) {
  return json_out(covering_to_json(exponential(load_covering(h), load_covering(k), limit).covering));
}

Output cmd_adjunction(const std::string& r, const std::string& p, const std::string& q, std::size_t limit) {
  const AdjunctionReport rep = adjunction_check(load_covering(r), load_covering(p), load_covering(q), limit);
  const bool ok = rep.bijective && rep.natural && rep.left == rep.right;
  if (!ok) throw VerificationFailure("adjunction fails: " + std::to_string(rep.left) + " vs " + std::to_string(rep.right));
  return json_out({{"left", rep.left}, {"right", rep.right}, {"bijective", rep.bijective}, {"natural", rep.natural}});
}

Output cmd_to_presheaf(const std::string& path) { return json_out(presheaf_to_json(covering_to_presheaf(load_covering(path)))); }

Output cmd_from_presheaf(const std::string& path) {
  const Presheaf f = presheaf_from_json(read_json_file(path), dir_of(path));
  return json_out(covering_to_json(presheaf_to_covering(f)));
}

Output cmd_selftest(int criterion) {
  std::vector<acceptance::Result> results;
  if (criterion > 0) {
    results.push_back(acceptance::run(criterion));
  } else {
    results = acceptance::run_all();
  }
  std::string text;
  bool ok = true;
  for (const auto& r : results) {
    text += acceptance::format(r) + "\n";
    ok = ok && r.passed;
  }
  return {text, ok ? kExitOk : kExitVerification};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groupoids and their coverings", "covgpd"};
  app.set_help_flag("--help", "Print this help and exit");
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  std::function<Output()> action;
  // Shared option storage; each subcommand only reads what it declares.
  std::vector<std::string> files;
  std::string object, arrow, at, seed, subgroup, sub;
  bool dot = false, pointed = false, free_base = false;
  std::size_t limit = 100000;
  int criterion = 0;
  std::optional<std::uint64_t> shuffle;

  auto command = [&](const std::string& name, const std::string& help, std::size_t n_files,
                     const std::string& file_help) {
    CLI::App* s = app.add_subcommand(name, help);
    if (n_files > 0) s->add_option("files", files, file_help)->required()->expected(static_cast<int>(n_files));
    return s;
  };
  auto bind = [&](CLI::App* s, auto fn) { s->callback([&action, fn] { action = fn; }); };

  auto* s = command("validate", "Check the groupoid laws", 1, "groupoid document");
  bind(s, [&] { return cmd_validate(files[0]); });
  s = command("star", "Arrows into an object", 1, "groupoid document");
  s->add_option("--object", object, "Object name (default: first)");
  bind(s, [&] { return cmd_star(files[0], object); });
  s = command("components", "Connected components", 1, "groupoid document");
  bind(s, [&] { return cmd_components(files[0]); });
  s = command("vertex-group", "Loops at an object as a group", 1, "groupoid document");
  s->add_option("--object", object, "Object name (default: first)");
  bind(s, [&] { return cmd_vertex_group(files[0], object); });
  s = command("check-cover", "Check the star condition of a morphism", 1, "morphism document");
  bind(s, [&] { return cmd_check_cover(files[0]); });
  s = command("fiber", "Fiber over a base object", 1, "covering document");
  s->add_option("--object", object, "Base object (default: first)");
  bind(s, [&] { return cmd_fiber(files[0], object); });
  s = command("lift-arrow", "Lift a base arrow into a total object", 1, "covering document");
  s->add_option("--arrow", arrow, "Base arrow")->required();
  s->add_option("--at", at, "Total object the lift ends at")->required();
  bind(s, [&] { return cmd_lift_arrow(files[0], arrow, at); });
  s = command("lift-morphism", "Lift a morphism through a covering", 2, "covering and morphism documents");
  s->add_option("--seed", seed, "Source object to pin (default: first)");
  s->add_option("--at", at, "Total object the seed goes to (default: first over its image)");
  bind(s, [&] { return cmd_lift_morphism(files[0], files[1], seed, at); });
  s = command("fold", "Number of objects in each fiber", 1, "covering document");
  bind(s, [&] { return cmd_fold(files[0]); });
  s = command("monodromy", "Right action of the vertex group on a fiber", 1, "covering document");
  s->add_option("--object", object, "Base object (default: first)");
  bind(s, [&] { return cmd_monodromy(files[0], object); });
  s = command("build-cover", "Covering attached to a subgroup of a vertex group", 1, "groupoid document");
  s->add_option("--object", object, "Base object (default: first)");
  s->add_option("--subgroup", subgroup, "Comma-separated loop names generating the subgroup")->required();
  bind(s, [&] { return cmd_build_cover(files[0], object, subgroup); });
  s = command("universal", "Universal covering", 1, "groupoid document");
  s->add_option("--object", object, "Base object (default: first)");
  bind(s, [&] { return cmd_universal(files[0], object); });
  s = command("orbit", "Orbit groupoid of a free action", 0, "");
  s->add_option("--action", subgroup, "Action document")->required();
  s->add_option("--shuffle-seed", shuffle, "Compose through random orbit representatives");
  bind(s, [&] { return cmd_orbit(subgroup, shuffle); });
  s = command("cov-group", "Covering transformations", 1, "covering document");
  bind(s, [&] { return cmd_cov_group(files[0]); });
  s = command("regular", "Decide regularity", 1, "covering document");
  bind(s, [&] { return cmd_regular(files[0]); });
  s = command("normalizer-iso", "Normalizer quotient against Cov", 1, "covering document");
  s->add_option("--at", at, "Total object (default: marked or first)");
  bind(s, [&] { return cmd_normalizer_iso(files[0], at); });
  s = command("equiv", "Equivalence of two coverings", 2, "two covering documents");
  s->add_flag("--pointed", pointed, "Require marked objects to correspond");
  s->add_flag("--free-base", free_base, "Allow any isomorphism of the bases");
  bind(s, [&] { return cmd_equiv(files[0], files[1], pointed, free_base); });
  s = command("pullback", "Pull a covering back along a morphism", 2, "covering and morphism documents");
  bind(s, [&] { return cmd_pullback(files[0], files[1]); });
  s = command("pushout", "Pushout of two coverings out of a universal covering", 3,
              "universal, left and right covering documents");
  bind(s, [&] { return cmd_pushout(files[0], files[1], files[2]); });
  s = command("lattice", "Galois lattice of connected coverings", 1, "groupoid document");
  s->add_option("--object", object, "Base object (default: first)");
  s->add_flag("--dot", dot, "Emit the Hasse diagram as DOT");
  bind(s, [&] { return cmd_lattice(files[0], object, dot); });
  s = command("omega", "Subobject classifier", 1, "groupoid document");
  bind(s, [&] { return cmd_omega(files[0]); });
  s = command("char", "Characteristic morphism of a subobject", 1, "covering document");
  s->add_option("--sub", sub, "Morphism document for the subobject inclusion")->required();
  bind(s, [&] { return cmd_char(files[0], sub); });
  s = command("subobjects", "Subobject lattice", 1, "covering document");
  bind(s, [&] { return cmd_subobjects(files[0]); });
  s = command("expo", "Exponential covering H^K", 2, "coverings H and K");
  s->add_option("--limit", limit, "Object bound");
  bind(s, [&] { return cmd_expo(files[0], files[1], limit); });
  s = command("adjunction", "Check Hom(R x P, Q) = Hom(R, Q^P)", 3, "coverings R, P and Q");
  s->add_option("--limit", limit, "Enumeration bound");
  bind(s, [&] { return cmd_adjunction(files[0], files[1], files[2], limit); });
  s = command("to-presheaf", "Presheaf of fibers", 1, "covering document");
  bind(s, [&] { return cmd_to_presheaf(files[0]); });
  s = command("from-presheaf", "Covering of a presheaf", 1, "presheaf document");
  bind(s, [&] { return cmd_from_presheaf(files[0]); });
  s = command("selftest", "Run the acceptance suite", 0, "");
  s->add_option("--criterion", criterion, "Run one criterion only")->check(CLI::Range(1, acceptance::kCriteria));
  bind(s, [&] { return cmd_selftest(criterion); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Output result;
  try {
    result = action();
  } catch (const Negative& n) {
    result = json_out(n.report, kExitNegative);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerification;
  }

  if (out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kExitInput;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace covgpd
