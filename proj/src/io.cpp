#include "covgpd/io.hpp"

#include <fstream>
#include <map>
#include <set>

#include "covgpd/error.hpp"

namespace covgpd {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const Json& member(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string as_string(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

std::size_t as_index(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::string> unique_names(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_string(v[i], where + "[" + std::to_string(i) + "]"));
    if (!seen.insert(out.back()).second) fail(where + "[" + std::to_string(i) + "]", "duplicate name " + out.back());
  }
  return out;
}

ObjId object_named(const FiniteGroupoid& g, const Json& v, const std::string& where) {
  const std::string name = as_string(v, where);
  auto x = g.find_object(name);
  if (!x) fail(where, "unknown object " + name);
  return *x;
}

ArrId arrow_named(const FiniteGroupoid& g, const Json& v, const std::string& where) {
  const std::string name = as_string(v, where);
  auto a = g.find_arrow(name);
  if (!a) fail(where, "unknown arrow " + name);
  return *a;
}

FiniteGroup group_from_table(const Json& doc, const std::string& where) {
  const Json& table = member(doc, "group_table", where);
  if (!table.is_array()) fail(where + ".group_table", "expected an array of rows");
  const std::size_t n = table.size();
  std::vector<Elem> flat;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row = where + ".group_table[" + std::to_string(i) + "]";
    if (!table[i].is_array() || table[i].size() != n) fail(row, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t v = as_index(table[i][j], row + "[" + std::to_string(j) + "]");
      if (v >= n) fail(row + "[" + std::to_string(j) + "]", "entry out of range");
      flat.push_back(static_cast<Elem>(v));
    }
  }
  std::vector<std::string> names;
  if (doc.contains("elements")) {
    names = unique_names(doc["elements"], where + ".elements");
    if (names.size() != n) fail(where + ".elements", "expected " + std::to_string(n) + " names");
  }
  try {
    return FiniteGroup(n, std::move(flat), std::move(names));
  } catch (const InputError& e) {
    fail(where + ".group_table", e.what());
  }
}

std::map<std::string, std::string> name_map(const Json& doc, const char* key, const std::string& where) {
  const Json& m = member(doc, key, where);
  if (!m.is_object()) fail(where + "." + key, "expected an object");
  std::map<std::string, std::string> out;
  for (auto it = m.begin(); it != m.end(); ++it) out[it.key()] = as_string(it.value(), where + "." + key + "." + it.key());
  return out;
}

GroupoidMorphism maps_from_json(const Json& doc, const GroupoidPtr& source, const GroupoidPtr& target,
                                const std::string& where) {
  GroupoidMorphism m{source, target, std::vector<ObjId>(source->num_objects()),
                     std::vector<ArrId>(source->num_arrows())};
  const auto objects = name_map(doc, "objects", where);
  const auto arrows = name_map(doc, "arrows", where);
  for (std::size_t x = 0; x < source->num_objects(); ++x) {
    auto it = objects.find(source->object_name(ObjId(x)));
    if (it == objects.end()) fail(where + ".objects", "no image for object " + source->object_name(ObjId(x)));
    m.obj_map[x] = object_named(*target, it->second, where + ".objects." + it->first);
  }
  for (std::size_t a = 0; a < source->num_arrows(); ++a) {
    auto it = arrows.find(source->arrow_name(ArrId(a)));
    if (it == arrows.end()) fail(where + ".arrows", "no image for arrow " + source->arrow_name(ArrId(a)));
    m.arr_map[a] = arrow_named(*target, it->second, where + ".arrows." + it->first);
  }
  for (const auto& [k, v] : objects)
    if (!source->find_object(k)) fail(where + ".objects." + k, "unknown source object");
  for (const auto& [k, v] : arrows)
    if (!source->find_arrow(k)) fail(where + ".arrows." + k, "unknown source arrow");
  return m;
}

void require_unique_names(const FiniteGroupoid& g) {
  std::set<std::string> objects(g.object_names().begin(), g.object_names().end());
  std::set<std::string> arrows;
  for (const auto& a : g.arrows()) arrows.insert(a.name);
  if (objects.size() != g.num_objects() || arrows.size() != g.num_arrows())
    throw VerificationFailure("groupoid has clashing names and cannot be written");
}

}  // namespace

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

FiniteGroupoid groupoid_from_json(const Json& doc, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  if (doc.contains("group_table")) {
    const FiniteGroup group = group_from_table(doc, where);
    const std::string object = doc.contains("object") ? as_string(doc["object"], where + ".object") : "*";
    return group_groupoid(group, object);
  }
  const auto objects = unique_names(member(doc, "objects", where), where + ".objects");
  const Json& arrow_docs = member(doc, "arrows", where);
  if (!arrow_docs.is_array()) fail(where + ".arrows", "expected an array");
  std::vector<FiniteGroupoid::ArrowSpec> arrows;
  std::map<std::string, std::size_t> arrow_index;
  std::map<std::string, std::size_t> object_index;
  for (std::size_t i = 0; i < objects.size(); ++i) object_index[objects[i]] = i;
  for (std::size_t i = 0; i < arrow_docs.size(); ++i) {
    const std::string at = where + ".arrows[" + std::to_string(i) + "]";
    const std::string name = as_string(member(arrow_docs[i], "name", at), at + ".name");
    const std::string dom = as_string(member(arrow_docs[i], "dom", at), at + ".dom");
    const std::string cod = as_string(member(arrow_docs[i], "cod", at), at + ".cod");
    if (!object_index.count(dom)) fail(at + ".dom", "unknown object " + dom);
    if (!object_index.count(cod)) fail(at + ".cod", "unknown object " + cod);
    if (!arrow_index.emplace(name, i).second) fail(at + ".name", "duplicate name " + name);
    arrows.push_back({ObjId(object_index[dom]), ObjId(object_index[cod]), name});
  }
  const std::size_t n = arrows.size();
  std::vector<std::int32_t> table(n * n, FiniteGroupoid::kUndefined);
  const Json& compose = member(doc, "compose", where);
  if (!compose.is_array()) fail(where + ".compose", "expected an array of [f, h, fh]");
  for (std::size_t i = 0; i < compose.size(); ++i) {
    const std::string at = where + ".compose[" + std::to_string(i) + "]";
    const Json& t = compose[i];
    if (!t.is_array() || t.size() != 3) fail(at, "expected [f, h, fh]");
    std::size_t ids[3];
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string name = as_string(t[k], at + "[" + std::to_string(k) + "]");
      auto it = arrow_index.find(name);
      if (it == arrow_index.end()) fail(at + "[" + std::to_string(k) + "]", "unknown arrow " + name);
      ids[k] = it->second;
    }
    if (arrows[ids[1]].cod != arrows[ids[0]].dom) fail(at, "arrows are not composable");
    auto& slot = table[ids[0] * n + ids[1]];
    if (slot != FiniteGroupoid::kUndefined && slot != static_cast<std::int32_t>(ids[2]))
      fail(at, "conflicting composite");
    slot = static_cast<std::int32_t>(ids[2]);
  }
  FiniteGroupoid g(objects, std::move(arrows), std::move(table));
  if (doc.contains("inverse")) {
    const Json& inv = doc["inverse"];
    if (!inv.is_object()) fail(where + ".inverse", "expected an object");
    for (auto it = inv.begin(); it != inv.end(); ++it) {
      const std::string at = where + ".inverse." + it.key();
      auto a = g.find_arrow(it.key());
      if (!a) fail(at, "unknown arrow");
      const ArrId b = arrow_named(g, it.value(), at);
      if (g.try_inverse(*a) != b) fail(at, "stated inverse disagrees with the composition table");
    }
  }
  return g;
}

Json groupoid_to_json(const FiniteGroupoid& g) {
  require_unique_names(g);
  Json doc;
  doc["objects"] = g.object_names();
  doc["arrows"] = Json::array();
  for (const auto& a : g.arrows())
    doc["arrows"].push_back({{"name", a.name}, {"dom", g.object_name(a.dom)}, {"cod", g.object_name(a.cod)}});
  doc["compose"] = Json::array();
  for (std::size_t f = 0; f < g.num_arrows(); ++f)
    for (std::size_t h = 0; h < g.num_arrows(); ++h) {
      const auto fh = g.raw_compose(f, h);
      if (fh != FiniteGroupoid::kUndefined)
        doc["compose"].push_back({g.arrow_name(ArrId(f)), g.arrow_name(ArrId(h)),
                                  g.arrow_name(ArrId(static_cast<std::size_t>(fh)))});
    }
  return doc;
}

GroupoidPtr groupoid_ref(const Json& ref, const fs::path& dir, const std::string& where) {
  FiniteGroupoid g;
  if (ref.is_string()) {
    const fs::path path = dir / ref.get<std::string>();
    g = groupoid_from_json(read_json_file(path), path.string());
  } else {
    g = groupoid_from_json(ref, where);
  }
  require_valid(g, where);
  return share(std::move(g));
}

MorphismDoc morphism_from_json(const Json& doc, const fs::path& dir, const std::string& where) {
  auto source = groupoid_ref(member(doc, "source", where), dir, where + ".source");
  auto target = groupoid_ref(member(doc, "target", where), dir, where + ".target");
  MorphismDoc out{maps_from_json(doc, source, target, where), std::nullopt};
  if (doc.contains("marked")) out.marked = object_named(*source, doc["marked"], where + ".marked");
  require_functorial(out.morphism, where);
  return out;
}

Json morphism_to_json(const GroupoidMorphism& m, std::optional<ObjId> marked) {
  Json doc;
  doc["source"] = groupoid_to_json(*m.source);
  doc["target"] = groupoid_to_json(*m.target);
  doc["objects"] = Json::object();
  doc["arrows"] = Json::object();
  for (std::size_t x = 0; x < m.source->num_objects(); ++x)
    doc["objects"][m.source->object_name(ObjId(x))] = m.target->object_name(m(ObjId(x)));
  for (std::size_t a = 0; a < m.source->num_arrows(); ++a)
    doc["arrows"][m.source->arrow_name(ArrId(a))] = m.target->arrow_name(m(ArrId(a)));
  if (marked) doc["marked"] = m.source->object_name(*marked);
  return doc;
}

Json covering_to_json(const Covering& p) { return morphism_to_json(p.morphism(), p.marked()); }

CoverCheck covering_from_json(const Json& doc, const fs::path& dir) {
  MorphismDoc m = morphism_from_json(doc, dir);
  CoverCheck check = is_covering(std::move(m.morphism));
  if (check.covering && m.marked) check.covering = check.covering->with_marked(*m.marked);
  return check;
}

Presheaf presheaf_from_json(const Json& doc, const fs::path& dir) {
  Presheaf f;
  f.base = groupoid_ref(member(doc, "base", "$"), dir, "$.base");
  const auto& g = *f.base;
  const Json& sets = member(doc, "sets", "$");
  const Json& maps = member(doc, "maps", "$");
  if (!sets.is_object()) fail("$.sets", "expected an object");
  if (!maps.is_object()) fail("$.maps", "expected an object");
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    const std::string& name = g.object_name(ObjId(x));
    if (!sets.contains(name)) fail("$.sets", "no set for object " + name);
    f.names.push_back(unique_names(sets[name], "$.sets." + name));
    f.sizes.push_back(f.names.back().size());
  }
  for (auto it = sets.begin(); it != sets.end(); ++it)
    if (!g.find_object(it.key())) fail("$.sets." + it.key(), "unknown object");
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const std::string& name = g.arrow_name(ArrId(a));
    if (!maps.contains(name)) fail("$.maps", "no map for arrow " + name);
    const Json& m = maps[name];
    if (!m.is_array()) fail("$.maps." + name, "expected an array of indices");
    f.maps.emplace_back();
    for (std::size_t i = 0; i < m.size(); ++i)
      f.maps.back().push_back(as_index(m[i], "$.maps." + name + "[" + std::to_string(i) + "]"));
  }
  for (auto it = maps.begin(); it != maps.end(); ++it)
    if (!g.find_arrow(it.key())) fail("$.maps." + it.key(), "unknown arrow");
  return f;
}

Json presheaf_to_json(const Presheaf& f) {
  const auto& g = *f.base;
  Json doc;
  doc["base"] = groupoid_to_json(g);
  doc["sets"] = Json::object();
  doc["maps"] = Json::object();
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < f.sizes[x]; ++i)
      names.push_back(x < f.names.size() && f.names[x].size() == f.sizes[x] ? f.names[x][i] : std::to_string(i));
    doc["sets"][g.object_name(ObjId(x))] = names;
  }
  for (std::size_t a = 0; a < g.num_arrows(); ++a) doc["maps"][g.arrow_name(ArrId(a))] = f.maps[a];
  return doc;
}

GroupAction action_from_json(const Json& doc, const fs::path& dir) {
  GroupAction a{group_from_table(doc, "$"), groupoid_ref(member(doc, "space", "$"), dir, "$.space"), {}};
  const Json& act = member(doc, "act", "$");
  if (!act.is_array() || act.size() != a.group.order())
    fail("$.act", "expected one entry per group element");
  for (std::size_t e = 0; e < act.size(); ++e)
    a.act.push_back(maps_from_json(act[e], a.space, a.space, "$.act[" + std::to_string(e) + "]"));
  return a;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace covgpd
