#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "covgpd/construct.hpp"
#include "covgpd/covering.hpp"
#include "covgpd/topos.hpp"

namespace covgpd {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Throws InputError naming the file.
Json read_json_file(const std::filesystem::path& path);

/// Either the full form {"objects", "arrows", "compose"} or the one-object
/// shorthand {"group_table", "elements"?, "object"?}. Errors carry a JSON path.
FiniteGroupoid groupoid_from_json(const Json& doc, const std::string& where = "$");
/// Always the full form; compose lists every composable pair as [f, h, fh].
Json groupoid_to_json(const FiniteGroupoid& g);

/// A groupoid given inline or as a path relative to `dir`.
GroupoidPtr groupoid_ref(const Json& ref, const std::filesystem::path& dir, const std::string& where);

struct MorphismDoc {
  GroupoidMorphism morphism;
  std::optional<ObjId> marked;  // source object
};
/// {"source", "target", "objects": {name: name}, "arrows": {name: name},
/// "marked"?}. Functoriality is checked on load.
MorphismDoc morphism_from_json(const Json& doc, const std::filesystem::path& dir, const std::string& where = "$");
Json morphism_to_json(const GroupoidMorphism& m, std::optional<ObjId> marked = std::nullopt);
Json covering_to_json(const Covering& p);

/// A morphism document read as a covering. Returns the star check.
CoverCheck covering_from_json(const Json& doc, const std::filesystem::path& dir);

/// {"base", "sets": {object: [element names]}, "maps": {arrow: [indices]}}.
Presheaf presheaf_from_json(const Json& doc, const std::filesystem::path& dir);
Json presheaf_to_json(const Presheaf& f);

/// {"space", "group_table", "elements"?, "act": [{"objects", "arrows"}]}.
GroupAction action_from_json(const Json& doc, const std::filesystem::path& dir);

/// Sorted keys, two-space indent, trailing newline.
std::string render(const Json& doc);

}  // namespace covgpd
