#include "fincat/serialize.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fincat {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFormatTag = "fincat/1";

const json& require_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw DocumentError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t require_int(const json& value, const std::string& what) {
  if (!value.is_number_integer())
    throw DocumentError(what + " must be an integer");
  return value.get<std::int64_t>();
}

std::int32_t index_in_range(const json& value, const std::string& what,
                            std::int64_t bound) {
  const std::int64_t v = require_int(value, what);
  if (v < 0 || v >= bound)
    throw DocumentError(what + " out of range: " + std::to_string(v));
  return static_cast<std::int32_t>(v);
}

}  // namespace

std::string category_to_json(const FinCategory& c) {
  json doc;
  doc["format"] = kFormatTag;

  json objects;
  objects["count"] = c.object_count();
  if (c.has_object_names()) {
    json names = json::array();
    for (Obj x = 0; x < c.object_count(); ++x) names.push_back(c.object_name(x));
    objects["names"] = std::move(names);
  }
  doc["objects"] = std::move(objects);

  json morphisms = json::array();
  for (Mor f = 0; f < c.morphism_count(); ++f) {
    json entry;
    entry["id"] = f;
    entry["src"] = c.src(f);
    entry["dst"] = c.dst(f);
    if (!c.morphism_name(f).empty()) entry["name"] = c.morphism_name(f);
    morphisms.push_back(std::move(entry));
  }
  doc["morphisms"] = std::move(morphisms);

  json identities = json::array();
  for (Obj x = 0; x < c.object_count(); ++x) identities.push_back(c.identity(x));
  doc["identities"] = std::move(identities);

  // Iteration order is already the canonical (g, f) lexicographic order.
  json composition = json::array();
  for (Mor g = 0; g < c.morphism_count(); ++g)
    for (Mor f = 0; f < c.morphism_count(); ++f) {
      if (!c.composable(g, f)) continue;
      if (auto gf = c.composite_entry(g, f))
        composition.push_back(json::array({g, f, *gf}));
    }
  doc["composition"] = std::move(composition);

  return doc.dump(2) + "\n";
}

FinCategory category_from_json(const std::string& text) {
  FinCategory c = parse_category_tables(text);
  ValidationReport report = validate_category(c);
  if (!report.ok) {
    std::ostringstream message;
    message << "category laws fail:";
    for (const ValidationFailure& failure : report.failures) {
      message << " " << failure.law << " (";
      for (std::size_t i = 0; i < failure.where.size(); ++i) {
        if (i) message << ", ";
        message << morphism_label(c, failure.where[i]);
      }
      message << ");";
    }
    throw ValidationError(message.str(), std::move(report));
  }
  return c;
}

FinCategory parse_category_tables(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(e.what());
  }
  if (!doc.is_object()) throw DocumentError("document root must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "format" && key != "objects" && key != "morphisms" &&
        key != "identities" && key != "composition")
      throw DocumentError("unknown field \"" + key + "\"");
  }

  const json& format = require_field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != kFormatTag)
    throw DocumentError("format tag must be \"" + std::string(kFormatTag) + "\"");

  const json& objects = require_field(doc, "objects");
  if (!objects.is_object()) throw DocumentError("\"objects\" must be an object");
  const std::int64_t count = require_int(require_field(objects, "count"), "object count");
  if (count < 0) throw DocumentError("object count must be non-negative");

  std::vector<std::string> object_names(static_cast<std::size_t>(count));
  if (auto it = objects.find("names"); it != objects.end()) {
    if (!it->is_array() || static_cast<std::int64_t>(it->size()) != count)
      throw DocumentError("\"names\" must list one name per object");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string())
        throw DocumentError("object name " + std::to_string(i) + " must be a string");
      object_names[i] = (*it)[i].get<std::string>();
    }
  }

  const json& morphisms = require_field(doc, "morphisms");
  if (!morphisms.is_array()) throw DocumentError("\"morphisms\" must be an array");
  const std::int64_t mor_count = static_cast<std::int64_t>(morphisms.size());

  struct MorEntry {
    Obj src = -1, dst = -1;
    std::string name;
    bool seen = false;
  };
  std::vector<MorEntry> entries(morphisms.size());
  for (const json& m : morphisms) {
    if (!m.is_object()) throw DocumentError("morphism entries must be objects");
    const std::int32_t id = index_in_range(require_field(m, "id"), "morphism id", mor_count);
    MorEntry& entry = entries[static_cast<std::size_t>(id)];
    if (entry.seen)
      throw DocumentError("duplicate morphism id " + std::to_string(id));
    entry.seen = true;
    entry.src = index_in_range(require_field(m, "src"), "morphism src", count);
    entry.dst = index_in_range(require_field(m, "dst"), "morphism dst", count);
    if (auto it = m.find("name"); it != m.end()) {
      if (!it->is_string())
        throw DocumentError("morphism name must be a string");
      entry.name = it->get<std::string>();
    }
  }

  const json& identities = require_field(doc, "identities");
  if (!identities.is_array() || static_cast<std::int64_t>(identities.size()) != count)
    throw DocumentError("\"identities\" must list one morphism per object");

  const json& composition = require_field(doc, "composition");
  if (!composition.is_array()) throw DocumentError("\"composition\" must be an array");

  CategoryBuilder builder;
  try {
    for (std::int64_t x = 0; x < count; ++x)
      builder.add_object(object_names[static_cast<std::size_t>(x)]);
    for (const MorEntry& entry : entries)
      builder.add_morphism(entry.src, entry.dst, entry.name);
    for (std::size_t x = 0; x < identities.size(); ++x)
      builder.set_identity(static_cast<Obj>(x),
                           index_in_range(identities[x], "identity", mor_count));
    for (const json& triple : composition) {
      if (!triple.is_array() || triple.size() != 3)
        throw DocumentError("composition entries must be [g, f, composite] triples");
      builder.set_composite(index_in_range(triple[0], "composition g", mor_count),
                            index_in_range(triple[1], "composition f", mor_count),
                            index_in_range(triple[2], "composite", mor_count));
    }
    return builder.build();
  } catch (const StructuralError& e) {
    throw DocumentError(e.what());
  }
}

void save_category(const FinCategory& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write " + path);
  out << category_to_json(c);
  if (!out) throw DocumentError("write failed for " + path);
}

FinCategory load_category(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return category_from_json(buffer.str());
}

}  // namespace fincat
