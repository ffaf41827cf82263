#include "evex/schema.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "evex/errors.hpp"
#include "evex/text.hpp"
#include "json.hpp"

namespace evex {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.contains(it.key())) {
            throw SchemaError(path + ": unknown key \"" + it.key() + "\"");
        }
    }
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) throw SchemaError(path + ": missing key \"" + key + "\"");
    if (!obj[key].is_string()) throw SchemaError(path + "." + key + ": expected a string");
    return obj[key].get<std::string>();
}

std::string require_name(const json& obj, const std::string& path) {
    std::string name{trim(require_string(obj, "name", path))};
    if (name.empty()) throw SchemaError(path + ".name: empty name");
    return name;
}

std::string require_definition(const json& obj, const std::string& path) {
    std::string def = require_string(obj, "definition", path);
    if (trim(def).empty()) throw SchemaError(path + ".definition: empty definition");
    return def;
}

}  // namespace

const ArgumentRoleDef* EventTypeDef::find_role(std::string_view role_name) const {
    std::string_view probe = trim(role_name);
    for (const auto& r : roles) {
        if (r.name == probe) return &r;
    }
    return nullptr;
}

const EventTypeDef* EventSchema::find_event_type(std::string_view type_name) const {
    std::string_view probe = trim(type_name);
    for (const auto& t : event_types) {
        if (t.name == probe) return &t;
    }
    return nullptr;
}

EventSchema parse_schema(const std::string& json_text, const std::string& source_name) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SchemaError(source_name + ": schema parse failure: " + e.what());
    }
    if (!doc.is_object()) throw SchemaError(source_name + ": schema document must be an object");
    reject_unknown_keys(doc, {"name", "version", "event_types"}, source_name);

    EventSchema schema;
    schema.name = require_name(doc, source_name);
    schema.version = require_string(doc, "version", source_name);

    if (!doc.contains("event_types") || !doc["event_types"].is_array()) {
        throw SchemaError(source_name + ": missing \"event_types\" array");
    }
    std::unordered_set<std::string> type_names;
    std::size_t ti = 0;
    for (const auto& t : doc["event_types"]) {
        const std::string tpath = source_name + ": event_types[" + std::to_string(ti++) + "]";
        if (!t.is_object()) throw SchemaError(tpath + ": expected an object");
        reject_unknown_keys(t, {"name", "definition", "roles"}, tpath);

        EventTypeDef type;
        type.name = require_name(t, tpath);
        type.definition = require_definition(t, tpath);
        if (!type_names.insert(type.name).second) {
            throw SchemaError(tpath + ": duplicate event type name \"" + type.name + "\"");
        }

        if (!t.contains("roles") || !t["roles"].is_array()) {
            throw SchemaError(tpath + ": missing \"roles\" array");
        }
        std::unordered_set<std::string> role_names;
        std::size_t ri = 0;
        for (const auto& r : t["roles"]) {
            const std::string rpath = tpath + ".roles[" + std::to_string(ri++) + "]";
            if (!r.is_object()) throw SchemaError(rpath + ": expected an object");
            reject_unknown_keys(r, {"name", "definition"}, rpath);
            ArgumentRoleDef role;
            role.name = require_name(r, rpath);
            role.definition = require_definition(r, rpath);
            if (!role_names.insert(role.name).second) {
                throw SchemaError(rpath + ": duplicate role name \"" + role.name +
                                  "\" in event type \"" + type.name + "\"");
            }
            type.roles.push_back(std::move(role));
        }
        schema.event_types.push_back(std::move(type));
    }
    if (schema.event_types.empty()) {
        throw SchemaError(source_name + ": schema must define at least one event type");
    }
    return schema;
}

EventSchema load_schema(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open schema file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_schema(buf.str(), path);
}

std::string serialize_schema(const EventSchema& schema) {
    json doc;
    doc["name"] = schema.name;
    doc["version"] = schema.version;
    doc["event_types"] = json::array();
    for (const auto& t : schema.event_types) {
        json jt;
        jt["name"] = t.name;
        jt["definition"] = t.definition;
        jt["roles"] = json::array();
        for (const auto& r : t.roles) {
            jt["roles"].push_back({{"name", r.name}, {"definition", r.definition}});
        }
        doc["event_types"].push_back(std::move(jt));
    }
    return doc.dump(2) + "\n";
}

EventSchema schema_subset(const EventSchema& schema, const std::vector<std::string>& types) {
    EventSchema out;
    out.name = schema.name;
    out.version = schema.version;
    std::unordered_set<std::string> seen;
    for (const auto& raw : types) {
        std::string name{trim(raw)};
        const EventTypeDef* def = schema.find_event_type(name);
        if (def == nullptr) {
            throw SchemaError("schema_subset: unknown event type \"" + name + "\" in schema \"" +
                              schema.name + "\"");
        }
        if (seen.insert(def->name).second) out.event_types.push_back(*def);
    }
    if (out.event_types.empty()) {
        throw SchemaError("schema_subset: empty type selection for schema \"" + schema.name + "\"");
    }
    return out;
}

}  // namespace evex
