#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace evex {

// The schema is the closed world every other component validates against:
// prompts only describe its types, parsers reject anything outside it, and
// the scorer keys on its names. Names are matched case-sensitively after
// trimming surrounding whitespace; internal whitespace is significant
// ("ship name" is a valid role name).

struct ArgumentRoleDef {
    std::string name;
    std::string definition;

    bool operator==(const ArgumentRoleDef&) const = default;
};

struct EventTypeDef {
    std::string name;
    std::string definition;
    std::vector<ArgumentRoleDef> roles;  // order preserved from the document

    const ArgumentRoleDef* find_role(std::string_view role_name) const;
    bool has_role(std::string_view role_name) const { return find_role(role_name) != nullptr; }

    bool operator==(const EventTypeDef&) const = default;
};

struct EventSchema {
    std::string name;
    std::string version;
    std::vector<EventTypeDef> event_types;

    const EventTypeDef* find_event_type(std::string_view type_name) const;
    bool has_event_type(std::string_view type_name) const {
        return find_event_type(type_name) != nullptr;
    }

    bool operator==(const EventSchema&) const = default;
};

/// Parses and validates a schema document. Unknown keys, duplicate names and
/// empty definitions are errors; messages name the offending JSON path.
EventSchema parse_schema(const std::string& json_text, const std::string& source_name = "<memory>");

EventSchema load_schema(const std::string& path);

/// Canonical JSON form, suitable for files and for digest input.
std::string serialize_schema(const EventSchema& schema);

/// Schema restricted to `types`, in request order (first occurrence wins for
/// duplicates). Used to scope argument-extraction prompts to detected types.
/// Throws on an unknown type name or an empty request.
EventSchema schema_subset(const EventSchema& schema, const std::vector<std::string>& types);

}  // namespace evex
