#include "qmcut/schema.hpp"

#include <fstream>

namespace qmcut {

using nlohmann::json;

namespace {

bool type_matches(const json& v, const std::string& t) {
    if (t == "object")
        return v.is_object();
    if (t == "array")
        return v.is_array();
    if (t == "string")
        return v.is_string();
    if (t == "integer")
        return v.is_number_integer();
    if (t == "number")
        return v.is_number();
    if (t == "boolean")
        return v.is_boolean();
    if (t == "null")
        return v.is_null();
    return false;
}

void check(const json& v, const json& schema, const std::string& path,
           std::vector<std::string>& out) {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string())
            ok = type_matches(v, t.get<std::string>());
        else
            for (const auto& alt : t)
                ok = ok || type_matches(v, alt.get<std::string>());
        if (!ok) {
            out.push_back(path + ": expected type " + t.dump());
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"])
            ok = ok || alt == v;
        if (!ok)
            out.push_back(path + ": value " + v.dump() + " not in enum");
    }
    if (schema.contains("minimum") && v.is_number() &&
        v.get<double>() < schema["minimum"].get<double>())
        out.push_back(path + ": below minimum " + schema["minimum"].dump());
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!v.contains(key.get<std::string>()))
                    out.push_back(path + ": missing required key \"" + key.get<std::string>() + "\"");
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (v.contains(it.key()))
                    check(v[it.key()], it.value(), path + "/" + it.key(), out);
        if (schema.contains("additionalProperties") &&
            schema["additionalProperties"].is_boolean() &&
            !schema["additionalProperties"].get<bool>() && schema.contains("properties"))
            for (auto it = v.begin(); it != v.end(); ++it)
                if (!schema["properties"].contains(it.key()))
                    out.push_back(path + ": unexpected key \"" + it.key() + "\"");
    }
    if (v.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& item : v)
            check(item, schema["items"], path + "/" + std::to_string(i++), out);
    }
}

} // namespace

std::vector<std::string> schema_violations(const json& instance, const json& schema) {
    std::vector<std::string> out;
    check(instance, schema, "", out);
    return out;
}

bool matches_schema(const json& instance, const json& schema) {
    return schema_violations(instance, schema).empty();
}

json load_schema(const std::string& schema_dir, const std::string& command) {
    std::string file = schema_dir + "/" + command + ".schema.json";
    std::ifstream in(file);
    if (!in)
        throw std::runtime_error("cannot open schema file " + file);
    return json::parse(in);
}

} // namespace qmcut
