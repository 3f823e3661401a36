#include "equilocal/fixed_data_io.hpp"

#include <json.hpp>

namespace equilocal {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* a : allowed)
            if (it.key() == a)
                known = true;
        if (!known)
            throw ParseError(std::string("unknown field \"") + it.key() + "\" in " + where);
    }
}

std::uint32_t read_uint(const json& v, const char* what, std::uint64_t max) {
    if (!v.is_number_unsigned())
        throw ParseError(std::string(what) + " must be a non-negative integer");
    const std::uint64_t u = v.get<std::uint64_t>();
    if (u > max)
        throw ParseError(std::string(what) + " out of range");
    return static_cast<std::uint32_t>(u);
}

Character read_character(const std::string& key, std::size_t k, bool allow_zero) {
    if (key.size() != k)
        throw ParseError("bitstring \"" + key + "\" does not have length k");
    Character chi = Character::from_bitstring(key);
    if (!allow_zero && chi.is_zero())
        throw ParseError("the zero bitstring is not allowed here");
    return chi;
}

Component read_component(const json& obj, std::size_t k) {
    if (!obj.is_object())
        throw ParseError("component entries must be objects");
    reject_unknown_fields(obj, {"dim", "normal", "char_numbers"}, "a component");
    if (!obj.contains("dim") || !obj.contains("normal"))
        throw ParseError("components need \"dim\" and \"normal\"");

    Component c(k);
    c.dim = read_uint(obj.at("dim"), "\"dim\"", 0xFFFFFFFFull);

    const json& normal = obj.at("normal");
    if (!normal.is_object())
        throw ParseError("\"normal\" must be an object");
    for (auto it = normal.begin(); it != normal.end(); ++it) {
        const Character rho = read_character(it.key(), k, /*allow_zero=*/false);
        const std::uint32_t q = read_uint(it.value(), "a normal dimension", 0xFFFFFFFFull);
        if (q == 0)
            throw ParseError("normal dimensions must be positive (omit zero entries)");
        if (c.normal.at(rho) != 0)
            throw ParseError("duplicate character in \"normal\"");
        c.normal.set(rho, q);
    }

    if (obj.contains("char_numbers")) {
        const json& table = obj.at("char_numbers");
        if (!table.is_array())
            throw ParseError("\"char_numbers\" must be an array");
        CharNumberTable t(k);
        for (const json& entry : table) {
            if (!entry.is_object())
                throw ParseError("table entries must be objects");
            reject_unknown_fields(entry, {"partitions", "value"}, "a table entry");
            if (!entry.contains("partitions") || !entry.contains("value"))
                throw ParseError("table entries need \"partitions\" and \"value\"");
            const json& parts = entry.at("partitions");
            if (!parts.is_object())
                throw ParseError("\"partitions\" must be an object");
            PartitionTuple omega(k);
            for (auto it = parts.begin(); it != parts.end(); ++it) {
                const Character rho = read_character(it.key(), k, /*allow_zero=*/false);
                if (!it.value().is_array())
                    throw ParseError("partitions must be arrays of integers");
                std::vector<std::uint32_t> partition;
                for (const json& p : it.value()) {
                    const std::uint32_t v = read_uint(p, "a partition part", 0xFFFFFFFFull);
                    if (v == 0)
                        throw ParseError("partition parts must be positive");
                    partition.push_back(v);
                }
                if (!partition.empty())
                    omega.set(rho, std::move(partition));
            }
            const std::uint32_t value = read_uint(entry.at("value"), "\"value\"", 1);
            if (value == 1) {
                if (t.value(omega))
                    throw ParseError("duplicate partition tuple in \"char_numbers\"");
                t.set(omega, true);
            }
        }
        c.char_numbers = std::move(t);
    }
    return c;
}

} // namespace

FixedData fixed_data_from_json(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ParseError("fixed data must be a JSON object");
    reject_unknown_fields(root, {"k", "n", "components"}, "the top-level object");
    if (!root.contains("k") || !root.contains("n") || !root.contains("components"))
        throw ParseError("fixed data needs \"k\", \"n\" and \"components\"");

    FixedData fd;
    fd.k = read_uint(root.at("k"), "\"k\"", kMaxRank);
    if (fd.k < 1)
        throw ParseError("\"k\" must be at least 1");
    fd.n = read_uint(root.at("n"), "\"n\"", 0xFFFFFFFFull);

    const json& comps = root.at("components");
    if (!comps.is_array())
        throw ParseError("\"components\" must be an array");
    for (const json& c : comps)
        fd.components.push_back(read_component(c, fd.k));
    return fd;
}

std::string to_json_string(const FixedData& fd, int indent) {
    json root;
    root["k"] = fd.k;
    root["n"] = fd.n;
    root["components"] = json::array();
    for (const Component& c : fd.components) {
        json comp;
        comp["dim"] = c.dim;
        comp["normal"] = json::object();
        for (const auto& [rho, q] : c.normal.entries())
            comp["normal"][rho.bitstring()] = q;
        if (c.char_numbers) {
            comp["char_numbers"] = json::array();
            for (const PartitionTuple& omega : c.char_numbers->support()) {
                json entry;
                entry["partitions"] = json::object();
                for (const auto& [rho, parts] : omega.entries())
                    entry["partitions"][rho.bitstring()] = parts;
                entry["value"] = 1;
                comp["char_numbers"].push_back(std::move(entry));
            }
        }
        root["components"].push_back(std::move(comp));
    }
    return root.dump(indent);
}

} // namespace equilocal
