#ifndef UNIPOT_DESCRIPTOR_IO_HPP
#define UNIPOT_DESCRIPTOR_IO_HPP

/* Character descriptors as versioned JSON documents:
 *
 * {"schema": "unipot.descriptor", "version": 1,
 *  "ambient": {"kind": "SOOdd", "parameter": 2, "type": "+"},
 *  "orbits": [{"id": "u2", "degree": 2, "kind": "UnitaryOrbit", "mult": 1, "label": "[1]"}],
 *  "nu1": 0, "numinus1": 0, "minus1_type": "+",
 *  "labels": {"plus1": "0|-", "minus1": "-|-"},
 *  "odd_o_sign": "+"}
 *
 * "type" is present only for O^eps ambients; "minus1_type" only when the
 * -1 block is orthogonal; "odd_o_sign" only for Sp ambients. The plus1
 * label is a partition for unitary ambients and a symbol otherwise. */

#include "lusztig.hpp"

#include <json.hpp>

#include <string>

namespace unipot {

inline constexpr const char* descriptor_schema = "unipot.descriptor";
inline constexpr int descriptor_version = 1;

namespace detail {

inline Sign parse_sign(const std::string& s)
{
    if (s == "+")
        return Sign::Plus;
    if (s == "-")
        return Sign::Minus;
    throw domain_error("sign must be \"+\" or \"-\": " + s);
}

inline GroupKind parse_group_kind(const std::string& s)
{
    for (GroupKind k : {GroupKind::Sp, GroupKind::SOOdd, GroupKind::OEven, GroupKind::SOEven, GroupKind::Unitary,
                        GroupKind::GL})
        if (s == group_kind_name(k))
            return k;
    throw domain_error("unknown group kind: " + s);
}

inline OrbitKind parse_orbit_kind(const std::string& s)
{
    for (OrbitKind k : {OrbitKind::UnitaryOrbit, OrbitKind::SplitPairOrbit})
        if (s == orbit_kind_name(k))
            return k;
    throw domain_error("unknown orbit kind: " + s);
}

template <class T>
T field(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key))
        throw domain_error(std::string("descriptor is missing \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw domain_error(std::string("descriptor field \"") + key + "\" has the wrong type");
    }
}

} // namespace detail

inline nlohmann::json descriptor_to_json(const CharacterDescriptor& c)
{
    nlohmann::json j;
    j["schema"] = descriptor_schema;
    j["version"] = descriptor_version;
    const auto& a = c.ss.ambient;
    j["ambient"] = {{"kind", group_kind_name(a.kind)}, {"parameter", a.parameter}};
    if (a.type_sign)
        j["ambient"]["type"] = sign_text(*a.type_sign);
    j["orbits"] = nlohmann::json::array();
    for (const auto& [t, m] : c.ss.orbit_mults) {
        auto it = c.labels1.find(t);
        j["orbits"].push_back({{"id", t.id},
                               {"degree", t.degree},
                               {"kind", orbit_kind_name(t.kind)},
                               {"mult", m},
                               {"label", it == c.labels1.end() ? std::string("[]") : to_string(it->second)}});
    }
    j["nu1"] = c.ss.nu_plus1;
    j["numinus1"] = c.ss.nu_minus1;
    if (c.ss.minus1_type)
        j["minus1_type"] = sign_text(*c.ss.minus1_type);
    j["labels"] = {{"plus1", label_to_string(c.label_plus1)}, {"minus1", to_string(c.label_minus1)}};
    if (c.odd_o_sign)
        j["odd_o_sign"] = sign_text(*c.odd_o_sign);
    return j;
}

inline CharacterDescriptor descriptor_from_json(const nlohmann::json& j)
{
    using detail::field;
    if (!j.is_object())
        throw domain_error("descriptor must be a JSON object");
    if (field<std::string>(j, "schema") != descriptor_schema)
        throw domain_error("unexpected schema: " + field<std::string>(j, "schema"));
    if (field<int>(j, "version") != descriptor_version)
        throw domain_error("unsupported descriptor version " + std::to_string(field<int>(j, "version")));
    CharacterDescriptor c;
    const auto& a = j.at("ambient");
    std::optional<Sign> type;
    if (a.contains("type"))
        type = detail::parse_sign(field<std::string>(a, "type"));
    c.ss.ambient = make_group(detail::parse_group_kind(field<std::string>(a, "kind")), field<int>(a, "parameter"), type);
    if (j.contains("orbits"))
        for (const auto& o : j.at("orbits")) {
            OrbitToken t{field<std::string>(o, "id"), field<int>(o, "degree"),
                         detail::parse_orbit_kind(field<std::string>(o, "kind"))};
            if (c.ss.orbit_mults.count(t))
                throw domain_error("duplicate orbit id: " + t.id);
            c.ss.orbit_mults[t] = field<int>(o, "mult");
            c.labels1[t] = parse_partition(field<std::string>(o, "label"));
        }
    c.ss.nu_plus1 = j.value("nu1", 0);
    c.ss.nu_minus1 = j.value("numinus1", 0);
    if (j.contains("minus1_type"))
        c.ss.minus1_type = detail::parse_sign(field<std::string>(j, "minus1_type"));
    const auto& labels = j.at("labels");
    std::string plus = field<std::string>(labels, "plus1");
    if (c.ss.ambient.kind == GroupKind::Unitary)
        c.label_plus1 = parse_partition(plus);
    else
        c.label_plus1 = reduce(parse_symbol(plus));
    c.label_minus1 = labels.contains("minus1") ? reduce(parse_symbol(field<std::string>(labels, "minus1"))) : Symbol();
    if (j.contains("odd_o_sign"))
        c.odd_o_sign = detail::parse_sign(field<std::string>(j, "odd_o_sign"));
    validate(c);
    return c;
}

inline CharacterDescriptor parse_descriptor(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw domain_error(std::string("descriptor is not valid JSON: ") + e.what());
    }
    return descriptor_from_json(j);
}

} // namespace unipot

#endif
