#include "hm/json_io.hpp"

#include <stdexcept>

namespace hm {

using nlohmann::json;

json measure_to_json(const Measure& mu) {
    json j = json::object();
    if (!mu.atoms().empty()) {
        json arr = json::array();
        for (const auto& a : mu.atoms()) arr.push_back({{"x", a.x}, {"w", a.w}});
        j["atoms"] = std::move(arr);
    }
    if (!mu.density().empty()) {
        json arr = json::array();
        for (const auto& p : mu.density()) arr.push_back({{"a", p.a}, {"b", p.b}, {"h", p.h}});
        j["density"] = std::move(arr);
    }
    return j;
}

Measure measure_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("measure spec must be a JSON object");
    std::vector<Atom> atoms;
    std::vector<DensityPiece> density;
    if (j.contains("atoms")) {
        for (const auto& a : j.at("atoms"))
            atoms.push_back({a.at("x").get<double>(), a.at("w").get<double>()});
    }
    if (j.contains("density")) {
        for (const auto& p : j.at("density"))
            density.push_back({p.at("a").get<double>(), p.at("b").get<double>(),
                               p.at("h").get<double>()});
    }
    return Measure::make(std::move(atoms), std::move(density));
}

json set_to_json(const IntervalUnion& e) {
    json arr = json::array();
    for (const auto& iv : e.parts()) arr.push_back({iv.left, iv.right});
    return json{{"intervals", std::move(arr)}};
}

IntervalUnion set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("intervals"))
        throw std::invalid_argument("set spec must contain \"intervals\"");
    std::vector<Interval> parts;
    for (const auto& iv : j.at("intervals")) {
        if (!iv.is_array() || iv.size() != 2)
            throw std::invalid_argument("each interval must be a [a,b] pair");
        parts.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
    }
    return IntervalUnion(std::move(parts));
}

}  // namespace hm
