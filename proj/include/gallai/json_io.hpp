#ifndef GALLAI_JSON_IO_HPP
#define GALLAI_JSON_IO_HPP

#include <json.hpp>

#include "gallai/decomposition.hpp"
#include "gallai/io.hpp"
#include "gallai/transforms.hpp"

namespace gallai {

using json = nlohmann::json;

inline json decomposition_to_json(const PathDecomposition& d) {
    PathDecomposition c = d;
    c.canonicalize();
    json paths = json::array();
    for (const PathSeq& p : c.paths) paths.push_back(p.vertices);
    return json{{"paths", paths}};
}

inline PathDecomposition decomposition_from_json(const json& j, int host_n) {
    PathDecomposition d;
    for (const auto& arr : j.at("paths")) d.paths.emplace_back(arr.get<std::vector<int>>());
    d.recount(host_n);
    return d;
}

inline json certificate_to_json(const TransformationCertificate& c) {
    json added = json::array();
    for (const Edge& e : c.added_edges) added.push_back({e.first, e.second});
    return json{{"base", emit_graph6(c.base_graph)},
                {"pivot", c.pivot},
                {"direction", to_string(c.direction)},
                {"added", added},
                {"before", decomposition_to_json(c.before)},
                {"after", decomposition_to_json(c.after)}};
}

inline TransformationCertificate certificate_from_json(const json& j) {
    TransformationCertificate c;
    c.base_graph = parse_graph6(j.at("base").get<std::string>());
    c.pivot = j.at("pivot").get<int>();
    c.direction = j.at("direction").get<std::string>() == "towards" ? Direction::Towards
                                                                    : Direction::Outwards;
    for (const auto& arr : j.at("added"))
        c.added_edges.push_back(make_edge(arr[0].get<int>(), arr[1].get<int>()));
    int ext_n = c.base_graph.n;
    c.before = decomposition_from_json(j.at("before"), c.base_graph.n);
    c.after = decomposition_from_json(j.at("after"), ext_n);
    return c;
}

}  // namespace gallai

#endif
