#include "cubefan/json_io.hpp"

namespace cubefan {

nlohmann::json fan_to_json(const Fan& f) {
    nlohmann::json rays = nlohmann::json::array();
    for (std::size_t i = 0; i < f.labels.size(); ++i)
        rays.push_back({{"label", label_to_string(f.labels[i])}, {"vector", f.rays[i]}});

    nlohmann::json cones = nlohmann::json::array();
    for (const std::vector<int>& cone : f.maximal_cones) {
        nlohmann::json labels = nlohmann::json::array();
        for (int id : cone) labels.push_back(label_to_string(f.labels[id]));
        cones.push_back(std::move(labels));
    }

    return {{"n", f.graph.node_count()}, {"rays", std::move(rays)},
            {"maximal_cones", std::move(cones)}};
}

nlohmann::json wall_to_json(const Fan& f, const Wall& w) {
    nlohmann::json base = nlohmann::json::array();
    for (int id : w.base) base.push_back(label_to_string(f.labels[id]));
    return {{"base", std::move(base)},
            {"neighbors", {label_to_string(f.labels[w.neighbors[0]]),
                           label_to_string(f.labels[w.neighbors[1]])}},
            {"coefficients", w.coefficients},
            {"number", w.number}};
}

nlohmann::json walls_to_json(const Fan& f, const std::vector<Wall>& walls) {
    nlohmann::json out = nlohmann::json::array();
    for (const Wall& w : walls) out.push_back(wall_to_json(f, w));
    return out;
}

nlohmann::json census_record_to_json(const CensusRecord& r) {
    return {{"graph6", r.graph6},
            {"n", r.n},
            {"edges", r.edges},
            {"tubes", r.tube_count},
            {"cones", r.cone_count},
            {"walls", r.wall_count},
            {"min_number", r.min_number},
            {"fan_class", fan_class_name(r.fan_class)},
            {"graph_class", fan_class_name(r.graph_class)},
            {"agree", r.agree}};
}

} // namespace cubefan
