#pragma once

// JSON form of sampled functions:
// {"d", "n", "x_max", "k": [...], "domain": "space"|"frequency", "values": [re0, im0, re1, im1, ...]}

#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "grid.hpp"

namespace dunkl {

inline nlohmann::json to_json(const SampledFunction& f) {
    const auto& g = f.grid();
    std::vector<double> flat;
    flat.reserve(2 * f.size());
    for (const auto& v : f.values()) {
        flat.push_back(v.real());
        flat.push_back(v.imag());
    }
    return {{"d", g.d()},      {"n", g.n()},   {"x_max", g.x_max()}, {"k", g.setup().k()},
            {"domain", to_string(f.domain())}, {"values", std::move(flat)}};
}

inline SampledFunction function_from_json(const nlohmann::json& j) {
    const int d = j.at("d").get<int>();
    auto k = j.at("k").get<std::vector<double>>();
    if (k.size() == 1 && d > 1) k.assign(d, k[0]);
    if (static_cast<int>(k.size()) != d) throw std::invalid_argument("function json: k has the wrong length");
    auto grid = make_grid(ReflectionSetup(k), j.at("n").get<int>(), j.at("x_max").get<double>());
    const auto dom_name = j.value("domain", std::string("space"));
    if (dom_name != "space" && dom_name != "frequency") throw std::invalid_argument("function json: unknown domain");
    const auto flat = j.at("values").get<std::vector<double>>();
    if (flat.size() == grid->size()) {
        // real samples are accepted as is
        std::vector<cplx> v(flat.begin(), flat.end());
        return {grid, std::move(v), dom_name == "space" ? Domain::space : Domain::frequency};
    }
    if (flat.size() != 2 * grid->size()) throw std::invalid_argument("function json: value count does not match grid");
    std::vector<cplx> v(grid->size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = {flat[2 * i], flat[2 * i + 1]};
    return {grid, std::move(v), dom_name == "space" ? Domain::space : Domain::frequency};
}

inline SampledFunction read_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return function_from_json(nlohmann::json::parse(in));
}

inline void write_function(const std::string& path, const SampledFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_json(f).dump() << '\n';
}

}  // namespace dunkl
