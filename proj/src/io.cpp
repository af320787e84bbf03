#include "cycdiag/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace cyd {

using nlohmann::json;

AugSimplicialSet complex_from_json_text(const std::string& text)
{
    json j = json::parse(text);
    if (j.contains("builder"))
        return AugSimplicialSet::from_builder(j["builder"].get<std::string>());
    if (j.contains("facets")) {
        std::vector<std::vector<int>> facets;
        for (const auto& f : j["facets"])
            facets.push_back(f.get<std::vector<int>>());
        return AugSimplicialSet::from_facets(facets);
    }
    if (!j.contains("dims") || !j.contains("faces"))
        throw std::invalid_argument("complex JSON needs dims+faces, facets, or builder");

    AugSimplicialSet X;
    X.set_pointed(j.value("pointed", false));
    std::vector<std::pair<int, std::string>> all;
    for (auto it = j["dims"].begin(); it != j["dims"].end(); ++it) {
        int dim = std::stoi(it.key());
        for (const auto& name : it.value())
            all.emplace_back(dim, name.get<std::string>());
    }
    std::sort(all.begin(), all.end());
    for (const auto& [dim, name] : all)
        X.add_cell(dim, name);
    for (const auto& [dim, name] : all) {
        if (dim < 0)
            continue;
        CellRef c = X.cell_by_name(dim, name);
        auto it = j["faces"].find(name);
        if (it == j["faces"].end())
            throw std::invalid_argument("complex JSON: missing faces of '" + name + "'");
        const auto& lst = *it;
        if ((int)lst.size() != dim + 1)
            throw std::invalid_argument("complex JSON: '" + name + "' needs " +
                                        std::to_string(dim + 1) + " faces");
        for (int i = 0; i <= dim; ++i) {
            std::string fname = lst[i].get<std::string>();
            if (fname == "*") {
                X.set_face(dim, c.idx, i, -1);
                continue;
            }
            CellRef f = X.cell_by_name(dim - 1, fname);
            X.set_face(dim, c.idx, i, f.idx);
        }
    }
    X.validate();
    return X;
}

AugSimplicialSet load_complex(const std::string& spec)
{
    if (spec == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return complex_from_json_text(ss.str());
    }
    if (!spec.empty() && spec[0] == '{')
        return complex_from_json_text(spec);
    std::ifstream in(spec);
    if (in.good()) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return complex_from_json_text(ss.str());
    }
    return AugSimplicialSet::from_builder(spec);
}

}  // namespace cyd
