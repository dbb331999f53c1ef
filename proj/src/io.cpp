#include "permpat/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace permpat::io {

Permutation load_permutation(std::string_view argument)
{
    const std::filesystem::path path{std::string(argument)};
    std::error_code ec;
    if (!argument.empty() && std::filesystem::is_regular_file(path, ec)) {
        std::ifstream in(path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return Permutation::parse(buffer.str());
    }
    return Permutation::parse(argument);
}

json to_json(const PointSet& points)
{
    json out = json::array();
    for (const auto& p : points.points)
        out.push_back({{"x", p.x}, {"y", p.y}, {"role", std::string(role_name(p.role))}});
    return out;
}

PointSet point_set_from_json(const json& doc)
{
    PointSet out;
    for (const auto& p : doc)
        out.add(p.at("x").get<std::int64_t>(), p.at("y").get<std::int64_t>(),
                p.contains("role") ? role_from_name(p.at("role").get<std::string>()) : PointRole::plain);
    return out;
}

namespace {

Graph graph_from_json(const json& doc, const char* size_key)
{
    Graph g;
    g.vertex_count = doc.at(size_key).get<int>();
    for (const auto& e : doc.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge entries must be [u, v] pairs");
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

json edges_to_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges)
        edges.push_back({u, v});
    return edges;
}

} // namespace

PsiInstance psi_instance_from_json(const json& doc)
{
    PsiInstance inst;
    try {
        inst.G = graph_from_json(doc.at("G"), "k");
        inst.H = graph_from_json(doc.at("H"), "n");
        inst.chi = doc.at("chi").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed PSI instance: ") + e.what());
    }
    inst.validate();
    return inst;
}

json to_json(const PsiInstance& instance)
{
    return {{"G", {{"k", instance.G.vertex_count}, {"edges", edges_to_json(instance.G)}}},
            {"H", {{"n", instance.H.vertex_count}, {"edges", edges_to_json(instance.H)}}},
            {"chi", instance.chi}};
}

PsiInstance load_psi_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open instance file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("instance file '" + path + "' is not valid JSON: " + e.what());
    }
    return psi_instance_from_json(doc);
}

json to_json(const PsiGadget& gadget)
{
    return {{"pattern_points", to_json(gadget.pattern_points)},
            {"text_points", to_json(gadget.text_points)},
            {"pattern", gadget.pattern.to_string()},
            {"text", gadget.text.to_string()},
            {"pattern_length", gadget.pattern.size()},
            {"text_length", gadget.text.size()},
            {"vertex_edge_mismatch", gadget.vertex_edge_mismatch}};
}

json to_json(const GapInstance& gap)
{
    return {{"branch", std::string(branch_name(gap.branch))},
            {"pattern", gap.pattern.to_string()},
            {"text", gap.text.to_string()},
            {"alpha", gap.alpha},
            {"k_prime", gap.k_prime},
            {"n_prime", gap.n_prime},
            {"initial_block_pattern_len", gap.initial_block_pattern_len},
            {"initial_block_text_len", gap.initial_block_text_len}};
}

json to_json(const BoundsReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"statement", c.statement}, {"holds", c.holds}});
    return {{"checks", checks}, {"all_hold", report.all_hold()}};
}

} // namespace permpat::io
