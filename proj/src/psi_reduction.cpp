#include "permpat/psi_reduction.hpp"
#include "permpat/matching.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace permpat {

void Graph::validate() const
{
    if (vertex_count < 0)
        throw std::invalid_argument("graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > vertex_count || v > vertex_count)
            throw std::invalid_argument("graph: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} outside 1.." + std::to_string(vertex_count));
        if (u == v)
            throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        if (!seen.insert(std::minmax(u, v)).second)
            throw std::invalid_argument("graph: duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
}

bool Graph::has_edge(int u, int v) const
{
    return std::any_of(edges.begin(), edges.end(),
                       [&](const auto& e) { return (e.first == u && e.second == v) || (e.first == v && e.second == u); });
}

void PsiInstance::validate() const
{
    if (G.vertex_count < 1)
        throw std::invalid_argument("psi instance: G needs at least one vertex");
    if (H.vertex_count < 1)
        throw std::invalid_argument("psi instance: H needs at least one vertex");
    G.validate();
    H.validate();
    if (chi.size() != static_cast<std::size_t>(H.vertex_count))
        throw std::invalid_argument("psi instance: chi has " + std::to_string(chi.size()) + " entries for " +
                                    std::to_string(H.vertex_count) + " vertices");
    for (int c : chi)
        if (c < 1 || c > G.vertex_count)
            throw std::invalid_argument("psi instance: colour " + std::to_string(c) + " outside 1.." +
                                        std::to_string(G.vertex_count));
}

std::vector<int> PsiInstance::color_class(int i) const
{
    std::vector<int> out;
    for (int v = 1; v <= H.vertex_count; ++v)
        if (chi[static_cast<std::size_t>(v - 1)] == i)
            out.push_back(v);
    return out;
}

std::size_t PsiInstance::bichromatic_edge_count() const
{
    return static_cast<std::size_t>(std::count_if(H.edges.begin(), H.edges.end(), [&](const auto& e) {
        return chi[static_cast<std::size_t>(e.first - 1)] != chi[static_cast<std::size_t>(e.second - 1)];
    }));
}

RankTable ranks(const PsiInstance& instance)
{
    instance.validate();
    RankTable table;
    table.rank.assign(static_cast<std::size_t>(instance.n()), 0);
    table.reverse_rank.assign(static_cast<std::size_t>(instance.n()), 0);
    int before = 0; // sizes of the classes with smaller colour
    for (int i = 1; i <= instance.k(); ++i) {
        const auto cls = instance.color_class(i);
        const int size = static_cast<int>(cls.size());
        for (int j = 1; j <= size; ++j) {
            const auto v = static_cast<std::size_t>(cls[static_cast<std::size_t>(j - 1)] - 1);
            table.rank[v] = before + j - 1;
            table.reverse_rank[v] = before + size - j;
        }
        before += size;
    }
    return table;
}

/*
 * Gadget geometry. The pattern encodes G's adjacency matrix on a k x k grid:
 *   anchors     (1, 2k+2), (2k+2, 1)
 *   A_i         (2i, 3i+2k), (2i+1, 3i+2k+2)       rows, left of the grid
 *   B_i         (3i+2k, 2i), (3i+2k+2, 2i+1)       columns, below the grid
 *   cell (i,j)  (3i+2k+1, 3j+2k+1)                  diagonal, and both orientations of each edge
 * The text does the same for H on an n x n grid indexed by the 1-based rank
 * r = rank+1 and reverse rank s = reverse_rank+1, with offset 2n:
 *   anchors     (1, 2n+2), (2n+2, 1)
 *   C           (2s, 3r+2n), (2s+1, 3r+2n+2)
 *   D           (3r+2n, 2s), (3r+2n+2, 2s+1)
 *   cell        (3r+2n+1, 3r'+2n+1)                 diagonal, and bichromatic edges
 * Within a colour class the C pairs (and the D pairs) run in decreasing
 * order, so each class forms a co-layered permutation of single pairs.
 */

PointSet build_pattern_points(const Graph& G)
{
    G.validate();
    const std::int64_t k = G.vertex_count;
    PointSet P;
    P.add(1, 2 * k + 2, PointRole::anchor);
    P.add(2 * k + 2, 1, PointRole::anchor);
    for (std::int64_t i = 1; i <= k; ++i) {
        P.add(2 * i, 3 * i + 2 * k, PointRole::a_pair);
        P.add(2 * i + 1, 3 * i + 2 * k + 2, PointRole::a_pair);
        P.add(3 * i + 2 * k, 2 * i, PointRole::b_pair);
        P.add(3 * i + 2 * k + 2, 2 * i + 1, PointRole::b_pair);
        P.add(3 * i + 2 * k + 1, 3 * i + 2 * k + 1, PointRole::diagonal);
    }
    for (auto [a, b] : G.edges) {
        const std::int64_t i = a;
        const std::int64_t j = b;
        P.add(3 * i + 2 * k + 1, 3 * j + 2 * k + 1, PointRole::cell);
        P.add(3 * j + 2 * k + 1, 3 * i + 2 * k + 1, PointRole::cell);
    }
    return P;
}

PointSet build_text_points(const PsiInstance& instance)
{
    const RankTable table = ranks(instance);
    const std::int64_t n = instance.n();
    auto r = [&](int v) { return static_cast<std::int64_t>(table.rank[static_cast<std::size_t>(v - 1)]) + 1; };
    auto s = [&](int v) {
        return static_cast<std::int64_t>(table.reverse_rank[static_cast<std::size_t>(v - 1)]) + 1;
    };

    PointSet T;
    T.add(1, 2 * n + 2, PointRole::anchor);
    T.add(2 * n + 2, 1, PointRole::anchor);
    for (int v = 1; v <= instance.n(); ++v) {
        T.add(2 * s(v), 3 * r(v) + 2 * n, PointRole::c_pair);
        T.add(2 * s(v) + 1, 3 * r(v) + 2 * n + 2, PointRole::c_pair);
        T.add(3 * r(v) + 2 * n, 2 * s(v), PointRole::d_pair);
        T.add(3 * r(v) + 2 * n + 2, 2 * s(v) + 1, PointRole::d_pair);
        T.add(3 * r(v) + 2 * n + 1, 3 * r(v) + 2 * n + 1, PointRole::diagonal);
    }
    for (auto [u, w] : instance.H.edges) {
        // monochromatic edges have no cell
        if (instance.chi[static_cast<std::size_t>(u - 1)] == instance.chi[static_cast<std::size_t>(w - 1)])
            continue;
        T.add(3 * r(u) + 2 * n + 1, 3 * r(w) + 2 * n + 1, PointRole::cell);
        T.add(3 * r(w) + 2 * n + 1, 3 * r(u) + 2 * n + 1, PointRole::cell);
    }
    return T;
}

PsiGadget reduce_psi(const PsiInstance& instance)
{
    instance.validate();
    PsiGadget g;
    g.pattern_points = build_pattern_points(instance.G);
    g.text_points = build_text_points(instance);
    g.pattern = reduce(g.pattern_points);
    g.text = reduce(g.text_points);
    g.vertex_edge_mismatch = static_cast<std::size_t>(instance.G.vertex_count) != instance.G.edges.size();
    return g;
}

std::optional<std::vector<int>> solve_psi_bruteforce(const PsiInstance& instance)
{
    instance.validate();
    const int k = instance.k();
    std::vector<std::vector<int>> classes;
    for (int i = 1; i <= k; ++i) {
        classes.push_back(instance.color_class(i));
        if (classes.back().empty())
            return std::nullopt;
    }

    // adjacency matrix of H
    const auto n = static_cast<std::size_t>(instance.n());
    std::vector<bool> adj((n + 1) * (n + 1), false);
    for (auto [u, v] : instance.H.edges) {
        adj[static_cast<std::size_t>(u) * (n + 1) + static_cast<std::size_t>(v)] = true;
        adj[static_cast<std::size_t>(v) * (n + 1) + static_cast<std::size_t>(u)] = true;
    }

    std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
    std::vector<int> phi(static_cast<std::size_t>(k));
    while (true) {
        for (std::size_t i = 0; i < choice.size(); ++i)
            phi[i] = classes[i][choice[i]];
        const bool ok = std::all_of(instance.G.edges.begin(), instance.G.edges.end(), [&](const auto& e) {
            const auto a = static_cast<std::size_t>(phi[static_cast<std::size_t>(e.first - 1)]);
            const auto b = static_cast<std::size_t>(phi[static_cast<std::size_t>(e.second - 1)]);
            return adj[a * (n + 1) + b];
        });
        if (ok)
            return phi;
        // odometer over the product of colour classes
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == classes[i].size())
            choice[i++] = 0;
        if (i == choice.size())
            return std::nullopt;
    }
}

PsiVerification verify_reduction(const PsiInstance& instance)
{
    const PsiGadget gadget = reduce_psi(instance);
    if (gadget.text.size() > kMaxVerifiedTextLength)
        throw std::length_error("instance too large for oracle verification (text length " +
                                std::to_string(gadget.text.size()) + " > " +
                                std::to_string(kMaxVerifiedTextLength) + ")");
    PsiVerification report;
    report.witness = solve_psi_bruteforce(instance);
    report.psi_answer = report.witness.has_value();
    report.ppm_answer = contains_left_aligned(gadget.pattern, gadget.text);
    report.pattern_length = gadget.pattern.size();
    report.text_length = gadget.text.size();
    return report;
}

} // namespace permpat
