#pragma once

#include "permpat/permutation.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace permpat {

/// Simple undirected graph on vertices 1..vertex_count.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    /// Throws std::invalid_argument on loops, duplicates or out-of-range endpoints.
    void validate() const;
    bool has_edge(int u, int v) const;
};

/**
 * Partitioned subgraph isomorphism instance: graphs G (k vertices) and H
 * (n vertices) plus a colouring chi of H's vertices by G's vertices.
 * chi[v - 1] is the colour of H-vertex v. Colour classes may be empty.
 */
struct PsiInstance {
    Graph G;
    Graph H;
    std::vector<int> chi;

    void validate() const;
    int k() const { return G.vertex_count; }
    int n() const { return H.vertex_count; }
    /// Vertices of colour i in ascending id order (i in 1..k).
    std::vector<int> color_class(int i) const;
    /// Number of H-edges joining differently coloured vertices.
    std::size_t bichromatic_edge_count() const;
};

/// rank[v-1] and reverse_rank[v-1] for each H-vertex v; both are permutations of 0..n-1.
struct RankTable {
    std::vector<int> rank;
    std::vector<int> reverse_rank;
};

struct PsiGadget {
    PointSet pattern_points;
    PointSet text_points;
    Permutation pattern;
    Permutation text;
    /// |V_G| != |E_G|; informational only, the construction does not need it.
    bool vertex_edge_mismatch = false;
};

/// Vertices inside a colour class are ordered by ascending id.
RankTable ranks(const PsiInstance& instance);

PointSet build_pattern_points(const Graph& G);
PointSet build_text_points(const PsiInstance& instance);
PsiGadget reduce_psi(const PsiInstance& instance);

/// phi[i-1] is the H-vertex chosen for G-vertex i.
std::optional<std::vector<int>> solve_psi_bruteforce(const PsiInstance& instance);

struct PsiVerification {
    bool psi_answer = false;
    bool ppm_answer = false;
    std::optional<std::vector<int>> witness;
    std::size_t pattern_length = 0;
    std::size_t text_length = 0;

    bool agree() const { return psi_answer == ppm_answer; }
};

/// Largest gadget text that verify_reduction accepts.
inline constexpr std::size_t kMaxVerifiedTextLength = 40;

/// Runs the brute-force solver and left-aligned detection on the gadget.
/// Throws std::length_error when the gadget text exceeds kMaxVerifiedTextLength.
PsiVerification verify_reduction(const PsiInstance& instance);

} // namespace permpat
