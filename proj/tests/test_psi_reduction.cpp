#include <doctest.h>

#include "permpat/matching.hpp"
#include "permpat/psi_reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace permpat;

namespace {

PsiInstance make(int k, std::vector<std::pair<int, int>> g_edges, int n, std::vector<std::pair<int, int>> h_edges,
                 std::vector<int> chi)
{
    PsiInstance inst;
    inst.G = {k, std::move(g_edges)};
    inst.H = {n, std::move(h_edges)};
    inst.chi = std::move(chi);
    return inst;
}

// Longest increasing subsequence among the elements after position 0 with a value below p[0].
std::size_t lis_below_first(const Permutation& p)
{
    std::vector<int> tails;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] > p[0])
            continue;
        auto it = std::lower_bound(tails.begin(), tails.end(), p[i]);
        if (it == tails.end())
            tails.push_back(p[i]);
        else
            *it = p[i];
    }
    return tails.size();
}

std::vector<Point> with_role(const PointSet& ps, PointRole role)
{
    std::vector<Point> out;
    for (const auto& p : ps.points)
        if (p.role == role)
            out.push_back(p);
    return out;
}

bool pairs_increasing(std::vector<Point> pts)
{
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].y <= pts[i - 1].y)
            return false;
    return true;
}

} // namespace

TEST_CASE("validation")
{
    CHECK_THROWS_AS(make(2, {{1, 1}}, 1, {}, {1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make(2, {{1, 2}, {2, 1}}, 1, {}, {1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make(2, {{1, 3}}, 1, {}, {1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make(2, {}, 2, {}, {1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make(2, {}, 1, {}, {3}).validate(), std::invalid_argument);
    CHECK_NOTHROW(make(2, {{1, 2}}, 2, {{1, 2}}, {1, 2}).validate());
}

TEST_CASE("rank table examples")
{
    auto t = ranks(make(2, {}, 3, {}, {1, 1, 2}));
    CHECK(t.rank == std::vector<int>{0, 1, 2});
    CHECK(t.reverse_rank == std::vector<int>{1, 0, 2});

    t = ranks(make(3, {}, 3, {}, {1, 2, 3}));
    CHECK(t.rank == std::vector<int>{0, 1, 2});
    CHECK(t.reverse_rank == std::vector<int>{0, 1, 2});

    t = ranks(make(1, {}, 3, {}, {1, 1, 1}));
    CHECK(t.rank == std::vector<int>{0, 1, 2});
    CHECK(t.reverse_rank == std::vector<int>{2, 1, 0});

    t = ranks(make(2, {}, 3, {}, {2, 1, 2}));
    CHECK(t.rank == std::vector<int>{1, 0, 2});
    CHECK(t.reverse_rank == std::vector<int>{2, 0, 1});
}

TEST_CASE("rank tables are bijections")
{
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> chi(static_cast<std::size_t>(n), 1);
        while (true) {
            const auto t = ranks(make(3, {}, n, {}, chi));
            std::set<int> r(t.rank.begin(), t.rank.end()), s(t.reverse_rank.begin(), t.reverse_rank.end());
            REQUIRE(r.size() == static_cast<std::size_t>(n));
            REQUIRE(s.size() == static_cast<std::size_t>(n));
            REQUIRE(*r.rbegin() == n - 1);
            REQUIRE(*s.rbegin() == n - 1);
            std::size_t i = 0;
            while (i < chi.size() && ++chi[i] == 4)
                chi[i++] = 1;
            if (i == chi.size())
                break;
        }
    }
}

TEST_CASE("pattern gadget sizes and anchors")
{
    const Graph triangle{3, {{1, 2}, {2, 3}, {1, 3}}};
    const auto P = build_pattern_points(triangle);
    CHECK(P.size() == 23);
    const auto anchors = with_role(P, PointRole::anchor);
    REQUIRE(anchors.size() == 2);
    CHECK(anchors[0] == Point{1, 8, PointRole::anchor});
    CHECK(anchors[1] == Point{8, 1, PointRole::anchor});
    const auto a = with_role(P, PointRole::a_pair);
    CHECK(a[0] == Point{2, 9, PointRole::a_pair});
    CHECK(a[1] == Point{3, 11, PointRole::a_pair});

    CHECK(build_pattern_points(Graph{1, {}}).size() == 7);
    CHECK(build_pattern_points(Graph{2, {{1, 2}}}).size() == build_pattern_points(Graph{2, {}}).size() + 2);
}

TEST_CASE("text gadget sizes")
{
    CHECK(build_text_points(make(2, {{1, 2}}, 2, {{1, 2}}, {1, 2})).size() == 14);
    // monochromatic edge contributes nothing
    CHECK(build_text_points(make(2, {}, 2, {{1, 2}}, {1, 1})).size() == 12);
}

TEST_CASE("gadget structure")
{
    const auto inst = make(3, {{1, 2}, {2, 3}}, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}, {1, 2, 2, 3, 1});
    const auto P = build_pattern_points(inst.G);
    CHECK(pairs_increasing(with_role(P, PointRole::a_pair)));
    CHECK(pairs_increasing(with_role(P, PointRole::b_pair)));

    // C pairs of one colour class form a co-layered permutation of pairs
    const auto T = build_text_points(inst);
    const auto table = ranks(inst);
    for (int c = 1; c <= inst.k(); ++c) {
        std::vector<long long> ys;
        std::vector<Point> cls;
        for (const auto& p : with_role(T, PointRole::c_pair))
            for (int v : inst.color_class(c))
                if (p.y == 3 * (table.rank[static_cast<std::size_t>(v - 1)] + 1) + 2 * inst.n() ||
                    p.y == 3 * (table.rank[static_cast<std::size_t>(v - 1)] + 1) + 2 * inst.n() + 2)
                    cls.push_back(p);
        std::sort(cls.begin(), cls.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
        for (const auto& p : cls)
            ys.push_back(p.y);
        const std::vector<std::size_t> runs(inst.color_class(c).size(), 2);
        CHECK(standardize(ys) == colayered(runs));
    }
}

TEST_CASE("anchor forcing run lengths")
{
    const auto inst = make(3, {{1, 2}}, 5, {{1, 4}, {2, 5}}, {1, 2, 3, 3, 1});
    const auto g = reduce_psi(inst);
    CHECK(lis_below_first(g.pattern) == 7);
    CHECK(lis_below_first(g.text) == 7);

    // an empty colour class shortens the text run
    const auto sparse = reduce_psi(make(3, {}, 3, {}, {1, 1, 3}));
    CHECK(lis_below_first(sparse.text) == 5);
}

TEST_CASE("reduction examples")
{
    auto yes = verify_reduction(make(2, {{1, 2}}, 2, {{1, 2}}, {1, 2}));
    CHECK(yes.psi_answer);
    CHECK(yes.ppm_answer);
    REQUIRE(yes.witness.has_value());
    CHECK(*yes.witness == std::vector<int>{1, 2});

    auto no = verify_reduction(make(2, {{1, 2}}, 2, {}, {1, 2}));
    CHECK_FALSE(no.psi_answer);
    CHECK_FALSE(no.ppm_answer);

    auto empty_class = verify_reduction(make(2, {}, 2, {}, {1, 1}));
    CHECK_FALSE(empty_class.psi_answer);
    CHECK_FALSE(empty_class.ppm_answer);

    auto path = verify_reduction(make(3, {{1, 2}, {2, 3}}, 4, {{1, 2}, {2, 4}, {3, 4}}, {1, 2, 2, 3}));
    CHECK(path.psi_answer);
    CHECK(path.agree());
    CHECK(*path.witness == std::vector<int>{1, 2, 4});

    CHECK(reduce_psi(make(2, {{1, 2}}, 1, {}, {1})).vertex_edge_mismatch);
}

TEST_CASE("oversize instances are refused")
{
    const auto big = make(1, {}, 8, {}, std::vector<int>(8, 1));
    CHECK(reduce_psi(big).text.size() == 42);
    CHECK_THROWS_AS(verify_reduction(big), std::length_error);
}

TEST_CASE("reduction agrees with brute force on small instances")
{
    // k = 2 with G a single edge or no edge, every H on 3 vertices, every colouring
    const std::vector<std::pair<int, int>> slots{{1, 2}, {1, 3}, {2, 3}};
    for (int g_mask = 0; g_mask < 2; ++g_mask)
        for (int h_mask = 0; h_mask < 8; ++h_mask)
            for (int c = 0; c < 8; ++c) {
                std::vector<std::pair<int, int>> he;
                for (int b = 0; b < 3; ++b)
                    if (h_mask & (1 << b))
                        he.push_back(slots[static_cast<std::size_t>(b)]);
                std::vector<int> chi{1 + (c & 1), 1 + ((c >> 1) & 1), 1 + ((c >> 2) & 1)};
                std::vector<std::pair<int, int>> ge;
                if (g_mask)
                    ge.push_back({1, 2});
                const auto r = verify_reduction(make(2, ge, 3, he, chi));
                REQUIRE(r.agree());
            }
}
