#include <doctest.h>

#include "permpat/io.hpp"
#include "permpat/psi_reduction.hpp"

#include <stdexcept>
#include <string>

using namespace permpat;
using permpat::io::json;

namespace {

std::string data(const char* name)
{
    return std::string(PERMPAT_TEST_DATA) + "/" + name;
}

} // namespace

TEST_CASE("load_permutation from file or inline")
{
    CHECK(io::load_permutation(data("text_24153.txt")) == Permutation{2, 4, 1, 5, 3});
    CHECK(io::load_permutation("312") == Permutation{3, 1, 2});
    CHECK_THROWS_AS(io::load_permutation("1 1 2"), std::invalid_argument);
}

TEST_CASE("point set round trip")
{
    const auto pts = build_pattern_points(Graph{2, {{1, 2}}});
    const json doc = io::to_json(pts);
    CHECK(doc.size() == pts.size());
    CHECK(doc[0]["role"] == "anchor");
    const auto back = io::point_set_from_json(json::parse(doc.dump()));
    CHECK(back.points == pts.points);
    CHECK(io::point_set_from_json(json::parse(R"([{"x": 1, "y": 2}])")).points[0].role == PointRole::plain);
}

TEST_CASE("psi instance round trip")
{
    const auto inst = io::load_psi_instance(data("psi_yes.json"));
    CHECK(inst.k() == 2);
    CHECK(inst.n() == 3);
    CHECK(inst.chi == std::vector<int>{1, 1, 2});
    const auto again = io::psi_instance_from_json(json::parse(io::to_json(inst).dump()));
    CHECK(again.G.edges == inst.G.edges);
    CHECK(again.H.edges == inst.H.edges);
    CHECK(again.chi == inst.chi);
    CHECK(verify_reduction(inst).psi_answer);
    CHECK_FALSE(verify_reduction(io::load_psi_instance(data("psi_no.json"))).psi_answer);
}

TEST_CASE("malformed psi input")
{
    CHECK_THROWS_AS(io::load_psi_instance(data("missing.json")), std::invalid_argument);
    CHECK_THROWS_AS(io::load_psi_instance(data("psi_bad_colour.json")), std::invalid_argument);
    CHECK_THROWS_AS(io::load_psi_instance(data("text_24153.txt")), std::invalid_argument);
    CHECK_THROWS_AS(io::psi_instance_from_json(json::parse(R"({"G": {"k": 1}})")), std::invalid_argument);
    CHECK_THROWS_AS(io::psi_instance_from_json(json::parse(R"({"G": {"k": 2, "edges": [[1]]}, "H": {"n": 1},
                                                              "chi": [1]})")),
                    std::invalid_argument);
}

TEST_CASE("report records")
{
    const auto gap = build_core(Permutation{2, 1}, Permutation{2, 1}, 1);
    const json g = io::to_json(gap);
    CHECK(g["branch"] == "inflated");
    CHECK(g["pattern"] == "2 3 1");
    CHECK(g["n_prime"] == 5);
    CHECK(g["initial_block_text_len"] == 4);

    const json b = io::to_json(check_size_bounds(3, 2, 2));
    CHECK(b["all_hold"] == true);
    CHECK(b["checks"].size() == 2);

    const json p = io::to_json(reduce_psi(io::load_psi_instance(data("psi_single.json"))));
    CHECK(p["pattern_length"] == 7);
    CHECK(p["text_length"] == 7);
}
