#include <doctest.h>

#include "permpat/gap_reduction.hpp"
#include "permpat/matching.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

using namespace permpat;

TEST_CASE("rational")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK(Rational::parse("49/100").den() == 100);
    CHECK(Rational::parse("3") == Rational(3, 1));
    CHECK(Rational::parse("2/6").to_string() == "1/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
}

TEST_CASE("compare_powers")
{
    CHECK(compare_powers({{2, Rational(1, 2)}}, {{3, Rational(1, 3)}}) == -1);
    CHECK(compare_powers({{4, Rational(1, 2)}}, {{2, Rational(1, 1)}}) == 0);
    CHECK(compare_powers({{2, Rational(3, 1)}}, {{3, Rational(2, 1)}}) == -1);
    CHECK(compare_powers({{5, Rational(1, 1)}, {5, Rational(-1, 1)}}, {{1, Rational(7, 1)}}) == 0);
    CHECK(compare_powers({{10, Rational(-1, 2)}}, {{1, Rational(1, 1)}}) == -1);
    CHECK(compare_powers({{2, Rational(1, 2)}, {8, Rational(1, 2)}}, {{4, Rational(1, 1)}}) == 0);
    CHECK_THROWS_AS(compare_powers({{0, Rational(1, 1)}}, {}), std::invalid_argument);
}

TEST_CASE("gap parameters")
{
    CHECK_THROWS_AS(gap_params(Rational(1, 2), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gap_params(Rational(0, 1), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gap_params(Rational(1, 3), 0, 1), std::invalid_argument);
    CHECK(gap_params(Rational(1, 3), 1, 1).alpha == 6);
    const auto p = gap_params(Rational(2, 5), 2, 10);
    CHECK(p.alpha == 5);
    CHECK(p.below_threshold);
    CHECK(alpha_for(Rational(49, 100)) == 5);
    CHECK(alpha_for(Rational(1, 4)) == 8);
}

TEST_CASE("minimal above-threshold n")
{
    struct Row {
        Rational eps;
        std::size_t k;
        const char* n;
    };
    const std::vector<Row> rows{
        {Rational(1, 3), 1, "2651730845859653471779023381601"},
        {Rational(1, 3), 2, "182225556172186058674940229804729969934336"},
        {Rational(2, 5), 1, "28430288029929701376"},
        {Rational(2, 5), 2, "953962166440690129601298432"},
        {Rational(49, 100), 1, "7596923671293147"},
        {Rational(49, 100), 2, "10570780677882793876375"},
    };
    for (const auto& r : rows) {
        const BigCount n = minimal_above_threshold_n(r.eps, r.k);
        CHECK(to_decimal(n) == r.n);
        CHECK_FALSE(gap_params(r.eps, r.k, n).below_threshold);
        CHECK(gap_params(r.eps, r.k, n - 1).below_threshold);
        const auto report = check_bounds(n, r.k, r.eps);
        CHECK(report.all_hold());
        CHECK(report.checks.size() == 12);
        CHECK_THROWS_WITH_AS(check_bounds(n - 1, r.k, r.eps), "threshold precondition unmet", std::domain_error);
    }
    CHECK(minimal_above_threshold_n(Rational(1, 3), 1) == big_pow(7, 36));
}

TEST_CASE("core construction")
{
    auto g = build_core(Permutation{1, 2}, Permutation{2, 1}, 1);
    CHECK(g.pattern == Permutation{1, 2, 3});
    CHECK(g.text == Permutation{3, 2, 5, 4, 1});
    CHECK(g.branch == GapBranch::inflated);
    CHECK(g.k_prime == 3);
    CHECK(g.n_prime == 5);
    CHECK(g.initial_block_pattern_len == 2);
    CHECK(g.initial_block_text_len == 4);
    CHECK(count_copies(g.pattern, g.text) == 0);
    CHECK(copies_touching_initial_block(g) == 0);

    g = build_core(Permutation{2, 1}, Permutation{2, 1}, 1);
    CHECK(g.pattern == Permutation{2, 3, 1});
    CHECK(g.text == Permutation{3, 2, 5, 4, 1});
    CHECK(count_copies(g.pattern, g.text) == 4);
    CHECK(copies_touching_initial_block(g) == 4);

    CHECK(count_copies(build_core(Permutation{1, 2}, Permutation{1, 2, 3}, 2).pattern,
                       build_core(Permutation{1, 2}, Permutation{1, 2, 3}, 2).text) == 16038);

    CHECK_THROWS_AS(build_core(Permutation{1, 2}, Permutation{2, 1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_core(Permutation{1, 2}, Permutation{2, 1}, 3, 20), std::length_error);
    CHECK_THROWS_AS(build_core(Permutation(), Permutation{1}, 1), std::invalid_argument);
}

TEST_CASE("structural lemmas on small cores")
{
    for (std::uint64_t alpha : {1, 2})
        for (std::size_t k = 1; k <= 2; ++k)
            for (const auto& p : all_permutations(k))
                for (std::size_t n = 1; n <= 3; ++n)
                    for (const auto& t : all_permutations(n)) {
                        const auto g = build_core(p, t, alpha);
                        const auto size = check_size_bounds(n, k, alpha);
                        REQUIRE(size.all_hold());
                        const BigCount touching = copies_touching_initial_block(g);
                        if (contains_left_aligned(p, t)) {
                            REQUIRE(touching >= big_pow(n, alpha * alpha * k));
                        } else {
                            REQUIRE(touching == 0);
                            REQUIRE(count_copies(g.pattern, g.text) <= binomial(g.n_prime - 1, g.k_prime));
                        }
                    }
}

TEST_CASE("gap instance branches")
{
    auto g = build_gap_instance(Permutation{2, 1, 3}, Permutation{2, 4, 1, 5, 3}, Rational(1, 3));
    CHECK(g.branch == GapBranch::trivial_yes);
    CHECK(g.pattern == Permutation{1});
    CHECK(g.text == Permutation{1, 2});
    CHECK(g.source_k == 3);
    CHECK(g.source_n == 5);
    CHECK_THROWS_AS(copies_touching_initial_block(g), std::invalid_argument);

    g = build_gap_instance(Permutation{1, 2}, Permutation{2, 1}, Rational(1, 3));
    CHECK(g.branch == GapBranch::trivial_no);
    CHECK(g.pattern == Permutation{1, 2});
    CHECK(g.text == Permutation{2, 1});
    CHECK(branch_name(g.branch) == "trivial_no");
}

TEST_CASE("trivial instances sit on one side of the gap")
{
    for (auto eps : {Rational(1, 100), Rational(1, 3), Rational(2, 5), Rational(49, 100)}) {
        const BigCount yes = count_copies(Permutation{1}, Permutation{1, 2});
        CHECK(meets_gap_yes(yes, 2, 1, eps));
        CHECK_FALSE(meets_gap_no(yes, 2, 1, eps));
        const BigCount no = count_copies(Permutation{1, 2}, Permutation{2, 1});
        CHECK(meets_gap_no(no, 2, 2, eps));
        CHECK_FALSE(meets_gap_yes(no, 2, 2, eps));
    }
}

TEST_CASE("decide_via_approx")
{
    const Permutation p{1, 2};
    const Permutation t{1, 2, 3, 4};
    CHECK_FALSE(decide_via_approx(p, t, 0));
    CHECK_FALSE(decide_via_approx(p, t, 4));
    CHECK(decide_via_approx(p, t, 5));
    CHECK(decide_via_approx(Permutation{1}, Permutation{1, 2}, approx_count(Permutation{1}, Permutation{1, 2})));
    CHECK_FALSE(
        decide_via_approx(Permutation{1, 2}, Permutation{2, 1}, approx_count(Permutation{1, 2}, Permutation{2, 1})));
}

TEST_CASE("wrapper on promise instances")
{
    // approx_count decides only the no side once k' >= 2; the exact count decides both
    std::size_t yes_only = 0, no_only = 0;
    for (auto eps : {Rational(1, 100), Rational(1, 3), Rational(2, 5), Rational(49, 100)})
        for (std::uint64_t alpha : {1, 2})
            for (std::size_t k = 1; k <= 2; ++k)
                for (const auto& p : all_permutations(k))
                    for (std::size_t n = 1; n <= 3; ++n)
                        for (const auto& t : all_permutations(n)) {
                            const auto g = build_core(p, t, alpha);
                            const BigCount c = count_copies(g.pattern, g.text);
                            const bool yes = meets_gap_yes(c, g.n_prime, g.k_prime, eps);
                            const bool no = meets_gap_no(c, g.n_prime, g.k_prime, eps);
                            if (yes == no)
                                continue;
                            const bool approx = decide_via_approx(g.pattern, g.text, approx_count(g.pattern, g.text));
                            const bool exact = decide_via_approx(g.pattern, g.text, c);
                            REQUIRE(exact == yes);
                            if (no) {
                                ++no_only;
                                REQUIRE_FALSE(approx);
                            } else {
                                ++yes_only;
                                REQUIRE(approx == (g.k_prime == 1));
                            }
                        }
    CHECK(yes_only > 0);
    CHECK(no_only > 0);
}

TEST_CASE("text length cap from the environment")
{
    ::unsetenv("PERMPAT_MAX_TEXT_LEN");
    CHECK(max_text_length_from_env() == kDefaultMaxTextLength);
    ::setenv("PERMPAT_MAX_TEXT_LEN", "100", 1);
    CHECK(max_text_length_from_env() == 100);
    ::setenv("PERMPAT_MAX_TEXT_LEN", "junk", 1);
    CHECK(max_text_length_from_env() == kDefaultMaxTextLength);
    ::unsetenv("PERMPAT_MAX_TEXT_LEN");
}
