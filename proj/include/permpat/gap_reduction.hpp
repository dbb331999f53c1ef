#pragma once

#include "permpat/big_count.hpp"
#include "permpat/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permpat {

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// "P/Q" or an integer "P".
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// base^exponent with a rational exponent, base >= 1.
struct PowerTerm {
    BigCount base;
    Rational exponent;
};

/**
 * Compares two products of rational powers exactly: returns -1, 0 or 1 as
 * lhs <, =, > rhs. Equal bases are merged, negative exponents moved across
 * and denominators cleared by raising both sides to the common denominator.
 */
int compare_powers(std::vector<PowerTerm> lhs, std::vector<PowerTerm> rhs);

/// ceil(2 / epsilon).
std::uint64_t alpha_for(const Rational& epsilon);

struct GapParams {
    Rational epsilon{1, 3};
    std::uint64_t alpha = 0;
    std::size_t k = 0;
    BigCount n;
    /// n < ((alpha+1) k)^(2 alpha / epsilon), decided as n^p < ((alpha+1) k)^(2 alpha q).
    bool below_threshold = false;
};

/// Requires 0 < epsilon < 1/2, k >= 1, n >= 1; throws std::invalid_argument otherwise.
GapParams gap_params(const Rational& epsilon, std::size_t k, const BigCount& n);

/// Smallest n that is not below the threshold for (epsilon, k).
BigCount minimal_above_threshold_n(const Rational& epsilon, std::size_t k);

enum class GapBranch { trivial_yes, trivial_no, inflated };

std::string_view branch_name(GapBranch branch);

struct GapInstance {
    Permutation pattern;
    Permutation text;
    GapBranch branch = GapBranch::inflated;
    std::uint64_t alpha = 0;
    std::size_t k_prime = 0;
    std::size_t n_prime = 0;
    std::size_t initial_block_pattern_len = 0;
    std::size_t initial_block_text_len = 0;
    /// Length of the source pattern and text.
    std::size_t source_k = 0;
    std::size_t source_n = 0;
};

inline constexpr std::size_t kDefaultMaxTextLength = 1'000'000;

/// PERMPAT_MAX_TEXT_LEN when set to a positive integer, else kDefaultMaxTextLength.
std::size_t max_text_length_from_env();

/**
 * The inflation core: the first pattern element becomes an increasing run of
 * length alpha*k and the first text element becomes a layered permutation of
 * alpha*k layers of n^alpha elements each. Throws std::length_error("instance
 * too large") if the text would exceed max_text_length.
 */
GapInstance build_core(const Permutation& pattern, const Permutation& text, std::uint64_t alpha,
                       std::size_t max_text_length = kDefaultMaxTextLength);

/// Below the threshold the source is decided exactly and a canonical
/// trivial instance is returned: (1, 12) for yes, (12, 21) for no. Both sit
/// on one side of the gap only, for every admissible epsilon.
GapInstance build_gap_instance(const Permutation& pattern, const Permutation& text, const Rational& epsilon,
                               std::size_t max_text_length = kDefaultMaxTextLength);

/// Copies of the inflated pattern that use at least one initial-block text element.
BigCount copies_touching_initial_block(const GapInstance& gap);

struct BoundCheck {
    std::string name;
    std::string statement;
    bool holds = false;
};

struct BoundsReport {
    std::vector<BoundCheck> checks;
    bool all_hold() const;
};

/// n^alpha <= n' <= (alpha+1) k n^alpha. Holds for every n >= 1; no threshold needed.
BoundsReport check_size_bounds(const BigCount& n, std::size_t k, std::uint64_t alpha);

/// Full inequality chain for the inflated construction. Throws
/// std::domain_error("threshold precondition unmet") below the threshold.
BoundsReport check_bounds(const BigCount& n, std::size_t k, const Rational& epsilon);

/// count >= n^((1-epsilon) k)
bool meets_gap_yes(const BigCount& count, std::size_t n, std::size_t k, const Rational& epsilon);
/// count <= n^(epsilon k)
bool meets_gap_no(const BigCount& count, std::size_t n, std::size_t k, const Rational& epsilon);

/// estimate > n^(k/2), decided as estimate^2 > n^k.
bool decide_via_approx(const Permutation& pattern, const Permutation& text, const BigCount& estimate);

} // namespace permpat
