#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpat {

/**
 * A permutation of length n stored in one-line notation with 1-based values:
 * every value of {1..n} appears exactly once. Positions are 0-based in the
 * C++ accessors; the printed and file forms are 1-based like the values.
 *
 * The empty permutation is a valid value.
 */
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless values is a bijection on 1..n.
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values);

    static Permutation identity(std::size_t n);
    static Permutation decreasing(std::size_t n);

    /// Accepts "24153" (only for n <= 9) or whitespace separated integers.
    static Permutation parse(std::string_view text);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    int operator[](std::size_t position) const noexcept { return values_[position]; }
    std::span<const int> values() const noexcept { return values_; }

    Permutation reverse() const;
    Permutation complement() const;

    bool is_increasing() const;
    bool is_decreasing() const;

    /// Whitespace separated one-line form, e.g. "2 4 1 5 3".
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// Ranks values into 1..n preserving relative order. Values must be distinct.
Permutation standardize(std::span<const long long> values);

/// Every permutation of length n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

enum class PointRole {
    plain,
    anchor,
    a_pair,
    b_pair,
    c_pair,
    d_pair,
    cell,
    diagonal,
};

std::string_view role_name(PointRole role);
PointRole role_from_name(std::string_view name);

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    PointRole role = PointRole::plain;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Planar point list. Points must be pairwise distinct; a shared x or y
/// coordinate is allowed and is resolved by reduce().
struct PointSet {
    std::vector<Point> points;

    std::size_t size() const noexcept { return points.size(); }
    void add(std::int64_t x, std::int64_t y, PointRole role = PointRole::plain)
    {
        points.push_back({x, y, role});
    }
};

/// The point set {(i, p_i)} with 1-based i.
PointSet diagram(const Permutation& p);

/**
 * Reduction of a point set to the permutation it is order-isomorphic to.
 *
 * Ties are resolved as the limit of an infinitesimal clockwise rotation
 * (x, y) -> (x + t*y, y - t*x), t -> 0+: points are ordered horizontally by
 * (x, y) and vertically by (y, -x). A point set in general position reduces
 * as usual. Throws std::invalid_argument("degenerate point set") when two
 * points coincide.
 */
Permutation reduce(const PointSet& points);

/// Replaces position i of sigma by a scaled copy of blocks[i].
Permutation inflate(const Permutation& sigma, std::span<const Permutation> blocks);

/// Increasing sequence of decreasing layers of the given sizes.
Permutation layered(std::span<const std::size_t> layer_sizes);

/// Decreasing sequence of increasing runs of the given sizes.
Permutation colayered(std::span<const std::size_t> run_sizes);

Permutation delete_leftmost(const Permutation& tau);

} // namespace permpat
