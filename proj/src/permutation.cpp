#include "permpat/permutation.hpp"
#include "permpat/big_count.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permpat {

namespace {

void check_bijection(const std::vector<int>& values)
{
    const auto n = values.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > n)
            throw std::invalid_argument("permutation value " + std::to_string(v) + " outside 1.." +
                                        std::to_string(n));
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation value " + std::to_string(v) + " repeated");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

} // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values))
{
    check_bijection(values_);
}

Permutation::Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::decreasing(std::size_t n)
{
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = static_cast<int>(n - i);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text)
{
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!text.empty() && is_space(text.front()))
        text.remove_prefix(1);
    while (!text.empty() && is_space(text.back()))
        text.remove_suffix(1);

    std::vector<int> values;
    const bool has_space = std::any_of(text.begin(), text.end(), is_space);
    if (!has_space && text.size() > 1) {
        // digit-string shorthand
        if (text.size() > 9)
            throw std::invalid_argument("digit-string form only allowed for length <= 9: '" +
                                        std::string(text) + "'");
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
            values.push_back(c - '0');
        }
        return Permutation(std::move(values));
    }

    std::size_t pos = 0;
    while (pos < text.size()) {
        if (is_space(text[pos])) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_space(text[end]))
            ++end;
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
        if (ec != std::errc() || ptr != text.data() + end)
            throw std::invalid_argument("malformed permutation token '" +
                                        std::string(text.substr(pos, end - pos)) + "'");
        values.push_back(v);
        pos = end;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::reverse() const
{
    return Permutation(std::vector<int>(values_.rbegin(), values_.rend()));
}

Permutation Permutation::complement() const
{
    std::vector<int> v(values_.size());
    const int n1 = static_cast<int>(values_.size()) + 1;
    std::transform(values_.begin(), values_.end(), v.begin(), [n1](int x) { return n1 - x; });
    return Permutation(std::move(v));
}

bool Permutation::is_increasing() const
{
    return std::is_sorted(values_.begin(), values_.end());
}

bool Permutation::is_decreasing() const
{
    return std::is_sorted(values_.rbegin(), values_.rend());
}

std::string Permutation::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i != 0)
            out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation standardize(std::span<const long long> values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<int> ranks(values.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        ranks[order[r]] = static_cast<int>(r) + 1;
    return Permutation(std::move(ranks));
}

std::vector<Permutation> all_permutations(std::size_t n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::string_view role_name(PointRole role)
{
    switch (role) {
    case PointRole::plain: return "plain";
    case PointRole::anchor: return "anchor";
    case PointRole::a_pair: return "A";
    case PointRole::b_pair: return "B";
    case PointRole::c_pair: return "C";
    case PointRole::d_pair: return "D";
    case PointRole::cell: return "cell";
    case PointRole::diagonal: return "diagonal";
    }
    return "plain";
}

PointRole role_from_name(std::string_view name)
{
    for (auto role : {PointRole::plain, PointRole::anchor, PointRole::a_pair, PointRole::b_pair,
                      PointRole::c_pair, PointRole::d_pair, PointRole::cell, PointRole::diagonal})
        if (role_name(role) == name)
            return role;
    throw std::invalid_argument("unknown point role '" + std::string(name) + "'");
}

PointSet diagram(const Permutation& p)
{
    PointSet s;
    s.points.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        s.add(static_cast<std::int64_t>(i) + 1, p[i]);
    return s;
}

Permutation reduce(const PointSet& set)
{
    const auto& pts = set.points;
    const std::size_t n = pts.size();

    std::vector<std::size_t> by_x(n);
    std::iota(by_x.begin(), by_x.end(), std::size_t{0});
    std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(pts[a].x, pts[a].y) < std::pair(pts[b].x, pts[b].y);
    });
    for (std::size_t i = 1; i < n; ++i)
        if (pts[by_x[i]].x == pts[by_x[i - 1]].x && pts[by_x[i]].y == pts[by_x[i - 1]].y)
            throw std::invalid_argument("degenerate point set");

    std::vector<std::size_t> by_y(n);
    std::iota(by_y.begin(), by_y.end(), std::size_t{0});
    std::sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(pts[a].y, -pts[a].x) < std::pair(pts[b].y, -pts[b].x);
    });
    std::vector<int> y_rank(n);
    for (std::size_t r = 0; r < n; ++r)
        y_rank[by_y[r]] = static_cast<int>(r) + 1;

    std::vector<int> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = y_rank[by_x[i]];
    return Permutation(std::move(values));
}

Permutation inflate(const Permutation& sigma, std::span<const Permutation> blocks)
{
    if (blocks.size() != sigma.size())
        throw std::invalid_argument("inflate: " + std::to_string(blocks.size()) + " blocks for a permutation of length " +
                                    std::to_string(sigma.size()));
    for (const auto& b : blocks)
        if (b.empty())
            throw std::invalid_argument("inflate: empty block");

    // offset[v] = total size of the blocks sitting at sigma-values below v
    std::vector<std::size_t> size_at_value(sigma.size() + 1, 0);
    for (std::size_t i = 0; i < sigma.size(); ++i)
        size_at_value[static_cast<std::size_t>(sigma[i])] = blocks[i].size();
    std::vector<std::size_t> offset(sigma.size() + 1, 0);
    for (std::size_t v = 1; v < sigma.size(); ++v)
        offset[v + 1] = offset[v] + size_at_value[v];

    std::vector<int> out;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const auto base = offset[static_cast<std::size_t>(sigma[i])];
        for (int v : blocks[i].values())
            out.push_back(static_cast<int>(base) + v);
    }
    return Permutation(std::move(out));
}

namespace {

Permutation monotone_blocks(std::span<const std::size_t> sizes, bool increasing_outer)
{
    std::vector<Permutation> blocks;
    blocks.reserve(sizes.size());
    for (auto s : sizes) {
        if (s == 0)
            throw std::invalid_argument("block size must be positive");
        blocks.push_back(increasing_outer ? Permutation::decreasing(s) : Permutation::identity(s));
    }
    const auto outer = increasing_outer ? Permutation::identity(sizes.size()) : Permutation::decreasing(sizes.size());
    return inflate(outer, blocks);
}

} // namespace

Permutation layered(std::span<const std::size_t> layer_sizes)
{
    return monotone_blocks(layer_sizes, true);
}

Permutation colayered(std::span<const std::size_t> run_sizes)
{
    return monotone_blocks(run_sizes, false);
}

Permutation delete_leftmost(const Permutation& tau)
{
    if (tau.empty())
        throw std::invalid_argument("delete_leftmost: empty permutation");
    const int first = tau[0];
    std::vector<int> rest;
    rest.reserve(tau.size() - 1);
    for (std::size_t i = 1; i < tau.size(); ++i)
        rest.push_back(tau[i] > first ? tau[i] - 1 : tau[i]);
    return Permutation(std::move(rest));
}

BigCount parse_decimal(std::string_view text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("expected a nonnegative decimal integer, got '" + std::string(text) + "'");
    return BigCount(std::string(text));
}

} // namespace permpat
