#include "permpat/matching.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>

namespace permpat {

namespace {

std::atomic<unsigned> g_counting_threads{0};

void require_pattern(const Permutation& pattern)
{
    if (pattern.empty())
        throw std::invalid_argument("empty pattern");
}

void require_text(const Permutation& text)
{
    if (text.empty())
        throw std::invalid_argument("empty text");
}

// Above this text length the last-level range table is not built.
constexpr std::size_t kRangeTableLimit = 1024;

/**
 * Left-to-right backtracking matcher.
 *
 * Pattern element t must land strictly between the text values matched to its
 * nearest pattern-value neighbours among elements 0..t-1; those two are
 * precomputed, so each candidate is checked in O(1).
 */
class Matcher {
public:
    Matcher(const Permutation& pattern, const Permutation& text)
        : k_(pattern.size()), n_(text.size()), text_(text.values().begin(), text.values().end()),
          below_(k_, -1), above_(k_, -1), matched_(k_, 0)
    {
        for (std::size_t t = 0; t < k_; ++t) {
            for (std::size_t s = 0; s < t; ++s) {
                if (pattern[s] < pattern[t] && (below_[t] < 0 || pattern[s] > pattern[below_[t]]))
                    below_[t] = static_cast<int>(s);
                if (pattern[s] > pattern[t] && (above_[t] < 0 || pattern[s] < pattern[above_[t]]))
                    above_[t] = static_cast<int>(s);
            }
        }
    }

    std::size_t pattern_size() const { return k_; }
    std::size_t text_size() const { return n_; }

    bool fits(std::size_t t, int value) const
    {
        if (below_[t] >= 0 && value < text_[matched_[below_[t]]])
            return false;
        if (above_[t] >= 0 && value > text_[matched_[above_[t]]])
            return false;
        return true;
    }

    bool find(std::size_t t, std::size_t start)
    {
        if (t == k_)
            return true;
        const std::size_t last = n_ - (k_ - t);
        for (std::size_t j = start; j <= last; ++j) {
            if (!fits(t, text_[j]))
                continue;
            matched_[t] = j;
            if (find(t + 1, j + 1))
                return true;
        }
        return false;
    }

    /// Copies whose first element is at text position first.
    std::uint64_t count_from(std::size_t first)
    {
        if (first + k_ > n_)
            return 0;
        matched_[0] = first;
        if (k_ == 1)
            return 1;
        if (n_ <= kRangeTableLimit && range_.empty())
            build_range_table();
        return count(1, first + 1);
    }

    template <typename Visit>
    bool for_each(std::size_t t, std::size_t start, Visit& visit)
    {
        if (t == k_)
            return visit(matched_);
        const std::size_t last = n_ - (k_ - t);
        for (std::size_t j = start; j <= last; ++j) {
            if (!fits(t, text_[j]))
                continue;
            matched_[t] = j;
            if (!for_each(t + 1, j + 1, visit))
                return false;
        }
        return true;
    }

    void pin(std::size_t t, std::size_t position) { matched_[t] = position; }

private:
    std::uint64_t count(std::size_t t, std::size_t start)
    {
        if (t + 1 == k_ && !range_.empty())
            return count_last(start);
        std::uint64_t total = 0;
        const std::size_t last = n_ - (k_ - t);
        for (std::size_t j = start; j <= last; ++j) {
            if (!fits(t, text_[j]))
                continue;
            matched_[t] = j;
            total += t + 1 == k_ ? 1 : count(t + 1, j + 1);
        }
        return total;
    }

    // range_[p * (n+1) + v] = #{ j >= p : text[j] <= v }
    void build_range_table()
    {
        const std::size_t w = n_ + 1;
        range_.assign((n_ + 1) * w, 0);
        for (std::size_t p = n_; p-- > 0;) {
            for (std::size_t v = 0; v <= n_; ++v)
                range_[p * w + v] = range_[(p + 1) * w + v] + (static_cast<std::size_t>(text_[p]) <= v ? 1U : 0U);
        }
    }

    std::uint64_t count_last(std::size_t start) const
    {
        const std::size_t t = k_ - 1;
        const std::size_t lo = below_[t] >= 0 ? static_cast<std::size_t>(text_[matched_[below_[t]]]) : 0;
        const std::size_t hi = above_[t] >= 0 ? static_cast<std::size_t>(text_[matched_[above_[t]]]) : n_ + 1;
        if (start >= n_ || hi <= lo + 1)
            return 0;
        const std::size_t w = n_ + 1;
        return range_[start * w + (hi - 1)] - range_[start * w + lo];
    }

    std::size_t k_;
    std::size_t n_;
    std::vector<int> text_;
    std::vector<int> below_;
    std::vector<int> above_;
    std::vector<std::size_t> matched_;
    std::vector<std::uint32_t> range_;
};

unsigned counting_threads()
{
    unsigned t = g_counting_threads.load();
    if (t == 0)
        t = std::max(1U, std::thread::hardware_concurrency());
    return t;
}

std::uint64_t count_all(const Permutation& pattern, const Permutation& text)
{
    const std::size_t k = pattern.size();
    const std::size_t n = text.size();
    if (k > n)
        return 0;
    const std::size_t firsts = n - k + 1;
    const unsigned threads = std::min<unsigned>(counting_threads(), static_cast<unsigned>(firsts));

    if (threads <= 1 || k < 3 || n < 32) {
        Matcher m(pattern, text);
        std::uint64_t total = 0;
        for (std::size_t first = 0; first < firsts; ++first)
            total += m.count_from(first);
        return total;
    }

    // Work is handed out by first position; summation is order independent.
    std::atomic<std::size_t> next{0};
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            Matcher m(pattern, text);
            for (std::size_t first = next++; first < firsts; first = next++)
                partial[w] += m.count_from(first);
        });
    }
    for (auto& th : pool)
        th.join();
    std::uint64_t total = 0;
    for (auto p : partial)
        total += p;
    return total;
}

} // namespace

void set_counting_threads(unsigned threads)
{
    g_counting_threads.store(threads);
}

bool contains(const Permutation& pattern, const Permutation& text)
{
    require_pattern(pattern);
    if (pattern.size() > text.size())
        return false;
    Matcher m(pattern, text);
    return m.find(0, 0);
}

BigCount count_copies(const Permutation& pattern, const Permutation& text)
{
    require_pattern(pattern);
    return BigCount(count_all(pattern, text));
}

BigCount count_copies_naive(const Permutation& pattern, const Permutation& text)
{
    require_pattern(pattern);
    const std::size_t k = pattern.size();
    const std::size_t n = text.size();
    if (k > n)
        return 0;

    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    std::vector<long long> picked(k);
    std::uint64_t total = 0;
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            picked[i] = text[idx[i]];
        if (standardize(picked) == pattern)
            ++total;
        // next k-subset in lexicographic order
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return total;
}

BigCount count_inversions(const Permutation& text)
{
    const std::size_t n = text.size();
    std::vector<std::uint32_t> tree(n + 1, 0);
    std::uint64_t inversions = 0;
    // scan right to left; count smaller values already seen
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t v = static_cast<std::size_t>(text[i]) - 1; v > 0; v -= v & (~v + 1))
            inversions += tree[v];
        for (std::size_t v = static_cast<std::size_t>(text[i]); v <= n; v += v & (~v + 1))
            ++tree[v];
    }
    return inversions;
}

bool contains_left_aligned(const Permutation& pattern, const Permutation& text)
{
    require_pattern(pattern);
    require_text(text);
    if (pattern.size() > text.size())
        return false;
    Matcher m(pattern, text);
    m.pin(0, 0);
    return m.find(1, 1);
}

BigCount count_left_aligned(const Permutation& pattern, const Permutation& text)
{
    require_pattern(pattern);
    require_text(text);
    if (pattern.size() > text.size())
        return 0;
    Matcher m(pattern, text);
    return BigCount(m.count_from(0));
}

BigCount count_left_aligned_by_difference(const Permutation& pattern, const Permutation& text)
{
    require_pattern(pattern);
    require_text(text);
    return count_copies(pattern, text) - count_copies(pattern, delete_leftmost(text));
}

EmbeddingList enumerate_embeddings(const Permutation& pattern, const Permutation& text, std::size_t cap,
                                   bool require_left_aligned)
{
    require_pattern(pattern);
    if (cap == 0)
        throw std::invalid_argument("enumerate_embeddings: cap must be positive");
    EmbeddingList out;
    if (pattern.size() > text.size())
        return out;

    auto visit = [&](const std::vector<std::size_t>& matched) {
        if (out.embeddings.size() == cap) {
            out.truncated = true;
            return false;
        }
        Embedding e;
        e.indices.reserve(matched.size());
        for (auto j : matched)
            e.indices.push_back(j + 1);
        out.embeddings.push_back(std::move(e));
        return true;
    };

    Matcher m(pattern, text);
    if (require_left_aligned) {
        m.pin(0, 0);
        m.for_each(1, 1, visit);
    } else {
        m.for_each(0, 0, visit);
    }
    return out;
}

BigCount approx_count(const Permutation& pattern, const Permutation& text)
{
    require_pattern(pattern);
    require_text(text);
    if (!contains(pattern, text))
        return 0;
    // a single-element pattern occurs exactly n times; isqrt(n) would break
    // the upper half of the guarantee for non-square n
    if (pattern.size() == 1)
        return BigCount(text.size());
    return isqrt(big_pow(BigCount(text.size()), pattern.size()));
}

} // namespace permpat
