#pragma once

#include "permpat/big_count.hpp"
#include "permpat/permutation.hpp"

#include <cstddef>
#include <vector>

namespace permpat {

/// Strictly increasing 1-based text positions of one pattern copy.
struct Embedding {
    std::vector<std::size_t> indices;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct EmbeddingList {
    std::vector<Embedding> embeddings;
    bool truncated = false;
};

// All functions below reject an empty pattern with std::invalid_argument.

bool contains(const Permutation& pattern, const Permutation& text);
BigCount count_copies(const Permutation& pattern, const Permutation& text);

/// Oracle: tests every k-subset of text positions.
BigCount count_copies_naive(const Permutation& pattern, const Permutation& text);

/// Number of 21-copies, O(n log n).
BigCount count_inversions(const Permutation& text);

/// Copies that use the first text position for the first pattern element.
bool contains_left_aligned(const Permutation& pattern, const Permutation& text);
BigCount count_left_aligned(const Permutation& pattern, const Permutation& text);

/// The same count computed as #copies(text) - #copies(text without its first element).
BigCount count_left_aligned_by_difference(const Permutation& pattern, const Permutation& text);

/// Embeddings in lexicographic order of their index tuples, at most cap of them.
EmbeddingList enumerate_embeddings(const Permutation& pattern, const Permutation& text, std::size_t cap,
                                   bool require_left_aligned);

/**
 * Detection-based estimate of the number of copies: 0 when the text avoids
 * the pattern, isqrt(n^k) otherwise (n itself when k = 1, the exact count).
 * For a true count C >= 1 the estimate A satisfies A^2 <= C^2 n^k and
 * C^2 <= A^2 n^k.
 */
BigCount approx_count(const Permutation& pattern, const Permutation& text);

/// Thread count used by count_copies; 0 means std::thread::hardware_concurrency().
void set_counting_threads(unsigned threads);

} // namespace permpat
