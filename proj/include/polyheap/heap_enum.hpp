#pragma once

// Exhaustive generation of heaps of polymers.
//
// Heaps are generated directly in leveled form: a ground layer of pairwise
// non-concurrent polymers, then layer after layer where every polymer is
// concurrent with some polymer of the layer just below. Each heap corresponds to
// exactly one such layer sequence, so no deduplication is needed.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "polyheap/heap.hpp"

namespace polyheap {

enum class HeapClass { all, connected, pyramid, half_pyramid, within_strip };

struct HeapFilter {
    HeapClass kind = HeapClass::all;
    int strip = 0;  // k for within_strip: polymers inside [0, k-1]

    static HeapFilter of(HeapClass c) { return {c, 0}; }
    static HeapFilter within_strip(int k) { return {HeapClass::within_strip, k}; }
};

std::optional<HeapClass> parse_heap_class(std::string_view name);
std::string_view to_string(HeapClass c);

/// Every heap of total length `length` whose polymers lie in [lo, hi].
void for_each_heap_in_window(int length, int lo, int hi, const std::function<void(const Heap&)>& visit);

/// Heaps of total length n, translated to min left 0, sorted.
///
/// `all` lists the heaps whose polymers fit in [0, n] after translation, which
/// covers every connected heap; disconnected heaps with wider gaps are left out
/// since there are infinitely many of them. `within_strip(k)` is not taken up to
/// translation and accepts n = 0 (the empty heap). Throws std::invalid_argument
/// for n < 1 otherwise.
std::vector<Heap> enumerate_heaps(int n, HeapFilter filter);

/// Coefficients 0..max_length of the generating function of heaps inside
/// [0, k-1]. Exhaustive count, memoized on the top layer.
std::vector<std::uint64_t> count_strip_heaps(int k, int max_length);

/// Coefficients 0..max_length for heaps whose polymers all have left end >= 0
/// and whose rightmost minimal polymer starts at k.
std::vector<std::uint64_t> count_ak_heaps(int k, int max_length);

}  // namespace polyheap
