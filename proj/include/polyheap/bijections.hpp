#pragma once

// The projection from animals to heaps and its two inverses, plus the Nordic
// decomposition of non-pyramid connected heaps.

#include <functional>
#include <span>

#include "polyheap/animal.hpp"
#include "polyheap/heap.hpp"

namespace polyheap {

/// Heap of the segments' intervals taken bottom to top, translated to min left 0.
/// Its total length equals the area.
Heap project(const Animal& a);

/// Directed animal whose projection is the pyramid p (each segment sits at its
/// piece's level). Throws std::invalid_argument if p is not a pyramid.
Animal animal_from_pyramid(const Heap& p);

/// Picks the maximal piece to peel at each recursion step of
/// animal_from_connected_heap. Receives the maximal pieces of the current heap
/// and returns an index into them.
using MaximalChooser = std::function<std::size_t(std::span<const Piece>)>;

/// Highest level first, then rightmost.
std::size_t highest_rightmost(std::span<const Piece> maximal);

/// The multi-directed animal projecting onto the connected heap c. Peels a
/// maximal polymer, rebuilds each connected component underneath, and lifts each
/// component until its topmost segment concurrent with the peeled polymer sits
/// one row below it. Throws std::invalid_argument if c is empty or disconnected.
Animal animal_from_connected_heap(const Heap& c, const MaximalChooser& choose = highest_rightmost);

struct NordicQuadruple {
    Heap c1;  // connected, min left 0
    int k = 0;
    Heap h;   // every polymer inside [0, k-1]
    Heap p;   // pyramid with left half-width > k, min left 0

    bool operator==(const NordicQuadruple&) const = default;
};

/// Throws std::invalid_argument describing the first violated condition.
void validate(const NordicQuadruple& q);

/// Throws std::invalid_argument unless c is connected and not a pyramid.
NordicQuadruple nordic_decompose(const Heap& c);

/// Inverse of nordic_decompose, result translated to min left 0.
Heap nordic_compose(const NordicQuadruple& q);

}  // namespace polyheap
