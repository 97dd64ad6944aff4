#pragma once

// Heaps of polymers on the integer line.
//
// A heap is stored in its fully fallen form: every piece carries the level it
// lands on when the pieces are dropped one after the other, and the pieces are
// kept sorted by (level, left, right). Two sequences that differ by commuting
// non-concurrent polymers produce the same leveled form, so value equality of
// Heap is equality of heaps.

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace polyheap {

/// Closed interval [left, right] with right > left.
class Polymer {
public:
    Polymer(int left, int right);

    int left() const { return left_; }
    int right() const { return right_; }
    int length() const { return right_ - left_; }

    Polymer shifted(int dx) const { return Polymer(left_ + dx, right_ + dx); }

    bool operator==(const Polymer&) const = default;
    auto operator<=>(const Polymer&) const = default;

private:
    int left_;
    int right_;
};

/// Two polymers are concurrent when they intersect, touching at a point included.
constexpr bool concurrent_bounds(int l1, int r1, int l2, int r2) {
    return (l1 > l2 ? l1 : l2) <= (r1 < r2 ? r1 : r2);
}
inline bool concurrent(const Polymer& p, const Polymer& q) {
    return concurrent_bounds(p.left(), p.right(), q.left(), q.right());
}

/// A polymer together with the level it occupies in a heap. Inside a heap the
/// pair identifies the piece uniquely.
struct Piece {
    Polymer polymer;
    int level;

    bool operator==(const Piece&) const = default;
    std::strong_ordering operator<=>(const Piece& o) const {
        if (auto c = level <=> o.level; c != 0) return c;
        return polymer <=> o.polymer;
    }
};

class Heap {
public:
    Heap() = default;

    /// Drops the polymers one after the other.
    static Heap from_sequence(std::span<const Polymer> seq);

    /// Builds a heap from pieces already in fully fallen form (any order).
    /// Throws std::invalid_argument if the levels are not those of a fallen heap.
    static Heap from_pieces(std::vector<Piece> pieces);

    std::span<const Piece> pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    std::size_t size() const { return pieces_.size(); }
    int total_length() const;
    int height() const { return pieces_.empty() ? 0 : pieces_.back().level + 1; }

    /// Smallest left endpoint / largest right endpoint. Heap must be non-empty.
    int min_left() const;
    int max_right() const;

    bool contains(const Piece& piece) const;

    /// Pieces in canonical order, which is a valid drop order.
    std::vector<Polymer> linearization() const;

    Heap translated(int dx) const;

    bool operator==(const Heap&) const = default;
    std::strong_ordering operator<=>(const Heap& o) const;

private:
    struct Trusted {};
    Heap(Trusted, std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}
    friend Heap heap_from_levels_unchecked(std::vector<Piece>);

    std::vector<Piece> pieces_;
};

/// Internal fast path for generators that already produce fallen, sorted pieces.
Heap heap_from_levels_unchecked(std::vector<Piece> pieces);

inline Heap heap_from_sequence(std::span<const Polymer> seq) { return Heap::from_sequence(seq); }

/// Drops h2 on top of h1.
Heap product(const Heap& h1, const Heap& h2);

/// Factorization h = H1 * H2 where H2 is the pyramid generated by `piece`
/// (its upward dependence closure). Throws std::invalid_argument if the piece
/// is not in h.
std::pair<Heap, Heap> push(const Heap& h, const Piece& piece);

std::vector<Piece> minimal_pieces(const Heap& h);
std::vector<Piece> maximal_pieces(const Heap& h);

bool is_pyramid(const Heap& h);
bool is_half_pyramid(const Heap& h);
/// Union of the polymers is a single interval. False for the empty heap.
bool is_connected(const Heap& h);

/// For a pyramid: distance from the minimal polymer's left end to the leftmost
/// left end. Throws std::invalid_argument for non-pyramids.
int left_half_width(const Heap& h);

/// Translates so that the smallest left endpoint is 0. Empty heap is returned as is.
Heap canonical_translate(const Heap& h);

/// Connected components from left to right, each keeping its absolute position.
std::vector<Heap> connected_components(const Heap& h);

/// Number of distinct abscissas covered: max_right - min_left for connected heaps,
/// the measure of the union otherwise.
int covered_width(const Heap& h);

}  // namespace polyheap
