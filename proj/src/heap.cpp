#include "polyheap/heap.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polyheap {

Polymer::Polymer(int left, int right) : left_(left), right_(right) {
    if (right <= left) {
        throw std::invalid_argument("polymer needs right > left, got [" + std::to_string(left) +
                                    "," + std::to_string(right) + "]");
    }
}

namespace {

std::vector<Piece> drop_all(std::span<const Polymer> seq) {
    std::vector<Piece> pieces;
    pieces.reserve(seq.size());
    for (const Polymer& p : seq) {
        int level = 0;
        for (const Piece& q : pieces) {
            if (q.level + 1 > level && concurrent(p, q.polymer)) level = q.level + 1;
        }
        pieces.push_back({p, level});
    }
    std::sort(pieces.begin(), pieces.end());
    return pieces;
}

}  // namespace

Heap Heap::from_sequence(std::span<const Polymer> seq) { return Heap(Trusted{}, drop_all(seq)); }

Heap Heap::from_pieces(std::vector<Piece> pieces) {
    std::sort(pieces.begin(), pieces.end());
    std::vector<Polymer> seq;
    seq.reserve(pieces.size());
    for (const Piece& p : pieces) seq.push_back(p.polymer);
    Heap dropped = from_sequence(seq);
    if (dropped.pieces_ != pieces) {
        throw std::invalid_argument("pieces are not in fully fallen form");
    }
    return dropped;
}

Heap heap_from_levels_unchecked(std::vector<Piece> pieces) {
    return Heap(Heap::Trusted{}, std::move(pieces));
}

int Heap::total_length() const {
    int sum = 0;
    for (const Piece& p : pieces_) sum += p.polymer.length();
    return sum;
}

int Heap::min_left() const {
    if (pieces_.empty()) throw std::invalid_argument("min_left of empty heap");
    int m = pieces_.front().polymer.left();
    for (const Piece& p : pieces_) m = std::min(m, p.polymer.left());
    return m;
}

int Heap::max_right() const {
    if (pieces_.empty()) throw std::invalid_argument("max_right of empty heap");
    int m = pieces_.front().polymer.right();
    for (const Piece& p : pieces_) m = std::max(m, p.polymer.right());
    return m;
}

bool Heap::contains(const Piece& piece) const {
    return std::binary_search(pieces_.begin(), pieces_.end(), piece);
}

std::vector<Polymer> Heap::linearization() const {
    std::vector<Polymer> seq;
    seq.reserve(pieces_.size());
    for (const Piece& p : pieces_) seq.push_back(p.polymer);
    return seq;
}

Heap Heap::translated(int dx) const {
    std::vector<Piece> moved = pieces_;
    for (Piece& p : moved) p.polymer = p.polymer.shifted(dx);
    return Heap(Trusted{}, std::move(moved));
}

std::strong_ordering Heap::operator<=>(const Heap& o) const {
    return std::lexicographical_compare_three_way(pieces_.begin(), pieces_.end(),
                                                  o.pieces_.begin(), o.pieces_.end());
}

Heap product(const Heap& h1, const Heap& h2) {
    std::vector<Polymer> seq = h1.linearization();
    std::vector<Polymer> top = h2.linearization();
    seq.insert(seq.end(), top.begin(), top.end());
    return Heap::from_sequence(seq);
}

std::pair<Heap, Heap> push(const Heap& h, const Piece& piece) {
    if (!h.contains(piece)) throw std::invalid_argument("push: piece is not part of the heap");
    auto pieces = h.pieces();
    std::vector<bool> above(pieces.size(), false);
    // Canonical order lists lower levels first, and concurrent pieces never share a
    // level, so one forward pass sees every dependence chain in order.
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i] == piece) {
            above[i] = true;
            continue;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (above[j] && pieces[j].level < pieces[i].level &&
                concurrent(pieces[j].polymer, pieces[i].polymer)) {
                above[i] = true;
                break;
            }
        }
    }
    std::vector<Polymer> below_seq, above_seq;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        (above[i] ? above_seq : below_seq).push_back(pieces[i].polymer);
    }
    return {Heap::from_sequence(below_seq), Heap::from_sequence(above_seq)};
}

std::vector<Piece> minimal_pieces(const Heap& h) {
    std::vector<Piece> out;
    for (const Piece& p : h.pieces()) {
        if (p.level == 0) out.push_back(p);
    }
    return out;
}

std::vector<Piece> maximal_pieces(const Heap& h) {
    std::vector<Piece> out;
    auto pieces = h.pieces();
    for (const Piece& p : pieces) {
        bool covered = std::any_of(pieces.begin(), pieces.end(), [&](const Piece& q) {
            return q.level > p.level && concurrent(p.polymer, q.polymer);
        });
        if (!covered) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) {
        return std::pair(a.polymer, a.level) < std::pair(b.polymer, b.level);
    });
    return out;
}

bool is_pyramid(const Heap& h) {
    auto pieces = h.pieces();
    return pieces.size() >= 1 && (pieces.size() == 1 || pieces[1].level > 0);
}

bool is_half_pyramid(const Heap& h) {
    return is_pyramid(h) && h.min_left() == h.pieces().front().polymer.left();
}

bool is_connected(const Heap& h) {
    if (h.empty()) return false;
    return connected_components(h).size() == 1;
}

int left_half_width(const Heap& h) {
    if (!is_pyramid(h)) throw std::invalid_argument("left_half_width: heap is not a pyramid");
    return h.pieces().front().polymer.left() - h.min_left();
}

Heap canonical_translate(const Heap& h) {
    if (h.empty()) return h;
    return h.translated(-h.min_left());
}

std::vector<Heap> connected_components(const Heap& h) {
    std::vector<Polymer> by_left = h.linearization();
    std::sort(by_left.begin(), by_left.end());

    // Sweep by left endpoint; a component closes when the next left end lies
    // past the running right end.
    std::vector<std::pair<int, int>> spans;
    for (const Polymer& p : by_left) {
        if (spans.empty() || p.left() > spans.back().second) {
            spans.emplace_back(p.left(), p.right());
        } else {
            spans.back().second = std::max(spans.back().second, p.right());
        }
    }

    // Canonical order restricted to a component is still a drop order for it.
    std::vector<Heap> out;
    out.reserve(spans.size());
    for (auto [lo, hi] : spans) {
        std::vector<Polymer> seq;
        for (const Piece& q : h.pieces()) {
            if (q.polymer.left() >= lo && q.polymer.right() <= hi) seq.push_back(q.polymer);
        }
        out.push_back(Heap::from_sequence(seq));
    }
    return out;
}

int covered_width(const Heap& h) {
    int width = 0;
    for (const Heap& c : connected_components(h)) width += c.max_right() - c.min_left();
    return width;
}

}  // namespace polyheap
