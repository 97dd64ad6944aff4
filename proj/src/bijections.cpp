#include "polyheap/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polyheap {

namespace {

Polymer polymer_of(const Segment& s) { return Polymer(s.xmin, s.xmax + 1); }

Heap without_piece(const Heap& h, const Piece& drop) {
    std::vector<Polymer> seq;
    for (const Piece& p : h.pieces()) {
        if (p != drop) seq.push_back(p.polymer);
    }
    return Heap::from_sequence(seq);
}

// Segments of the multi-directed animal over c, with ordinates relative to an
// arbitrary origin.
std::vector<Segment> connected_segments(const Heap& c, const MaximalChooser& choose) {
    auto pieces = c.pieces();
    if (pieces.size() == 1) {
        const Polymer& p = pieces.front().polymer;
        return {Segment{0, p.left(), p.right() - 1}};
    }
    std::vector<Piece> maximal = maximal_pieces(c);
    std::size_t pick = choose(maximal);
    if (pick >= maximal.size()) throw std::out_of_range("maximal piece chooser returned a bad index");
    const Piece beta = maximal[pick];

    // beta's segment sits on row 0; every component below is lifted so its
    // highest segment concurrent with beta lands on row -1.
    std::vector<Segment> out{Segment{0, beta.polymer.left(), beta.polymer.right() - 1}};
    for (const Heap& component : connected_components(without_piece(c, beta))) {
        std::vector<Segment> segs = connected_segments(component, choose);
        bool touches = false;
        int top = 0;
        for (const Segment& s : segs) {
            if (concurrent(polymer_of(s), beta.polymer)) {
                top = touches ? std::max(top, s.y) : s.y;
                touches = true;
            }
        }
        if (!touches) throw std::logic_error("component not concurrent with the peeled polymer");
        for (Segment& s : segs) s.y += -1 - top;
        out.insert(out.end(), segs.begin(), segs.end());
    }
    return out;
}

Animal animal_from_segments(std::span<const Segment> segs) {
    std::vector<Site> sites;
    for (const Segment& s : segs) {
        for (int x = s.xmin; x <= s.xmax; ++x) sites.push_back({x, s.y});
    }
    return Animal(std::move(sites));
}

}  // namespace

Heap project(const Animal& a) {
    std::vector<Polymer> seq;
    for (const Segment& s : segments(a)) seq.push_back(polymer_of(s));
    return canonical_translate(Heap::from_sequence(seq));
}

Animal animal_from_pyramid(const Heap& p) {
    if (!is_pyramid(p)) throw std::invalid_argument("animal_from_pyramid: heap is not a pyramid");
    std::vector<Segment> segs;
    for (const Piece& piece : p.pieces()) {
        segs.push_back({piece.level, piece.polymer.left(), piece.polymer.right() - 1});
    }
    return animal_from_segments(segs);
}

std::size_t highest_rightmost(std::span<const Piece> maximal) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < maximal.size(); ++i) {
        const Piece& a = maximal[i];
        const Piece& b = maximal[best];
        if (a.level > b.level || (a.level == b.level && a.polymer.left() > b.polymer.left())) best = i;
    }
    return best;
}

Animal animal_from_connected_heap(const Heap& c, const MaximalChooser& choose) {
    if (!is_connected(c)) throw std::invalid_argument("animal_from_connected_heap: heap is not connected");
    return animal_from_segments(connected_segments(c, choose));
}

void validate(const NordicQuadruple& q) {
    if (!is_connected(q.c1)) throw std::invalid_argument("nordic: c1 must be a connected heap");
    if (q.c1.min_left() != 0) throw std::invalid_argument("nordic: c1 must be translated to min left 0");
    if (q.k < 0) throw std::invalid_argument("nordic: k must be non-negative");
    for (const Piece& piece : q.h.pieces()) {
        if (piece.polymer.left() < 0 || piece.polymer.right() > q.k - 1) {
            throw std::invalid_argument("nordic: h must lie inside [0, k-1]");
        }
    }
    if (!is_pyramid(q.p)) throw std::invalid_argument("nordic: p must be a pyramid");
    if (q.p.min_left() != 0) throw std::invalid_argument("nordic: p must be translated to min left 0");
    if (left_half_width(q.p) <= q.k) {
        throw std::invalid_argument("nordic: p needs left half-width greater than k (got " +
                                    std::to_string(left_half_width(q.p)) + ", k = " +
                                    std::to_string(q.k) + ")");
    }
}

NordicQuadruple nordic_decompose(const Heap& c) {
    if (!is_connected(c)) throw std::invalid_argument("nordic_decompose: heap is not connected");
    if (is_pyramid(c)) throw std::invalid_argument("nordic_decompose: heap is a pyramid");

    const Piece alpha = minimal_pieces(c).back();
    auto [rest, pyramid] = push(c, alpha);
    std::vector<Heap> components = connected_components(rest);
    const Heap& c1 = components.front();

    // Put c1's rightmost column at [-2,-1]; alpha then starts at k.
    const int shift = -1 - c1.max_right();
    std::vector<Polymer> gap;
    for (std::size_t i = 1; i < components.size(); ++i) {
        for (const Polymer& p : components[i].linearization()) gap.push_back(p.shifted(shift));
    }

    NordicQuadruple q{canonical_translate(c1), alpha.polymer.left() + shift, Heap::from_sequence(gap),
                      canonical_translate(pyramid)};
    validate(q);
    return q;
}

Heap nordic_compose(const NordicQuadruple& q) {
    validate(q);
    Heap c1 = q.c1.translated(-1 - q.c1.max_right());
    Heap p = q.p.translated(q.k - q.p.pieces().front().polymer.left());
    return canonical_translate(product(product(c1, q.h), p));
}

}  // namespace polyheap
