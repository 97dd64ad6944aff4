#include "polyheap/heap_enum.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace polyheap {

namespace {

struct Interval {
    int left;
    int right;
};

using Layer = std::vector<Interval>;

bool supported(const Layer& base, int left, int right) {
    for (const Interval& q : base) {
        if (concurrent_bounds(left, right, q.left, q.right)) return true;
    }
    return false;
}

// Lists every non-empty layer of pairwise non-concurrent polymers in [lo, hi]
// with total length <= budget. With a base layer, each polymer must be
// concurrent with one of the base's polymers.
template <class Visit>
class LayerGenerator {
public:
    LayerGenerator(const Layer* base, int budget, int lo, int hi, Visit& visit)
        : base_(base), lo_(lo), hi_(hi), visit_(visit) {
        if (base_ != nullptr) {
            lo_ = std::max(lo_, base_->front().left - budget);
            hi_ = std::min(hi_, base_->back().right + budget);
        }
        rec(lo_, budget, 0);
    }

private:
    void rec(int start, int budget, int used) {
        if (!current_.empty()) visit_(static_cast<const Layer&>(current_), used);
        const int last_left = base_ != nullptr ? std::min(hi_ - 1, base_->back().right) : hi_ - 1;
        for (int a = start; a <= last_left; ++a) {
            const int max_b = std::min(hi_, a + budget);
            for (int b = a + 1; b <= max_b; ++b) {
                if (base_ != nullptr && !supported(*base_, a, b)) continue;
                current_.push_back({a, b});
                rec(b + 1, budget - (b - a), used + (b - a));
                current_.pop_back();
            }
        }
    }

    const Layer* base_;
    int lo_;
    int hi_;
    Visit& visit_;
    Layer current_;
};

template <class Visit>
void for_each_layer(const Layer* base, int budget, int lo, int hi, Visit&& visit) {
    LayerGenerator<std::remove_reference_t<Visit>> gen(base, budget, lo, hi, visit);
}

Heap heap_of_layers(const std::vector<Layer>& layers) {
    std::vector<Piece> pieces;
    for (std::size_t level = 0; level < layers.size(); ++level) {
        for (const Interval& p : layers[level]) {
            pieces.push_back({Polymer(p.left, p.right), static_cast<int>(level)});
        }
    }
    return heap_from_levels_unchecked(std::move(pieces));
}

class WindowWalker {
public:
    WindowWalker(int lo, int hi, const std::function<void(const Heap&)>& visit)
        : lo_(lo), hi_(hi), visit_(visit) {}

    void run(int length) {
        if (length == 0) {
            visit_(Heap());
            return;
        }
        extend(length);
    }

private:
    void extend(int remaining) {
        const Layer* base = layers_.empty() ? nullptr : &layers_.back();
        // Copy the base: pushing onto layers_ may reallocate.
        Layer base_copy;
        if (base != nullptr) base_copy = *base;
        for_each_layer(base != nullptr ? &base_copy : nullptr, remaining, lo_, hi_,
                       [&](const Layer& layer, int used) {
                           layers_.push_back(layer);
                           if (used == remaining) {
                               visit_(heap_of_layers(layers_));
                           } else {
                               extend(remaining - used);
                           }
                           layers_.pop_back();
                       });
    }

    int lo_;
    int hi_;
    const std::function<void(const Heap&)>& visit_;
    std::vector<Layer> layers_;
};

// Number of ways to stack further layers of total length exactly r on top of a
// given layer, memoized on (layer, r).
class TowerCounter {
public:
    TowerCounter(int lo, int hi) : lo_(lo), hi_(hi) {}

    std::uint64_t towers(const Layer& top, int r) {
        if (r == 0) return 1;
        Layer key_layer = top;
        // Further polymers reach at most r to the left of `top`; past the wall
        // the count is translation invariant, so normalize the distance to it.
        if (hi_ == INT_MAX && top.front().left - r > lo_) {
            const int shift = lo_ + r - top.front().left;
            for (Interval& p : key_layer) {
                p.left += shift;
                p.right += shift;
            }
        }
        std::string key = encode(key_layer, r);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::uint64_t total = 0;
        for_each_layer(&key_layer, r, lo_, hi_, [&](const Layer& next, int used) {
            total += towers(next, r - used);
        });
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::string encode(const Layer& layer, int r) const {
        std::string key;
        key.reserve(layer.size() * 2 * sizeof(int) + sizeof(int));
        auto put = [&](int v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
        put(r);
        for (const Interval& p : layer) {
            put(p.left);
            put(p.right);
        }
        return key;
    }

    int lo_;
    int hi_;
    std::unordered_map<std::string, std::uint64_t> memo_;
};

void check_length(int n) {
    if (n < 1) throw std::invalid_argument("total length must be at least 1, got " + std::to_string(n));
}

}  // namespace

std::optional<HeapClass> parse_heap_class(std::string_view name) {
    if (name == "all") return HeapClass::all;
    if (name == "connected") return HeapClass::connected;
    if (name == "pyramid") return HeapClass::pyramid;
    if (name == "half_pyramid") return HeapClass::half_pyramid;
    if (name == "within_strip") return HeapClass::within_strip;
    return std::nullopt;
}

std::string_view to_string(HeapClass c) {
    switch (c) {
        case HeapClass::all: return "all";
        case HeapClass::connected: return "connected";
        case HeapClass::pyramid: return "pyramid";
        case HeapClass::half_pyramid: return "half_pyramid";
        case HeapClass::within_strip: return "within_strip";
    }
    return "?";
}

void for_each_heap_in_window(int length, int lo, int hi, const std::function<void(const Heap&)>& visit) {
    if (length < 0) throw std::invalid_argument("negative total length");
    WindowWalker(lo, hi, visit).run(length);
}

std::vector<Heap> enumerate_heaps(int n, HeapFilter filter) {
    std::vector<Heap> out;
    if (filter.kind == HeapClass::within_strip) {
        if (n < 0) throw std::invalid_argument("total length must be non-negative");
        if (filter.strip < 0) throw std::invalid_argument("strip width must be non-negative");
        for_each_heap_in_window(n, 0, filter.strip - 1, [&](const Heap& h) { out.push_back(h); });
    } else {
        check_length(n);
        // Any heap of length n up to translation whose span is at most n has a
        // unique representative in [0, n] with min left 0.
        for_each_heap_in_window(n, 0, n, [&](const Heap& h) {
            if (h.min_left() != 0) return;
            bool keep = false;
            switch (filter.kind) {
                case HeapClass::all: keep = true; break;
                case HeapClass::connected: keep = is_connected(h); break;
                case HeapClass::pyramid: keep = is_pyramid(h); break;
                case HeapClass::half_pyramid: keep = is_half_pyramid(h); break;
                case HeapClass::within_strip: break;
            }
            if (keep) out.push_back(h);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> count_strip_heaps(int k, int max_length) {
    if (k < 0 || max_length < 0) throw std::invalid_argument("count_strip_heaps: negative argument");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_length) + 1, 0);
    counts[0] = 1;
    TowerCounter counter(0, k - 1);
    for_each_layer(nullptr, max_length, 0, k - 1, [&](const Layer& ground, int used) {
        for (int n = used; n <= max_length; ++n) counts[n] += counter.towers(ground, n - used);
    });
    return counts;
}

std::vector<std::uint64_t> count_ak_heaps(int k, int max_length) {
    if (k < 0 || max_length < 0) throw std::invalid_argument("count_ak_heaps: negative argument");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_length) + 1, 0);
    TowerCounter counter(0, INT_MAX);
    for_each_layer(nullptr, max_length, 0, k + max_length, [&](const Layer& ground, int used) {
        if (ground.back().left != k) return;
        for (int n = used; n <= max_length; ++n) counts[n] += counter.towers(ground, n - used);
    });
    return counts;
}

}  // namespace polyheap
