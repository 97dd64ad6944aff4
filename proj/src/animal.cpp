#include "polyheap/animal.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyheap {

namespace {

// Dense occupancy map over the bounding box of a canonical animal.
class SiteGrid {
public:
    explicit SiteGrid(const Animal& a) : width_(a.width()), height_(a.height()) {
        index_.assign(static_cast<std::size_t>(width_ * height_), -1);
        int i = 0;
        for (Site s : a.sites()) index_[slot(s)] = i++;
    }

    int index_of(Site s) const {
        if (s.x < 0 || s.y < 0 || s.x >= width_ || s.y >= height_) return -1;
        return index_[slot(s)];
    }

private:
    std::size_t slot(Site s) const { return static_cast<std::size_t>(s.y * width_ + s.x); }

    int width_;
    int height_;
    std::vector<int> index_;
};

// Forward search from `seeds`, never entering sites flagged in `blocked`.
std::vector<bool> forward_closure(const Animal& a, const SiteGrid& grid, std::span<const int> seeds,
                                  const std::vector<bool>& blocked) {
    auto sites = a.sites();
    std::vector<bool> seen(sites.size(), false);
    std::vector<int> stack;
    for (int s : seeds) {
        if (!seen[s]) {
            seen[s] = true;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        Site cur = sites[stack.back()];
        stack.pop_back();
        for (Site arc : kForwardArcs) {
            int j = grid.index_of({cur.x + arc.x, cur.y + arc.y});
            if (j >= 0 && !seen[j] && !blocked[j]) {
                seen[j] = true;
                stack.push_back(j);
            }
        }
    }
    return seen;
}

bool king_connected(std::span<const Site> sorted) {
    std::vector<bool> seen(sorted.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Site cur = sorted[stack.back()];
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                Site nb{cur.x + dx, cur.y + dy};
                auto it = std::lower_bound(sorted.begin(), sorted.end(), nb);
                if (it != sorted.end() && *it == nb) {
                    auto j = static_cast<std::size_t>(it - sorted.begin());
                    if (!seen[j]) {
                        seen[j] = true;
                        ++reached;
                        stack.push_back(j);
                    }
                }
            }
        }
    }
    return reached == sorted.size();
}

struct ProfileRun {
    int first;
    int last;
    int value;
};

std::vector<ProfileRun> profile_runs(const BottomProfile& b) {
    std::vector<ProfileRun> runs;
    auto v = b.values();
    for (int x = 0; x < static_cast<int>(v.size()); ++x) {
        if (!runs.empty() && runs.back().value == v[x]) {
            runs.back().last = x;
        } else {
            runs.push_back({x, x, v[x]});
        }
    }
    return runs;
}

}  // namespace

Animal::Animal(std::vector<Site> sites) {
    if (sites.empty()) throw std::invalid_argument("animal must have at least one site");
    int min_x = sites.front().x, min_y = sites.front().y;
    for (Site s : sites) {
        min_x = std::min(min_x, s.x);
        min_y = std::min(min_y, s.y);
    }
    for (Site& s : sites) s = {s.x - min_x, s.y - min_y};
    std::sort(sites.begin(), sites.end());
    if (std::adjacent_find(sites.begin(), sites.end()) != sites.end()) {
        throw std::invalid_argument("animal has duplicate sites");
    }
    if (!king_connected(sites)) throw std::invalid_argument("animal is not connected");
    sites_ = std::move(sites);

    // Connectedness forces the occupied columns to form an interval.
    std::vector<bool> column(static_cast<std::size_t>(width()), false);
    for (Site s : sites_) column[s.x] = true;
    if (std::find(column.begin(), column.end(), false) != column.end()) {
        throw std::logic_error("connected animal with a gap in its columns");
    }
}

Animal Animal::from_canonical(std::vector<Site> sites) {
    Animal a;
    a.sites_ = std::move(sites);
    return a;
}

int Animal::width() const {
    int w = 0;
    for (Site s : sites_) w = std::max(w, s.x + 1);
    return w;
}

bool Animal::contains(Site s) const { return std::binary_search(sites_.begin(), sites_.end(), s); }

std::strong_ordering Animal::operator<=>(const Animal& o) const {
    if (auto c = sites_.size() <=> o.sites_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(sites_.begin(), sites_.end(), o.sites_.begin(),
                                                  o.sites_.end());
}

BottomProfile::BottomProfile(const Animal& a) {
    floor_.assign(static_cast<std::size_t>(a.width()), a.height());
    for (Site s : a.sites()) floor_[s.x] = std::min(floor_[s.x], s.y);
}

std::optional<int> BottomProfile::at(int x) const {
    if (x < 0 || x > last_column()) return std::nullopt;
    return floor_[x];
}

std::vector<Segment> segments(const Animal& a) {
    std::vector<Segment> out;
    for (Site s : a.sites()) {
        if (!out.empty() && out.back().y == s.y && out.back().xmax + 1 == s.x) {
            out.back().xmax = s.x;
        } else {
            out.push_back({s.y, s.x, s.x});
        }
    }
    return out;
}

BottomProfile bottom_profile(const Animal& a) { return BottomProfile(a); }

std::vector<Site> sources(const Animal& a) {
    BottomProfile b(a);
    std::vector<Site> out;
    for (const ProfileRun& r : profile_runs(b)) {
        auto before = b.at(r.first - 1);
        auto after = b.at(r.last + 1);
        if ((!before || *before > r.value) && (!after || *after > r.value)) {
            out.push_back({r.first, r.value});
        }
    }
    return out;
}

std::vector<Site> keystones(const Animal& a) {
    BottomProfile b(a);
    std::vector<Site> out;
    for (const ProfileRun& r : profile_runs(b)) {
        auto before = b.at(r.first - 1);
        auto after = b.at(r.last + 1);
        if (before && *before < r.value && after && *after < r.value) {
            out.push_back({r.first, r.value});
        }
    }
    return out;
}

std::vector<Site> reachable_from(const Animal& a, Site s) {
    SiteGrid grid(a);
    int start = grid.index_of(s);
    if (start < 0) throw std::invalid_argument("reachable_from: site is not in the animal");
    std::vector<bool> blocked(a.sites().size(), false);
    std::vector<bool> seen = forward_closure(a, grid, std::span(&start, 1), blocked);
    std::vector<Site> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i]) out.push_back(a.sites()[i]);
    }
    return out;
}

bool is_directed(const Animal& a) {
    // sites()[0] is the leftmost site of the bottom row, i.e. of the bottommost segment.
    return reachable_from(a, a.sites().front()).size() == a.sites().size();
}

int left_half_width_animal(const Animal& a) {
    if (!is_directed(a)) throw std::invalid_argument("left_half_width_animal: animal is not directed");
    return a.sites().front().x;
}

bool is_multi_directed(const Animal& a) {
    SiteGrid grid(a);
    const std::size_t n = a.sites().size();
    std::vector<Site> src = sources(a);
    std::vector<int> src_index;
    for (Site s : src) src_index.push_back(grid.index_of(s));

    std::vector<bool> none(n, false);
    std::vector<bool> fed = forward_closure(a, grid, src_index, none);
    if (std::find(fed.begin(), fed.end(), false) != fed.end()) return false;

    std::vector<Site> keys = keystones(a);
    for (Site t : keys) {
        // Keystones level with t may not be crossed; t itself is the endpoint.
        std::vector<bool> blocked(n, false);
        for (Site other : keys) {
            if (other.y == t.y && other != t) blocked[grid.index_of(other)] = true;
        }
        std::vector<int> left, right;
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i].x < t.x) left.push_back(src_index[i]);
            if (src[i].x > t.x) right.push_back(src_index[i]);
        }
        int target = grid.index_of(t);
        if (left.empty() || right.empty()) return false;
        if (!forward_closure(a, grid, left, blocked)[target]) return false;
        if (!forward_closure(a, grid, right, blocked)[target]) return false;
    }
    return true;
}

}  // namespace polyheap
