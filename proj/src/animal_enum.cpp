#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "polyheap/animal.hpp"

namespace polyheap {

namespace {

// Redelmeier's growth over a padded grid. The root sits at (0,0); cells below
// it or left of it on row 0 are pre-marked so every set is generated once, with
// the root as its lowest-then-leftmost site. With king moves as the neighbor
// set this lists fixed animals; with the forward arcs of N it lists directed
// animals rooted at their source.
class Redelmeier {
public:
    Redelmeier(int max_area, std::span<const Site> moves)
        : max_area_(max_area), moves_(moves.begin(), moves.end()) {
        // x in [-max_area-1, max_area+1], y in [-1, max_area]
        width_ = 2 * max_area + 3;
        rows_ = max_area + 2;
        seen_.assign(static_cast<std::size_t>(width_ * rows_), 0);
        for (int x = -max_area - 1; x <= max_area + 1; ++x) {
            seen_[cell(x, -1)] = 1;
            seen_[cell(x, max_area)] = 1;
            if (x < 0) seen_[cell(x, 0)] = 1;
        }
        for (int y = -1; y <= max_area; ++y) {
            seen_[cell(-max_area - 1, y)] = 1;
            seen_[cell(max_area + 1, y)] = 1;
        }
        for (Site m : moves_) offsets_.push_back(m.y * width_ + m.x);
        untried_.resize(static_cast<std::size_t>(max_area + 1));
        for (auto& u : untried_) u.reserve(moves_.size() * static_cast<std::size_t>(max_area) + 1);
        chosen_.resize(static_cast<std::size_t>(max_area));
    }

    // visit(cells, size) is called for every generated set.
    template <class Visit>
    void run(Visit&& visit) {
        int root = cell(0, 0);
        seen_[root] = 1;
        untried_[0].assign(1, root);
        grow(0, visit);
        seen_[root] = 0;
    }

    Site site_of(int c) const { return {c % width_ - (max_area_ + 1), c / width_ - 1}; }

private:
    int cell(int x, int y) const { return (y + 1) * width_ + (x + max_area_ + 1); }

    template <class Visit>
    void grow(int depth, Visit& visit) {
        std::vector<int>& pool = untried_[depth];
        while (!pool.empty()) {
            int c = pool.back();
            pool.pop_back();
            chosen_[depth] = c;
            visit(std::span<const int>(chosen_.data(), static_cast<std::size_t>(depth + 1)));
            if (depth + 1 == max_area_) continue;

            std::vector<int>& next = untried_[depth + 1];
            next = pool;
            std::array<int, 8> added{};
            std::size_t n_added = 0;
            for (int off : offsets_) {
                int nb = c + off;
                if (!seen_[nb]) {
                    seen_[nb] = 1;
                    next.push_back(nb);
                    added[n_added++] = nb;
                }
            }
            grow(depth + 1, visit);
            for (std::size_t i = 0; i < n_added; ++i) seen_[added[i]] = 0;
        }
    }

    int max_area_;
    std::vector<Site> moves_;
    std::vector<int> offsets_;
    int width_ = 0;
    int rows_ = 0;
    std::vector<char> seen_;
    std::vector<std::vector<int>> untried_;
    std::vector<int> chosen_;
};

constexpr std::array<Site, 8> kKingMoves{
    {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}}};

Animal canonical_from_cells(const Redelmeier& gen, std::span<const int> cells) {
    std::vector<Site> sites;
    sites.reserve(cells.size());
    int min_x = 0;
    for (int c : cells) {
        Site s = gen.site_of(c);
        min_x = std::min(min_x, s.x);
        sites.push_back(s);
    }
    for (Site& s : sites) s.x -= min_x;
    std::sort(sites.begin(), sites.end());
    return Animal::from_canonical(std::move(sites));
}

void check_area(int n) {
    if (n < 1) throw std::invalid_argument("area must be at least 1, got " + std::to_string(n));
}

bool directed_family(AnimalClass c) { return c == AnimalClass::directed || c == AnimalClass::half; }

}  // namespace

std::optional<AnimalClass> parse_animal_class(std::string_view name) {
    if (name == "all") return AnimalClass::all;
    if (name == "directed") return AnimalClass::directed;
    if (name == "half") return AnimalClass::half;
    if (name == "multi") return AnimalClass::multi;
    return std::nullopt;
}

std::string_view to_string(AnimalClass c) {
    switch (c) {
        case AnimalClass::all: return "all";
        case AnimalClass::directed: return "directed";
        case AnimalClass::half: return "half";
        case AnimalClass::multi: return "multi";
    }
    return "?";
}

bool belongs_to(const Animal& a, AnimalClass c) {
    switch (c) {
        case AnimalClass::all: return true;
        case AnimalClass::directed: return is_directed(a);
        case AnimalClass::half: return is_directed(a) && left_half_width_animal(a) == 0;
        case AnimalClass::multi: return is_multi_directed(a);
    }
    return false;
}

void for_each_animal(int max_area, AnimalClass c, const std::function<void(const Animal&)>& visit) {
    check_area(max_area);
    if (directed_family(c)) {
        Redelmeier gen(max_area, kForwardArcs);
        gen.run([&](std::span<const int> cells) {
            if (c == AnimalClass::half) {
                for (int cell : cells) {
                    if (gen.site_of(cell).x < 0) return;
                }
            }
            visit(canonical_from_cells(gen, cells));
        });
        return;
    }
    Redelmeier gen(max_area, kKingMoves);
    gen.run([&](std::span<const int> cells) {
        Animal a = canonical_from_cells(gen, cells);
        if (c == AnimalClass::all || belongs_to(a, c)) visit(a);
    });
}

std::vector<std::uint64_t> count_animals(int max_area, AnimalClass c) {
    check_area(max_area);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_area), 0);
    if (c == AnimalClass::multi) {
        for_each_animal(max_area, c, [&](const Animal& a) { ++counts[a.area() - 1]; });
        return counts;
    }
    // Counting the other classes needs no canonical form.
    Redelmeier gen(max_area, directed_family(c) ? std::span<const Site>(kForwardArcs)
                                                : std::span<const Site>(kKingMoves));
    gen.run([&](std::span<const int> cells) {
        if (c == AnimalClass::half) {
            for (int cell : cells) {
                if (gen.site_of(cell).x < 0) return;
            }
        }
        ++counts[cells.size() - 1];
    });
    return counts;
}

std::vector<Animal> enumerate_animals(int n, AnimalClass c) {
    check_area(n);
    std::vector<Animal> out;
    for_each_animal(n, c, [&](const Animal& a) {
        if (a.area() == n) out.push_back(a);
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polyheap
