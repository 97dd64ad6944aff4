#pragma once

// Animals on the directed lattice N: vertices Z^2, arcs (-1,0) (-1,1) (0,1)
// (1,1) (1,0). As undirected sets, animals are king-move connected.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace polyheap {

struct Site {
    int x = 0;
    int y = 0;

    bool operator==(const Site&) const = default;
    /// Row-major: by ordinate, then abscissa.
    std::strong_ordering operator<=>(const Site& o) const {
        if (auto c = y <=> o.y; c != 0) return c;
        return x <=> o.x;
    }
};

inline constexpr std::array<Site, 5> kForwardArcs{{{-1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 0}}};

struct Segment {
    int y;
    int xmin;
    int xmax;  // inclusive

    int size() const { return xmax - xmin + 1; }
    bool operator==(const Segment&) const = default;
};

/// Finite king-connected site set, translated so min x = min y = 0 and stored
/// sorted by (y, x).
class Animal {
public:
    /// Canonicalizes and validates. Throws std::invalid_argument on an empty or
    /// disconnected set, or duplicate sites.
    explicit Animal(std::vector<Site> sites);

    /// Skips validation; `sites` must already be canonical.
    static Animal from_canonical(std::vector<Site> sites);

    std::span<const Site> sites() const { return sites_; }
    int area() const { return static_cast<int>(sites_.size()); }
    int width() const;
    int height() const { return sites_.back().y + 1; }
    bool contains(Site s) const;

    bool operator==(const Animal&) const = default;
    std::strong_ordering operator<=>(const Animal& o) const;

private:
    Animal() = default;
    std::vector<Site> sites_;
};

/// Bottom ordinate per column; nullopt (+infinity) outside the occupied columns.
class BottomProfile {
public:
    explicit BottomProfile(const Animal& a);

    std::optional<int> at(int x) const;
    int first_column() const { return 0; }
    int last_column() const { return static_cast<int>(floor_.size()) - 1; }
    std::span<const int> values() const { return floor_; }

private:
    std::vector<int> floor_;
};

std::vector<Segment> segments(const Animal& a);
BottomProfile bottom_profile(const Animal& a);

/// Leftmost sites of the maximal constant runs of the bottom profile that are
/// strict local minima (sources) or strict local maxima (keystones).
std::vector<Site> sources(const Animal& a);
std::vector<Site> keystones(const Animal& a);

/// Sites reachable from s along lattice arcs inside a. Throws if s is not in a.
std::vector<Site> reachable_from(const Animal& a, Site s);

bool is_directed(const Animal& a);
/// Throws std::invalid_argument if a is not directed.
int left_half_width_animal(const Animal& a);
bool is_multi_directed(const Animal& a);

// ---- enumeration ----------------------------------------------------------

enum class AnimalClass { all, directed, half, multi };

std::optional<AnimalClass> parse_animal_class(std::string_view name);
std::string_view to_string(AnimalClass c);
bool belongs_to(const Animal& a, AnimalClass c);

/// Visits every fixed animal of area 1..max_area in the class. Visiting order is
/// the generation order, deterministic but not sorted.
void for_each_animal(int max_area, AnimalClass c, const std::function<void(const Animal&)>& visit);

/// Counts per area 1..max_area (index 0 holds area 1).
std::vector<std::uint64_t> count_animals(int max_area, AnimalClass c);

/// All animals of area n in the class, sorted. Throws std::invalid_argument for n < 1.
std::vector<Animal> enumerate_animals(int n, AnimalClass c);

}  // namespace polyheap
