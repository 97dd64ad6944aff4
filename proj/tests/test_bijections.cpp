#include <doctest.h>

#include <stdexcept>

#include "polyheap/bijections.hpp"
#include "polyheap/heap_enum.hpp"

using namespace polyheap;

namespace {

Heap seq(std::initializer_list<std::pair<int, int>> polymers) {
    std::vector<Polymer> v;
    for (auto [l, r] : polymers) v.emplace_back(l, r);
    return Heap::from_sequence(v);
}

}  // namespace

TEST_CASE("projection of a column and of a row") {
    Heap column = project(Animal({{0, 0}, {0, 1}, {0, 2}}));
    CHECK(column == seq({{0, 1}, {0, 1}, {0, 1}}));
    CHECK(column.height() == 3);
    Heap row = project(Animal({{0, 0}, {1, 0}, {2, 0}}));
    CHECK(row == seq({{0, 3}}));
}

TEST_CASE("pyramid to directed animal") {
    Heap p = seq({{1, 2}, {0, 1}, {2, 4}});
    Animal a = animal_from_pyramid(p);
    CHECK(a == Animal({{1, 0}, {0, 1}, {2, 1}, {3, 1}}));
    CHECK(is_directed(a));
    CHECK(project(a) == p);
    CHECK_THROWS_AS(animal_from_pyramid(seq({{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("connected heap whose right component must be lifted") {
    Animal a({{0, 0}, {0, 1}, {0, 2}, {1, 3}, {2, 2}});
    Heap c = project(a);
    // The lone right segment falls to the floor in the heap.
    CHECK(c.contains(Piece{Polymer(2, 3), 0}));
    CHECK(c.contains(Piece{Polymer(1, 2), 3}));
    CHECK(is_connected(c));
    CHECK_FALSE(is_pyramid(c));
    CHECK(is_multi_directed(a));
    CHECK(animal_from_connected_heap(c) == a);
}

TEST_CASE("reconstruction errors") {
    CHECK_THROWS_AS(animal_from_connected_heap(Heap()), std::invalid_argument);
    CHECK_THROWS_AS(animal_from_connected_heap(seq({{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("nordic decomposition of a small heap") {
    Heap c = seq({{0, 1}, {2, 3}, {1, 2}});
    NordicQuadruple q = nordic_decompose(c);
    CHECK(q.c1 == seq({{0, 1}}));
    CHECK(q.k == 0);
    CHECK(q.h.empty());
    CHECK(q.p == seq({{1, 2}, {0, 1}}));
    CHECK(nordic_compose(q) == c);
    CHECK_THROWS_AS(nordic_decompose(seq({{0, 1}, {1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(nordic_decompose(seq({{0, 1}, {3, 4}})), std::invalid_argument);
}

TEST_CASE("quadruple validation") {
    const Heap c1 = seq({{0, 1}});
    const Heap p = seq({{3, 4}, {2, 3}, {1, 2}, {0, 1}});  // left half-width 3
    CHECK_NOTHROW(validate({c1, 2, seq({{0, 1}}), p}));
    CHECK_NOTHROW(validate({c1, 0, Heap(), p}));
    CHECK_THROWS_AS(validate({c1, 3, Heap(), p}), std::invalid_argument);
    CHECK_THROWS_AS(validate({c1, 2, seq({{0, 2}}), p}), std::invalid_argument);
    CHECK_THROWS_AS(validate({seq({{0, 1}, {2, 3}}), 0, Heap(), p}), std::invalid_argument);
    CHECK_THROWS_AS(validate({c1, 0, Heap(), seq({{0, 1}, {2, 3}})}), std::invalid_argument);
    CHECK_THROWS_AS(validate({c1.translated(1), 0, Heap(), p}), std::invalid_argument);
    CHECK_THROWS_AS(validate({c1, -1, Heap(), p}), std::invalid_argument);

    NordicQuadruple q{c1, 2, seq({{0, 1}}), p};
    Heap c = nordic_compose(q);
    CHECK(is_connected(c));
    CHECK_FALSE(is_pyramid(c));
    CHECK(nordic_decompose(c) == q);
}

TEST_CASE("property: nordic round trip on connected heaps up to length 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Heap& c : enumerate_heaps(n, HeapFilter::of(HeapClass::connected))) {
            if (is_pyramid(c)) continue;
            NordicQuadruple q = nordic_decompose(c);
            REQUIRE_NOTHROW(validate(q));
            REQUIRE(q.c1.total_length() + q.h.total_length() + q.p.total_length() == n);
            REQUIRE(left_half_width(q.p) > q.k);
            REQUIRE(nordic_compose(q) == c);
        }
    }
}

TEST_CASE("property: animals and heaps correspond up to area 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Animal& a : enumerate_animals(n, AnimalClass::multi)) {
            Heap c = project(a);
            REQUIRE(c.total_length() == n);
            REQUIRE(animal_from_connected_heap(c) == a);
            if (is_directed(a)) {
                REQUIRE(is_pyramid(c));
                REQUIRE(animal_from_pyramid(c) == a);
                REQUIRE(left_half_width(c) == left_half_width_animal(a));
            }
        }
    }
}
