#include <doctest.h>

#include <stdexcept>

#include "polyheap/gf.hpp"
#include "polyheap/heap_enum.hpp"
#include "polyheap/json_io.hpp"

using namespace polyheap;

TEST_CASE("heap encoding") {
    std::vector<Polymer> word{Polymer(0, 1), Polymer(2, 3), Polymer(1, 2)};
    Heap h = Heap::from_sequence(word);
    json j = heap_to_json(h);
    CHECK(j.dump() == "[[0,1,0],[2,3,0],[1,2,1]]");
    CHECK(heap_from_json(j) == h);
    CHECK(heap_to_json(Heap()).dump() == "[]");
    CHECK_THROWS_AS(heap_from_json(json::parse("[[0,1,1]]")), std::invalid_argument);
    CHECK_THROWS_AS(heap_from_json(json::parse("[[0,1]]")), std::invalid_argument);
    CHECK_THROWS_AS(heap_from_json(json::parse("{}")), std::invalid_argument);
    CHECK_THROWS_AS(heap_from_json(json::parse("[[1,1,0]]")), std::invalid_argument);
}

TEST_CASE("heap round trip over all connected heaps of length 5") {
    for (const Heap& h : enumerate_heaps(5, HeapFilter::of(HeapClass::connected))) {
        REQUIRE(heap_from_json(json::parse(heap_to_json(h).dump())) == h);
    }
}

TEST_CASE("animal encoding") {
    Animal a({{1, 0}, {0, 1}, {2, 1}});
    CHECK(animal_to_json(a).dump() == "[[1,0],[0,1],[2,1]]");
    CHECK(animal_from_json(animal_to_json(a)) == a);
    CHECK_THROWS_AS(animal_from_json(json::parse("[[0,0],[3,3]]")), std::invalid_argument);
    CHECK_THROWS_AS(animal_from_json(json::parse("[[0]]")), std::invalid_argument);
}

TEST_CASE("quadruple encoding") {
    std::vector<Polymer> word{Polymer(0, 1), Polymer(2, 3), Polymer(1, 2)};
    NordicQuadruple q = nordic_decompose(Heap::from_sequence(word));
    json j = quadruple_to_json(q);
    CHECK(j.dump() == R"({"c1":[[0,1,0]],"k":0,"h":[],"p":[[1,2,0],[0,1,1]]})");
    CHECK(quadruple_from_json(j) == q);
    j["k"] = 5;
    CHECK_THROWS_AS(quadruple_from_json(j), std::invalid_argument);
}

TEST_CASE("series encoding uses decimal strings") {
    TruncatedSeries s = series_S(30);
    json j = series_to_json("S", s);
    CHECK(j["name"] == "S");
    CHECK(j["order"] == 30);
    CHECK(j["coefficients"][5] == "197");
    CHECK(j["coefficients"][30].get<std::string>() == series_S(30)[30].get_num().get_str());
    CHECK(series_from_json(j) == s);
    j["order"] = 31;
    CHECK_THROWS_AS(series_from_json(j), std::invalid_argument);
}

TEST_CASE("report entry fields") {
    json j = report_entry_to_json({"mu", 6.4752, 6.475, 5e-4, true});
    CHECK(j.dump() == R"({"constant":"mu","computed":6.4752,"target":6.475,"tolerance":0.0005,"pass":true})");
}
