#include "polyheap/json_io.hpp"

#include <stdexcept>
#include <string>

namespace polyheap {

json heap_to_json(const Heap& h) {
    json out = json::array();
    for (const Piece& p : h.pieces()) out.push_back({p.polymer.left(), p.polymer.right(), p.level});
    return out;
}

Heap heap_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("heap must be a JSON array");
    std::vector<Piece> pieces;
    for (const json& triple : j) {
        if (!triple.is_array() || triple.size() != 3) {
            throw std::invalid_argument("heap entries must be [left, right, level]");
        }
        pieces.push_back({Polymer(triple[0].get<int>(), triple[1].get<int>()), triple[2].get<int>()});
    }
    return Heap::from_pieces(std::move(pieces));
}

json animal_to_json(const Animal& a) {
    json out = json::array();
    for (Site s : a.sites()) out.push_back({s.x, s.y});
    return out;
}

Animal animal_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("animal must be a JSON array");
    std::vector<Site> sites;
    for (const json& pair : j) {
        if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("animal entries must be [x, y]");
        sites.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return Animal(std::move(sites));
}

json quadruple_to_json(const NordicQuadruple& q) {
    return {{"c1", heap_to_json(q.c1)}, {"k", q.k}, {"h", heap_to_json(q.h)}, {"p", heap_to_json(q.p)}};
}

NordicQuadruple quadruple_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("quadruple must be a JSON object");
    NordicQuadruple q{heap_from_json(j.at("c1")), j.at("k").get<int>(), heap_from_json(j.at("h")),
                      heap_from_json(j.at("p"))};
    validate(q);
    return q;
}

json series_to_json(std::string_view name, const TruncatedSeries& s) {
    json coeffs = json::array();
    for (const mpz_class& c : s.integer_coefficients()) coeffs.push_back(c.get_str());
    return {{"name", std::string(name)}, {"order", s.order()}, {"coefficients", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json& j) {
    const int order = j.at("order").get<int>();
    const json& coeffs = j.at("coefficients");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1) {
        throw std::invalid_argument("series needs order+1 coefficients");
    }
    std::vector<mpq_class> values;
    for (const json& c : coeffs) values.emplace_back(mpz_class(c.get<std::string>()));
    return TruncatedSeries(order, std::move(values));
}

json report_entry_to_json(const ReportEntry& e) {
    return {{"constant", e.constant},
            {"computed", e.computed},
            {"target", e.target},
            {"tolerance", e.tolerance},
            {"pass", e.pass}};
}

}  // namespace polyheap
