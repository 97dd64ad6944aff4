#pragma once

// JSON encodings used by the CLI.
//
//   Heap             [[left, right, level], ...] in canonical order
//   Animal           [[x, y], ...] sorted by (y, x)
//   NordicQuadruple  {"c1": heap, "k": int, "h": heap, "p": heap}
//   Series           {"name": str, "order": N, "coefficients": ["decimal", ...]}

#include <json.hpp>

#include <string_view>

#include "polyheap/animal.hpp"
#include "polyheap/asymptotics.hpp"
#include "polyheap/bijections.hpp"
#include "polyheap/heap.hpp"
#include "polyheap/series.hpp"

namespace polyheap {

using json = nlohmann::ordered_json;

json heap_to_json(const Heap& h);
/// Throws std::invalid_argument on malformed input or levels that are not fallen.
Heap heap_from_json(const json& j);

json animal_to_json(const Animal& a);
Animal animal_from_json(const json& j);

json quadruple_to_json(const NordicQuadruple& q);
NordicQuadruple quadruple_from_json(const json& j);

/// Integer series only; coefficients as decimal strings.
json series_to_json(std::string_view name, const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

json report_entry_to_json(const ReportEntry& e);

}  // namespace polyheap
