#pragma once

// Exhaustive verification suites: brute-force enumerations checked against the
// bijections and the generating functions.

#include <string>
#include <string_view>
#include <vector>

namespace polyheap {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool pass() const;
};

/// project / animal_from_pyramid / animal_from_connected_heap are mutually
/// inverse for every size up to max_area, and reconstruction does not depend on
/// the maximal polymer peeled at each step.
SuiteReport verify_bijections(int max_area);

/// nordic_compose and nordic_decompose are mutually inverse on every non-pyramid
/// connected heap and every valid quadruple of total length up to max_length.
SuiteReport verify_nordic(int max_length);

/// H_k D_{>k} identity for k <= kmax through `order`.
SuiteReport verify_lemma_hd(int order, int kmax = 4);

/// Exhaustive A_k counts against S(1+S)^k for k <= kmax through `order`; the
/// memoized counter is also checked against explicit generation up to
/// min(order, 8).
SuiteReport verify_ak(int order, int kmax = 4);

/// Brute-force counts against the series: directed and half-animals up to
/// max_area; the left half-width distribution, multi-directed animals and
/// connected heaps up to min(max_area, 8).
SuiteReport verify_oracle(int max_area);

/// Names accepted by run_suite, sorted.
const std::vector<std::string>& suite_names();

/// Dispatches by name; throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, int max_area, int order);

}  // namespace polyheap
