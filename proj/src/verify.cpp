#include "polyheap/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "polyheap/animal.hpp"
#include "polyheap/bijections.hpp"
#include "polyheap/gf.hpp"
#include "polyheap/heap_enum.hpp"

namespace polyheap {

namespace {

std::string n_is(int n) { return " (n=" + std::to_string(n) + ")"; }

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<std::string> as_strings(const std::vector<std::uint64_t>& v) {
    std::vector<std::string> out;
    for (auto x : v) out.push_back(std::to_string(x));
    return out;
}

std::vector<std::string> as_strings(const std::vector<mpz_class>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

// Compares brute-force counts (index i = size i+offset) against series coefficients.
Check compare_counts(std::string name, const std::vector<std::uint64_t>& counts, const TruncatedSeries& series,
                     int first) {
    std::vector<mpz_class> coeffs = series.integer_coefficients();
    std::vector<mpz_class> expected;
    Check c{std::move(name), true, ""};
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const int n = first + static_cast<int>(i);
        expected.push_back(coeffs[n]);
        if (mpz_class(std::to_string(counts[i])) != coeffs[n]) c.pass = false;
    }
    c.detail = "brute force [" + join(as_strings(counts)) + "] series [" + join(as_strings(expected)) + "]";
    return c;
}

}  // namespace

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

SuiteReport verify_bijections(int max_area) {
    SuiteReport report{"bijections", {}};
    std::mt19937 rng(20240613);
    MaximalChooser random_choice = [&rng](std::span<const Piece> maximal) {
        return std::uniform_int_distribution<std::size_t>(0, maximal.size() - 1)(rng);
    };
    MaximalChooser lowest_leftmost = [](std::span<const Piece> maximal) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < maximal.size(); ++i) {
            const Piece& a = maximal[i];
            const Piece& b = maximal[best];
            if (a.level < b.level || (a.level == b.level && a.polymer.left() < b.polymer.left())) best = i;
        }
        return best;
    };

    for (int n = 1; n <= max_area; ++n) {
        // Directed animals and pyramids.
        std::vector<Animal> directed = enumerate_animals(n, AnimalClass::directed);
        std::vector<Heap> pyramids = enumerate_heaps(n, HeapFilter::of(HeapClass::pyramid));
        bool ok = directed.size() == pyramids.size();
        for (const Animal& a : directed) {
            Heap p = project(a);
            if (!is_pyramid(p) || p.total_length() != n || animal_from_pyramid(p) != a) ok = false;
        }
        std::vector<Animal> image;
        for (const Heap& p : pyramids) {
            Animal a = animal_from_pyramid(p);
            if (project(a) != p || !is_directed(a)) ok = false;
            image.push_back(a);
        }
        std::sort(image.begin(), image.end());
        if (image != directed) ok = false;
        report.checks.push_back({"pyramids <-> directed animals" + n_is(n), ok,
                                 std::to_string(directed.size()) + " directed, " +
                                     std::to_string(pyramids.size()) + " pyramids"});

        // Multi-directed animals and connected heaps.
        std::vector<Animal> multi = enumerate_animals(n, AnimalClass::multi);
        std::vector<Heap> connected = enumerate_heaps(n, HeapFilter::of(HeapClass::connected));
        ok = multi.size() == connected.size();
        for (const Animal& a : multi) {
            Heap c = project(a);
            if (!is_connected(c) || animal_from_connected_heap(c) != a) ok = false;
        }
        image.clear();
        bool choice_free = true;
        bool pyramid_agree = true;
        for (const Heap& c : connected) {
            Animal a = animal_from_connected_heap(c);
            if (project(a) != c || !is_multi_directed(a)) ok = false;
            if (animal_from_connected_heap(c, random_choice) != a ||
                animal_from_connected_heap(c, lowest_leftmost) != a) {
                choice_free = false;
            }
            if (is_pyramid(c) && animal_from_pyramid(c) != a) pyramid_agree = false;
            image.push_back(a);
        }
        std::sort(image.begin(), image.end());
        if (image != multi) ok = false;
        report.checks.push_back({"connected heaps <-> multi-directed animals" + n_is(n), ok,
                                 std::to_string(multi.size()) + " multi-directed, " +
                                     std::to_string(connected.size()) + " connected heaps"});
        report.checks.push_back({"reconstruction independent of peeled polymer" + n_is(n), choice_free,
                                 "random and lowest-leftmost choices vs highest-rightmost"});
        report.checks.push_back({"connected reconstruction agrees with falling on pyramids" + n_is(n),
                                 pyramid_agree, ""});

        // Every animal projects onto a connected heap of the same total length.
        bool projections = true;
        for_each_animal(n, AnimalClass::all, [&](const Animal& a) {
            if (a.area() != n) return;
            Heap h = project(a);
            if (!is_connected(h) || h.total_length() != n) projections = false;
        });
        report.checks.push_back({"every animal projects to a connected heap" + n_is(n), projections, ""});
    }
    return report;
}

SuiteReport verify_nordic(int max_length) {
    SuiteReport report{"nordic", {}};
    std::vector<std::vector<Heap>> connected(static_cast<std::size_t>(max_length) + 1);
    std::vector<std::vector<Heap>> pyramids(static_cast<std::size_t>(max_length) + 1);
    for (int n = 1; n <= max_length; ++n) {
        connected[n] = enumerate_heaps(n, HeapFilter::of(HeapClass::connected));
        pyramids[n] = enumerate_heaps(n, HeapFilter::of(HeapClass::pyramid));
    }

    for (int n = 1; n <= max_length; ++n) {
        bool ok = true;
        std::size_t non_pyramids = 0;
        std::string first_bad;
        for (const Heap& c : connected[n]) {
            if (is_pyramid(c)) continue;
            ++non_pyramids;
            try {
                NordicQuadruple q = nordic_decompose(c);
                if (nordic_compose(q) != c) ok = false;
            } catch (const std::exception& e) {
                ok = false;
                if (first_bad.empty()) first_bad = e.what();
            }
        }
        report.checks.push_back({"compose(decompose(C)) = C" + n_is(n), ok,
                                 std::to_string(non_pyramids) + " non-pyramid connected heaps" +
                                     (first_bad.empty() ? "" : "; " + first_bad)});

        // Every valid quadruple of total length n.
        ok = true;
        std::size_t quadruples = 0;
        for (int a = 1; a < n; ++a) {
            for (int plen = 2; a + plen <= n; ++plen) {
                const int b = n - a - plen;
                for (int k = 0; k <= plen - 2; ++k) {
                    std::vector<Heap> strip = enumerate_heaps(b, HeapFilter::within_strip(k));
                    for (const Heap& c1 : connected[a]) {
                        for (const Heap& h : strip) {
                            for (const Heap& p : pyramids[plen]) {
                                if (left_half_width(p) <= k) continue;
                                ++quadruples;
                                NordicQuadruple q{c1, k, h, p};
                                Heap c = nordic_compose(q);
                                if (!is_connected(c) || is_pyramid(c) || nordic_decompose(c) != q) ok = false;
                            }
                        }
                    }
                }
            }
        }
        if (quadruples != non_pyramids) ok = false;
        report.checks.push_back({"decompose(compose(q)) = q" + n_is(n), ok,
                                 std::to_string(quadruples) + " quadruples"});
    }
    return report;
}

SuiteReport verify_lemma_hd(int order, int kmax) {
    SuiteReport report{"lemma-hd", {}};
    LemmaHDReport lemma = check_lemma_HD(order, kmax);
    for (const LemmaHDRow& row : lemma.rows) {
        std::string detail = "through t^" + std::to_string(order);
        if (!row.pass) {
            detail += "; first mismatch at t^" + std::to_string(row.first_failure) + ": " +
                      row.brute_force[row.first_failure].get_str() + " vs " +
                      row.closed_form[row.first_failure].get_str();
        }
        report.checks.push_back({"H_k D_{>k} closed form (k=" + std::to_string(row.k) + ")", row.pass, detail});
    }
    return report;
}

SuiteReport verify_ak(int order, int kmax) {
    SuiteReport report{"ak", {}};
    const int explicit_max = std::min(order, 8);
    for (int k = 0; k <= kmax; ++k) {
        std::vector<std::uint64_t> counts = count_ak_heaps(k, order);
        std::vector<std::uint64_t> tail(counts.begin() + 1, counts.end());
        report.checks.push_back(
            compare_counts("A_k = S(1+S)^k (k=" + std::to_string(k) + ")", tail, series_Ak(order, k), 1));

        // The memoized count against heaps generated one by one.
        bool agree = true;
        for (int n = 1; n <= explicit_max; ++n) {
            std::uint64_t explicit_count = 0;
            for_each_heap_in_window(n, 0, k + n, [&](const Heap& h) {
                if (minimal_pieces(h).back().polymer.left() == k) ++explicit_count;
            });
            if (explicit_count != counts[n]) agree = false;
        }
        report.checks.push_back({"A_k memoized count = explicit generation (k=" + std::to_string(k) +
                                     ", n<=" + std::to_string(explicit_max) + ")",
                                 agree, ""});
    }
    return report;
}

SuiteReport verify_oracle(int max_area) {
    SuiteReport report{"oracle", {}};
    const int small = std::min(max_area, 8);

    report.checks.push_back(compare_counts("directed animals = [t^n] D(t,1)",
                                           count_animals(max_area, AnimalClass::directed),
                                           series_D1(max_area), 1));
    report.checks.push_back(compare_counts("half-animals = [t^n] S", count_animals(max_area, AnimalClass::half),
                                           series_S(max_area), 1));

    // Left half-width distribution of directed animals.
    std::vector<std::vector<std::uint64_t>> by_width(static_cast<std::size_t>(small) + 1,
                                                     std::vector<std::uint64_t>(static_cast<std::size_t>(small), 0));
    for_each_animal(small, AnimalClass::directed, [&](const Animal& a) {
        ++by_width[left_half_width_animal(a)][a.area() - 1];
    });
    for (int j = 0; j <= small; ++j) {
        report.checks.push_back(compare_counts("directed animals with left half-width " + std::to_string(j) +
                                                   " = [t^n] D_" + std::to_string(j),
                                               by_width[j], series_Dj(small, j), 1));
    }

    std::vector<std::uint64_t> connected;
    for (int n = 1; n <= small; ++n) {
        connected.push_back(enumerate_heaps(n, HeapFilter::of(HeapClass::connected)).size());
    }
    TruncatedSeries m = series_M(small);
    report.checks.push_back(compare_counts("multi-directed animals = [t^n] M",
                                           count_animals(small, AnimalClass::multi), m, 1));
    report.checks.push_back(compare_counts("connected heaps = [t^n] M", connected, m, 1));
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ak", "bijections", "lemma-hd", "nordic", "oracle"};
    return names;
}

SuiteReport run_suite(std::string_view name, int max_area, int order) {
    if (name == "bijections") return verify_bijections(max_area);
    if (name == "nordic") return verify_nordic(max_area);
    if (name == "lemma-hd") return verify_lemma_hd(order);
    if (name == "ak") return verify_ak(order);
    if (name == "oracle") return verify_oracle(max_area);
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace polyheap
