#include "polyheap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "polyheap/animal.hpp"
#include "polyheap/asymptotics.hpp"
#include "polyheap/gf.hpp"
#include "polyheap/heap_enum.hpp"
#include "polyheap/json_io.hpp"
#include "polyheap/verify.hpp"

namespace polyheap::cli {

namespace {

constexpr int kMaxAreaGuard = 14;
constexpr int kOrderGuard = 5000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::string output;
    bool force = false;

    std::string which;
    int order = -1;
    int j = 1;

    std::vector<std::string> classes;
    int max_area = -1;
    bool emit_objects = false;

    std::vector<std::string> suites;

    int n = -1;
};

struct Result {
    std::string text;
    bool pass = true;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void guard(const char* flag, int value, int limit, bool force) {
    if (value > limit && !force) {
        throw UsageError(std::string(flag) + " " + std::to_string(value) + " exceeds " + std::to_string(limit) +
                         "; pass --force to run anyway");
    }
}

Result run_series(const Options& o) {
    guard("--order", o.order, kOrderGuard, o.force);
    if (o.which == "Dj" && o.j < 0) throw UsageError("--j must be non-negative");
    TruncatedSeries s = named_series(o.which, o.order, o.j);
    std::string name = o.which == "Dj" ? "D" + std::to_string(o.j) : o.which;
    if (o.format == "json") return {dump(series_to_json(name, s))};
    std::ostringstream os;
    os << "n," << name << "\n";
    std::vector<mpz_class> coeffs = s.integer_coefficients();
    for (std::size_t n = 0; n < coeffs.size(); ++n) os << n << "," << coeffs[n].get_str() << "\n";
    return {os.str()};
}

// Counts for one class, index i = area i+1, plus objects when requested.
struct ClassTable {
    std::string name;
    std::vector<std::uint64_t> counts;
    json objects = json::array();
};

ClassTable enumerate_class(const std::string& name, int max_area, bool emit) {
    ClassTable t{name, {}, json::array()};
    if (name == "heaps" || name == "connected-heaps") {
        const HeapFilter filter = HeapFilter::of(name == "heaps" ? HeapClass::all : HeapClass::connected);
        for (int n = 1; n <= max_area; ++n) {
            std::vector<Heap> heaps = enumerate_heaps(n, filter);
            t.counts.push_back(heaps.size());
            if (emit) {
                for (const Heap& h : heaps) t.objects.push_back(heap_to_json(h));
            }
        }
        return t;
    }
    const AnimalClass c = *parse_animal_class(name);
    if (!emit) {
        t.counts = count_animals(max_area, c);
        return t;
    }
    for (int n = 1; n <= max_area; ++n) {
        std::vector<Animal> animals = enumerate_animals(n, c);
        t.counts.push_back(animals.size());
        for (const Animal& a : animals) t.objects.push_back(animal_to_json(a));
    }
    return t;
}

Result run_enumerate(const Options& o) {
    guard("--max-area", o.max_area, kMaxAreaGuard, o.force);
    if (o.max_area < 1) throw UsageError("--max-area must be at least 1");
    if (o.emit_objects && o.format != "json") throw UsageError("--emit-objects requires --format json");
    std::vector<std::string> classes = o.classes;
    std::vector<ClassTable> tables;
    for (const std::string& c : classes) tables.push_back(enumerate_class(c, o.max_area, o.emit_objects));

    if (o.format == "csv") {
        std::ostringstream os;
        os << "area";
        for (const auto& t : tables) os << "," << t.name;
        os << "\n";
        for (int n = 1; n <= o.max_area; ++n) {
            os << n;
            for (const auto& t : tables) os << "," << t.counts[n - 1];
            os << "\n";
        }
        return {os.str()};
    }
    json rows = json::array();
    for (int n = 1; n <= o.max_area; ++n) {
        json row = {{"area", n}};
        for (const auto& t : tables) row[t.name] = t.counts[n - 1];
        rows.push_back(std::move(row));
    }
    json out = {{"max_area", o.max_area}, {"counts", std::move(rows)}};
    if (o.emit_objects) {
        json objects = json::object();
        for (auto& t : tables) objects[t.name] = std::move(t.objects);
        out["objects"] = std::move(objects);
    }
    return {dump(out)};
}

std::vector<SuiteReport> run_suites(std::vector<std::string> names, int max_area, int order) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<SuiteReport> reports(names.size());
    std::vector<std::exception_ptr> errors(names.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < names.size(); i = next++) {
            try {
                reports[i] = run_suite(names[i], max_area, order);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t count = std::min<std::size_t>(worker_limit(), names.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return reports;
}

Result run_verify(const Options& o) {
    guard("--max-area", o.max_area, kMaxAreaGuard, o.force);
    guard("--order", o.order, kOrderGuard, o.force);
    if (o.max_area < 1) throw UsageError("--max-area must be at least 1");
    if (o.order < 1) throw UsageError("--order must be at least 1");
    std::vector<SuiteReport> reports = run_suites(o.suites, o.max_area, o.order);
    const bool pass = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.pass(); });

    if (o.format == "csv") {
        std::ostringstream os;
        os << "suite,check,pass,detail\n";
        for (const auto& r : reports) {
            for (const auto& c : r.checks) {
                os << r.suite << "," << csv_field(c.name) << "," << (c.pass ? "true" : "false") << ","
                   << csv_field(c.detail) << "\n";
            }
        }
        return {os.str(), pass};
    }
    json suites = json::array();
    for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        suites.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"checks", std::move(checks)}});
    }
    return {dump({{"pass", pass}, {"max_area", o.max_area}, {"order", o.order}, {"suites", std::move(suites)}}),
            pass};
}

Result run_asymptotics(const Options& o) {
    std::vector<ReportEntry> entries;
    json extra = json::object();
    if (o.which == "constants") {
        const int n = o.n < 0 ? 300 : o.n;
        guard("--n", n, kOrderGuard, o.force);
        AsymptoticConstants c = find_constants(0);
        entries = check_constants(c);
        // Stability diagnostic only.
        std::vector<double> lambda = lambda_estimates(n, c.rho_M);
        c.lambda_n = n;
        c.lambda_est = lambda[n];
        const double lambda_prev = n > 50 ? lambda[n - 50] : 0.0;
        extra = {{"rho", c.rho},       {"rho_bar", c.rho_bar}, {"rho_B", c.rho_B},         {"rho_M", c.rho_M},
                 {"mu", c.mu},         {"amp_d", c.amp_d},     {"amp_lw", c.amp_lw},       {"lambda_n", c.lambda_n},
                 {"lambda_est", c.lambda_est},
                 {"lambda_est_n_minus_50", lambda_prev}};
    } else if (o.which == "directed") {
        const int n = o.n < 0 ? 1000 : o.n;
        guard("--n", n, kOrderGuard, o.force);
        if (n < 100) throw UsageError("--n must be at least 100 for directed");
        entries = check_directed_asymptotics(n);
    } else {
        const int n = o.n < 0 ? 300 : o.n;
        guard("--n", n, kOrderGuard, o.force);
        if (n < 50) throw UsageError("--n must be at least 50 for multi");
        entries = check_multi_growth(n);
    }
    const bool pass = std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });

    if (o.format == "csv") {
        std::ostringstream os;
        os.precision(17);
        os << "constant,computed,target,tolerance,pass\n";
        for (const auto& e : entries) {
            os << csv_field(e.constant) << "," << e.computed << "," << e.target << "," << e.tolerance << ","
               << (e.pass ? "true" : "false") << "\n";
        }
        return {os.str(), pass};
    }
    json report = json::array();
    for (const auto& e : entries) report.push_back(report_entry_to_json(e));
    json out = {{"which", o.which}, {"pass", pass}, {"entries", std::move(report)}};
    if (!extra.empty()) out["values"] = std::move(extra);
    return {dump(out), pass};
}

}  // namespace

unsigned worker_limit() {
    unsigned limit = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("POLYMER_HEAPS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) limit = static_cast<unsigned>(v);
    }
    return limit;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Heaps of polymers and animals on the directed lattice N"};
    app.name("polyheap");
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", o.output, "Write the report to this file instead of standard output");
    app.add_flag("--force", o.force, "Allow --max-area > 14 and --order > 5000");

    CLI::App* series = app.add_subcommand("series", "Coefficient table of a generating function");
    series->add_option("--which", o.which, "Series name")
        ->required()
        ->check(CLI::IsMember({"S", "R", "Q", "D", "M", "B", "LW", "Dj"}));
    series->add_option("--order", o.order, "Truncation order")->required()->check(CLI::NonNegativeNumber);
    series->add_option("--j", o.j, "Left half-width for --which Dj");

    CLI::App* enumerate = app.add_subcommand("enumerate", "Brute-force counts per area");
    enumerate->add_option("--class", o.classes, "Classes to count, side by side")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember({"all", "directed", "half", "multi", "heaps", "connected-heaps"}));
    enumerate->add_option("--max-area", o.max_area, "Largest area (total length for heaps)")->required();
    enumerate->add_flag("--emit-objects", o.emit_objects, "Include every object in the report");

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", o.suites, "Suites to run")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember(suite_names()));
    o.max_area = 8;
    o.order = 14;
    verify->add_option("--max-area", o.max_area, "Largest brute-force size")->capture_default_str();
    verify->add_option("--order", o.order, "Series order for the lemma suites")->capture_default_str();

    CLI::App* asymptotics = app.add_subcommand("asymptotics", "Numeric constants and convergence checks");
    asymptotics->add_option("--which", o.which, "Report")
        ->required()
        ->check(CLI::IsMember({"constants", "directed", "multi"}));
    asymptotics->add_option("--n", o.n, "Series order (defaults: constants 300, directed 1000, multi 300)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    Result result;
    try {
        if (series->parsed()) {
            result = run_series(o);
        } else if (enumerate->parsed()) {
            result = run_enumerate(o);
        } else if (verify->parsed()) {
            result = run_verify(o);
        } else {
            result = run_asymptotics(o);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    if (o.output.empty()) {
        out << result.text;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << o.output << "\n";
            return kUsageError;
        }
        file << result.text;
    }
    return result.pass ? kSuccess : kVerificationFailed;
}

}  // namespace polyheap::cli
