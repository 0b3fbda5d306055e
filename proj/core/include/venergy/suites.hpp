#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace venergy {

// 17 significant digits, enough to round-trip a double.
std::string format_real(double x);

struct SuiteConfig {
    std::uint64_t seed = 42;
    double epsilon = 1e-8;
    double quad_tol = 1e-8;
    std::size_t max_tree = 12; // vertex cap for random trees
    std::size_t max_bip = 10;  // vertex cap for random bipartite graphs
    std::size_t trials = 0;    // 0 selects the suite's default count
};

// One CSV table plus counters. Rows are in canonical (instance, vertex) order.
struct SuiteResult {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::size_t indeterminate = 0;

    bool passed() const { return violations == 0; }
    // "SUITE <name> PASS|FAIL checked=<k> violations=<m> indeterminate=<j>"
    std::string summary_line() const;
    void write_csv(std::ostream& out) const;
};

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

// Deterministic in (name, cfg). Throws std::invalid_argument for unknown names.
SuiteResult run_suite(std::string_view name, const SuiteConfig& cfg);

} // namespace venergy
