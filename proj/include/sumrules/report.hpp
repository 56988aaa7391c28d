#pragma once

#include "sumrules/integrals.hpp"
#include "sumrules/theorems.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// Check-matrix runner and report emitters.  Output is fully deterministic:
// fixed iteration order, no concurrency in the runner, floats serialized at
// 17 significant digits.

namespace sumrules {

enum class OutputFormat { json, csv, text_table };

struct RunConfig {
    struct Entry {
        std::string potential;
        std::map<std::string, double> overrides;
    };
    std::vector<Entry> potentials;
    int nr_lo = 0, nr_hi = 1;
    int l_lo = 0, l_hi = 1;
    // when set, interpret the state range through the principal number
    // n = n_r + l + 1 (hydrogen-style requests)
    std::optional<std::pair<int, int>> principal_n;
    std::vector<std::string> identities; // empty: all applicable
    std::optional<double> tol_override;  // flag or RADIAL_SUMRULES_TOL
    OutputFormat format = OutputFormat::text_table;
    bool prefer_numerov = false;
};

struct ReportRow {
    std::string potential;
    int n_r = 0, l = 0;
    double energy = 0.0;
    std::string identity;
    std::string detail;
    double lhs = 0.0, rhs = 0.0, pi = 0.0, residual = 0.0, tol = 0.0;
    bool pass = false;
    bool applicable = true;
};

struct Report {
    std::vector<ReportRow> rows;
    bool all_pass() const;
};

// key = value config text; errors carry 1-based line numbers
RunConfig parse_run_config(std::istream& in);

// applies RADIAL_SUMRULES_TOL when set and no explicit override is present
void apply_env_tolerance(RunConfig& config);

Report run_checks(const RunConfig& config);
Report run_integrals(const std::vector<IntegralId>& ids, bool with_offshell,
                     std::optional<double> tol_override = std::nullopt);

void write_json(const Report& report, std::ostream& os);
void write_csv(const Report& report, std::ostream& os);
void write_table(const Report& report, std::ostream& os);

const std::vector<std::string>& known_identity_names();

} // namespace sumrules
