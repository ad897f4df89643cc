#ifndef EIDEAL_HARNESS_HPP
#define EIDEAL_HARNESS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "eideal/betti.hpp"
#include "eideal/field.hpp"
#include "eideal/graph.hpp"

namespace eideal {

struct Config {
    int max_n = 7;
    int max_s = 3;
    std::vector<Field> fields = {Field::rationals()};
    std::size_t lattice_cap = kDefaultLatticeCap;
    int jobs = 1;
    std::string corpus = "unicyclic";  // unicyclic | bipartite | all-small
    std::string format = "json";       // json | csv
    std::string out_path;              // empty: report to stdout
    std::uint64_t seed = 20260814;
    int partition_cap = 64;
    int forest_max_n = 8;
    // Verify the cycle/forest splitting chain inside the monotonicity check
    // (the two intermediate inequalities); off by default.
    bool case2_intermediate = false;
    // Include per-result wall times in reports (breaks byte-determinism).
    bool timing = false;
    // Test seam: corrupt one computed regularity so the exit-code contract
    // can be exercised end to end.
    bool inject_failure = false;

    void validate() const;
};

struct CheckResult {
    std::string check_id;
    std::string instance;  // "g6=...;s=...;field=..." style key, unique per check
    std::string status;    // pass | fail | skip
    std::string observed;
    double elapsed = 0.0;
};

struct Report {
    std::string tool;
    std::string version;
    std::string config;
    std::string timestamp;
    double total_elapsed = 0.0;
    std::vector<CheckResult> results;  // sorted by (check_id, instance)

    std::size_t count(const std::string& status) const;
    bool has_failures() const { return count("fail") > 0; }
};

Report check_main(const Config& config);
Report check_lemmas(const Config& config);
Report check_prop_sum(const Config& config);
Report check_bounds(const Config& config);
Report check_case2_monotonicity(const Config& config);

void write_json(const Report& report, std::ostream& out, bool timing = false);
void write_csv(const Report& report, std::ostream& out, bool timing = false);

// 0 all pass (skips allowed), 1 any failure.
int report_exit_code(const Report& report);

}  // namespace eideal

#endif
