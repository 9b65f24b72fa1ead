#ifndef BINEDGE_VERIFY_HPP
#define BINEDGE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace binedge::verify {

struct CheckResult {
    std::string name;
    std::string status; // "pass", "fail", "skipped"
    std::string detail;
    double seconds = 0;
};

struct Options {
    int max_n = 23;            // largest instance size allowed; smaller skips checks
    std::uint64_t seed = 42;   // seeds every randomized corpus
    bool with_oracle = true;   // include the Buchberger certification
    bool only_oracle = false;  // run just the certification checks
};

/// Runs the verification checks; each entry is pass/fail/skipped. A check is
/// skipped only when the requested max_n is below its corpus size or the
/// oracle was excluded; it never silently shrinks.
std::vector<CheckResult> run_all(const Options& opt);

/// 3 when any check failed, otherwise 0; skips only show in the listing.
int exit_code(const std::vector<CheckResult>& results);

std::string render_table(const std::vector<CheckResult>& results);

} // namespace binedge::verify

#endif
