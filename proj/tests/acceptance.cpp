// Full verification sweep: one line per criterion, nonzero exit on failure.
#include <cstdio>

#include "binedge/verify.hpp"

int main() {
    binedge::verify::Options opt;
    opt.max_n = 23;
    opt.seed = 42;
    opt.with_oracle = true;
    auto results = binedge::verify::run_all(opt);
    std::fputs(binedge::verify::render_table(results).c_str(), stdout);
    // The acceptance gate runs at full scope: a skip here is a failure too.
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.status == "pass";
    if (all_pass) {
        std::puts("all criteria passed");
        return 0;
    }
    std::puts("verification incomplete or failed");
    return 3;
}
