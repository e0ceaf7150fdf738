// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  The same battery backs the CLI's `suite` subcommand.

#include <cstdio>

#include "fdwave/suite.hpp"

int main() {
    fdw::suite::Options opt;
    const auto results = fdw::suite::run(opt);

    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL",
                    r.id, r.name.c_str(), r.seconds);
        for (const auto& d : r.details) std::printf("         %s\n", d.c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
