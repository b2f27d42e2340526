// Acceptance gate: runs every cross-module criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code = number of
// failures (capped at 125 so the shell does not fold it to 0).

#include "tqft/selftest.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    std::uint64_t seed = tqft::kDefaultSeed;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 0);
        else if (a == "--only" && i + 1 < argc) only = argv[++i];
    }
    auto results = tqft::run_selftest(seed, only);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s %2d %-30s (%8.1f ms)  %s\n", r.pass ? "[PASS]" : "[FAIL]", r.id,
                    r.name.c_str(), r.millis, r.detail.c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures > 125 ? 125 : failures;
}
