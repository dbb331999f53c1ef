// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
// Usage: permpat_acceptance [quick|full]   (default full)

#include "permpat/acceptance.hpp"

#include <cstdio>
#include <string>

int main(int argc, char** argv)
{
    const std::string arg = argc > 1 ? argv[1] : "full";
    if (arg != "quick" && arg != "full") {
        std::fprintf(stderr, "usage: %s [quick|full]\n", argv[0]);
        return 2;
    }
    const auto scale = arg == "quick" ? permpat::Scale::quick : permpat::Scale::full;

    int failed = 0;
    permpat::run_acceptance(scale, [&](const permpat::CriterionResult& r) {
        std::printf("%s criterion %2d: %s [%zu cases, %.0f ms]%s%s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.title.c_str(), r.cases, r.elapsed_ms, r.detail.empty() ? "" : " - ", r.detail.c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    });
    std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
