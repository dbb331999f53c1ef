#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace permpat {

enum class Scale { quick, full };

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::size_t cases = 0;
    std::string detail;
    double elapsed_ms = 0.0;
};

using CriterionSink = std::function<void(const CriterionResult&)>;

/// Runs the eleven acceptance criteria; `sink` sees each result as it completes.
/// The quick scale only differs for the PSI family, which is sub-sampled.
std::vector<CriterionResult> run_acceptance(Scale scale, const CriterionSink& sink = {});

} // namespace permpat
