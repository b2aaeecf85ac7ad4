#pragma once

#include <vector>

#include "scarmat/report.hpp"

namespace scarmat {

// Invariant suites with measured residuals, as run by `scarmat props`.
// Random draws use the fixed seed so reruns are byte-identical.
std::vector<SuiteResult> props_symplectic(unsigned seed);
std::vector<SuiteResult> props_torus(int N, unsigned seed, bool include_weyl);
std::vector<SuiteResult> props_sc_engine(unsigned seed);

std::vector<SuiteResult> run_all_props(int N, unsigned seed, bool include_weyl);

} // namespace scarmat
