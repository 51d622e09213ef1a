#pragma once

#include <gtorbit/hermitian.hpp>

#include <cstdint>
#include <ostream>

namespace gtorbit {

/// Runs the per-module invariant suites against lambda, printing one
/// PASS/FAIL/SKIP line per suite. Returns the number of failing suites.
int run_verify_suites(const Spectrum& lambda, int trials, uint64_t seed, double tol,
                      std::ostream& out);

} // namespace gtorbit
