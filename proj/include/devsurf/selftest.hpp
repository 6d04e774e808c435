#ifndef DEVSURF_SELFTEST_HPP
#define DEVSURF_SELFTEST_HPP

#include <cstdint>
#include <ostream>

#include "devsurf/verify.hpp"

namespace devsurf {

// Runs the full acceptance suite: ten criteria, one report entry and one
// PASS/FAIL line each (written to `out` when non-null). Deterministic for
// a fixed seed.
VerificationReport run_selftest(std::uint64_t seed = kDefaultSeed,
                                std::ostream* out = nullptr);

}  // namespace devsurf

#endif
