#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsc/homology.hpp"

namespace wsc {

/* *************************************************************************
 * Self-verification batteries
 *
 * run_verify exercises the structural theorems on seeded random instances
 * and reports failures as data. The report is deterministic for a fixed
 * seed, trial count, and field, byte for byte.
 * *************************************************************************/

struct VerifyOptions {
    std::uint64_t seed = 42;
    int trials = 50;
    FieldSpec field = FieldSpec::rationals();
};

struct VerifyFailure {
    std::string suite;
    std::uint64_t repro_seed = 0;  // seed the generator with this to rebuild the instance
    std::string detail;
};

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    int trials = 0;
    std::string characteristic;
    std::vector<SuiteResult> suites;
    std::vector<VerifyFailure> failures;
    std::vector<std::string> notes;  // observations (field comparisons), never failures

    bool ok() const { return failures.empty(); }
    std::string to_json() const;
};

VerifyReport run_verify(const VerifyOptions& opts = {});

}  // namespace wsc
