#pragma once

#include <string>
#include <vector>

namespace rgw {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;  // instance counts on success, first mismatch on failure
};

// The full acceptance battery, in order. With fail_fast the run stops after
// the first failing criterion (later ones are not reported). cache_dir, if
// nonempty, backs the character table used by the oracle computations.
std::vector<CriterionResult> run_acceptance_suite(bool fail_fast = false,
                                                  const std::string& cache_dir = "");

}  // namespace rgw
