#pragma once

#include <stdexcept>
#include <string>

namespace t2isim {

// Bad input data: malformed files, violated type invariants, shape mismatches.
// The CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A solver declined to run (size guard) or could not produce a feasible
// solution. The CLI maps this to exit code 2.
struct SolverRefusal : std::runtime_error {
    explicit SolverRefusal(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace t2isim
