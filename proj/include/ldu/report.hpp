#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ldu/ring.hpp"

namespace ldu {

// One pivot of a factorization: 0-based position plus the nested minor
// (leading pivot determinant) it contributes.
struct PivotInfo {
    std::size_t row = 0;
    std::size_t col = 0;
    Int det;
};

// Outcome of one named check.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

using Report = std::vector<CheckResult>;

inline bool all_pass(const Report& report) {
    for (const CheckResult& c : report)
        if (!c.pass) return false;
    return true;
}

}  // namespace ldu
