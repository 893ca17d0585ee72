#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace logicprob {

struct CheckViolation {
    std::string law;
    std::string detail;
};

struct CheckReport {
    std::size_t trials = 0;
    std::size_t checks = 0;
    std::vector<CheckViolation> violations;
    bool ok() const { return violations.empty(); }
};

inline constexpr std::uint64_t kDefaultCheckSeed = 0x10c1c9a0b5eedull;

} // namespace logicprob
