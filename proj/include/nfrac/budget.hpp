#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nfrac {

// Thrown when an enumeration would exceed its configured work budget. Work is
// refused up front; nothing is silently truncated.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

constexpr std::uint64_t kDefaultWorkBudget = 10'000'000;  // tuple/kernel-op evaluations

struct WorkBudget {
    std::uint64_t limit = kDefaultWorkBudget;
    std::uint64_t used = 0;

    void charge(std::uint64_t ops, const char* what) {
        if (ops > limit - used)
            throw budget_exceeded(std::string(what) + ": needs " + std::to_string(ops) +
                                  " ops, " + std::to_string(limit - used) + " left of " +
                                  std::to_string(limit));
        used += ops;
    }
};

}  // namespace nfrac
