#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "natural.hpp"

namespace fibsums {

/// Inclusive integer range [lo, hi]; empty when hi < lo.
struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const noexcept { return hi < lo; }
    std::uint64_t size() const noexcept { return empty() ? 0 : static_cast<std::uint64_t>(hi - lo) + 1; }

    friend bool operator==(const Range&, const Range&) = default;
};

/// One failed check. rhs is empty when the right-hand side went negative.
struct Violation {
    std::int64_t k = 0;
    std::int64_t n = 0;
    Natural lhs;
    std::optional<Natural> rhs;
    std::string note;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct IdentityReport {
    std::string identity_name;
    Range k_range;
    Range n_range;
    std::uint64_t checks = 0;
    std::vector<Violation> violations;

    bool passed() const noexcept { return violations.empty(); }

    void record(std::int64_t k, std::int64_t n, const Natural& lhs, const Natural& rhs, std::string note = {}) {
        ++checks;
        if (lhs != rhs) violations.push_back({k, n, lhs, rhs, std::move(note)});
    }

    void record_underflow(std::int64_t k, std::int64_t n, const Natural& lhs, std::string note = {}) {
        ++checks;
        violations.push_back({k, n, lhs, std::nullopt, std::move(note)});
    }

    /// Orders violations by (k, n), keeping insertion order for ties.
    void finalize() {
        std::stable_sort(violations.begin(), violations.end(), [](const Violation& x, const Violation& y) {
            return std::tie(x.k, x.n) < std::tie(y.k, y.n);
        });
    }
};

}  // namespace fibsums
