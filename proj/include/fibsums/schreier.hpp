#pragma once

// Schreier sets: finite S of positive integers with min S >= |S|. The empty
// set counts (the condition is vacuous), which is what makes s_0(n) = F_{n+2}.
//
//   s_k(n) = #{ S in {1..n} : |S| >= k, S Schreier }
//          = [k == 0] + sum_{j >= max(k,1)} C(n-j+1, j)

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"
#include "identities.hpp"
#include "natural.hpp"
#include "report.hpp"
#include "seq_core.hpp"

namespace fibsums {

inline constexpr Index kDefaultEnumerationGuard = 25;

struct SchreierQuery {
    Index n = 1;  // ground set {1..n}
    Order k = 0;  // cardinality floor

    void validate() const {
        if (n < 1) throw domain_error("schreier query: n must be >= 1, got " + std::to_string(n));
        if (k < 0) throw domain_error("schreier query: k must be >= 0, got " + std::to_string(k));
    }
};

/// Subset of {1..n}, bit i-1 set iff i is a member. Ground sets up to 63.
class SubsetMask {
public:
    SubsetMask(std::uint64_t bits, Index n) : bits_(bits), n_(n) {
        if (n < 0 || n > 63) throw domain_error("SubsetMask: n must be in [0, 63]");
        if (n < 64 && (bits >> n) != 0) throw domain_error("SubsetMask: element outside {1..n}");
    }

    /// Builds from a strictly increasing list drawn from {1..n}.
    static SubsetMask from_elements(std::initializer_list<Index> elements, Index n) {
        return from_elements(std::vector<Index>(elements), n);
    }

    static SubsetMask from_elements(const std::vector<Index>& elements, Index n) {
        std::uint64_t bits = 0;
        Index prev = 0;
        for (Index e : elements) {
            if (e <= prev) throw domain_error("SubsetMask: elements must be strictly increasing");
            if (e > n) throw domain_error("SubsetMask: element outside {1..n}");
            bits |= std::uint64_t{1} << (e - 1);
            prev = e;
        }
        return {bits, n};
    }

    std::uint64_t bits() const noexcept { return bits_; }
    Index ground() const noexcept { return n_; }
    bool empty() const noexcept { return bits_ == 0; }
    Index size() const noexcept { return std::popcount(bits_); }

    /// Smallest element; requires a nonempty set.
    Index min() const {
        if (empty()) throw domain_error("SubsetMask: min of empty set");
        return std::countr_zero(bits_) + 1;
    }

    std::vector<Index> elements() const {
        std::vector<Index> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    bool is_schreier() const noexcept { return empty() || std::countr_zero(bits_) + 1 >= std::popcount(bits_); }

private:
    std::uint64_t bits_;
    Index n_;
};

/// #{ S in {1..n} : |S| = k, min S >= k } = C(n-k+1, k).
inline Natural count_exact_size(Index n, Order k) {
    SchreierQuery{n, k}.validate();
    return binom(n - k + 1, k);
}

/// s_k(n) by the counting formula. Terms vanish past j = floor((n+1)/2).
inline Natural s_formula(const SchreierQuery& q) {
    q.validate();
    Natural total = q.k == 0 ? Natural{1} : Natural{};
    for (Order j = std::max<Order>(q.k, 1); j <= (q.n + 1) / 2; ++j) total += count_exact_size(q.n, j);
    return total;
}

inline Natural s_formula(Index n, Order k) { return s_formula(SchreierQuery{n, k}); }

/// Schreier subsets of {1..n} by cardinality: hist[j] = # of size j.
/// Iterates all 2^n masks in increasing integer order.
inline std::vector<std::uint64_t> schreier_histogram(Index n, Index guard = kDefaultEnumerationGuard) {
    if (n < 1) throw domain_error("schreier_histogram: n must be >= 1");
    if (n > guard) {
        throw ground_set_too_large("ground set too large: n = " + std::to_string(n) + " exceeds enumeration guard " +
                                   std::to_string(guard));
    }
    if (n > 62) throw ground_set_too_large("ground set too large for 64-bit masks");
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t end = std::uint64_t{1} << n;
    hist[0] = 1;  // empty set
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        const int size = std::popcount(mask);
        if (std::countr_zero(mask) + 1 >= size) ++hist[size];
    }
    return hist;
}

/// s_j(n) for every j = 0..n+1 from one enumeration pass.
inline std::vector<Natural> s_enumerate_all(Index n, Index guard = kDefaultEnumerationGuard) {
    const auto hist = schreier_histogram(n, guard);
    std::vector<Natural> out(hist.size() + 1);
    std::uint64_t tail = 0;
    for (std::size_t j = hist.size(); j-- > 0;) {
        tail += hist[j];
        out[j] = Natural{tail};
    }
    return out;
}

/// s_k(n) by brute force over all 2^n subsets. Oracle only.
inline Natural s_enumerate(const SchreierQuery& q, Index guard = kDefaultEnumerationGuard) {
    q.validate();
    const auto all = s_enumerate_all(q.n, guard);
    return q.k < static_cast<Order>(all.size()) ? all[q.k] : Natural{};
}

inline Natural s_enumerate(Index n, Order k, Index guard = kDefaultEnumerationGuard) {
    return s_enumerate(SchreierQuery{n, k}, guard);
}

/// s_{l+1}(n) == s_l(n) - C(n-l+1, l). Report k-axis is l.
inline IdentityReport verify_corollary_cs(Range l_range, Range n_range) {
    detail::require_nonempty(l_range, "verify_corollary_cs");
    detail::require_nonempty(n_range, "verify_corollary_cs");
    if (l_range.lo < 0) throw domain_error("verify_corollary_cs: l must be >= 0");
    if (n_range.lo < 1) throw domain_error("verify_corollary_cs: n must be >= 1");

    IdentityReport report{"corollary_cs", l_range, n_range, 0, {}};
    for (Order l = l_range.lo; l <= l_range.hi; ++l) {
        for (Index n = n_range.lo; n <= n_range.hi; ++n) {
            const Natural lhs = s_formula(n, l + 1);
            const Natural base = s_formula(n, l);
            const Natural drop = binom(n - l + 1, l);
            if (drop > base) {
                report.record_underflow(l, n, lhs, "identity underflow");
            } else {
                report.record(l, n, lhs, base - drop);
            }
        }
    }
    report.finalize();
    return report;
}

/// s_k(n) == a_k(n - 2(k-1)), zero convention for nonpositive arguments.
/// Where n <= guard, the enumerated count is checked against a_k as well
/// (violations from that route carry the note "enumeration").
inline IdentityReport verify_theorem2(Range k_range, Range n_range, Index guard = kDefaultEnumerationGuard,
                                      PrefixTable& cache = shared_prefix_table()) {
    detail::require_nonempty(k_range, "verify_theorem2");
    detail::require_nonempty(n_range, "verify_theorem2");
    if (k_range.lo < 0) throw domain_error("verify_theorem2: k must be >= 0");
    if (n_range.lo < 1) throw domain_error("verify_theorem2: n must be >= 1");

    IdentityReport report{"theorem2", k_range, n_range, 0, {}};
    // Largest argument is n + 2 at k = 0.
    cache.ensure(k_range.hi, n_range.hi + 2);
    for (Index n = n_range.lo; n <= n_range.hi; ++n) {
        std::vector<Natural> enumerated;
        if (n <= guard) enumerated = s_enumerate_all(n, guard);
        for (Order k = k_range.lo; k <= k_range.hi; ++k) {
            const Natural rhs = cache.at(k, n - 2 * (k - 1));
            report.record(k, n, s_formula(n, k), rhs);
            if (!enumerated.empty()) {
                const Natural counted = k < static_cast<Order>(enumerated.size()) ? enumerated[k] : Natural{};
                report.record(k, n, counted, rhs, "enumeration");
            }
        }
    }
    report.finalize();
    return report;
}

/// s_enumerate == s_formula over the rectangle. Throws ground_set_too_large
/// when n_range reaches past the guard.
inline IdentityReport verify_oracle(Range k_range, Range n_range, Index guard = kDefaultEnumerationGuard) {
    detail::require_nonempty(k_range, "verify_oracle");
    detail::require_nonempty(n_range, "verify_oracle");
    if (k_range.lo < 0) throw domain_error("verify_oracle: k must be >= 0");
    if (n_range.lo < 1) throw domain_error("verify_oracle: n must be >= 1");
    if (n_range.hi > guard) {
        throw ground_set_too_large("ground set too large: n = " + std::to_string(n_range.hi) +
                                   " exceeds enumeration guard " + std::to_string(guard));
    }

    IdentityReport report{"oracle", k_range, n_range, 0, {}};
    for (Index n = n_range.lo; n <= n_range.hi; ++n) {
        const auto enumerated = s_enumerate_all(n, guard);
        for (Order k = k_range.lo; k <= k_range.hi; ++k) {
            const Natural counted = k < static_cast<Order>(enumerated.size()) ? enumerated[k] : Natural{};
            report.record(k, n, counted, s_formula(n, k));
        }
    }
    report.finalize();
    return report;
}

/// Dense s-table: rows[k][n-1] = s_k(n).
inline Grid s_grid(Order k_max, Index n_max, std::uint64_t limit = max_cells()) {
    if (k_max < 0) throw domain_error("s table: k_max must be >= 0");
    if (n_max < 1) throw domain_error("s table: n_max must be >= 1");
    check_cell_budget(static_cast<std::uint64_t>(k_max) + 1, static_cast<std::uint64_t>(n_max), limit);
    Grid g{k_max, n_max, {}};
    g.rows.resize(static_cast<std::size_t>(k_max) + 1);
    for (Order k = 0; k <= k_max; ++k) {
        g.rows[k].reserve(static_cast<std::size_t>(n_max));
        for (Index n = 1; n <= n_max; ++n) g.rows[k].push_back(s_formula(n, k));
    }
    return g;
}

}  // namespace fibsums
