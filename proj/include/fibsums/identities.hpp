#pragma once

// Binomial coefficients and checks of the identities relating the rows a_k:
//
//   a_k(n) = a_{k-1}(n+2) - C(n+k, k-1)                    (k >= 1)
//   a_k(3) = C(k+2, k) + 1                                  (k >= 0)
//   a_k(n) = F_{n+2k} - sum_{i=1..k} C(n+2k-i, i-1)         (telescoped)

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "natural.hpp"
#include "report.hpp"
#include "seq_core.hpp"

namespace fibsums {

/// C(n, k), exact. Total: 0 when n < 0, k < 0 or k > n.
///
/// Multiplicative form: after step i the accumulator is C(n-k+i, i), so every
/// division is exact.
inline Natural binom(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return Natural{};
    k = std::min(k, n - k);
    mpz_class acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= static_cast<unsigned long>(n - k + i);
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return Natural::from_mpz(std::move(acc));
}

namespace detail {

inline Natural checked_difference(const Natural& minuend, const Natural& subtrahend, const std::string& what) {
    if (subtrahend > minuend) {
        throw identity_underflow("identity underflow in " + what + ": " + minuend.to_string() + " - " +
                                 subtrahend.to_string());
    }
    return minuend - subtrahend;
}

inline void require_nonempty(const Range& r, const char* what) {
    if (r.empty()) throw std::invalid_argument(std::string(what) + ": empty range");
}

}  // namespace detail

/// a_{k-1}(n+2) - C(n+k, k-1). Throws identity_underflow if negative.
inline Natural theorem1_rhs(PrefixTable& cache, Order k, Index n) {
    if (k < 1) throw domain_error("theorem1_rhs: k must be >= 1");
    if (n < 1) throw domain_error("theorem1_rhs: n must be >= 1");
    return detail::checked_difference(cache.at(k - 1, n + 2), binom(n + k, k - 1),
                                      "theorem1_rhs(" + std::to_string(k) + ", " + std::to_string(n) + ")");
}

inline Natural theorem1_rhs(Order k, Index n) { return theorem1_rhs(shared_prefix_table(), k, n); }

/// Checks a_k(n) (the definitional partial sum) against theorem1_rhs over the
/// whole rectangle. Violations are collected, not fail-fast.
inline IdentityReport verify_theorem1(Range k_range, Range n_range, PrefixTable& cache = shared_prefix_table()) {
    detail::require_nonempty(k_range, "verify_theorem1");
    detail::require_nonempty(n_range, "verify_theorem1");
    if (k_range.lo < 1) throw domain_error("verify_theorem1: k must be >= 1");
    if (n_range.lo < 1) throw domain_error("verify_theorem1: n must be >= 1");

    IdentityReport report{"theorem1", k_range, n_range, 0, {}};
    cache.ensure(k_range.hi, n_range.hi + 2);
    for (Order k = k_range.lo; k <= k_range.hi; ++k) {
        for (Index n = n_range.lo; n <= n_range.hi; ++n) {
            const Natural lhs = cache.at(k, n);
            try {
                report.record(k, n, lhs, theorem1_rhs(cache, k, n));
            } catch (const identity_underflow&) {
                report.record_underflow(k, n, lhs, "identity underflow");
            }
        }
    }
    report.finalize();
    return report;
}

/// C(k+2, k) + 1.
inline Natural lemma_a3(Order k) {
    if (k < 0) throw domain_error("lemma_a3: k must be >= 0");
    return binom(k + 2, k) + Natural{1};
}

/// a_k(3) == lemma_a3(k) for every k in range. n_range of the report is [3, 3].
inline IdentityReport verify_lemma_a3(Range k_range, PrefixTable& cache = shared_prefix_table()) {
    detail::require_nonempty(k_range, "verify_lemma_a3");
    if (k_range.lo < 0) throw domain_error("verify_lemma_a3: k must be >= 0");

    IdentityReport report{"lemma_a3", k_range, Range{3, 3}, 0, {}};
    cache.ensure(k_range.hi, 3);
    for (Order k = k_range.lo; k <= k_range.hi; ++k) report.record(k, 3, cache.at(k, 3), lemma_a3(k));
    report.finalize();
    return report;
}

/// F_{n+2k} - sum_{i=1..k} C(n+2k-i, i-1), without building any row above 0.
inline Natural a_closed(Order k, Index n) {
    if (k < 0) throw domain_error("a_closed: k must be >= 0");
    if (n < 1) throw domain_error("a_closed: n must be >= 1");
    const Index top = n + 2 * k;
    Natural correction;
    for (Order i = 1; i <= k; ++i) correction += binom(top - i, i - 1);
    return detail::checked_difference(fib(top), correction,
                                      "a_closed(" + std::to_string(k) + ", " + std::to_string(n) + ")");
}

/// a_closed(k, n) against the memoized partial sums a_k(n).
inline IdentityReport verify_closed_form(Range k_range, Range n_range, PrefixTable& cache = shared_prefix_table()) {
    detail::require_nonempty(k_range, "verify_closed_form");
    detail::require_nonempty(n_range, "verify_closed_form");
    if (k_range.lo < 0) throw domain_error("verify_closed_form: k must be >= 0");
    if (n_range.lo < 1) throw domain_error("verify_closed_form: n must be >= 1");

    IdentityReport report{"closed_form", k_range, n_range, 0, {}};
    cache.ensure(k_range.hi, n_range.hi);
    for (Order k = k_range.lo; k <= k_range.hi; ++k) {
        for (Index n = n_range.lo; n <= n_range.hi; ++n) {
            const Natural lhs = cache.at(k, n);
            try {
                report.record(k, n, lhs, a_closed(k, n));
            } catch (const identity_underflow&) {
                report.record_underflow(k, n, lhs, "identity underflow");
            }
        }
    }
    report.finalize();
    return report;
}

}  // namespace fibsums
