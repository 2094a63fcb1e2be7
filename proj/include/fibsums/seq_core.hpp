#pragma once

// Fibonacci numbers, the partial-sum operator and the memoized rows
// a_k(n) = n-th term of the Fibonacci sequence after k partial-sum passes.
//
// Indexing: n is 1-based, k is 0-based. a_k(n) = 0 for every n <= 0.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "natural.hpp"

namespace fibsums {

using Order = std::int64_t;  // k >= 0
using Index = std::int64_t;  // n, 1-based

inline constexpr std::uint64_t kDefaultMaxCells = 10'000'000;
inline constexpr const char* kMaxCellsEnv = "FIBSUMS_MAX_CELLS";

/// Cell-count guard, overridable through FIBSUMS_MAX_CELLS. Invalid or zero
/// values fall back to the default.
inline std::uint64_t max_cells() {
    if (const char* env = std::getenv(kMaxCellsEnv); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxCells;
}

inline void check_cell_budget(std::uint64_t rows, std::uint64_t cols, std::uint64_t limit = max_cells()) {
    if (cols != 0 && rows > limit / cols) {
        throw table_too_large("table too large: " + std::to_string(rows) + " x " + std::to_string(cols) +
                              " cells exceeds limit " + std::to_string(limit));
    }
}

/// F_n with F_1 = F_2 = 1. Throws fibsums::domain_error for n <= 0.
inline Natural fib(Index n) {
    if (n <= 0) throw domain_error("fib: index must be >= 1, got " + std::to_string(n));
    mpz_class out;
    mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return Natural::from_mpz(std::move(out));
}

/// Running sums: out[j] = in[0] + ... + in[j].
inline std::vector<Natural> partial_sums(std::span<const Natural> prefix) {
    std::vector<Natural> out;
    out.reserve(prefix.size());
    Natural acc;
    for (const Natural& v : prefix) {
        acc += v;
        out.push_back(acc);
    }
    return out;
}

/// Append-only cache of a_k(n).
///
/// Row k holds a_k(1..len_k). Rows are filled top-down: growing row k to
/// length n first grows row k-1 to length n, since every cell needs the full
/// previous-row prefix. Readers take a shared lock; growth takes the exclusive
/// lock, so no caller ever observes a partially written cell.
class PrefixTable {
public:
    PrefixTable() = default;
    explicit PrefixTable(std::uint64_t cell_limit) : limit_(cell_limit) {}

    PrefixTable(const PrefixTable& other) {
        std::shared_lock lock(other.mutex_);
        rows_ = other.rows_;
        cells_ = other.cells_;
        limit_ = other.limit_;
    }

    PrefixTable& operator=(const PrefixTable& other) {
        if (this != &other) {
            std::scoped_lock lock(mutex_, other.mutex_);
            rows_ = other.rows_;
            cells_ = other.cells_;
            limit_ = other.limit_;
        }
        return *this;
    }

    /// a_k(n); zero for n <= 0. Grows the cache as needed.
    Natural at(Order k, Index n) {
        if (k < 0) throw domain_error("a: order must be >= 0, got " + std::to_string(k));
        if (n <= 0) return Natural{};
        {
            std::shared_lock lock(mutex_);
            if (cached_locked(k, n)) return rows_[k][n - 1];
        }
        std::unique_lock lock(mutex_);
        ensure_locked(k, n);
        return rows_[k][n - 1];
    }

    /// Makes a_j(m) available for every 0 <= j <= k, 1 <= m <= n.
    void ensure(Order k, Index n) {
        if (k < 0 || n < 1) return;
        std::unique_lock lock(mutex_);
        ensure_locked(k, n);
    }

    /// Copy of row k restricted to n = 1..len. Grows the cache as needed.
    std::vector<Natural> row(Order k, Index len) {
        ensure(k, len);
        std::shared_lock lock(mutex_);
        const auto& r = rows_.at(static_cast<std::size_t>(k));
        return {r.begin(), r.begin() + len};
    }

    bool contains(Order k, Index n) const {
        std::shared_lock lock(mutex_);
        return k >= 0 && n >= 1 && cached_locked(k, n);
    }

    std::uint64_t cell_count() const {
        std::shared_lock lock(mutex_);
        return cells_;
    }

    /// Largest cached order, or -1 when empty.
    Order max_k() const {
        std::shared_lock lock(mutex_);
        return static_cast<Order>(rows_.size()) - 1;
    }

    /// Length of cached row k (0 when absent).
    Index row_length(Order k) const {
        std::shared_lock lock(mutex_);
        if (k < 0 || static_cast<std::size_t>(k) >= rows_.size()) return 0;
        return static_cast<Index>(rows_[k].size());
    }

private:
    bool cached_locked(Order k, Index n) const {
        return static_cast<std::size_t>(k) < rows_.size() && static_cast<std::size_t>(n) <= rows_[k].size();
    }

    void ensure_locked(Order k, Index n) {
        if (cached_locked(k, n)) return;

        // New cells: every row 0..k padded to length n.
        std::uint64_t extra = 0;
        for (Order j = 0; j <= k; ++j) {
            const std::size_t have = static_cast<std::size_t>(j) < rows_.size() ? rows_[j].size() : 0;
            if (have < static_cast<std::size_t>(n)) extra += static_cast<std::uint64_t>(n) - have;
        }
        const std::uint64_t limit = limit_ != 0 ? limit_ : max_cells();
        if (extra > limit || cells_ > limit - extra) {
            throw table_too_large("table too large: a_" + std::to_string(k) + "(" + std::to_string(n) +
                                  ") needs " + std::to_string(cells_ + extra) + " cells, limit " +
                                  std::to_string(limit));
        }

        if (rows_.size() < static_cast<std::size_t>(k) + 1) rows_.resize(static_cast<std::size_t>(k) + 1);
        const auto len = static_cast<std::size_t>(n);

        auto& fibs = rows_[0];
        if (fibs.size() < len) {
            fibs.reserve(len);
            while (fibs.size() < len) {
                const std::size_t m = fibs.size();
                fibs.push_back(m < 2 ? Natural{1} : fibs[m - 1] + fibs[m - 2]);
            }
        }
        for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j) {
            const auto& prev = rows_[j - 1];
            auto& cur = rows_[j];
            if (cur.size() >= len) continue;
            cur.reserve(len);
            Natural acc = cur.empty() ? Natural{} : cur.back();
            for (std::size_t m = cur.size(); m < len; ++m) {
                acc += prev[m];
                cur.push_back(acc);
            }
        }
        cells_ += extra;
    }

    mutable std::shared_mutex mutex_;
    std::vector<std::vector<Natural>> rows_;
    std::uint64_t cells_ = 0;
    std::uint64_t limit_ = 0;  // 0: read the guard at growth time
};

/// Process-wide cache behind the free function a().
inline PrefixTable& shared_prefix_table() {
    static PrefixTable table;
    return table;
}

/// a_k(n) from the shared cache; 0 for n <= 0.
inline Natural a(Order k, Index n) { return shared_prefix_table().at(k, n); }

/// a_k(n) from a caller-owned cache.
inline Natural a(PrefixTable& cache, Order k, Index n) { return cache.at(k, n); }

/// Dense (k_max+1) x n_max grid; rows[k][n-1] holds the (k, n) cell.
struct Grid {
    Order k_max = 0;
    Index n_max = 0;
    std::vector<std::vector<Natural>> rows;

    const Natural& at(Order k, Index n) const { return rows.at(k).at(n - 1); }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Fully populated cache of a_k(n) for 0 <= k <= k_max, 1 <= n <= n_max.
/// Rejects requests over the cell guard with table_too_large.
inline PrefixTable table(Order k_max, Index n_max, std::uint64_t limit = max_cells()) {
    if (k_max < 0) throw domain_error("table: k_max must be >= 0");
    if (n_max < 1) throw domain_error("table: n_max must be >= 1");
    check_cell_budget(static_cast<std::uint64_t>(k_max) + 1, static_cast<std::uint64_t>(n_max), limit);
    PrefixTable out(limit);
    out.ensure(k_max, n_max);
    return out;
}

/// Dense copy of the a-table, for rendering and comparison.
inline Grid a_grid(Order k_max, Index n_max, std::uint64_t limit = max_cells()) {
    PrefixTable cache = table(k_max, n_max, limit);
    Grid g{k_max, n_max, {}};
    g.rows.reserve(static_cast<std::size_t>(k_max) + 1);
    for (Order k = 0; k <= k_max; ++k) g.rows.push_back(cache.row(k, n_max));
    return g;
}

}  // namespace fibsums
