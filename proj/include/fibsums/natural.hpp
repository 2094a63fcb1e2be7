#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fibsums {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value wrapper over a GMP integer. Every operation is exact; the only
/// operation that can leave the naturals is subtraction, which throws
/// std::range_error instead of producing a negative value.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT: implicit by design of literals

    /// Parses a plain decimal string ("0", "144", ...). No sign, no grouping.
    static Natural parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("empty natural literal");
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("not a decimal natural: '" + std::string(text) + "'");
            }
        }
        Natural out;
        out.value_.set_str(std::string(text), 10);
        return out;
    }

    /// Wraps a GMP integer; rejects negative values.
    static Natural from_mpz(mpz_class v) {
        if (sgn(v) < 0) throw std::range_error("negative value is not a natural");
        Natural out;
        out.value_ = std::move(v);
        return out;
    }

    const mpz_class& mpz() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }

    bool fits_u64() const noexcept { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("natural does not fit in 64 bits");
        std::uint64_t out = 0;
        mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
        return out;
    }

    std::string to_string() const { return value_.get_str(10); }

    std::size_t bit_length() const noexcept {
        return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
    }

    Natural& operator+=(const Natural& rhs) {
        value_ += rhs.value_;
        return *this;
    }

    Natural& operator-=(const Natural& rhs) {
        if (value_ < rhs.value_) {
            throw std::range_error("natural subtraction underflow: " + to_string() + " - " + rhs.to_string());
        }
        value_ -= rhs.value_;
        return *this;
    }

    Natural& operator*=(const Natural& rhs) {
        value_ *= rhs.value_;
        return *this;
    }

    /// Exact division; the caller guarantees divisibility.
    Natural& divide_exact(const Natural& rhs) {
        if (rhs.is_zero()) throw std::domain_error("division by zero");
        mpz_divexact(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
        return *this;
    }

    friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
    friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
    friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }

    friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& v) { return os << v.to_string(); }

private:
    mpz_class value_{0};
};

}  // namespace fibsums
