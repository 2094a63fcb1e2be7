#pragma once

#include <stdexcept>
#include <string>

namespace fibsums {

// fib() outside its domain (n <= 0).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Request would exceed the cell-count resource guard.
class table_too_large : public std::length_error {
public:
    using std::length_error::length_error;
};

// An identity's right-hand side went negative. On valid inputs this means a bug upstream.
class identity_underflow : public std::range_error {
public:
    using std::range_error::range_error;
};

// Brute-force enumeration refused because 2^n subsets is over the guard.
class ground_set_too_large : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace fibsums
