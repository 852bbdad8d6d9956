#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace primeseq {

using BigInt = mpz_class;

/// Term index. The gcd-filter families start at n = 3.
using Index = std::int64_t;

BigInt from_index(Index n);
BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& v);

bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);
BigInt from_u64(std::uint64_t v);

// Non-negative remainder for any sign of v; m must be positive.
BigInt mod_floor(const BigInt& v, const BigInt& m);

// gcd(x, 0) = |x|.
BigInt gcd(const BigInt& a, const BigInt& b);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexBelowDomain : public Error {
public:
    IndexBelowDomain(Index n, Index first);
    Index index() const { return index_; }
    Index first_index() const { return first_; }

private:
    Index index_;
    Index first_;
};

class InexactDivision : public Error {
public:
    using Error::Error;
};

class NonPositive : public Error {
public:
    using Error::Error;
};

}  // namespace primeseq
