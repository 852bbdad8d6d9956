#pragma once

#include <deque>
#include <shared_mutex>

#include "primeseq/bigint.hpp"

namespace primeseq {

/// Memoized b(n) = (n+2)(b(n-1) - b(n-2)) with b(-1) = 0, b(0) = 1.
///
/// Indices are the natural ones (b(-1) is addressable). The cache only
/// grows. Reads take a shared lock, extension an exclusive one; returned
/// references stay valid for the lifetime of the cache.
class BCache {
public:
    BCache();

    const BigInt& at(Index n);

    /// Largest index currently materialized.
    Index high_water() const;

    /// Re-derives every cached term from the recurrence; false on mismatch.
    bool check_invariants() const;

private:
    void extend_to(Index n);

    mutable std::shared_mutex mutex_;
    std::deque<BigInt> terms_;  // terms_[i] holds b(i - 1)
};

/// Memoized k! and left factorials !n = sum_{k<n} k!.
class FactorialCache {
public:
    FactorialCache();

    const BigInt& factorial(Index n);
    const BigInt& left_factorial(Index n);

private:
    void extend_to(Index n);

    mutable std::shared_mutex mutex_;
    std::deque<BigInt> fact_;  // fact_[k] = k!
    std::deque<BigInt> left_;  // left_[k] = !k
};

/// Rowland's r(n) = r(n-1) + gcd(n, r(n-1)), r(1) = 7.
class RowlandCache {
public:
    RowlandCache();

    const BigInt& term(Index n);
    BigInt diff(Index n);

private:
    void extend_to(Index n);

    mutable std::shared_mutex mutex_;
    std::deque<BigInt> terms_;  // terms_[i] holds r(i + 1)
};

// Process-wide caches used by the free functions below.
BCache& b_cache();
FactorialCache& factorial_cache();
RowlandCache& rowland_cache();

/// Throws IndexBelowDomain for n < -1.
const BigInt& b(Index n);

BigInt factorial(Index n);

/// !0 = 0 (empty sum).
BigInt left_factorial(Index n);

/// (n+2) * !(n+1) / 2. Throws InexactDivision if the product is odd.
BigInt b_via_left_factorial(Index n);

BigInt rowland_term(Index n);

/// r(n+1) - r(n) = gcd(n+1, r(n)).
BigInt rowland_diff(Index n);

}  // namespace primeseq
