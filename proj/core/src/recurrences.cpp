#include "primeseq/recurrences.hpp"

#include <mutex>

namespace primeseq {

namespace {

BigInt b_step(Index n, const BigInt& prev, const BigInt& prev2)
{
    return from_index(n + 2) * (prev - prev2);
}

}  // namespace

BCache::BCache()
{
    terms_.emplace_back(0);
    terms_.emplace_back(1);
}

const BigInt& BCache::at(Index n)
{
    if (n < -1) {
        throw IndexBelowDomain(n, -1);
    }
    const auto slot = static_cast<std::size_t>(n + 1);
    {
        std::shared_lock lock(mutex_);
        if (slot < terms_.size()) {
            const BigInt& v = terms_[slot];
#ifdef PRIMESEQ_CHECKED_CACHES
            if (n >= 1 && v != b_step(n, terms_[slot - 1], terms_[slot - 2])) {
                throw Error("b-cache corrupted at n = " + std::to_string(n));
            }
#endif
            return v;
        }
    }
    extend_to(n);
    std::shared_lock lock(mutex_);
    return terms_[slot];
}

Index BCache::high_water() const
{
    std::shared_lock lock(mutex_);
    return static_cast<Index>(terms_.size()) - 2;
}

bool BCache::check_invariants() const
{
    std::shared_lock lock(mutex_);
    if (terms_[0] != 0 || terms_[1] != 1) {
        return false;
    }
    for (std::size_t slot = 2; slot < terms_.size(); ++slot) {
        const auto n = static_cast<Index>(slot) - 1;
        if (terms_[slot] != b_step(n, terms_[slot - 1], terms_[slot - 2])) {
            return false;
        }
        if (sgn(terms_[slot]) <= 0) {
            return false;
        }
        if (n >= 1 && terms_[slot] <= terms_[slot - 1]) {
            return false;
        }
    }
    return true;
}

void BCache::extend_to(Index n)
{
    std::unique_lock lock(mutex_);
    while (static_cast<Index>(terms_.size()) - 1 <= n) {
        const auto next = static_cast<Index>(terms_.size()) - 1;
        const auto sz = terms_.size();
        terms_.push_back(b_step(next, terms_[sz - 1], terms_[sz - 2]));
    }
}

FactorialCache::FactorialCache()
{
    fact_.emplace_back(1);
    left_.emplace_back(0);
}

const BigInt& FactorialCache::factorial(Index n)
{
    if (n < 0) {
        throw IndexBelowDomain(n, 0);
    }
    const auto slot = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(mutex_);
        if (slot < fact_.size()) {
            return fact_[slot];
        }
    }
    extend_to(n);
    std::shared_lock lock(mutex_);
    return fact_[slot];
}

const BigInt& FactorialCache::left_factorial(Index n)
{
    if (n < 0) {
        throw IndexBelowDomain(n, 0);
    }
    const auto slot = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(mutex_);
        if (slot < left_.size()) {
            return left_[slot];
        }
    }
    extend_to(n);
    std::shared_lock lock(mutex_);
    return left_[slot];
}

void FactorialCache::extend_to(Index n)
{
    std::unique_lock lock(mutex_);
    // left_ trails fact_ by one entry: !(k+1) = !k + k!.
    while (static_cast<Index>(left_.size()) <= n) {
        const auto k = left_.size() - 1;
        left_.push_back(left_[k] + fact_[k]);
        fact_.push_back(fact_.back() * from_index(static_cast<Index>(fact_.size())));
    }
}

RowlandCache::RowlandCache()
{
    terms_.emplace_back(7);
}

const BigInt& RowlandCache::term(Index n)
{
    if (n < 1) {
        throw IndexBelowDomain(n, 1);
    }
    const auto slot = static_cast<std::size_t>(n - 1);
    {
        std::shared_lock lock(mutex_);
        if (slot < terms_.size()) {
            return terms_[slot];
        }
    }
    extend_to(n);
    std::shared_lock lock(mutex_);
    return terms_[slot];
}

BigInt RowlandCache::diff(Index n)
{
    BigInt next = term(n + 1);
    return next - term(n);
}

void RowlandCache::extend_to(Index n)
{
    std::unique_lock lock(mutex_);
    while (static_cast<Index>(terms_.size()) < n) {
        const auto next = static_cast<Index>(terms_.size()) + 1;
        const BigInt& prev = terms_.back();
        terms_.push_back(prev + gcd(from_index(next), prev));
    }
}

BCache& b_cache()
{
    static BCache cache;
    return cache;
}

FactorialCache& factorial_cache()
{
    static FactorialCache cache;
    return cache;
}

RowlandCache& rowland_cache()
{
    static RowlandCache cache;
    return cache;
}

const BigInt& b(Index n)
{
    return b_cache().at(n);
}

BigInt factorial(Index n)
{
    return factorial_cache().factorial(n);
}

BigInt left_factorial(Index n)
{
    return factorial_cache().left_factorial(n);
}

BigInt b_via_left_factorial(Index n)
{
    if (n < 0) {
        throw IndexBelowDomain(n, 0);
    }
    // !(n+1) itself is odd at n = 0, so halve the whole product.
    const BigInt product = from_index(n + 2) * factorial_cache().left_factorial(n + 1);
    if (mpz_odd_p(product.get_mpz_t())) {
        throw InexactDivision("(n+2) * !(n+1) is odd at n = " + std::to_string(n));
    }
    return product / 2;
}

BigInt rowland_term(Index n)
{
    return rowland_cache().term(n);
}

BigInt rowland_diff(Index n)
{
    return rowland_cache().diff(n);
}

}  // namespace primeseq
