#include <doctest.h>

#include "oracles.hpp"
#include "primeseq/primality.hpp"

using namespace primeseq;

TEST_CASE("small verdicts")
{
    CHECK(is_prime(BigInt(1)).verdict == Verdict::One);
    CHECK(is_prime(BigInt(2)).verdict == Verdict::Prime);
    CHECK(is_prime(BigInt(9)).verdict == Verdict::Composite);
    CHECK(is_prime(BigInt(1259)).verdict == Verdict::Prime);
    CHECK(is_prime(BigInt(1331)).verdict == Verdict::Composite);
    CHECK(is_prime(BigInt(1259)).method == PrimalityMethod::DeterministicMR64);
    CHECK_THROWS_AS(is_prime(BigInt(0)), NonPositive);
    CHECK_THROWS_AS(is_prime(BigInt(-7)), NonPositive);
}

TEST_CASE("Miller-Rabin matches trial division below 10^6")
{
    for (std::uint64_t v = 0; v < 1'000'000; ++v) {
        REQUIRE(miller_rabin_u64(v) == oracle::trial_prime(v));
    }
}

TEST_CASE("trial division helper matches the oracle")
{
    for (std::uint64_t v = 0; v < 20'000; ++v) {
        REQUIRE(trial_division_u64(v) == oracle::trial_prime(v));
    }
}

TEST_CASE("strong pseudoprimes to small bases are rejected")
{
    // 3215031751 fools bases 2, 3, 5, 7; 3825123056546413051 fools primes up to 23.
    CHECK_FALSE(miller_rabin_u64(3215031751ULL));
    CHECK_FALSE(miller_rabin_u64(3825123056546413051ULL));
    CHECK_FALSE(miller_rabin_u64(2152302898747ULL));
    CHECK(miller_rabin_u64(18446744073709551557ULL));  // largest prime below 2^64
    CHECK_FALSE(miller_rabin_u64(18446744073709551615ULL));
}

TEST_CASE("values above 2^64 use the probable-prime route")
{
    const BigInt mersenne127 = (BigInt(1) << 127) - 1;
    const auto v = is_prime(mersenne127);
    CHECK(v.method == PrimalityMethod::StrongProbable);
    CHECK(v.verdict == Verdict::ProbablePrime);
    CHECK(v.prime_like());

    const auto c = is_prime(mersenne127 * 3);
    CHECK(c.verdict == Verdict::Composite);
    CHECK(c.method == PrimalityMethod::StrongProbable);
}

TEST_CASE("verdict method invariants")
{
    for (std::uint64_t v = 1; v < 2000; ++v) {
        const auto r = is_prime(BigInt(static_cast<unsigned long>(v)));
        REQUIRE((r.verdict == Verdict::One) == (v == 1));
        REQUIRE(r.verdict != Verdict::ProbablePrime);
    }
}
