#include "primeseq/primality.hpp"

#include <array>

namespace primeseq {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong probable-prime test to base a; v odd, v > 2.
bool strong_probable_prime(u64 v, u64 a, u64 d, int s)
{
    a %= v;
    if (a == 0) {
        return true;
    }
    u64 x = pow_mod(a, d, v);
    if (x == 1 || x == v - 1) {
        return true;
    }
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, v);
        if (x == v - 1) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool trial_division_u64(u64 v)
{
    if (v < 2) {
        return false;
    }
    if (v % 2 == 0) {
        return v == 2;
    }
    for (u64 p = 3; p <= v / p; p += 2) {
        if (v % p == 0) {
            return false;
        }
    }
    return true;
}

bool miller_rabin_u64(u64 v)
{
    if (v < 2) {
        return false;
    }
    static constexpr std::array<u64, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (v % p == 0) {
            return v == p;
        }
    }
    if (v < 41 * 41) {
        return true;
    }
    u64 d = v - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sinclair's base set, deterministic below 2^64.
    static constexpr std::array<u64, 7> bases = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (u64 a : bases) {
        if (!strong_probable_prime(v, a, d, s)) {
            return false;
        }
    }
    return true;
}

PrimalityVerdict is_prime(const BigInt& v)
{
    if (sgn(v) < 1) {
        throw NonPositive("primality test needs v >= 1, got " + primeseq::to_string(v));
    }
    if (v == 1) {
        return {v, Verdict::One, PrimalityMethod::TrialDivision};
    }
    if (fits_u64(v)) {
        const bool prime = miller_rabin_u64(to_u64(v));
        return {v, prime ? Verdict::Prime : Verdict::Composite, PrimalityMethod::DeterministicMR64};
    }
    // GMP >= 6.2: BPSW followed by extra Miller-Rabin rounds.
    const int r = mpz_probab_prime_p(v.get_mpz_t(), 24);
    if (r == 0) {
        return {v, Verdict::Composite, PrimalityMethod::StrongProbable};
    }
    return {v, r == 2 ? Verdict::Prime : Verdict::ProbablePrime, PrimalityMethod::StrongProbable};
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::One: return "One";
    case Verdict::Prime: return "Prime";
    case Verdict::Composite: return "Composite";
    case Verdict::ProbablePrime: return "ProbablePrime";
    }
    return "?";
}

const char* to_string(PrimalityMethod m)
{
    switch (m) {
    case PrimalityMethod::TrialDivision: return "TrialDivision";
    case PrimalityMethod::DeterministicMR64: return "DeterministicMR64";
    case PrimalityMethod::StrongProbable: return "StrongProbable";
    }
    return "?";
}

}  // namespace primeseq
