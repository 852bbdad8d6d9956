#pragma once

#include <cstdint>

#include "primeseq/bigint.hpp"

namespace primeseq {

enum class Verdict { One, Prime, Composite, ProbablePrime };

enum class PrimalityMethod { TrialDivision, DeterministicMR64, StrongProbable };

struct PrimalityVerdict {
    BigInt value;
    Verdict verdict;
    PrimalityMethod method;

    bool prime_like() const { return verdict == Verdict::Prime || verdict == Verdict::ProbablePrime; }
};

/// Values below 2^64 get a deterministic Miller-Rabin answer. Larger values
/// go through GMP's BPSW-based test and come back ProbablePrime when they
/// pass. Throws NonPositive for v < 1.
PrimalityVerdict is_prime(const BigInt& v);

bool miller_rabin_u64(std::uint64_t v);
bool trial_division_u64(std::uint64_t v);

const char* to_string(Verdict v);
const char* to_string(PrimalityMethod m);

}  // namespace primeseq
