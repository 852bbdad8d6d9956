#pragma once

#include <cstddef>
#include <vector>

#include "primeseq/families.hpp"

namespace primeseq {

/// Prime yield over the first N terms of a family. For Rowland the terms are
/// the differences r(n+1) - r(n).
///
/// "Efficiency" here is a workbench definition with two metrics: distinct
/// primes produced within the first N terms, and the share of 1's.
struct EfficiencyReport {
    FamilySpec family;
    Index N = 0;
    std::size_t ones = 0;
    std::size_t prime_terms = 0;
    std::size_t composite_terms = 0;
    std::size_t distinct_primes = 0;
    BigInt max_prime;  // 0 when no prime was produced
    Index window = 0;
    std::vector<std::size_t> new_prime_rate;  // first-seen primes per window

    double ones_share() const { return N > 0 ? static_cast<double>(ones) / static_cast<double>(N) : 0.0; }
};

EfficiencyReport efficiency(const FamilySpec& family, Index N, Index window = 100, ScanOptions options = {});

struct CompareReport {
    Index N = 0;
    EfficiencyReport main;
    EfficiencyReport rowland;

    /// main.distinct_primes / rowland.distinct_primes; 0 when Rowland has none.
    double distinct_ratio() const;
    bool main_exceeds() const { return main.distinct_primes > rowland.distinct_primes; }
};

CompareReport compare(Index N, Index window = 100, ScanOptions options = {});

}  // namespace primeseq
