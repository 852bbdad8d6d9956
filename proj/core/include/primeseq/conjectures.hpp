#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "primeseq/families.hpp"
#include "primeseq/primality.hpp"

namespace primeseq {

/// Prime value -> ascending indices at which it occurs.
struct OccurrenceIndex {
    FamilySpec family;
    std::map<BigInt, std::vector<Index>> occurrences;
    Index scanned_from = 0;
    Index scanned_upto = 0;
    std::size_t terms_seen = 0;

    void add(const TermRecord& rec);

    /// Union of two indexes of the same family; associative and commutative.
    void merge(const OccurrenceIndex& other);

    static OccurrenceIndex build(std::span<const TermRecord> records);
};

struct PrimesOrOneReport {
    FamilySpec family;
    Index n_from = 0;
    Index n_to = 0;
    std::size_t ones = 0;
    std::size_t primes = 0;
    std::size_t probable_primes = 0;  // subset of primes above 2^64
    std::vector<std::pair<Index, BigInt>> composites;

    bool clean() const { return composites.empty(); }
};

/// Scans the first `count` terms, n in [first_index, first_index + count).
PrimesOrOneReport verify_primes_or_one(const FamilySpec& family, Index count, ScanOptions options = {});
PrimesOrOneReport classify_records(const FamilySpec& family, std::span<const TermRecord> records);

struct SymmetryViolation {
    Index n = 0;
    BigInt p;
    Index mirror = 0;
    BigInt mirror_value;
};

struct MirrorOutOfDomain {
    Index n = 0;
    BigInt p;
    Index mirror = 0;
};

struct SymmetryReport {
    FamilySpec family;
    Index n_max = 0;
    std::size_t checked = 0;
    std::size_t computed_on_demand = 0;
    std::vector<SymmetryViolation> violations;
    std::vector<MirrorOutOfDomain> out_of_domain;
    std::vector<std::pair<Index, BigInt>> self_mirrors;  // mirror index == n

    bool clean() const { return violations.empty(); }
};

/// For each prime term p = a(n), 3 <= n <= n_max, checks a(p - n - k + 2) = p
/// (k = 1 for Main). Mirrors past n_max are computed on demand. Only Main and
/// Quadratic(k) are accepted.
SymmetryReport verify_symmetry(const FamilySpec& family, Index n_max, ScanOptions options = {});

struct PairCheck {
    Index n = 0;
    Index m = 0;
    BigInt value;
    bool sum_holds = false;  // value == n + m - 1
    bool gcd_holds = false;  // value == gcd(n^2-n-1, m^2-m-1)
};

struct PairReport {
    Index n_max = 0;
    std::size_t pairs_checked = 0;
    std::size_t singletons = 0;
    std::vector<PairCheck> violations;
    std::vector<std::pair<BigInt, std::vector<Index>>> more_than_twice;

    bool clean() const { return violations.empty() && more_than_twice.empty(); }
};

/// Main family over 3 <= n <= n_max: every prime seen exactly twice must
/// satisfy both pair identities; nothing may be seen more than twice.
PairReport verify_pair_identities(const FamilySpec& family, Index n_max, ScanOptions options = {});

struct TripleCheck {
    BigInt p;
    std::vector<Index> indices;
    Index predicted = 0;  // p + first index
    BigInt predicted_value;
    bool holds = false;
};

struct TripleReport {
    Index count = 0;
    std::map<std::size_t, std::size_t> multiplicities;  // occurrences -> number of primes
    std::vector<TripleCheck> triples;
    std::vector<TripleCheck> violations;

    bool clean() const { return violations.empty(); }
};

/// Quadratic(2), first `count` terms. Every prime seen at least three times
/// must have its third occurrence at p + (first index).
TripleReport verify_triple_rule_a2(Index count, ScanOptions options = {});

struct CoverageReport {
    Index n_max = 0;
    BigInt bound;
    std::size_t candidates = 0;  // primes <= bound ending in 1 or 9
    std::vector<BigInt> missing;
};

/// Primes p <= bound with p = 1, 9 (mod 10) absent from a(3..n_max).
CoverageReport prime_coverage(Index n_max, const BigInt& bound, ScanOptions options = {});

}  // namespace primeseq
