#include <doctest.h>

#include <numeric>

#include <random>

#include "primeseq/analytics.hpp"
#include "primeseq/conjectures.hpp"

using namespace primeseq;

TEST_CASE("primes-or-one counts")
{
    const auto r = verify_primes_or_one(FamilySpec::main(), 33);
    CHECK(r.n_from == 3);
    CHECK(r.n_to == 35);
    CHECK(r.ones == 0);
    CHECK(r.primes == 33);
    CHECK(r.clean());

    const auto r35 = verify_primes_or_one(FamilySpec::main(), 35);
    CHECK(r35.ones == 1);

    const auto q3 = verify_primes_or_one(FamilySpec::quadratic(3), 3);
    REQUIRE(q3.composites.size() == 1);
    CHECK(q3.composites[0].first == 5);
    CHECK(q3.composites[0].second == 9);

    const auto l4 = verify_primes_or_one(FamilySpec::linear(4), 30);
    REQUIRE(l4.composites.size() == 1);
    CHECK(l4.composites[0].second == 4);
}

TEST_CASE("occurrence index merge is order independent")
{
    const auto family = FamilySpec::main();
    const auto all = scan(family, 3, 600);
    std::mt19937_64 rng(3);
    const auto whole = OccurrenceIndex::build(all);
    for (int trial = 0; trial < 5; ++trial) {
        const auto cut1 = static_cast<std::ptrdiff_t>(rng() % all.size());
        const auto cut2 = static_cast<std::ptrdiff_t>(rng() % all.size());
        const auto lo = std::min(cut1, cut2);
        const auto hi = std::max(cut1, cut2);
        const std::span<const TermRecord> view(all);
        auto a = OccurrenceIndex::build(view.subspan(0, static_cast<std::size_t>(lo)));
        auto b = OccurrenceIndex::build(view.subspan(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo)));
        auto c = OccurrenceIndex::build(view.subspan(static_cast<std::size_t>(hi)));

        auto left = a;
        left.merge(b);
        left.merge(c);
        auto right = c;
        auto bc = b;
        bc.merge(a);
        right.merge(bc);
        CHECK(left.occurrences == whole.occurrences);
        CHECK(right.occurrences == whole.occurrences);
        CHECK(left.scanned_upto == 600);
        CHECK(right.scanned_from == 3);
    }
    for (const auto& [value, indices] : whole.occurrences) {
        for (Index n : indices) {
            REQUIRE(all[static_cast<std::size_t>(n - 3)].a == value);
        }
        REQUIRE(std::is_sorted(indices.begin(), indices.end()));
    }
}

TEST_CASE("symmetry on the listing examples")
{
    CHECK(term(FamilySpec::main(), 8).a == 11);
    CHECK(term(FamilySpec::main(), 19).a == 31);
    CHECK(term(FamilySpec::quadratic(2), 4).a == 7);

    const auto r = verify_symmetry(FamilySpec::main(), 200);
    CHECK(r.clean());
    CHECK(r.checked > 0);
    REQUIRE(r.self_mirrors.size() == 1);
    CHECK(r.self_mirrors[0].second == 5);
    CHECK(r.computed_on_demand > 0);

    CHECK_THROWS_AS(verify_symmetry(FamilySpec::linear(1), 50), Error);
}

TEST_CASE("symmetry for the quadratic families")
{
    for (int k = 1; k <= 5; ++k) {
        const auto r = verify_symmetry(FamilySpec::quadratic(k), 1000);
        INFO("k = " << k);
        CHECK(r.clean());
        CHECK(r.checked > 0);
    }
    const auto q2 = verify_symmetry(FamilySpec::quadratic(2), 20);
    bool saw_seven = false;
    for (const auto& o : q2.out_of_domain) {
        if (o.n == 10 && o.p == 7) {
            saw_seven = true;
            CHECK(o.mirror == -3);
        }
    }
    CHECK(saw_seven);
}

TEST_CASE("pair identities")
{
    const auto r = verify_pair_identities(FamilySpec::main(), 40);
    CHECK(r.clean());
    CHECK(r.pairs_checked > 0);

    // Hand-picked pairs from the listing.
    const std::vector<std::tuple<Index, Index, int>> pairs = {{4, 8, 11}, {13, 19, 31}, {6, 24, 29}};
    for (const auto& [n, m, p] : pairs) {
        CHECK(term(FamilySpec::main(), n).a == p);
        CHECK(term(FamilySpec::main(), m).a == p);
        CHECK(n + m - 1 == p);
        CHECK(gcd(numerator(FamilySpec::main(), n), numerator(FamilySpec::main(), m)) == p);
    }
    CHECK_THROWS_AS(verify_pair_identities(FamilySpec::quadratic(2), 40), Error);
}

TEST_CASE("gcd form of the pair identity has counterexamples")
{
    // a(62) = a(138) = 199 and 62 + 138 - 1 = 199, but x(138) = 5 x(62) so
    // the gcd keeps the extra factor 19 of x(62) = 3781.
    CHECK(term(FamilySpec::main(), 62).a == 199);
    CHECK(term(FamilySpec::main(), 138).a == 199);
    CHECK(std::gcd(62L * 62 - 62 - 1, 138L * 138 - 138 - 1) == 19L * 199);

    const auto r = verify_pair_identities(FamilySpec::main(), 400);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations.front().n == 62);
    CHECK(r.violations.front().m == 138);
    for (const auto& v : r.violations) {
        CHECK(v.sum_holds);
        CHECK_FALSE(v.gcd_holds);
    }
}

TEST_CASE("a paired prime always divides the gcd of its numerators")
{
    const auto records = scan(FamilySpec::main(), 3, 2000);
    const auto idx = OccurrenceIndex::build(records);
    std::size_t pairs = 0;
    for (const auto& [value, indices] : idx.occurrences) {
        if (indices.size() != 2 || value == 1) {
            continue;
        }
        ++pairs;
        const long n = indices[0];
        const long m = indices[1];
        const long g = std::gcd(n * n - n - 1, m * m - m - 1);
        REQUIRE(g % value.get_si() == 0);
        REQUIRE(value == n + m - 1);
    }
    CHECK(pairs > 100);
}

TEST_CASE("triple rule for Quadratic(2)")
{
    CHECK(term(FamilySpec::quadratic(2), 10).a == 7);
    const auto r = verify_triple_rule_a2(500);
    CHECK(r.clean());
    REQUIRE(r.triples.size() >= 1);
    CHECK(r.triples[0].p == 7);
    CHECK(r.triples[0].indices == std::vector<Index>{3, 4, 10});
    CHECK(r.triples[0].predicted == 10);

    const auto small = verify_triple_rule_a2(16);  // n = 3..18
    const auto idx = OccurrenceIndex::build(scan(FamilySpec::quadratic(2), 3, 18));
    CHECK(idx.occurrences.at(BigInt(17)) == std::vector<Index>{6, 11});
    CHECK(idx.occurrences.at(BigInt(23)) == std::vector<Index>{5, 18});
    CHECK(small.clean());
}

TEST_CASE("coverage of primes ending in 1 or 9")
{
    const auto r = prime_coverage(180, BigInt(131));
    CHECK(r.missing.empty());
    CHECK(r.candidates == 13);
    CHECK(prime_coverage(180, BigInt(5)).candidates == 0);
    CHECK(prime_coverage(180, BigInt(10)).missing.empty());

    // Too short a scan leaves large candidates missing.
    const auto short_scan = prime_coverage(10, BigInt(200));
    CHECK_FALSE(short_scan.missing.empty());
}

TEST_CASE("efficiency and comparison")
{
    const auto main25 = efficiency(FamilySpec::main(), 25);
    CHECK(main25.distinct_primes == 21);
    CHECK(main25.ones + main25.prime_terms + main25.composite_terms == 25);
    CHECK(main25.distinct_primes <= main25.prime_terms);

    const auto row25 = efficiency(FamilySpec::rowland(), 25);
    CHECK(row25.distinct_primes == 4);
    CHECK(row25.max_prime == 23);

    const auto c1 = compare(1);
    CHECK(c1.main.distinct_primes == 1);
    CHECK(c1.main.max_prime == 5);
    CHECK(c1.rowland.distinct_primes == 0);

    const auto c10 = compare(10);
    CHECK(c10.rowland.distinct_primes == 3);  // 5, 3 and the tenth difference 11

    const auto c25 = compare(25);
    CHECK(c25.main_exceeds());
    CHECK(c25.distinct_ratio() == doctest::Approx(21.0 / 4.0));

    std::size_t prev = 0;
    for (Index n = 1; n <= 120; n += 7) {
        const auto e = efficiency(FamilySpec::main(), n);
        REQUIRE(e.distinct_primes >= prev);
        prev = e.distinct_primes;
    }

    const auto windows = efficiency(FamilySpec::main(), 250, 100);
    REQUIRE(windows.new_prime_rate.size() == 3);
    std::size_t total = 0;
    for (auto w : windows.new_prime_rate) {
        total += w;
    }
    CHECK(total == windows.distinct_primes);
    CHECK_THROWS_AS(efficiency(FamilySpec::main(), 0), Error);
}
