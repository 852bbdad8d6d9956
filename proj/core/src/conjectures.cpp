#include "primeseq/conjectures.hpp"

#include <algorithm>

namespace primeseq {

namespace {

Index to_index(const BigInt& v)
{
    if (!v.fits_slong_p()) {
        throw Error("index out of range: " + to_string(v));
    }
    return static_cast<Index>(v.get_si());
}

void require_family(const FamilySpec& family, std::initializer_list<FamilyKind> kinds, const char* what)
{
    if (std::find(kinds.begin(), kinds.end(), family.kind) == kinds.end()) {
        throw Error(std::string(what) + " does not apply to family " + family.name());
    }
}

}  // namespace

void OccurrenceIndex::add(const TermRecord& rec)
{
    if (terms_seen++ == 0) {
        family = rec.family;
        scanned_from = rec.n;
        scanned_upto = rec.n;
    }
    scanned_from = std::min(scanned_from, rec.n);
    scanned_upto = std::max(scanned_upto, rec.n);
    if (rec.cls != TermClass::Prime) {
        return;
    }
    auto& list = occurrences[rec.a];
    list.insert(std::upper_bound(list.begin(), list.end(), rec.n), rec.n);
}

void OccurrenceIndex::merge(const OccurrenceIndex& other)
{
    if (other.terms_seen == 0) {
        return;
    }
    if (terms_seen == 0) {
        *this = other;
        return;
    }
    terms_seen += other.terms_seen;
    scanned_from = std::min(scanned_from, other.scanned_from);
    scanned_upto = std::max(scanned_upto, other.scanned_upto);
    for (const auto& [value, indices] : other.occurrences) {
        auto& list = occurrences[value];
        std::vector<Index> merged;
        std::set_union(list.begin(), list.end(), indices.begin(), indices.end(), std::back_inserter(merged));
        list = std::move(merged);
    }
}

OccurrenceIndex OccurrenceIndex::build(std::span<const TermRecord> records)
{
    OccurrenceIndex idx;
    for (const auto& rec : records) {
        idx.add(rec);
    }
    return idx;
}

PrimesOrOneReport classify_records(const FamilySpec& family, std::span<const TermRecord> records)
{
    PrimesOrOneReport report;
    report.family = family;
    if (!records.empty()) {
        report.n_from = records.front().n;
        report.n_to = records.back().n;
    }
    for (const auto& rec : records) {
        switch (rec.cls) {
        case TermClass::One: ++report.ones; break;
        case TermClass::Prime:
            ++report.primes;
            if (!fits_u64(rec.a)) {
                ++report.probable_primes;
            }
            break;
        case TermClass::Composite: report.composites.emplace_back(rec.n, rec.a); break;
        }
    }
    return report;
}

PrimesOrOneReport verify_primes_or_one(const FamilySpec& family, Index count, ScanOptions options)
{
    if (count < 1) {
        throw Error("term count must be >= 1");
    }
    const Index first = family.first_index();
    const auto records = scan(family, first, first + count - 1, options);
    return classify_records(family, records);
}

SymmetryReport verify_symmetry(const FamilySpec& family, Index n_max, ScanOptions options)
{
    require_family(family, {FamilyKind::Main, FamilyKind::Quadratic}, "mirror symmetry");
    SymmetryReport report;
    report.family = family;
    report.n_max = n_max;
    const Index first = family.first_index();
    if (n_max < first) {
        return report;
    }
    const auto records = scan(family, first, n_max, options);
    const auto value_at = [&](Index n) -> BigInt {
        if (n <= n_max) {
            return records[static_cast<std::size_t>(n - first)].a;
        }
        ++report.computed_on_demand;
        return term(family, n, options.strategy).a;
    };
    const BigInt shift = from_index(family.k - 2);
    for (const auto& rec : records) {
        if (rec.cls != TermClass::Prime) {
            continue;
        }
        const Index mirror = to_index(rec.a - from_index(rec.n) - shift);
        if (mirror < first) {
            report.out_of_domain.push_back({rec.n, rec.a, mirror});
            continue;
        }
        ++report.checked;
        if (mirror == rec.n) {
            report.self_mirrors.emplace_back(rec.n, rec.a);
            // Only 5 may appear once.
            if (family.kind == FamilyKind::Main && rec.a != 5) {
                report.violations.push_back({rec.n, rec.a, mirror, rec.a});
            }
            continue;
        }
        BigInt mv = value_at(mirror);
        if (mv != rec.a) {
            report.violations.push_back({rec.n, rec.a, mirror, std::move(mv)});
        }
    }
    return report;
}

PairReport verify_pair_identities(const FamilySpec& family, Index n_max, ScanOptions options)
{
    require_family(family, {FamilyKind::Main}, "pair identities");
    PairReport report;
    report.n_max = n_max;
    if (n_max < family.first_index()) {
        return report;
    }
    const auto records = scan(family, family.first_index(), n_max, options);
    const auto idx = OccurrenceIndex::build(records);
    for (const auto& [value, indices] : idx.occurrences) {
        if (indices.size() == 1) {
            ++report.singletons;
            continue;
        }
        if (indices.size() > 2) {
            report.more_than_twice.emplace_back(value, indices);
            continue;
        }
        PairCheck check;
        check.n = indices[0];
        check.m = indices[1];
        check.value = value;
        check.sum_holds = value == from_index(check.n + check.m - 1);
        check.gcd_holds = value == gcd(numerator(family, check.n), numerator(family, check.m));
        ++report.pairs_checked;
        if (!check.sum_holds || !check.gcd_holds) {
            report.violations.push_back(std::move(check));
        }
    }
    return report;
}

TripleReport verify_triple_rule_a2(Index count, ScanOptions options)
{
    const auto family = FamilySpec::quadratic(2);
    TripleReport report;
    report.count = count;
    if (count < 1) {
        return report;
    }
    const Index first = family.first_index();
    const Index last = first + count - 1;
    const auto records = scan(family, first, last, options);
    const auto idx = OccurrenceIndex::build(records);
    for (const auto& [value, indices] : idx.occurrences) {
        ++report.multiplicities[indices.size()];
        if (indices.size() < 3) {
            continue;
        }
        TripleCheck check;
        check.p = value;
        check.indices = indices;
        check.predicted = to_index(value + from_index(indices.front()));
        check.predicted_value = check.predicted <= last
            ? records[static_cast<std::size_t>(check.predicted - first)].a
            : term(family, check.predicted, options.strategy).a;
        check.holds = check.predicted_value == value && indices[2] == check.predicted;
        if (!check.holds) {
            report.violations.push_back(check);
        }
        report.triples.push_back(std::move(check));
    }
    return report;
}

CoverageReport prime_coverage(Index n_max, const BigInt& bound, ScanOptions options)
{
    const auto family = FamilySpec::main();
    CoverageReport report;
    report.n_max = n_max;
    report.bound = bound;
    std::vector<BigInt> seen;
    if (n_max >= family.first_index()) {
        scan_each(family, family.first_index(), n_max,
                  [&](const TermRecord& rec) {
                      if (rec.cls == TermClass::Prime && rec.a <= bound) {
                          seen.push_back(rec.a);
                      }
                  },
                  options);
    }
    std::sort(seen.begin(), seen.end());
    for (BigInt p = 2; p <= bound; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        const unsigned long last_digit = mpz_fdiv_ui(p.get_mpz_t(), 10);
        if (last_digit != 1 && last_digit != 9) {
            continue;
        }
        ++report.candidates;
        if (!std::binary_search(seen.begin(), seen.end(), p)) {
            report.missing.push_back(p);
        }
    }
    return report;
}

}  // namespace primeseq
