#include "primeseq/analytics.hpp"

#include <set>

namespace primeseq {

EfficiencyReport efficiency(const FamilySpec& family, Index N, Index window, ScanOptions options)
{
    if (N < 1) {
        throw Error("efficiency needs N >= 1");
    }
    if (window < 1) {
        throw Error("window must be >= 1");
    }
    EfficiencyReport report;
    report.family = family;
    report.N = N;
    report.window = window;
    report.max_prime = 0;
    report.new_prime_rate.assign(static_cast<std::size_t>((N + window - 1) / window), 0);

    std::set<BigInt> seen;
    const Index first = family.first_index();
    scan_each(family, first, first + N - 1,
              [&](const TermRecord& rec) {
                  switch (rec.cls) {
                  case TermClass::One: ++report.ones; return;
                  case TermClass::Composite: ++report.composite_terms; return;
                  case TermClass::Prime: break;
                  }
                  ++report.prime_terms;
                  if (seen.insert(rec.a).second) {
                      ++report.new_prime_rate[static_cast<std::size_t>((rec.n - first) / window)];
                  }
                  if (rec.a > report.max_prime) {
                      report.max_prime = rec.a;
                  }
              },
              options);
    report.distinct_primes = seen.size();
    return report;
}

double CompareReport::distinct_ratio() const
{
    if (rowland.distinct_primes == 0) {
        return 0.0;
    }
    return static_cast<double>(main.distinct_primes) / static_cast<double>(rowland.distinct_primes);
}

CompareReport compare(Index N, Index window, ScanOptions options)
{
    return {N, efficiency(FamilySpec::main(), N, window, options),
            efficiency(FamilySpec::rowland(), N, window, options)};
}

}  // namespace primeseq
