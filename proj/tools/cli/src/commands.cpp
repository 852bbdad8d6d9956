#include "primeseq/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>

#include "primeseq/cli/bfile.hpp"
#include "primeseq/cli/term_io.hpp"
#include "primeseq/recurrences.hpp"

namespace primeseq::cli {

using json = nlohmann::ordered_json;

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

Strategy parse_strategy(const std::string& text)
{
    if (text == "fast") {
        return Strategy::ModularFast;
    }
    if (text == "exact") {
        return Strategy::ExactBigInt;
    }
    throw UsageError("unknown strategy '" + text + "' (expected fast or exact)");
}

FamilySpec parse_family(const std::string& text)
{
    try {
        return FamilySpec::parse(text);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

Scheme parse_scheme(const std::string& text)
{
    if (text == "t1") {
        return Scheme::T1;
    }
    if (text == "t2") {
        return Scheme::T2;
    }
    throw UsageError("unknown scheme '" + text + "' (expected t1 or t2)");
}

BigInt parse_bigint_arg(const std::string& text, const char* flag)
{
    try {
        return parse_bigint(text);
    } catch (const Error&) {
        throw UsageError(std::string("bad integer for ") + flag + ": '" + text + "'");
    }
}

json pair_json(Index n, const BigInt& v, const char* value_key = "a")
{
    return {{"n", n}, {value_key, to_string(v)}};
}

json suite_terms(const VerifyOptions& opts, bool& clean)
{
    const auto family = parse_family(opts.family);
    const auto report = verify_primes_or_one(family, opts.to.value_or(10000));
    clean = report.clean();
    return to_json(report);
}

json suite_theorem1(const VerifyOptions& opts, bool& clean)
{
    const Index n_max = opts.n_max.value_or(60);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(opts.seed));

    std::size_t checked = 0;
    std::size_t skipped = 0;
    json failures = json::array();
    json eq3_failures = json::array();
    for (Index n = 3; n <= n_max; ++n) {
        for (int s = 0; s < opts.samples; ++s) {
            const BigInt bits = rng.get_z_range(96) + 1;
            BigInt m = rng.get_z_bits(bits);
            if (rng.get_z_bits(1) == 1) {
                m = -m;
            }
            try {
                const auto report = verify_theorem(Scheme::T1, n, m);
                ++checked;
                for (const auto& form : report.closed_forms) {
                    if (!form.equal) {
                        failures.push_back({{"n", n}, {"m", to_string(m)}, {"form", form.name},
                                            {"cf", report.cf_value.str()}, {"value", form.value.str()}});
                    }
                }
            } catch (const ZeroDenominator&) {
                ++skipped;
            }
            // Substituting a_{n-1} = m a_n into the a_1 form.
            const auto chain = elimination_chain(Scheme::T1, n);
            const BigInt nn = from_index(n);
            if (chain.a1.alpha * m + chain.a1.beta != nn * (m - nn + 2) - m) {
                eq3_failures.push_back({{"n", n}, {"m", to_string(m)}});
            }
        }
    }
    json eq5_failures = json::array();
    for (Index n = 3; n <= opts.eq5_n_max; ++n) {
        const auto chain = elimination_chain(Scheme::T1, n);
        if (chain.a2.alpha != b(n - 3) || chain.a2.beta != -from_index(n) * b(n - 4)) {
            eq5_failures.push_back(n);
        }
    }
    clean = failures.empty() && eq3_failures.empty() && eq5_failures.empty();
    return {{"n_max", n_max},           {"samples_per_n", opts.samples}, {"seed", opts.seed},
            {"checked", checked},       {"skipped_zero_denominator", skipped},
            {"failures", failures},     {"eq3_failures", eq3_failures},
            {"eq5_n_max", opts.eq5_n_max}, {"eq5_failures", eq5_failures}};
}

json suite_theorem2(const VerifyOptions& opts, bool& clean)
{
    const Index n_max = opts.n_max.value_or(12);
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::size_t printed_matches = 0;
    json derived_mismatches = json::array();
    json elimination_mismatches = json::array();
    json printed_samples = json::array();
    std::vector<BigInt> ms;
    for (Index m = opts.m_min; m <= opts.m_max; ++m) {
        ms.push_back(from_index(m));
    }
    for (Index n = 3; n <= n_max; ++n) {
        for (const auto& m : ms) {
            if (m - from_index(n) + 1 == 0) {
                ++skipped;
                continue;
            }
            TheoremReport report;
            try {
                report = verify_theorem(Scheme::T2, n, m);
            } catch (const ZeroDenominator&) {
                ++skipped;
                continue;
            }
            ++checked;
            const auto* printed = report.find("printed");
            const auto* derived = report.find("derived");
            const auto* elim = report.find("elimination");
            if (printed->equal) {
                ++printed_matches;
            }
            if (!derived->equal) {
                derived_mismatches.push_back({{"n", n}, {"m", to_string(m)}, {"cf", report.cf_value.str()},
                                              {"derived", derived->value.str()}});
            }
            if (!elim->equal) {
                elimination_mismatches.push_back({{"n", n}, {"m", to_string(m)}});
            }
            if (n <= 5 && (m == 5 || m == 7)) {
                printed_samples.push_back({{"n", n}, {"m", to_string(m)}, {"cf", report.cf_value.str()},
                                           {"printed", printed->value.str()}, {"derived", derived->value.str()},
                                           {"printed_equal", printed->equal}});
            }
        }
    }
    json probes = json::array();
    for (const auto& p : theorem2_depth_probe(3, n_max, ms)) {
        probes.push_back({{"shift", p.shift}, {"inverted", p.inverted}, {"checked", p.checked},
                          {"matches", p.matches}, {"holds", p.holds()}});
    }
    json lf_failures = json::array();
    for (Index n = 0; n <= opts.lf_n_max; ++n) {
        try {
            if (b(n) != b_via_left_factorial(n)) {
                lf_failures.push_back(n);
            }
        } catch (const InexactDivision&) {
            lf_failures.push_back(n);
        }
    }
    clean = derived_mismatches.empty() && elimination_mismatches.empty() && lf_failures.empty();
    return {{"n_max", n_max},
            {"m_range", {opts.m_min, opts.m_max}},
            {"reading", "levels 1..n-1, tail m"},
            {"checked", checked},
            {"skipped_zero_denominator", skipped},
            {"printed_matches", printed_matches},
            {"printed_mismatches", checked - printed_matches},
            {"printed_samples", printed_samples},
            {"derived_mismatches", derived_mismatches},
            {"elimination_mismatches", elimination_mismatches},
            {"depth_probe", probes},
            {"left_factorial_n_max", opts.lf_n_max},
            {"left_factorial_failures", lf_failures}};
}

json suite_eq4(const VerifyOptions& opts, bool& clean)
{
    const Index n_max = opts.n_max.value_or(50);
    json entries = json::array();
    bool printed_fails_from_4 = true;
    bool corrected_all = true;
    for (Index n = 3; n <= n_max; ++n) {
        const auto r = verify_eq4(n);
        if (n >= 4 && r.printed_holds) {
            printed_fails_from_4 = false;
        }
        corrected_all = corrected_all && r.corrected_holds;
        entries.push_back(to_json(r));
    }
    clean = corrected_all;
    return {{"n_max", n_max},
            {"printed_coefficient", "n^2 - 2"},
            {"corrected_coefficient", "n^2 - 2n"},
            {"printed_fails_for_all_n_ge_4", printed_fails_from_4},
            {"corrected_holds_for_all_n", corrected_all},
            {"entries", entries}};
}

json suite_gcd_replacement(const VerifyOptions& opts, bool& clean)
{
    const Index to = opts.to.value_or(2000);
    const auto family = FamilySpec::main();
    json counterexamples = json::array();
    std::size_t checked = 0;
    for (Index n = 3; n <= to; ++n) {
        const auto rec = term(family, n, Strategy::ExactBigInt);
        const BigInt via_factorial = gcd_via_factorial(n, rec.x);
        ++checked;
        if (via_factorial != rec.d) {
            counterexamples.push_back({{"n", n}, {"x", to_string(rec.x)}, {"gcd_partner", to_string(rec.d)},
                                       {"gcd_factorial", to_string(via_factorial)}});
        }
    }
    clean = counterexamples.empty();
    return {{"to", to}, {"checked", checked}, {"counterexamples", counterexamples}};
}

json suite_fastpath(const VerifyOptions& opts, bool& clean)
{
    const Index to = opts.to.value_or(1500);
    std::vector<FamilySpec> families{FamilySpec::main()};
    for (int k = 1; k <= opts.k_max; ++k) {
        families.push_back(FamilySpec::quadratic(k));
    }
    for (int k = 1; k <= opts.k_max; ++k) {
        families.push_back(FamilySpec::linear(k));
    }
    families.push_back(FamilySpec::rowland());

    clean = true;
    json rows = json::array();
    for (const auto& family : families) {
        std::size_t checked = 0;
        json mismatches = json::array();
        for (Index n = family.first_index(); n <= to; ++n) {
            const auto exact = term(family, n, Strategy::ExactBigInt);
            const auto fast = term(family, n, Strategy::ModularFast);
            ++checked;
            if (!(exact == fast)) {
                mismatches.push_back({{"n", n}, {"exact", to_json(exact)}, {"fast", to_json(fast)}});
            }
        }
        clean = clean && mismatches.empty();
        rows.push_back({{"family", family.name()}, {"checked", checked}, {"mismatches", mismatches}});
    }
    return {{"to", to}, {"k_max", opts.k_max}, {"families", rows}};
}

// Maps b-file entries onto local terms under a given offset.
struct OffsetMatch {
    Index offset = 0;
    std::size_t compared = 0;
    std::size_t skipped = 0;
    std::size_t diffs = 0;
    std::size_t matched_prefix = 0;
    std::optional<json> first_divergence;
};

OffsetMatch match_offset(const BFile& file, const FamilySpec& family, Index offset,
                         const std::map<Index, BigInt>& values)
{
    OffsetMatch m;
    m.offset = offset;
    for (const auto& e : file.entries) {
        const Index n = e.index - offset;
        const auto it = values.find(n);
        if (n < family.first_index() || it == values.end()) {
            ++m.skipped;
            continue;
        }
        ++m.compared;
        if (it->second == e.value) {
            if (!m.first_divergence) {
                ++m.matched_prefix;
            }
            continue;
        }
        ++m.diffs;
        if (!m.first_divergence) {
            m.first_divergence = json{{"index", e.index}, {"n", n}, {"expected", to_string(it->second)},
                                      {"found", to_string(e.value)}};
        }
    }
    return m;
}

}  // namespace

json to_json(const PrimesOrOneReport& r)
{
    json composites = json::array();
    for (const auto& [n, a] : r.composites) {
        composites.push_back(pair_json(n, a));
    }
    return {{"family", r.family.name()},
            {"n_from", r.n_from},
            {"n_to", r.n_to},
            {"count", r.n_to - r.n_from + 1},
            {"ones", r.ones},
            {"primes", r.primes},
            {"probable_primes", r.probable_primes},
            {"composites", composites}};
}

json to_json(const SymmetryReport& r)
{
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"n", v.n}, {"p", to_string(v.p)}, {"mirror", v.mirror},
                              {"mirror_value", to_string(v.mirror_value)}});
    }
    json ood = json::array();
    for (const auto& o : r.out_of_domain) {
        ood.push_back({{"n", o.n}, {"p", to_string(o.p)}, {"mirror", o.mirror}});
    }
    json self = json::array();
    for (const auto& [n, p] : r.self_mirrors) {
        self.push_back(pair_json(n, p, "p"));
    }
    return {{"family", r.family.name()},
            {"n_max", r.n_max},
            {"checked", r.checked},
            {"computed_on_demand", r.computed_on_demand},
            {"violations", violations},
            {"mirror_out_of_domain", ood},
            {"self_mirrors", self}};
}

json to_json(const PairReport& r)
{
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"n", v.n}, {"m", v.m}, {"value", to_string(v.value)}, {"sum_holds", v.sum_holds},
                              {"gcd_holds", v.gcd_holds}});
    }
    json many = json::array();
    for (const auto& [value, indices] : r.more_than_twice) {
        many.push_back({{"value", to_string(value)}, {"indices", indices}});
    }
    return {{"n_max", r.n_max},
            {"pairs_checked", r.pairs_checked},
            {"singletons", r.singletons},
            {"violations", violations},
            {"more_than_twice", many}};
}

json to_json(const TripleReport& r)
{
    auto triple = [](const TripleCheck& t) {
        return json{{"p", to_string(t.p)}, {"indices", t.indices}, {"predicted", t.predicted},
                    {"predicted_value", to_string(t.predicted_value)}, {"holds", t.holds}};
    };
    json mult = json::object();
    for (const auto& [k, v] : r.multiplicities) {
        mult[std::to_string(k)] = v;
    }
    json triples = json::array();
    for (const auto& t : r.triples) {
        triples.push_back(triple(t));
    }
    json violations = json::array();
    for (const auto& t : r.violations) {
        violations.push_back(triple(t));
    }
    return {{"count", r.count}, {"multiplicities", mult}, {"triples", triples}, {"violations", violations}};
}

json to_json(const CoverageReport& r)
{
    json missing = json::array();
    for (const auto& p : r.missing) {
        missing.push_back(to_string(p));
    }
    return {{"n_max", r.n_max},
            {"bound", to_string(r.bound)},
            {"candidates", r.candidates},
            {"present", r.candidates - r.missing.size()},
            {"missing", missing}};
}

json to_json(const EfficiencyReport& r)
{
    return {{"family", r.family.name()},
            {"N", r.N},
            {"ones", r.ones},
            {"prime_terms", r.prime_terms},
            {"composite_terms", r.composite_terms},
            {"distinct_primes", r.distinct_primes},
            {"max_prime", to_string(r.max_prime)},
            {"ones_share", r.ones_share()},
            {"window", r.window},
            {"new_prime_rate", r.new_prime_rate}};
}

json to_json(const CompareReport& r)
{
    return {{"N", r.N},
            {"metrics", "workbench definitions: distinct primes within the first N terms, and share of 1's"},
            {"main", to_json(r.main)},
            {"rowland", to_json(r.rowland)},
            {"distinct_ratio", r.distinct_ratio()},
            {"main_exceeds_rowland", r.main_exceeds()}};
}

json to_json(const Eq4Report& r)
{
    return {{"n", r.n},
            {"printed_alpha", to_string(r.printed_alpha)},
            {"printed_beta", to_string(r.printed_beta)},
            {"actual_alpha", to_string(r.actual_alpha)},
            {"actual_beta", to_string(r.actual_beta)},
            {"printed_holds", r.printed_holds},
            {"corrected_holds", r.corrected_holds},
            {"corrected_coefficient", to_string(r.corrected_coefficient)}};
}

json to_json(const TheoremReport& r)
{
    json forms = json::array();
    for (const auto& f : r.closed_forms) {
        forms.push_back({{"name", f.name}, {"value", f.value.str()}, {"equal", f.equal}});
    }
    return {{"scheme", to_string(r.scheme)},
            {"n", r.n},
            {"m", to_string(r.m)},
            {"cf", r.cf_value.str()},
            {"closed_forms", forms}};
}

std::pair<json, bool> run_suite(const VerifyOptions& opts)
{
    bool clean = false;
    json report;
    const auto& s = opts.suite;
    if (s == "terms") {
        report = suite_terms(opts, clean);
    } else if (s == "theorem1") {
        report = suite_theorem1(opts, clean);
    } else if (s == "theorem2") {
        report = suite_theorem2(opts, clean);
    } else if (s == "eq4") {
        report = suite_eq4(opts, clean);
    } else if (s == "symmetry") {
        const auto r = verify_symmetry(parse_family(opts.family), opts.to.value_or(2000));
        clean = r.clean();
        report = to_json(r);
    } else if (s == "pairs") {
        const auto r = verify_pair_identities(FamilySpec::main(), opts.to.value_or(2000));
        clean = r.clean();
        report = to_json(r);
    } else if (s == "triple") {
        const auto r = verify_triple_rule_a2(opts.to.value_or(500));
        clean = r.clean();
        report = to_json(r);
    } else if (s == "coverage") {
        const auto r = prime_coverage(opts.to.value_or(180), parse_bigint_arg(opts.bound, "--bound"));
        clean = r.missing.empty();
        report = to_json(r);
    } else if (s == "gcd-replacement") {
        report = suite_gcd_replacement(opts, clean);
    } else if (s == "fastpath") {
        report = suite_fastpath(opts, clean);
    } else {
        throw UsageError("unknown suite '" + s + "'");
    }
    json out = {{"suite", s}, {"clean", clean}};
    out.update(report);
    return {out, clean};
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err)
{
    try {
        const auto [report, clean] = run_suite(opts);
        out << report.dump(2) << '\n';
        return clean ? kExitClean : kExitViolations;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err)
{
    try {
        const auto family = parse_family(opts.family);
        const auto strategy = parse_strategy(opts.strategy);
        const Index from = opts.from.value_or(family.first_index());
        if (!opts.to) {
            throw UsageError("--to is required");
        }
        const Index to = *opts.to;
        if (from < family.first_index()) {
            throw UsageError("--from " + std::to_string(from) + " is below the first index " +
                             std::to_string(family.first_index()) + " of " + family.name());
        }
        if (from > to) {
            throw UsageError("empty range: --from " + std::to_string(from) + " > --to " + std::to_string(to));
        }
        if (opts.format != "csv" && opts.format != "jsonl" && opts.format != "bfile") {
            throw UsageError("unknown format '" + opts.format + "' (expected csv, jsonl or bfile)");
        }

        if (opts.format == "csv") {
            out << kCsvHeader << '\n';
        } else if (opts.format == "bfile") {
            out << "# " << family.name() << " n=" << from << ".." << to << " offset=" << opts.offset << '\n';
        }
        auto emit = [&](const TermRecord& rec) {
            if (opts.format == "csv") {
                write_csv_row(out, rec);
            } else if (opts.format == "jsonl") {
                out << to_json(rec).dump() << '\n';
            } else {
                out << rec.n + opts.offset << ' ' << to_string(rec.a) << '\n';
            }
        };

        if (opts.cache) {
            TermCache cache(*opts.cache);
            for (Index n = from; n <= to; ++n) {
                if (auto hit = cache.find(family, n)) {
                    emit(*hit);
                    continue;
                }
                const auto rec = term(family, n, strategy);
                cache.append(rec);
                emit(rec);
            }
            if (cache.rejected() > 0) {
                err << "warning: ignored " << cache.rejected() << " inconsistent cache lines\n";
            }
        } else {
            scan_each(family, from, to, emit, ScanOptions{strategy, 0});
        }
        return kExitClean;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_cf(const CfOptions& opts, std::ostream& out, std::ostream& err)
{
    try {
        const auto scheme = parse_scheme(opts.scheme);
        const BigInt m = parse_bigint_arg(opts.m, "--m");
        if (opts.n < 3) {
            throw UsageError("--n must be >= 3");
        }
        const auto report = verify_theorem(scheme, opts.n, m);
        out << "scheme " << to_string(scheme) << " n=" << opts.n << " m=" << to_string(m) << '\n';
        out << "cf " << report.cf_value.str() << '\n';
        for (const auto& form : report.closed_forms) {
            out << form.name << ' ' << form.value.str() << ' ' << (form.equal ? "equal" : "differs") << '\n';
        }
        return kExitClean;
    } catch (const ZeroDenominator& e) {
        err << "error: " << e.what() << '\n';
        return kExitViolations;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err)
{
    try {
        const auto report = compare(opts.n, opts.window);
        out << to_json(report).dump(2) << '\n';
        return kExitClean;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_oeis_check(const OeisCheckOptions& opts, std::ostream& out, std::ostream& err)
{
    try {
        const auto family = parse_family(opts.family);
        const BFile file = read_bfile(opts.path);
        constexpr Index kAutoRadius = 16;
        const bool fit = opts.offset == "auto";
        Index fixed_offset = 0;
        if (!fit) {
            fixed_offset = parse_bigint_arg(opts.offset, "--offset").get_si();
        }

        json report = {{"family", family.name()}, {"bfile", opts.path}, {"entries", file.entries.size()}};
        if (file.entries.empty()) {
            err << "warning: b-file has no entries; nothing compared\n";
            report.update({{"offset", fixed_offset}, {"offset_fitted", fit}, {"compared", 0}, {"diffs", 0},
                           {"first_divergence", nullptr}, {"clean", true}});
            out << report.dump(2) << '\n';
            return kExitClean;
        }

        const Index lo_offset = fit ? -kAutoRadius : fixed_offset;
        const Index hi_offset = fit ? kAutoRadius : fixed_offset;
        const Index n_max = file.entries.back().index - lo_offset;
        std::map<Index, BigInt> values;
        if (n_max >= family.first_index()) {
            scan_each(family, family.first_index(), n_max,
                      [&](const TermRecord& rec) { values.emplace(rec.n, rec.a); });
        }

        OffsetMatch best;
        bool have_best = false;
        for (Index offset = lo_offset; offset <= hi_offset; ++offset) {
            auto m = match_offset(file, family, offset, values);
            const auto better = [&] {
                if (!have_best) {
                    return true;
                }
                if (m.matched_prefix != best.matched_prefix) {
                    return m.matched_prefix > best.matched_prefix;
                }
                if (m.diffs != best.diffs) {
                    return m.diffs < best.diffs;
                }
                return std::abs(m.offset) < std::abs(best.offset);
            }();
            if (better) {
                best = std::move(m);
                have_best = true;
            }
        }
        report.update({{"offset", best.offset},
                       {"offset_fitted", fit},
                       {"compared", best.compared},
                       {"skipped", best.skipped},
                       {"matched_prefix", best.matched_prefix},
                       {"diffs", best.diffs},
                       {"first_divergence", best.first_divergence ? *best.first_divergence : json(nullptr)},
                       {"clean", best.diffs == 0}});
        if (best.compared == 0) {
            err << "warning: no b-file entry overlaps the family's domain\n";
        }
        out << report.dump(2) << '\n';
        return best.diffs == 0 ? kExitClean : kExitViolations;
    } catch (const BFileParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace primeseq::cli
