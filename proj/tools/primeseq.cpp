#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "primeseq/cli/commands.hpp"

int main(int argc, char** argv)
{
    using namespace primeseq::cli;

    CLI::App app{"primeseq: gcd-filtered prime-generating sequences and their identities"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate terms as CSV, JSONL or an OEIS b-file");
    gen_cmd->add_option("--family", gen.family, "main | quad:<k> | linear:<k> | rowland")->capture_default_str();
    gen_cmd->add_option("--from", gen.from, "First index (default: the family's first index)");
    gen_cmd->add_option("--to", gen.to, "Last index")->required();
    gen_cmd->add_option("--format", gen.format, "csv | jsonl | bfile")->capture_default_str();
    gen_cmd->add_option("--offset", gen.offset, "b-file index = n + offset")->capture_default_str();
    gen_cmd->add_option("--strategy", gen.strategy, "fast | exact")->capture_default_str();
    gen_cmd->add_option("--cache", gen.cache, "Append-only JSONL term cache");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite; JSON report on stdout");
    verify_cmd
        ->add_option("--suite", verify.suite,
                     "terms | theorem1 | theorem2 | eq4 | symmetry | pairs | triple | coverage | "
                     "gcd-replacement | fastpath")
        ->required();
    verify_cmd->add_option("--family", verify.family, "Family for terms/symmetry")->capture_default_str();
    verify_cmd->add_option("--to", verify.to, "Suite bound (term count or last index, see README)");
    verify_cmd->add_option("--n-max", verify.n_max, "Largest n for theorem1/theorem2/eq4");
    verify_cmd->add_option("--samples", verify.samples, "Random m per n (theorem1)")->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "RNG seed (theorem1)")->capture_default_str();
    verify_cmd->add_option("--m-min", verify.m_min, "Smallest m (theorem2)")->capture_default_str();
    verify_cmd->add_option("--m-max", verify.m_max, "Largest m (theorem2)")->capture_default_str();
    verify_cmd->add_option("--eq5-n-max", verify.eq5_n_max, "Largest n for the a_2 coefficient check")
        ->capture_default_str();
    verify_cmd->add_option("--lf-n-max", verify.lf_n_max, "Largest n for the left-factorial identity")
        ->capture_default_str();
    verify_cmd->add_option("--k-max", verify.k_max, "Largest k (fastpath)")->capture_default_str();
    verify_cmd->add_option("--bound", verify.bound, "Prime bound (coverage)")->capture_default_str();

    CfOptions cf;
    auto* cf_cmd = app.add_subcommand("cf", "Evaluate a continued fraction and its closed forms");
    cf_cmd->add_option("--scheme", cf.scheme, "t1 | t2")->capture_default_str();
    cf_cmd->add_option("--n", cf.n, "Depth parameter n >= 3")->required();
    cf_cmd->add_option("--m", cf.m, "Tail m (any integer)")->required();

    CompareOptions cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "Main sequence vs Rowland differences");
    cmp_cmd->add_option("--n", cmp.n, "Number of terms")->capture_default_str();
    cmp_cmd->add_option("--window", cmp.window, "Window for new-prime counts")->capture_default_str();

    OeisCheckOptions oeis;
    auto* oeis_cmd = app.add_subcommand("oeis-check", "Compare local terms against an OEIS b-file");
    oeis_cmd->add_option("--bfile", oeis.path, "Path to the b-file")->required();
    oeis_cmd->add_option("--family", oeis.family, "Family to compare against")->capture_default_str();
    oeis_cmd->add_option("--offset", oeis.offset, "b-file index = n + offset, or 'auto'")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*gen_cmd) {
        return cmd_gen(gen, std::cout, std::cerr);
    }
    if (*verify_cmd) {
        return cmd_verify(verify, std::cout, std::cerr);
    }
    if (*cf_cmd) {
        return cmd_cf(cf, std::cout, std::cerr);
    }
    if (*cmp_cmd) {
        return cmd_compare(cmp, std::cout, std::cerr);
    }
    if (*oeis_cmd) {
        return cmd_oeis_check(oeis, std::cout, std::cerr);
    }
    return kExitUsage;
}
