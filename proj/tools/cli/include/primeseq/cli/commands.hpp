#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "primeseq/analytics.hpp"
#include "primeseq/conjectures.hpp"
#include "primeseq/contfrac.hpp"

namespace primeseq::cli {

// Exit-code contract shared by every command.
inline constexpr int kExitClean = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolations = 2;

struct GenOptions {
    std::string family = "main";
    std::optional<Index> from;  // defaults to the family's first index
    std::optional<Index> to;
    std::string format = "csv";  // csv | jsonl | bfile
    Index offset = 0;            // bfile index = n + offset
    std::string strategy = "fast";
    std::optional<std::string> cache;
};

struct VerifyOptions {
    std::string suite;
    std::string family = "main";
    std::optional<Index> to;      // suite-specific bound; see README
    std::optional<Index> n_max;
    int samples = 50;
    std::uint64_t seed = 20240601;
    Index m_min = -20;
    Index m_max = 20;
    Index eq5_n_max = 200;
    Index lf_n_max = 1000;
    int k_max = 5;
    std::string bound = "131";
};

struct CfOptions {
    std::string scheme = "t1";
    Index n = 3;
    std::string m = "1";
};

struct CompareOptions {
    Index n = 25;
    Index window = 100;
};

struct OeisCheckOptions {
    std::string path;
    std::string family = "main";
    std::string offset = "0";  // integer or "auto"
};

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_cf(const CfOptions& opts, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);
int cmd_oeis_check(const OeisCheckOptions& opts, std::ostream& out, std::ostream& err);

// JSON views of the core reports.
nlohmann::ordered_json to_json(const PrimesOrOneReport& r);
nlohmann::ordered_json to_json(const SymmetryReport& r);
nlohmann::ordered_json to_json(const PairReport& r);
nlohmann::ordered_json to_json(const TripleReport& r);
nlohmann::ordered_json to_json(const CoverageReport& r);
nlohmann::ordered_json to_json(const EfficiencyReport& r);
nlohmann::ordered_json to_json(const CompareReport& r);
nlohmann::ordered_json to_json(const Eq4Report& r);
nlohmann::ordered_json to_json(const TheoremReport& r);

/// Runs a verification suite and returns (report, clean).
std::pair<nlohmann::ordered_json, bool> run_suite(const VerifyOptions& opts);

}  // namespace primeseq::cli
