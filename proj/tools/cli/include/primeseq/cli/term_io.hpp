#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "primeseq/families.hpp"

namespace primeseq::cli {

inline constexpr const char* kCsvHeader = "n,x,d,a,class";

void write_csv_row(std::ostream& out, const TermRecord& rec);

/// BigInt fields are emitted as decimal strings.
nlohmann::ordered_json to_json(const TermRecord& rec);
TermRecord term_from_json(const nlohmann::ordered_json& j);

TermClass parse_term_class(const std::string& text);

/// Structural checks that need no b-recurrence work: the numerator matches
/// the family, d divides x, and a is the right cofactor.
bool record_consistent(const TermRecord& rec);

/// Append-only JSONL store of TermRecords keyed by (family, n). Lines that
/// fail to parse or fail record_consistent are ignored on load.
class TermCache {
public:
    explicit TermCache(std::filesystem::path path);

    std::optional<TermRecord> find(const FamilySpec& family, Index n) const;
    void append(const TermRecord& rec);

    std::size_t size() const { return records_.size(); }
    std::size_t rejected() const { return rejected_; }

private:
    std::filesystem::path path_;
    std::map<std::pair<std::string, Index>, TermRecord> records_;
    std::size_t rejected_ = 0;
};

}  // namespace primeseq::cli
