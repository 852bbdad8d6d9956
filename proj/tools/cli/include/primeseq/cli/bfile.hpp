#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "primeseq/bigint.hpp"

namespace primeseq::cli {

struct BFileEntry {
    Index index = 0;
    BigInt value;
};

/// OEIS b-file: optional '#' comment lines, then "<index> <value>" pairs with
/// strictly increasing indices.
struct BFile {
    std::vector<std::string> comments;
    std::vector<BFileEntry> entries;
};

class BFileParseError : public Error {
public:
    BFileParseError(std::size_t line, const std::string& why);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

BFile parse_bfile(std::istream& in);
BFile read_bfile(const std::string& path);
void write_bfile(std::ostream& out, const BFile& file);

}  // namespace primeseq::cli
