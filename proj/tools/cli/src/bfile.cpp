#include "primeseq/cli/bfile.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace primeseq::cli {

BFileParseError::BFileParseError(std::size_t line, const std::string& why)
    : Error("b-file line " + std::to_string(line) + ": " + why), line_(line)
{
}

namespace {

Index parse_index(std::string_view text, std::size_t line)
{
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw BFileParseError(line, "bad index '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

BFile parse_bfile(std::istream& in)
{
    BFile file;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            file.comments.push_back(line);
            continue;
        }
        const auto space = line.find(' ');
        if (space == std::string::npos) {
            throw BFileParseError(lineno, "expected '<index> <value>', got '" + line + "'");
        }
        const std::string_view view(line);
        const auto value_text = view.substr(space + 1);
        if (value_text.find(' ') != std::string_view::npos) {
            throw BFileParseError(lineno, "more than two fields in '" + line + "'");
        }
        BFileEntry entry;
        entry.index = parse_index(view.substr(0, space), lineno);
        try {
            entry.value = parse_bigint(value_text);
        } catch (const Error&) {
            throw BFileParseError(lineno, "bad value '" + std::string(value_text) + "'");
        }
        if (!file.entries.empty() && entry.index <= file.entries.back().index) {
            throw BFileParseError(lineno, "index " + std::to_string(entry.index) + " is not increasing");
        }
        file.entries.push_back(std::move(entry));
    }
    return file;
}

BFile read_bfile(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open b-file '" + path + "'");
    }
    return parse_bfile(in);
}

void write_bfile(std::ostream& out, const BFile& file)
{
    for (const auto& c : file.comments) {
        out << c << '\n';
    }
    for (const auto& e : file.entries) {
        out << e.index << ' ' << to_string(e.value) << '\n';
    }
}

}  // namespace primeseq::cli
