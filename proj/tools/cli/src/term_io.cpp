#include "primeseq/cli/term_io.hpp"

#include <fstream>
#include <ostream>

#include "primeseq/primality.hpp"

namespace primeseq::cli {

void write_csv_row(std::ostream& out, const TermRecord& rec)
{
    out << rec.n << ',' << to_string(rec.x) << ',' << to_string(rec.d) << ',' << to_string(rec.a) << ','
        << to_string(rec.cls) << '\n';
}

nlohmann::ordered_json to_json(const TermRecord& rec)
{
    return {
        {"family", rec.family.name()},
        {"n", rec.n},
        {"x", to_string(rec.x)},
        {"y_mod_x", to_string(rec.y_mod_x)},
        {"d", to_string(rec.d)},
        {"a", to_string(rec.a)},
        {"class", to_string(rec.cls)},
    };
}

TermClass parse_term_class(const std::string& text)
{
    if (text == "One") {
        return TermClass::One;
    }
    if (text == "Prime") {
        return TermClass::Prime;
    }
    if (text == "Composite") {
        return TermClass::Composite;
    }
    throw Error("unknown term class '" + text + "'");
}

TermRecord term_from_json(const nlohmann::ordered_json& j)
{
    TermRecord rec;
    rec.family = FamilySpec::parse(j.at("family").get<std::string>());
    rec.n = j.at("n").get<Index>();
    rec.x = parse_bigint(j.at("x").get<std::string>());
    rec.y_mod_x = parse_bigint(j.at("y_mod_x").get<std::string>());
    rec.d = parse_bigint(j.at("d").get<std::string>());
    rec.a = parse_bigint(j.at("a").get<std::string>());
    rec.cls = parse_term_class(j.at("class").get<std::string>());
    return rec;
}

bool record_consistent(const TermRecord& rec)
{
    if (rec.n < rec.family.first_index()) {
        return false;
    }
    if (rec.x != numerator(rec.family, rec.n) || sgn(rec.d) < 1 || sgn(rec.y_mod_x) < 0 || rec.y_mod_x >= rec.x) {
        return false;
    }
    if (!mpz_divisible_p(rec.x.get_mpz_t(), rec.d.get_mpz_t())) {
        return false;
    }
    if (gcd(rec.x, rec.y_mod_x) != rec.d) {
        return false;
    }
    const BigInt expected_a = rec.family.is_gcd_filter() ? BigInt(rec.x / rec.d) : rec.d;
    if (rec.a != expected_a) {
        return false;
    }
    const auto verdict = is_prime(rec.a).verdict;
    switch (rec.cls) {
    case TermClass::One: return verdict == Verdict::One;
    case TermClass::Prime: return verdict == Verdict::Prime || verdict == Verdict::ProbablePrime;
    case TermClass::Composite: return verdict == Verdict::Composite;
    }
    return false;
}

TermCache::TermCache(std::filesystem::path path) : path_(std::move(path))
{
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        try {
            auto rec = term_from_json(nlohmann::ordered_json::parse(line));
            if (!record_consistent(rec)) {
                ++rejected_;
                continue;
            }
            auto key = std::make_pair(rec.family.name(), rec.n);
            records_.insert_or_assign(std::move(key), std::move(rec));
        } catch (const std::exception&) {
            ++rejected_;
        }
    }
}

std::optional<TermRecord> TermCache::find(const FamilySpec& family, Index n) const
{
    const auto it = records_.find({family.name(), n});
    if (it == records_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void TermCache::append(const TermRecord& rec)
{
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        throw Error("cannot append to term cache '" + path_.string() + "'");
    }
    out << to_json(rec).dump() << '\n';
    records_.insert_or_assign({rec.family.name(), rec.n}, rec);
}

}  // namespace primeseq::cli
