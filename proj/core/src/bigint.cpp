#include "primeseq/bigint.hpp"


namespace primeseq {

BigInt from_index(Index n)
{
    BigInt v;
    mpz_set_si(v.get_mpz_t(), static_cast<long>(n));
    return v;
}

BigInt parse_bigint(std::string_view text)
{
    if (text.empty()) {
        throw Error("empty integer literal");
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw Error("malformed integer literal: " + std::string(text));
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw Error("malformed integer literal: " + std::string(text));
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

std::string to_string(const BigInt& v)
{
    return v.get_str(10);
}

bool fits_u64(const BigInt& v)
{
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& v)
{
    if (!fits_u64(v)) {
        throw Error("value does not fit in 64 bits: " + to_string(v));
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

BigInt from_u64(std::uint64_t v)
{
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

BigInt mod_floor(const BigInt& v, const BigInt& m)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

IndexBelowDomain::IndexBelowDomain(Index n, Index first)
    : Error("index " + std::to_string(n) + " below domain (first index " + std::to_string(first) + ")"),
      index_(n),
      first_(first)
{
}

}  // namespace primeseq
