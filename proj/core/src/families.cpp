#include "primeseq/families.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <thread>

#include "primeseq/primality.hpp"
#include "primeseq/recurrences.hpp"

namespace primeseq {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;

void require_domain(const FamilySpec& family, Index n)
{
    if (n < family.first_index()) {
        throw IndexBelowDomain(n, family.first_index());
    }
}

// The gcd partner of every gcd-filter family is hi * b(top) + lo * b(top - 1).
struct PartnerShape {
    Index top;
    Index hi;
    Index lo;
};

PartnerShape partner_shape(const FamilySpec& family, Index n)
{
    switch (family.kind) {
    case FamilyKind::Main: return {n - 3, 1, n};
    case FamilyKind::Quadratic: return {n - 3, family.k, n};
    case FamilyKind::Linear: return {n - 2, 1, family.k};
    case FamilyKind::Rowland: break;
    }
    throw Error("rowland has no b-recurrence partner");
}

u64 mul_plain(u64 a, u64 b, u64 m)
{
    return a * b % m;
}

// Valid for m < 2^62 with an x87 long double (64-bit mantissa).
u64 mul_long_double(u64 a, u64 b, u64 m)
{
    const auto q = static_cast<u64>(static_cast<long double>(a) * b / m);
    auto r = static_cast<i64>(a * b - q * m);
    const auto sm = static_cast<i64>(m);
    while (r < 0) {
        r += sm;
    }
    while (r >= sm) {
        r -= sm;
    }
    return static_cast<u64>(r);
}

u64 mul_wide(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

template <class MulMod>
u64 partner_residue_u64(const PartnerShape& shape, u64 x, MulMod mul)
{
    u64 prev2 = 0;      // b(j - 2)
    u64 prev = 1 % x;   // b(j - 1)
    for (Index j = 1; j <= shape.top; ++j) {
        const u64 diff = prev >= prev2 ? prev - prev2 : prev + x - prev2;
        const u64 next = mul(static_cast<u64>(j + 2) % x, diff, x);
        prev2 = prev;
        prev = next;
    }
    // prev = b(top), prev2 = b(top - 1)
    const u64 hi = mul(static_cast<u64>(shape.hi) % x, prev, x);
    const u64 lo = mul(static_cast<u64>(shape.lo) % x, prev2, x);
    const u64 sum = hi + lo;  // both < x < 2^63
    return sum >= x ? sum - x : sum;
}

BigInt partner_residue_big(const PartnerShape& shape, const BigInt& x)
{
    BigInt prev2 = 0;
    BigInt prev = mod_floor(BigInt(1), x);
    BigInt diff;
    for (Index j = 1; j <= shape.top; ++j) {
        diff = prev - prev2;
        diff *= from_index(j + 2);
        prev2 = std::move(prev);
        prev = mod_floor(diff, x);
    }
    return mod_floor(from_index(shape.hi) * prev + from_index(shape.lo) * prev2, x);
}

TermClass classify(const BigInt& a)
{
    const auto verdict = is_prime(a);
    switch (verdict.verdict) {
    case Verdict::One: return TermClass::One;
    case Verdict::Prime:
    case Verdict::ProbablePrime: return TermClass::Prime;
    case Verdict::Composite: break;
    }
    return TermClass::Composite;
}

TermRecord rowland_record(const FamilySpec& family, Index n, Strategy strategy)
{
    TermRecord rec;
    rec.family = family;
    rec.n = n;
    rec.x = from_index(n + 1);
    const BigInt& r = rowland_cache().term(n);
    if (strategy == Strategy::ExactBigInt) {
        rec.d = gcd(rec.x, r);
        rec.y_mod_x = mod_floor(r, rec.x);
    } else {
        rec.y_mod_x = mod_floor(r, rec.x);
        rec.d = gcd(rec.x, rec.y_mod_x);
    }
    rec.a = rec.d;
    rec.cls = classify(rec.a);
    return rec;
}

}  // namespace

FamilySpec FamilySpec::quadratic(int k)
{
    if (k < 1) {
        throw Error("family parameter k must be >= 1, got " + std::to_string(k));
    }
    return {FamilyKind::Quadratic, k};
}

FamilySpec FamilySpec::linear(int k)
{
    if (k < 1) {
        throw Error("family parameter k must be >= 1, got " + std::to_string(k));
    }
    return {FamilyKind::Linear, k};
}

FamilySpec FamilySpec::parse(std::string_view text)
{
    if (text == "main") {
        return main();
    }
    if (text == "rowland") {
        return rowland();
    }
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        const auto head = text.substr(0, colon);
        const auto tail = text.substr(colon + 1);
        int k = 0;
        const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
        if (ec == std::errc() && ptr == tail.data() + tail.size() && !tail.empty()) {
            if (head == "quad") {
                return quadratic(k);
            }
            if (head == "linear") {
                return linear(k);
            }
        }
    }
    throw Error("unknown family '" + std::string(text) + "' (expected main, quad:<k>, linear:<k> or rowland)");
}

std::string FamilySpec::name() const
{
    switch (kind) {
    case FamilyKind::Main: return "main";
    case FamilyKind::Quadratic: return "quad:" + std::to_string(k);
    case FamilyKind::Linear: return "linear:" + std::to_string(k);
    case FamilyKind::Rowland: return "rowland";
    }
    return "?";
}

const char* to_string(TermClass c)
{
    switch (c) {
    case TermClass::One: return "One";
    case TermClass::Prime: return "Prime";
    case TermClass::Composite: return "Composite";
    }
    return "?";
}

BigInt numerator(const FamilySpec& family, Index n)
{
    require_domain(family, n);
    const BigInt nn = from_index(n);
    const BigInt k = from_index(family.k);
    switch (family.kind) {
    case FamilyKind::Main: return nn * nn - nn - 1;
    case FamilyKind::Quadratic: return nn * nn + (k - 2) * nn - k;
    case FamilyKind::Linear: return (k + 1) * nn - k;
    case FamilyKind::Rowland: return nn + 1;
    }
    return {};
}

BigInt gcd_partner_exact(const FamilySpec& family, Index n)
{
    require_domain(family, n);
    if (family.kind == FamilyKind::Rowland) {
        return rowland_cache().term(n);
    }
    const auto shape = partner_shape(family, n);
    return from_index(shape.hi) * b(shape.top) + from_index(shape.lo) * b(shape.top - 1);
}

BigInt gcd_partner_residue(const FamilySpec& family, Index n, const BigInt& x)
{
    require_domain(family, n);
    if (sgn(x) < 1) {
        throw NonPositive("modulus must be >= 1");
    }
    if (family.kind == FamilyKind::Rowland) {
        return mod_floor(rowland_cache().term(n), x);
    }
    const auto shape = partner_shape(family, n);
    if (fits_u64(x)) {
        const u64 m = to_u64(x);
        const auto bound = static_cast<u64>(std::max({shape.top + 2, shape.hi, shape.lo}));
        if (m <= UINT64_MAX / bound && m <= UINT64_MAX / m) {
            return from_u64(partner_residue_u64(shape, m, mul_plain));
        }
        if (m < (u64{1} << 62)) {
            return from_u64(partner_residue_u64(shape, m, mul_long_double));
        }
        if (m < (u64{1} << 63)) {
            return from_u64(partner_residue_u64(shape, m, mul_wide));
        }
    }
    return partner_residue_big(shape, x);
}

TermRecord term(const FamilySpec& family, Index n, Strategy strategy)
{
    require_domain(family, n);
    if (family.kind == FamilyKind::Rowland) {
        return rowland_record(family, n, strategy);
    }
    TermRecord rec;
    rec.family = family;
    rec.n = n;
    rec.x = numerator(family, n);
    if (strategy == Strategy::ExactBigInt) {
        const BigInt y = gcd_partner_exact(family, n);
        rec.y_mod_x = mod_floor(y, rec.x);
        rec.d = gcd(rec.x, y);
    } else {
        rec.y_mod_x = gcd_partner_residue(family, n, rec.x);
        rec.d = gcd(rec.x, rec.y_mod_x);
    }
    rec.a = rec.x / rec.d;
    rec.cls = classify(rec.a);
    return rec;
}

BigInt gcd_via_factorial(Index n, const BigInt& x)
{
    if (n < 3) {
        throw IndexBelowDomain(n, 3);
    }
    if (sgn(x) < 1) {
        throw NonPositive("modulus must be >= 1");
    }
    if (fits_u64(x) && to_u64(x) < (u64{1} << 62)) {
        const u64 m = to_u64(x);
        u64 prod = 1 % m;
        for (Index j = 2; j < n; ++j) {
            prod = mul_wide(prod, static_cast<u64>(j) % m, m);
        }
        return gcd(x, from_u64(prod));
    }
    BigInt prod = mod_floor(BigInt(1), x);
    for (Index j = 2; j < n; ++j) {
        prod = mod_floor(prod * from_index(j), x);
    }
    return gcd(x, prod);
}

void scan_each(const FamilySpec& family, Index n_from, Index n_to,
               const std::function<void(const TermRecord&)>& sink, ScanOptions options)
{
    require_domain(family, n_from);
    if (n_to < n_from) {
        throw Error("empty scan range [" + std::to_string(n_from) + ", " + std::to_string(n_to) + "]");
    }
    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(threads, 1u);

    if (threads == 1) {
        for (Index n = n_from; n <= n_to; ++n) {
            sink(term(family, n, options.strategy));
        }
        return;
    }

    // Blocks are filled concurrently (strided by worker) and flushed in order.
    constexpr Index block = 512;
    std::vector<TermRecord> buffer;
    for (Index start = n_from; start <= n_to; start += block) {
        const Index stop = std::min(n_to, start + block - 1);
        buffer.assign(static_cast<std::size_t>(stop - start + 1), TermRecord{});
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (Index n = start + w; n <= stop; n += threads) {
                    buffer[static_cast<std::size_t>(n - start)] = term(family, n, options.strategy);
                }
            });
        }
        pool.clear();
        for (const auto& rec : buffer) {
            sink(rec);
        }
    }
}

std::vector<TermRecord> scan(const FamilySpec& family, Index n_from, Index n_to, ScanOptions options)
{
    std::vector<TermRecord> out;
    if (n_to >= n_from) {
        out.reserve(static_cast<std::size_t>(n_to - n_from + 1));
    }
    scan_each(family, n_from, n_to, [&](const TermRecord& rec) { out.push_back(rec); }, options);
    return out;
}

}  // namespace primeseq
