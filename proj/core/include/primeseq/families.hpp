#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "primeseq/bigint.hpp"

namespace primeseq {

enum class FamilyKind { Main, Quadratic, Linear, Rowland };

/// Which sequence a term belongs to.
///
///   Main          x = n^2 - n - 1,          y = b(n-3) + n b(n-4)
///   Quadratic(k)  x = n^2 + (k-2)n - k,     y = k b(n-3) + n b(n-4)
///   Linear(k)     x = (k+1)n - k,           y = b(n-2) + k b(n-3)
///   Rowland       x = n + 1,                y = r(n)
///
/// The gcd-filter families emit a = x / gcd(x, y) from n = 3. Rowland emits
/// the difference r(n+1) - r(n) = gcd(n+1, r(n)) from n = 1.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Main;
    int k = 1;

    static FamilySpec main() { return {FamilyKind::Main, 1}; }
    static FamilySpec quadratic(int k);
    static FamilySpec linear(int k);
    static FamilySpec rowland() { return {FamilyKind::Rowland, 0}; }

    /// Accepts main | quad:<k> | linear:<k> | rowland.
    static FamilySpec parse(std::string_view text);

    Index first_index() const { return kind == FamilyKind::Rowland ? 1 : 3; }
    bool is_gcd_filter() const { return kind != FamilyKind::Rowland; }
    std::string name() const;

    bool operator==(const FamilySpec&) const = default;
};

enum class TermClass { One, Prime, Composite };

const char* to_string(TermClass c);

struct TermRecord {
    FamilySpec family;
    Index n = 0;
    BigInt x;        // numerator
    BigInt y_mod_x;  // gcd partner reduced mod x
    BigInt d;        // gcd(x, y)
    BigInt a;        // x / d; for Rowland the difference d itself
    TermClass cls = TermClass::One;

    bool operator==(const TermRecord&) const = default;
};

enum class Strategy { ExactBigInt, ModularFast };

BigInt numerator(const FamilySpec& family, Index n);

/// The gcd partner y at full precision.
BigInt gcd_partner_exact(const FamilySpec& family, Index n);

/// y mod x with the b-recurrence run entirely in residues mod x.
BigInt gcd_partner_residue(const FamilySpec& family, Index n, const BigInt& x);

TermRecord term(const FamilySpec& family, Index n, Strategy strategy = Strategy::ModularFast);

/// gcd(x, (n-1)!) from a running product reduced mod x.
BigInt gcd_via_factorial(Index n, const BigInt& x);

struct ScanOptions {
    Strategy strategy = Strategy::ModularFast;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Calls sink for every n in [n_from, n_to] in ascending order. Terms may be
/// computed concurrently; emission is always ordered.
void scan_each(const FamilySpec& family, Index n_from, Index n_to,
               const std::function<void(const TermRecord&)>& sink, ScanOptions options = {});

std::vector<TermRecord> scan(const FamilySpec& family, Index n_from, Index n_to, ScanOptions options = {});

}  // namespace primeseq
