#pragma once

// Independent reference routes used only by tests. Nothing here calls into the
// library's implementation of the quantity being checked.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// b(-1..top) by the plain recurrence; out[i] = b(i - 1).
inline std::vector<mpz_class> b_table(long top)
{
    std::vector<mpz_class> out{0, 1};
    for (long j = 1; j <= top; ++j) {
        out.push_back(mpz_class(j + 2) * (out[out.size() - 1] - out[out.size() - 2]));
    }
    return out;
}

inline mpz_class b_at(const std::vector<mpz_class>& table, long n)
{
    return table.at(static_cast<std::size_t>(n + 1));
}

inline mpz_class sum_of_factorials(long n)
{
    mpz_class sum = 0;
    for (long k = 0; k < n; ++k) {
        mpz_class f = 1;
        for (long j = 2; j <= k; ++j) {
            f *= j;
        }
        sum += f;
    }
    return sum;
}

inline bool trial_prime(std::uint64_t v)
{
    if (v < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

/// Continued fraction 1 / (c_1 - p_1 / (c_2 - ... - p_L / tail)) over GMP
/// rationals; sets ok = false on a zero divisor.
inline mpq_class cf_value(const std::vector<std::pair<long, long>>& levels, const mpz_class& tail, bool& ok)
{
    ok = true;
    mpq_class v(tail);
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        if (v == 0) {
            ok = false;
            return 0;
        }
        v = mpq_class(it->second) - mpq_class(it->first) / v;
    }
    if (v == 0) {
        ok = false;
        return 0;
    }
    return 1 / v;
}

/// Theorem 1 levels (j+1, j) for j = 2..n-1 as (numerator, constant).
inline std::vector<std::pair<long, long>> t1_levels(long n)
{
    std::vector<std::pair<long, long>> out;
    for (long j = 2; j <= n - 1; ++j) {
        out.emplace_back(j + 1, j);
    }
    return out;
}

inline std::vector<std::pair<long, long>> t2_levels(long n)
{
    std::vector<std::pair<long, long>> out;
    for (long j = 1; j <= n - 1; ++j) {
        out.emplace_back(j, j);
    }
    return out;
}

/// Fixes the two trailing symbols and evaluates the proof relations forward
/// (deepest first) to get a_1 and a_2.
///   T1: a_j = (j+1) a_{j+1} - (j+2) a_{j+2}, given a_{n-1}, a_n
///   T2: a_j = j (a_{j+1} - a_{j+2}),         given a_n, a_{n+1}
inline std::pair<mpz_class, mpz_class> forward_a1_a2(bool t1, long n, const mpz_class& first,
                                                      const mpz_class& second)
{
    const long hi = t1 ? n : n + 1;
    std::vector<mpz_class> a(static_cast<std::size_t>(hi + 2));
    a[static_cast<std::size_t>(hi - 1)] = first;
    a[static_cast<std::size_t>(hi)] = second;
    for (long j = hi - 2; j >= 1; --j) {
        const auto u = static_cast<std::size_t>(j);
        if (t1) {
            a[u] = mpz_class(j + 1) * a[u + 1] - mpz_class(j + 2) * a[u + 2];
        } else {
            a[u] = mpz_class(j) * (a[u + 1] - a[u + 2]);
        }
    }
    return {a[1], a[2]};
}

}  // namespace oracle
