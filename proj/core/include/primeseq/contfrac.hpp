#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primeseq/bigint.hpp"

namespace primeseq {

/// A vanished denominator. `level` says where: 0 is the outer reciprocal of
/// a continued fraction, j >= 1 the j-th level's division, -1 a closed form.
class ZeroDenominator : public Error {
public:
    ZeroDenominator(std::string what, int level = -1);
    int level() const { return level_; }

private:
    int level_;
};

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num);
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return sgn(num_) == 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational reciprocal() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// "p/q", or "p" for integers.
    std::string str() const;

private:
    BigInt num_;
    BigInt den_;
};

struct CFLevel {
    BigInt partial_numerator;
    BigInt level_constant;
};

/// 1 / (c_1 - p_1 / (c_2 - p_2 / ( ... (c_L - p_L / tail)))).
struct CFSpec {
    std::vector<CFLevel> levels;
    BigInt tail;
};

enum class Scheme { T1, T2 };

const char* to_string(Scheme s);

/// Levels (3,2), (4,3), ..., (n, n-1); tail m.
CFSpec cf_theorem1_spec(Index n, const BigInt& m);

/// Levels (1,1), (2,2), ..., (n-1, n-1); tail m.
CFSpec cf_theorem2_spec(Index n, const BigInt& m);

/// Innermost-first evaluation. Throws ZeroDenominator naming the level.
Rational eval_cf(const CFSpec& spec);

/// Same value through the 2x2 convergent product; used to cross-check eval_cf.
Rational eval_cf_matrix(const CFSpec& spec);

/// (m b(n-3) - n b(n-4)) / (n(m-n+2) - m)
Rational theorem1_closed_form(Index n, const BigInt& m);

/// The printed right side: 2(m b(n-3) - n b(n-4)) / (n(m-n+1)).
Rational theorem2_closed_form(Index n, const BigInt& m);

/// (m !(n-1) - 2 b(n-3)) / (m - n + 1), which is what the displayed
/// continued fraction actually evaluates to.
Rational theorem2_derived_form(Index n, const BigInt& m);

/// alpha * a_u + beta * a_v with v = u + 1.
struct LinearForm {
    BigInt alpha;
    BigInt beta;
    Index u = 0;
    Index v = 1;

    bool operator==(const LinearForm&) const = default;
};

struct EliminationResult {
    LinearForm a1;
    LinearForm a2;
};

/// Backward substitution through
///   T1: a_j = (j+1) a_{j+1} - (j+2) a_{j+2}, ending on (a_{n-1}, a_n)
///   T2: a_j = j (a_{j+1} - a_{j+2}),         ending on (a_n, a_{n+1})
EliminationResult elimination_chain(Scheme scheme, Index n);

/// a_2 / a_1 from the chain once the two trailing symbols are fixed
/// (a_{n-1} = m a_n for T1, a_n = m a_{n+1} for T2).
Rational elimination_ratio(Scheme scheme, Index n, const BigInt& m);

struct Eq4Report {
    Index n = 0;
    BigInt printed_alpha;        // n - 1
    BigInt printed_beta;         // -(n^2 - 2)
    BigInt actual_alpha;
    BigInt actual_beta;
    bool printed_holds = false;
    bool corrected_holds = false;  // actual == (n - 1, -(n^2 - 2n))
    BigInt corrected_coefficient;  // -actual_beta
};

Eq4Report verify_eq4(Index n);

struct ClosedFormCheck {
    std::string name;
    Rational value;
    bool equal = false;
};

struct TheoremReport {
    Scheme scheme = Scheme::T1;
    Index n = 0;
    BigInt m;
    Rational cf_value;
    std::vector<ClosedFormCheck> closed_forms;

    const ClosedFormCheck* find(const std::string& name) const;
};

/// T1 forms: "eq1", "elimination". T2 forms: "printed", "derived",
/// "elimination". A zero denominator anywhere is rethrown with the form's name.
TheoremReport verify_theorem(Scheme scheme, Index n, const BigInt& m);

struct DepthProbe {
    int shift = 0;         // continued fraction evaluated with n + shift levels
    bool inverted = false; // compare against the reciprocal of the value
    std::size_t checked = 0;
    std::size_t matches = 0;
    bool holds() const { return checked > 0 && matches == checked; }
};

/// Tests whether the printed Theorem 2 closed form agrees with the
/// continued fraction under any nearby depth reading.
std::vector<DepthProbe> theorem2_depth_probe(Index n_min, Index n_max, const std::vector<BigInt>& ms,
                                             int max_shift = 3);

}  // namespace primeseq
