#include "primeseq/contfrac.hpp"

#include "primeseq/recurrences.hpp"

namespace primeseq {

ZeroDenominator::ZeroDenominator(std::string what, int level)
    : Error(std::move(what)), level_(level)
{
}

Rational::Rational(BigInt num) : num_(std::move(num)), den_(1) {}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (sgn(den_) == 0) {
        throw ZeroDenominator("rational with zero denominator");
    }
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const BigInt g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& o) const
{
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

Rational Rational::operator-(const Rational& o) const
{
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

Rational Rational::operator*(const Rational& o) const
{
    return {num_ * o.num_, den_ * o.den_};
}

Rational Rational::operator/(const Rational& o) const
{
    if (o.is_zero()) {
        throw ZeroDenominator("division by zero rational");
    }
    return {num_ * o.den_, den_ * o.num_};
}

Rational Rational::reciprocal() const
{
    if (is_zero()) {
        throw ZeroDenominator("reciprocal of zero");
    }
    return {den_, num_};
}

std::string Rational::str() const
{
    if (den_ == 1) {
        return to_string(num_);
    }
    return to_string(num_) + "/" + to_string(den_);
}

const char* to_string(Scheme s)
{
    return s == Scheme::T1 ? "t1" : "t2";
}

namespace {

void require_n(Index n)
{
    if (n < 3) {
        throw IndexBelowDomain(n, 3);
    }
}

// Theorem 2 layout for any depth >= 1; the probe also needs shallow depths.
CFSpec theorem2_levels(Index count, const BigInt& m)
{
    CFSpec spec;
    for (Index j = 1; j <= count; ++j) {
        spec.levels.push_back({from_index(j), from_index(j)});
    }
    spec.tail = m;
    return spec;
}

}  // namespace

CFSpec cf_theorem1_spec(Index n, const BigInt& m)
{
    require_n(n);
    CFSpec spec;
    for (Index j = 3; j <= n; ++j) {
        spec.levels.push_back({from_index(j), from_index(j - 1)});
    }
    spec.tail = m;
    return spec;
}

CFSpec cf_theorem2_spec(Index n, const BigInt& m)
{
    require_n(n);
    return theorem2_levels(n - 1, m);
}

Rational eval_cf(const CFSpec& spec)
{
    if (spec.levels.empty()) {
        throw Error("continued fraction needs at least one level");
    }
    const int depth = static_cast<int>(spec.levels.size());
    Rational value(spec.tail);
    for (int j = depth; j >= 1; --j) {
        if (value.is_zero()) {
            throw ZeroDenominator("zero denominator at level " + std::to_string(j), j);
        }
        const auto& level = spec.levels[static_cast<std::size_t>(j - 1)];
        value = Rational(level.level_constant) - Rational(level.partial_numerator) / value;
    }
    if (value.is_zero()) {
        throw ZeroDenominator("zero denominator at level 0", 0);
    }
    return value.reciprocal();
}

Rational eval_cf_matrix(const CFSpec& spec)
{
    if (spec.levels.empty()) {
        throw Error("continued fraction needs at least one level");
    }
    // Accumulate M = R * M_1 * ... * M_L with M_j = [[c_j, -p_j], [1, 0]] and
    // R = [[0, 1], [1, 0]], then apply M to (tail, 1).
    BigInt m00 = 0, m01 = 1, m10 = 1, m11 = 0;
    for (const auto& level : spec.levels) {
        const BigInt n00 = m00 * level.level_constant + m01;
        const BigInt n01 = -m00 * level.partial_numerator;
        const BigInt n10 = m10 * level.level_constant + m11;
        const BigInt n11 = -m10 * level.partial_numerator;
        m00 = n00;
        m01 = n01;
        m10 = n10;
        m11 = n11;
    }
    const BigInt p = m00 * spec.tail + m01;
    const BigInt q = m10 * spec.tail + m11;
    if (sgn(q) == 0) {
        throw ZeroDenominator("convergent product has zero denominator", 0);
    }
    return {p, q};
}

Rational theorem1_closed_form(Index n, const BigInt& m)
{
    require_n(n);
    const BigInt nn = from_index(n);
    const BigInt den = nn * (m - nn + 2) - m;
    if (sgn(den) == 0) {
        throw ZeroDenominator("n(m-n+2) - m vanishes");
    }
    return {m * b(n - 3) - nn * b(n - 4), den};
}

Rational theorem2_closed_form(Index n, const BigInt& m)
{
    require_n(n);
    const BigInt nn = from_index(n);
    const BigInt den = nn * (m - nn + 1);
    if (sgn(den) == 0) {
        throw ZeroDenominator("n(m-n+1) vanishes");
    }
    return {2 * (m * b(n - 3) - nn * b(n - 4)), den};
}

Rational theorem2_derived_form(Index n, const BigInt& m)
{
    require_n(n);
    const BigInt den = m - from_index(n) + 1;
    if (sgn(den) == 0) {
        throw ZeroDenominator("m - n + 1 vanishes");
    }
    return {m * left_factorial(n - 1) - 2 * b(n - 3), den};
}

EliminationResult elimination_chain(Scheme scheme, Index n)
{
    require_n(n);
    const Index target = scheme == Scheme::T1 ? n - 1 : n;

    // Rewrites alpha a_u + beta a_{u+1} one index deeper until u = target.
    auto push = [&](Index start) {
        LinearForm f{1, 0, start, start + 1};
        while (f.u < target) {
            const BigInt u = from_index(f.u);
            BigInt alpha;
            BigInt beta;
            if (scheme == Scheme::T1) {
                // a_u = (u+1) a_{u+1} - (u+2) a_{u+2}
                alpha = f.alpha * (u + 1) + f.beta;
                beta = -f.alpha * (u + 2);
            } else {
                // a_u = u a_{u+1} - u a_{u+2}
                alpha = f.alpha * u + f.beta;
                beta = -f.alpha * u;
            }
            f = {std::move(alpha), std::move(beta), f.u + 1, f.u + 2};
        }
        return f;
    };
    return {push(1), push(2)};
}

Rational elimination_ratio(Scheme scheme, Index n, const BigInt& m)
{
    const auto chain = elimination_chain(scheme, n);
    const BigInt a1 = chain.a1.alpha * m + chain.a1.beta;
    const BigInt a2 = chain.a2.alpha * m + chain.a2.beta;
    if (sgn(a1) == 0) {
        throw ZeroDenominator("a_1 vanishes in the elimination chain");
    }
    return {a2, a1};
}

Eq4Report verify_eq4(Index n)
{
    const auto chain = elimination_chain(Scheme::T1, n);
    const BigInt nn = from_index(n);
    Eq4Report report;
    report.n = n;
    report.printed_alpha = nn - 1;
    report.printed_beta = -(nn * nn - 2);
    report.actual_alpha = chain.a1.alpha;
    report.actual_beta = chain.a1.beta;
    report.printed_holds = report.actual_alpha == report.printed_alpha && report.actual_beta == report.printed_beta;
    report.corrected_holds = report.actual_alpha == nn - 1 && report.actual_beta == -(nn * nn - 2 * nn);
    report.corrected_coefficient = -report.actual_beta;
    return report;
}

const ClosedFormCheck* TheoremReport::find(const std::string& name) const
{
    for (const auto& cf : closed_forms) {
        if (cf.name == name) {
            return &cf;
        }
    }
    return nullptr;
}

TheoremReport verify_theorem(Scheme scheme, Index n, const BigInt& m)
{
    TheoremReport report;
    report.scheme = scheme;
    report.n = n;
    report.m = m;
    const CFSpec spec = scheme == Scheme::T1 ? cf_theorem1_spec(n, m) : cf_theorem2_spec(n, m);
    report.cf_value = eval_cf(spec);

    auto add = [&](const std::string& name, auto&& compute) {
        try {
            Rational v = compute();
            const bool equal = v == report.cf_value;
            report.closed_forms.push_back({name, std::move(v), equal});
        } catch (const ZeroDenominator& e) {
            throw ZeroDenominator("closed form '" + name + "': " + e.what(), -1);
        }
    };
    if (scheme == Scheme::T1) {
        add("eq1", [&] { return theorem1_closed_form(n, m); });
    } else {
        add("printed", [&] { return theorem2_closed_form(n, m); });
        add("derived", [&] { return theorem2_derived_form(n, m); });
    }
    add("elimination", [&] { return elimination_ratio(scheme, n, m); });
    return report;
}

std::vector<DepthProbe> theorem2_depth_probe(Index n_min, Index n_max, const std::vector<BigInt>& ms,
                                             int max_shift)
{
    std::vector<DepthProbe> out;
    for (int shift = -max_shift; shift <= max_shift; ++shift) {
        for (bool inverted : {false, true}) {
            DepthProbe probe{shift, inverted, 0, 0};
            for (Index n = std::max<Index>(n_min, 3); n <= n_max; ++n) {
                const Index depth = n - 1 + shift;
                if (depth < 1) {
                    continue;
                }
                for (const auto& m : ms) {
                    try {
                        const Rational printed = theorem2_closed_form(n, m);
                        Rational cf = eval_cf(theorem2_levels(depth, m));
                        if (inverted) {
                            cf = cf.reciprocal();
                        }
                        ++probe.checked;
                        if (cf == printed) {
                            ++probe.matches;
                        }
                    } catch (const ZeroDenominator&) {
                        continue;
                    }
                }
            }
            out.push_back(probe);
        }
    }
    return out;
}

}  // namespace primeseq
