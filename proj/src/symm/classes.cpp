#include "symgen/core/error.hpp"
#include "symgen/symm/symmetric.hpp"

#include <algorithm>

namespace symgen::symm {

char homology_family() { return 'b'; }

namespace {

Polynomial gen(char family, int i) { return Polynomial::generator(weighted(family, i)); }

// sum_k sign(k) * family[k], family[0] = 1.
TruncatedSeries total_class(char family, int bound, bool alternate) {
    TruncatedSeries s = TruncatedSeries::one(bound);
    for (int k = 1; k <= bound; ++k) s.set(k, gen(family, k) * Rational(alternate && k % 2 ? -1 : 1));
    return s;
}

}  // namespace

TruncatedSeries chern_from_newton(int bound) {
    if (bound < 1) throw Error("invalid-bound", "bound must be at least 1");
    TruncatedSeries exponent(bound);
    // prod_{i>=0} exp((-1)^i N_{i+1}/(i+1))
    for (int k = 1; k <= bound; ++k)
        exponent.set(k, gen(family(SymmBasis::P), k) * Rational(k % 2 ? 1 : -1, k));
    return series_exp(exponent);
}

TruncatedSeries d_classes(int bound) {
    if (bound < 1) throw Error("invalid-bound", "bound must be at least 1");
    const char c = family(SymmBasis::E);
    return series_mul(total_class(c, bound, true), series_inv(total_class(c, bound, false)));
}

TruncatedSeries d_classes_via_newton(int bound) {
    if (bound < 1) throw Error("invalid-bound", "bound must be at least 1");
    TruncatedSeries exponent(bound);
    for (int k = 1; k <= bound; k += 2) {
        const SymmFn newton = convert(SymmFn::generator(SymmBasis::P, k), SymmBasis::E);
        exponent.set(k, newton.value * make_rational(-2, k));
    }
    return series_exp(exponent);
}

TruncatedSeries a_classes(int bound) {
    if (bound < 1) throw Error("invalid-bound", "bound must be at least 1");
    const char b = homology_family();
    return series_mul(total_class(b, bound, false), total_class(b, bound, true));
}

IdentityReport compare_series(const std::string& identity, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    IdentityReport report;
    report.identity = identity;
    report.max_weight = std::min(lhs.bound(), rhs.bound());
    for (int k = 0; k <= report.max_weight; ++k) {
        if (lhs[k] != rhs[k]) {
            report.exact_match = false;
            report.first_mismatch_weight = k;
            break;
        }
    }
    return report;
}

IdentityReport identity_check(const std::string& which, int max_weight) {
    if (max_weight < 1) throw Error("invalid-bound", "max weight must be at least 1");
    if (which == "d-classes") return compare_series(which, d_classes(max_weight), d_classes_via_newton(max_weight));
    if (which == "chern-newton") {
        TruncatedSeries direct = TruncatedSeries::one(max_weight);
        for (int k = 1; k <= max_weight; ++k)
            direct.set(k, convert(SymmFn::generator(SymmBasis::E, k), SymmBasis::P).value);
        return compare_series(which, chern_from_newton(max_weight), direct);
    }
    if (which == "a-classes") {
        // B(t) B(-t) = exp(2 * even part of log B(t))
        const char b = homology_family();
        TruncatedSeries total = TruncatedSeries::one(max_weight);
        for (int k = 1; k <= max_weight; ++k) total.set(k, gen(b, k));
        const TruncatedSeries log_b = series_log(total);
        TruncatedSeries even(max_weight);
        for (int k = 2; k <= max_weight; k += 2) even.set(k, log_b[k] * Rational(2));
        return compare_series(which, a_classes(max_weight), series_exp(even));
    }
    throw Error("invalid-argument", "unknown identity '" + which + "' (expected d-classes, chern-newton or a-classes)");
}

}  // namespace symgen::symm
