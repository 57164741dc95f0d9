#include "symgen/core/series.hpp"

#include "symgen/core/error.hpp"

namespace symgen {

namespace {

const Polynomial& zero_polynomial() {
    static const Polynomial zero;
    return zero;
}

void require_same_bound(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.bound() != b.bound())
        throw Error("bound-mismatch", "series truncated at different degrees (" + std::to_string(a.bound()) + " vs " +
                                          std::to_string(b.bound()) + ")");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int bound) : bound_(bound) {
    if (bound < 0) throw Error("invalid-bound", "truncation bound must be non-negative");
    components_.resize(static_cast<std::size_t>(bound) + 1);
}

TruncatedSeries::TruncatedSeries(int bound, std::vector<Polynomial> components) : TruncatedSeries(bound) {
    for (std::size_t k = 0; k < components.size() && k <= static_cast<std::size_t>(bound); ++k)
        components_[k] = std::move(components[k]);
}

TruncatedSeries TruncatedSeries::one(int bound) {
    TruncatedSeries s(bound);
    s.components_[0] = Polynomial(Rational(1));
    return s;
}

TruncatedSeries TruncatedSeries::variable(int bound) {
    TruncatedSeries s(bound);
    if (bound >= 1) s.components_[1] = Polynomial(Rational(1));
    return s;
}

const Polynomial& TruncatedSeries::operator[](int k) const {
    if (k < 0 || k > bound_) return zero_polynomial();
    return components_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set(int k, Polynomial value) {
    if (k < 0 || k > bound_) throw Error("invalid-bound", "component " + std::to_string(k) + " outside truncation");
    components_[static_cast<std::size_t>(k)] = std::move(value);
}

TruncatedSeries TruncatedSeries::truncated(int bound) const { return TruncatedSeries(bound, components_); }

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_bound(a, b);
    TruncatedSeries out(a.bound());
    for (int k = 0; k <= a.bound(); ++k) out.set(k, a[k] + b[k]);
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_bound(a, b);
    TruncatedSeries out(a.bound());
    for (int k = 0; k <= a.bound(); ++k) out.set(k, a[k] - b[k]);
    return out;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
    TruncatedSeries out(a.bound());
    for (int k = 0; k <= a.bound(); ++k) out.set(k, a[k] * c);
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_bound(a, b);
    const int bound = a.bound();
    TruncatedSeries out(bound);
    for (int k = 0; k <= bound; ++k) {
        Polynomial acc;
        for (int i = 0; i <= k; ++i) {
            if (a[i].is_zero() || b[k - i].is_zero()) continue;
            acc += a[i] * b[k - i];
        }
        out.set(k, std::move(acc));
    }
    return out;
}

TruncatedSeries series_inv(const TruncatedSeries& a) {
    if (a[0] != Polynomial(Rational(1))) throw Error("constant-term", "series_inv requires constant term 1");
    const int bound = a.bound();
    TruncatedSeries out = TruncatedSeries::one(bound);
    // sum_{i=0}^{k} a_i r_{k-i} = 0 for k >= 1
    for (int k = 1; k <= bound; ++k) {
        Polynomial acc;
        for (int i = 1; i <= k; ++i) {
            if (a[i].is_zero() || out[k - i].is_zero()) continue;
            acc -= a[i] * out[k - i];
        }
        out.set(k, std::move(acc));
    }
    return out;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (!a[0].is_zero()) throw Error("constant-term", "series_exp requires zero constant term");
    const int bound = a.bound();
    TruncatedSeries out = TruncatedSeries::one(bound);
    // Euler derivation: k E_k = sum_{j=1}^{k} j A_j E_{k-j}
    for (int k = 1; k <= bound; ++k) {
        Polynomial acc;
        for (int j = 1; j <= k; ++j) {
            if (a[j].is_zero() || out[k - j].is_zero()) continue;
            acc += (a[j] * out[k - j]) * Rational(j);
        }
        out.set(k, acc * Rational(1, k));
    }
    return out;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a[0] != Polynomial(Rational(1))) throw Error("constant-term", "series_log requires constant term 1");
    const int bound = a.bound();
    TruncatedSeries out(bound);
    // k L_k = k A_k - sum_{j=1}^{k-1} j L_j A_{k-j}
    for (int k = 1; k <= bound; ++k) {
        Polynomial acc = a[k] * Rational(k);
        for (int j = 1; j < k; ++j) {
            if (out[j].is_zero() || a[k - j].is_zero()) continue;
            acc -= (out[j] * a[k - j]) * Rational(j);
        }
        out.set(k, acc * Rational(1, k));
    }
    return out;
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned e) {
    TruncatedSeries result = TruncatedSeries::one(a.bound());
    TruncatedSeries base = a;
    while (e) {
        if (e & 1U) result = series_mul(result, base);
        e >>= 1U;
        if (e) base = series_mul(base, base);
    }
    return result;
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_bound(f, g);
    if (!g[0].is_zero()) throw Error("constant-term", "series_compose requires g(0) = 0");
    const int bound = f.bound();
    // Horner: f_0 + g (f_1 + g (f_2 + ...))
    TruncatedSeries acc(bound);
    for (int k = bound; k >= 0; --k) {
        acc = series_mul(acc, g);
        TruncatedSeries constant(bound);
        constant.set(0, f[k]);
        acc = acc + constant;
    }
    return acc;
}

TruncatedSeries series_compose_inverse(const TruncatedSeries& f) {
    if (!f[0].is_zero() || f[1] != Polynomial(Rational(1)))
        throw Error("not-invertible", "compositional inverse requires f = x + O(x^2)");
    const int bound = f.bound();
    TruncatedSeries g = TruncatedSeries::variable(bound);
    // Fix one coefficient per pass: adding e x^n to g changes f(g) by e x^n + O(x^{n+1}).
    for (int n = 2; n <= bound; ++n) {
        const TruncatedSeries h = series_compose(f, g);
        if (h[n].is_zero()) continue;
        g.set(n, g[n] - h[n]);
    }
    return g;
}

TruncatedSeries series_shift(const TruncatedSeries& f, int shift) {
    TruncatedSeries out(f.bound());
    for (int k = 0; k <= f.bound(); ++k) {
        const int target = k + shift;
        if (f[k].is_zero()) continue;
        if (target < 0) throw Error("constant-term", "series_shift would drop a nonzero coefficient");
        if (target <= f.bound()) out.set(target, f[k]);
    }
    return out;
}

}  // namespace symgen
