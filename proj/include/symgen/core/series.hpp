#pragma once

#include "symgen/core/polynomial.hpp"

#include <vector>

namespace symgen {

/// Power series truncated at degree `bound`: slot k holds the degree-k
/// component. For a generating function such as sum c_k the slot is a
/// homogeneous polynomial of weight k; for a one-variable series in x the
/// slot is the (possibly symbolic) coefficient of x^k.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int bound);
    /// Components beyond `bound` are dropped.
    TruncatedSeries(int bound, std::vector<Polynomial> components);

    static TruncatedSeries one(int bound);
    /// The one-variable series x.
    static TruncatedSeries variable(int bound);

    int bound() const noexcept { return bound_; }
    /// Zero for k above the bound.
    const Polynomial& operator[](int k) const;
    void set(int k, Polynomial value);
    const std::vector<Polynomial>& components() const noexcept { return components_; }

    TruncatedSeries truncated(int bound) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    int bound_;
    std::vector<Polynomial> components_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_inv(const TruncatedSeries& a);
TruncatedSeries series_exp(const TruncatedSeries& a);
TruncatedSeries series_log(const TruncatedSeries& a);
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned e);

/// f(g) for one-variable series; g must have zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// g with f(g(x)) = x; f must be x + O(x^2).
TruncatedSeries series_compose_inverse(const TruncatedSeries& f);

/// Multiplies the one-variable series by x^shift (shift may be negative, in
/// which case the low coefficients must vanish).
TruncatedSeries series_shift(const TruncatedSeries& f, int shift);

}  // namespace symgen
