#pragma once

#include "symgen/core/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symgen {

/// An indeterminate `family[index]` of positive degree. Generators order by
/// (degree, family, index), which fixes the canonical monomial order.
struct Generator {
    int degree = 1;
    char family = 'x';
    int index = 1;

    auto operator<=>(const Generator&) const = default;
};

/// Convenience for the common weight convention where `family[i]` has degree i.
inline Generator weighted(char family, int index) { return Generator{index, family, index}; }

std::string to_string(const Generator& g);

class Monomial {
public:
    using Factor = std::pair<Generator, int>;

    Monomial() = default;
    explicit Monomial(const Generator& g, int exponent = 1);

    /// Sorts, merges repeated generators and drops zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_unit() const noexcept { return factors_.empty(); }
    int degree() const noexcept;
    /// Sum of exponents.
    int length() const noexcept;
    int exponent(const Generator& g) const noexcept;

    Monomial operator*(const Monomial& other) const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<Factor> factors_;
};

std::string to_string(const Monomial& m);

/// Maps a parsed `family[index]` to its degree.
using Grading = std::function<int(char family, int index)>;

/// degree(family[i]) = i.
int index_grading(char family, int index);

/// Sparse polynomial over Q. No zero coefficients are ever stored, so two
/// polynomials are equal iff their term maps are equal.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    explicit Polynomial(long constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(const Monomial& m, const Rational& coeff = 1);

    static Polynomial generator(const Generator& g) { return Polynomial(Monomial(g)); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial{}); }
    bool is_constant() const noexcept;
    /// Largest monomial degree, nullopt for the zero polynomial.
    std::optional<int> max_degree() const;
    bool is_homogeneous(int degree) const;

    Polynomial homogeneous_component(int degree) const;
    Polynomial filtered(const std::function<bool(const Monomial&)>& keep) const;

    void add_term(const Monomial& m, const Rational& c);
    /// Adds c * m * p.
    void add_product(const Rational& c, const Monomial& m, const Polynomial& p);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial&) const = default;

    Polynomial pow(unsigned e) const;

    /// Replaces every generator found in `images` by its image; others stay.
    Polynomial substitute(const std::map<Generator, Polynomial>& images) const;

private:
    TermMap terms_;
};

/// Canonical text form, e.g. `3*c[1]^2 - 2*c[2]`; terms in monomial order.
std::string to_string(const Polynomial& p);

/// Inverse of to_string. Generator degrees come from `grading`.
Polynomial parse_polynomial(std::string_view text, const Grading& grading = index_grading);

/// Evaluates `p` in any ring-like scalar type.
template <class Scalar, class ValueOf, class FromRational>
Scalar evaluate(const Polynomial& p, ValueOf&& value_of, FromRational&& from_rational) {
    Scalar total = from_rational(Rational(0));
    for (const auto& [m, c] : p.terms()) {
        Scalar term = from_rational(c);
        for (const auto& [g, e] : m.factors()) {
            const Scalar v = value_of(g);
            for (int i = 0; i < e; ++i) term = term * v;
        }
        total = total + term;
    }
    return total;
}

}  // namespace symgen
