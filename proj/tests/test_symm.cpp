#include "support.hpp"

#include "symgen/core/error.hpp"
#include "symgen/symm/symmetric.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace symgen;
using namespace symgen::symm;
using symgen::testing::P;

namespace {

// ---- explicit-variable oracle: symmetric functions in x_1..x_n ------------

Polynomial var(int i) { return Polynomial::generator(Generator{1, 'x', i}); }

Polynomial explicit_p(int r, int n) {
    Polynomial out;
    for (int i = 1; i <= n; ++i) out += var(i).pow(static_cast<unsigned>(r));
    return out;
}

Polynomial explicit_e(int r, int n) {
    Polynomial out;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(chosen.size()) == r) {
            Polynomial t(Rational(1));
            for (int i : chosen) t = t * var(i);
            out += t;
            return;
        }
        for (int i = start; i <= n; ++i) {
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(1);
    return out;
}

Polynomial explicit_h(int r, int n) {
    Polynomial out;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(chosen.size()) == r) {
            Polynomial t(Rational(1));
            for (int i : chosen) t = t * var(i);
            out += t;
            return;
        }
        for (int i = start; i <= n; ++i) {
            chosen.push_back(i);
            rec(i);
            chosen.pop_back();
        }
    };
    rec(1);
    return out;
}

Polynomial explicit_m(const Partition& lambda, int n) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    Polynomial out;
    do {
        Polynomial t(Rational(1));
        for (int i = 0; i < n; ++i) t = t * var(i + 1).pow(static_cast<unsigned>(exps[static_cast<std::size_t>(i)]));
        out += t;
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

Polynomial explicit_value(const SymmFn& f, int n) {
    Polynomial out;
    for (const auto& [m, c] : f.value.terms()) {
        Polynomial t(Rational(1));
        if (f.basis == SymmBasis::M) {
            t = explicit_m(partition_of(m), n);
        } else {
            for (const auto& [g, e] : m.factors()) {
                Polynomial x = f.basis == SymmBasis::E ? explicit_e(g.index, n)
                               : f.basis == SymmBasis::H ? explicit_h(g.index, n)
                                                         : explicit_p(g.index, n);
                t = t * x.pow(static_cast<unsigned>(e));
            }
        }
        out += t * c;
    }
    return out;
}

SymmFn fn(SymmBasis b, const char* text) { return {b, parse_polynomial(text, symm_grading)}; }

// Symmetric function products in three tensor slots, for coassociativity.
using Triple = std::map<std::array<Monomial, 3>, Rational>;

Triple left_iterated(const HopfTensor& t) {
    Triple out;
    for (const auto& [k, c] : t.terms)
        for (const auto& [k2, c2] : coproduct({SymmBasis::E, Polynomial(k.first)}).terms)
            out[{k2.first, k2.second, k.second}] += c * c2;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Triple right_iterated(const HopfTensor& t) {
    Triple out;
    for (const auto& [k, c] : t.terms)
        for (const auto& [k2, c2] : coproduct({SymmBasis::E, Polynomial(k.second)}).terms)
            out[{k.first, k2.first, k2.second}] += c * c2;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TEST_CASE("Newton polynomials in Chern classes") {
    CHECK(convert(fn(SymmBasis::P, "N[1]"), SymmBasis::E).value == P("c[1]"));
    CHECK(convert(fn(SymmBasis::P, "N[2]"), SymmBasis::E).value == P("c[1]^2 - 2*c[2]"));
    CHECK(convert(fn(SymmBasis::P, "N[3]"), SymmBasis::E).value == P("c[1]^3 - 3*c[1]*c[2] + 3*c[3]"));
}

TEST_CASE("basis conversions agree with explicit variables") {
    const SymmBasis bases[] = {SymmBasis::E, SymmBasis::P, SymmBasis::H, SymmBasis::M};
    for (int k = 1; k <= 5; ++k) {
        for (const auto& lambda : partitions_of(k)) {
            for (SymmBasis from : bases) {
                const SymmFn f{from, Polynomial(basis_monomial(from, lambda))};
                const Polynomial expected = explicit_value(f, k);
                for (SymmBasis to : bases) {
                    const SymmFn g = convert(f, to);
                    CHECK(g.basis == to);
                    CHECK(explicit_value(g, k) == expected);
                }
            }
        }
    }
}

TEST_CASE("E -> P -> E round trip on all monomials up to weight 12") {
    for (int k = 1; k <= 12; ++k) {
        for (const auto& lambda : partitions_of(k)) {
            const SymmFn f{SymmBasis::E, Polynomial(basis_monomial(SymmBasis::E, lambda))};
            CHECK(convert(convert(f, SymmBasis::P), SymmBasis::E) == f);
        }
    }
}

TEST_CASE("round trips through H and M up to weight 8") {
    for (int k = 1; k <= 8; ++k) {
        for (const auto& lambda : partitions_of(k)) {
            const SymmFn f{SymmBasis::E, Polynomial(basis_monomial(SymmBasis::E, lambda))};
            CHECK(convert(convert(f, SymmBasis::H), SymmBasis::E) == f);
            CHECK(convert(convert(f, SymmBasis::M), SymmBasis::E) == f);
            const SymmFn m{SymmBasis::M, Polynomial(basis_monomial(SymmBasis::M, lambda))};
            CHECK(convert(convert(m, SymmBasis::P), SymmBasis::M) == m);
        }
    }
}

TEST_CASE("power sums are the monomial functions of one-part partitions") {
    CHECK(convert(fn(SymmBasis::P, "N[2]"), SymmBasis::M).value == P("m[2]"));
    CHECK(convert(fn(SymmBasis::E, "c[2]"), SymmBasis::M).value == P("m[1]^2"));
    CHECK(multiply(fn(SymmBasis::M, "m[1]"), fn(SymmBasis::M, "m[1]")).value == P("m[2] + 2*m[1]^2"));
}

TEST_CASE("chern_from_newton") {
    const auto s = chern_from_newton(6);
    CHECK(s[1] == P("N[1]"));
    CHECK(s[2] == P("1/2*N[1]^2 - 1/2*N[2]"));
    CHECK(s[3] == P("1/6*N[1]^3 - 1/2*N[1]*N[2] + 1/3*N[3]"));
    for (int k = 1; k <= 6; ++k) CHECK(s[k] == convert(SymmFn::generator(SymmBasis::E, k), SymmBasis::P).value);
    CHECK(identity_check("chern-newton", 12).exact_match);
}

TEST_CASE("d-classes") {
    const auto d = d_classes(8);
    CHECK(d[0] == P("1"));
    CHECK(d[1] == P("-2*c[1]"));
    CHECK(d[2] == P("2*c[1]^2"));
    CHECK(d[3] == P("-2*c[3] + 2*c[1]*c[2] - 2*c[1]^3"));
    CHECK(d == d_classes_via_newton(8));
    const auto report = identity_check("d-classes", 16);
    CHECK(report.exact_match);
    CHECK_FALSE(report.first_mismatch_weight.has_value());
    // leading linear term of odd classes is -2 c_{2i+1}
    for (int k = 1; k <= 8; k += 2) CHECK(d[k].coefficient(Monomial(generator(SymmBasis::E, k))) == -2);
}

TEST_CASE("even d-classes are decomposable") {
    const auto d = d_classes(12);
    for (int k = 1; k <= 6; ++k) CHECK(is_decomposable(d[2 * k]));
    CHECK_FALSE(is_decomposable(d[3]));
}

TEST_CASE("a-classes") {
    const auto a = a_classes(12);
    CHECK(a[0] == P("1"));
    CHECK(a[1].is_zero());
    CHECK(a[2] == P("2*b[2] - b[1]^2"));
    for (int i = 0; i <= 5; ++i) CHECK(a[2 * i + 1].is_zero());
    for (int i = 1; i <= 6; ++i) {
        const Polynomial linear = a[2 * i].filtered([](const Monomial& m) { return m.length() == 1; });
        CHECK(linear == Polynomial(Monomial(weighted('b', 2 * i)), 2));
    }
    CHECK(identity_check("a-classes", 12).exact_match);
}

TEST_CASE("compare_series reports the first mismatch") {
    auto lhs = d_classes(5);
    auto rhs = lhs;
    rhs.set(4, rhs[4] + P("c[4]"));
    const auto report = compare_series("x", lhs, rhs);
    CHECK_FALSE(report.exact_match);
    CHECK(report.first_mismatch_weight == 4);
    CHECK_THROWS_AS(identity_check("nope", 4), Error);
}

TEST_CASE("coproduct") {
    HopfTensor expected;
    expected.add(Monomial(weighted('c', 1)), Monomial{}, 1);
    expected.add(Monomial{}, Monomial(weighted('c', 1)), 1);
    CHECK(coproduct(fn(SymmBasis::E, "c[1]")) == expected);

    HopfTensor c2;
    c2.add(Monomial(weighted('c', 2)), Monomial{}, 1);
    c2.add(Monomial(weighted('c', 1)), Monomial(weighted('c', 1)), 1);
    c2.add(Monomial{}, Monomial(weighted('c', 2)), 1);
    CHECK(coproduct(fn(SymmBasis::E, "c[2]")) == c2);

    CHECK(coproduct(fn(SymmBasis::P, "N[2]")) == primitive_tensor(P("c[1]^2 - 2*c[2]")));
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(fn(SymmBasis::P, "N[3]")));
    CHECK_FALSE(is_primitive(fn(SymmBasis::E, "c[2]")));
    CHECK(is_primitive(fn(SymmBasis::E, "c[1]")));
    for (int k = 1; k <= 8; ++k) CHECK(is_primitive(SymmFn::generator(SymmBasis::P, k)));
}

TEST_CASE("coproduct is coassociative and multiplicative up to weight 8") {
    for (int k = 1; k <= 8; ++k) {
        for (const auto& lambda : partitions_of(k)) {
            const Monomial m = basis_monomial(SymmBasis::E, lambda);
            const HopfTensor t = coproduct({SymmBasis::E, Polynomial(m)});
            CHECK(left_iterated(t) == right_iterated(t));
        }
    }
    const SymmFn a = fn(SymmBasis::E, "c[2] + c[1]");
    const SymmFn b = fn(SymmBasis::E, "c[3] - 2*c[1]^2");
    CHECK(coproduct(multiply(a, b)) == coproduct(a) * coproduct(b));
}

TEST_CASE("primitive spaces") {
    const auto bu2 = primitive_space(2, Model::BU);
    REQUIRE(bu2.size() == 1);
    CHECK(convert(bu2[0], SymmBasis::P).value.size() == 1);
    CHECK(primitive_space(2, Model::BUmodSO).empty());
    const auto so3 = primitive_space(3, Model::BUmodSO);
    REQUIRE(so3.size() == 1);
    const Polynomial n3 = convert(SymmFn::generator(SymmBasis::P, 3), SymmBasis::E).value;
    const Rational scale = n3.coefficient(Monomial(generator(SymmBasis::E, 3))) /
                           so3[0].value.coefficient(Monomial(generator(SymmBasis::E, 3)));
    CHECK(so3[0].value * scale == n3);
    CHECK(primitive_space(1, Model::BUmodSO).size() == 1);
    CHECK(primitive_space(1, Model::BUmodSO, GeneratorStart::FromOne).empty());
}

TEST_CASE("primitive dimensions up to weight 10") {
    for (int k = 1; k <= 10; ++k) {
        CHECK(primitive_space(k, Model::BU).size() == 1);
        CHECK(primitive_space(k, Model::BUmodSO).size() == static_cast<std::size_t>(k % 2));
    }
}

TEST_CASE("indecomposables") {
    CHECK(indecomposables(3, Model::BU).dimension == 1);
    CHECK(indecomposables(0, Model::BU).dimension == 0);
    CHECK(indecomposables(2, Model::BUmodSO).dimension == 0);
    const auto i5 = indecomposables(5, Model::BUmodSO);
    CHECK(i5.dimension == 1);
    REQUIRE(i5.representatives.size() == 1);
    CHECK(i5.representatives[0] == d_classes(5)[5]);
    for (int k = 1; k <= 8; ++k) {
        CHECK(indecomposables(k, Model::BU).dimension == 1);
        CHECK(indecomposables(k, Model::BUmodSO).dimension == k % 2);
    }
    CHECK(indecomposables(1, Model::BUmodSO, GeneratorStart::FromOne).dimension == 0);
}

TEST_CASE("basis and model names") {
    CHECK(basis_from_name("P") == SymmBasis::P);
    CHECK_THROWS_AS(basis_from_name("Q"), Error);
    CHECK(model_from_name("BUmodSO") == Model::BUmodSO);
    CHECK_THROWS_AS(model_from_name("BO"), Error);
}
