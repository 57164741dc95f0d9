#include "support.hpp"

#include "symgen/core/bernoulli.hpp"
#include "symgen/core/combinatorics.hpp"
#include "symgen/core/error.hpp"
#include "symgen/core/linalg.hpp"
#include "symgen/core/series.hpp"

#include <doctest.h>

using namespace symgen;
using symgen::testing::P;

namespace {

TruncatedSeries series_of(int bound, std::vector<const char*> comps) {
    std::vector<Polynomial> v;
    for (auto* c : comps) v.push_back(P(c));
    return TruncatedSeries(bound, v);
}

TruncatedSeries scalar_series(int bound, const std::vector<Rational>& coeffs) {
    TruncatedSeries s(bound);
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= bound; ++k) s.set(static_cast<int>(k), Polynomial(coeffs[k]));
    return s;
}

// Lagrange inversion on plain coefficient vectors:
// [x^n] g = (1/n) [x^{n-1}] (x/f(x))^n.
std::vector<Rational> lagrange_inverse(const std::vector<Rational>& f, int bound) {
    // q = f/x, then r = 1/q
    std::vector<Rational> q(bound + 1, Rational(0));
    for (int k = 0; k <= bound; ++k) q[k] = static_cast<std::size_t>(k + 1) < f.size() ? f[k + 1] : Rational(0);
    std::vector<Rational> r(bound + 1, Rational(0));
    r[0] = 1 / q[0];
    for (int k = 1; k <= bound; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) acc += q[i] * r[k - i];
        r[k] = -acc / q[0];
    }
    std::vector<Rational> g(bound + 1, Rational(0));
    std::vector<Rational> power(bound + 1, Rational(0));
    power[0] = 1;
    for (int n = 1; n <= bound; ++n) {
        std::vector<Rational> next(bound + 1, Rational(0));
        for (int i = 0; i <= bound; ++i)
            for (int j = 0; i + j <= bound; ++j) next[i + j] += power[i] * r[j];
        power = next;
        g[n] = power[n - 1] / n;
    }
    return g;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(factorial(5) == 120);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("partitions and compositions") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(12).size() == 77);
    CHECK(compositions_of(6).size() == 32);
    CHECK(to_string(parse_composition("( 2, 1,3)")) == "(2,1,3)");
    CHECK(parse_composition("()").empty());
    CHECK_THROWS_AS(parse_composition("(1,0)"), Error);
    CHECK_THROWS_AS(parse_composition("(1,,2)"), Error);
    CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
}

TEST_CASE("canonical polynomial text") {
    CHECK(to_string(P("3*c[1]^2 - 2*c[2]")) == "3*c[1]^2 - 2*c[2]");
    CHECK(to_string(P("-2*c[2] + 3*c[1]^2")) == "3*c[1]^2 - 2*c[2]");
    CHECK(to_string(P("c[1]*c[1]")) == "c[1]^2");
    CHECK(to_string(P("1/2*N[1]^2 - 1/2*N[2]")) == "1/2*N[1]^2 - 1/2*N[2]");
    CHECK(to_string(P("0")) == "0");
    CHECK(to_string(P("c[1] - c[1]")) == "0");
    CHECK(to_string(P("-7/3")) == "-7/3");
    CHECK(to_string(P("1 + c[1]")) == "1 + c[1]");
    CHECK_THROWS_AS(P("3*"), Error);
    CHECK_THROWS_AS(P("c[1"), Error);
    CHECK_THROWS_AS(P("c[1] c[2]"), Error);
    CHECK_THROWS_AS(P(""), Error);
}

TEST_CASE("text round trip on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Polynomial p = symgen::testing::random_polynomial(rng);
        const std::string s = to_string(p);
        const Polynomial q = parse_polynomial(s, [](char fam, int idx) { return fam == 'x' ? idx : idx; });
        CHECK(q == p);
        CHECK(to_string(q) == s);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(11);
    for (int i = 0; i < 150; ++i) {
        const Polynomial a = symgen::testing::random_polynomial(rng);
        const Polynomial b = symgen::testing::random_polynomial(rng);
        const Polynomial c = symgen::testing::random_polynomial(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b - b == a);
        CHECK(a * Polynomial(1) == a);
    }
}

TEST_CASE("monomial order is (degree, family, index) on generators") {
    const Polynomial p = P("c[2] + c[1]^2 + 5");
    auto it = p.terms().begin();
    CHECK(it->first.is_unit());
    ++it;
    CHECK(to_string(it->first) == "c[1]^2");
    CHECK(P("c[1]*c[3]*c[2]").terms().begin()->first.factors().front().first.index == 1);
}

TEST_CASE("substitution and homogeneous parts") {
    const Polynomial p = P("c[1]^2 - 2*c[2]");
    const Polynomial q = p.substitute({{weighted('c', 1), P("2*x[1]")}, {weighted('c', 2), P("x[1]^2")}});
    CHECK(q == P("2*x[1]^2"));
    CHECK(P("1 + c[1] + c[1]^2 + c[2]").homogeneous_component(2) == P("c[1]^2 + c[2]"));
}

TEST_CASE("series_mul") {
    const int D = 4;
    CHECK(series_mul(series_of(D, {"1", "c[1]"}), series_of(D, {"1", "-c[1]"})) == series_of(D, {"1", "0", "-c[1]^2"}));
    const auto s = series_of(D, {"1", "c[1]", "c[2]"});
    CHECK(series_mul(TruncatedSeries::one(D), s) == s);
    const auto geometric = series_of(D, {"1", "-c[1]", "c[1]^2", "-c[1]^3", "c[1]^4"});
    CHECK(series_mul(series_of(D, {"1", "c[1]", "c[2]"}), geometric)[2] == P("c[2]"));
    CHECK_THROWS_AS(series_mul(TruncatedSeries::one(3), TruncatedSeries::one(4)), Error);
}

TEST_CASE("series_inv") {
    CHECK(series_inv(series_of(3, {"1", "c[1]"})) == series_of(3, {"1", "-c[1]", "c[1]^2", "-c[1]^3"}));
    CHECK(series_inv(TruncatedSeries::one(5)) == TruncatedSeries::one(5));
    const auto a = series_of(3, {"1", "c[1]", "c[2]"});
    const auto inv = series_inv(a);
    CHECK(inv[3] == P("-c[1]^3 + 2*c[1]*c[2]"));
    CHECK(series_mul(a, inv) == TruncatedSeries::one(3));
    CHECK_THROWS_AS(series_inv(series_of(3, {"2", "c[1]"})), Error);
}

TEST_CASE("series_exp and series_log") {
    CHECK(series_exp(TruncatedSeries(4)) == TruncatedSeries::one(4));
    CHECK(series_exp(series_of(4, {"0", "-2*N[1]"}))[2] == P("2*N[1]^2"));
    CHECK(series_log(series_of(2, {"1", "c[1]"})) == series_of(2, {"0", "c[1]", "-1/2*c[1]^2"}));
    CHECK_THROWS_AS(series_exp(series_of(2, {"1"})), Error);
    CHECK_THROWS_AS(series_log(series_of(2, {"0", "c[1]"})), Error);
}

TEST_CASE("exp/log and inv are two-sided inverses on random graded series") {
    std::mt19937 rng(5);
    const int D = 6;
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries a(D);
        for (int k = 1; k <= D; ++k) {
            Polynomial comp;
            const Polynomial r = symgen::testing::random_polynomial(rng);
            for (const auto& [m, c] : r.terms())
                if (m.degree() == k) comp.add_term(m, c);
            comp.add_term(Monomial(weighted('c', k)), make_rational(trial + 1, k));
            a.set(k, comp);
        }
        CHECK(series_log(series_exp(a)) == a);
        const TruncatedSeries unit = series_exp(a);
        CHECK(series_exp(series_log(unit)) == unit);
        CHECK(series_mul(series_inv(unit), unit) == TruncatedSeries::one(D));
        CHECK(series_mul(unit, series_inv(unit)) == TruncatedSeries::one(D));
    }
}

TEST_CASE("series_compose_inverse") {
    const int D = 6;
    CHECK(series_compose_inverse(TruncatedSeries::variable(D)) == TruncatedSeries::variable(D));
    const auto f = scalar_series(4, {0, 1, 1});
    CHECK(series_compose_inverse(f) == scalar_series(4, {0, 1, -1, 2, -5}));
    // x/(1-x) <-> x/(1+x)
    std::vector<Rational> geo(D + 1, Rational(1));
    geo[0] = 0;
    std::vector<Rational> alt(D + 1);
    for (int k = 1; k <= D; ++k) alt[k] = k % 2 ? 1 : -1;
    CHECK(series_compose_inverse(scalar_series(D, geo)) == scalar_series(D, alt));
    CHECK_THROWS_AS(series_compose_inverse(scalar_series(D, {0, 2})), Error);
    CHECK_THROWS_AS(series_compose_inverse(scalar_series(D, {1, 1})), Error);
}

TEST_CASE("compositional inverse agrees with Lagrange inversion") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(-5, 5);
    const int D = 8;
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rational> f(D + 1, Rational(0));
        f[1] = 1;
        for (int k = 2; k <= D; ++k) f[k] = make_rational(num(rng), 1 + trial % 3);
        const auto g = series_compose_inverse(scalar_series(D, f));
        const auto oracle = lagrange_inverse(f, D);
        for (int k = 0; k <= D; ++k) CHECK(g[k] == Polynomial(oracle[k]));
        CHECK(series_compose(scalar_series(D, f), g) == TruncatedSeries::variable(D));
    }
}

TEST_CASE("exact rank and nullspace") {
    IntegerMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    CHECK(rank(IntegerMatrix{{0, 0}, {0, 0}}) == 0);
    CHECK(rank(RationalMatrix{{Rational(1, 2), Rational(1, 3)}, {Rational(3), Rational(2)}}) == 1);
    const auto ns = nullspace(RationalMatrix{{1, 1, 0}, {0, 0, 1}}, 3);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<Rational>{-1, 1, 0});
    const auto x = solve(RationalMatrix{{2, 0}, {0, 4}}, {1, 1}, 2);
    CHECK(x == std::vector<Rational>{Rational(1, 2), Rational(1, 4)});
    CHECK(solve(RationalMatrix{{1, 1}, {1, 1}}, {1, 2}, 2).empty());
}
