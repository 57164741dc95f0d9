#include "support.hpp"

#include "symgen/core/error.hpp"
#include "symgen/qsymm/quasisymmetric.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace symgen;
using namespace symgen::qsymm;

namespace {

QSymmElement M(std::initializer_list<int> parts) { return QSymmElement(Composition(std::vector<int>(parts))); }

// M_alpha as an honest polynomial in x_1..x_n.
Polynomial explicit_M(const Composition& alpha, int n) {
    Polynomial out;
    const auto& a = alpha.parts();
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int start) {
        if (idx.size() == a.size()) {
            Polynomial t(Rational(1));
            for (std::size_t j = 0; j < a.size(); ++j)
                t = t * Polynomial::generator(Generator{1, 'x', idx[j]}).pow(static_cast<unsigned>(a[j]));
            out += t;
            return;
        }
        for (int i = start; i <= n; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(1);
    return out;
}

Polynomial explicit_element(const QSymmElement& q, int n) {
    Polynomial out;
    for (const auto& [c, v] : q.terms()) out += explicit_M(c, n) * Polynomial(v);
    return out;
}

Composition random_composition(std::mt19937& rng, int max_weight) {
    std::uniform_int_distribution<int> w(0, max_weight);
    const auto all = compositions_of(w(rng));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

}  // namespace

TEST_CASE("quasi-shuffle examples") {
    CHECK(quasi_shuffle(M({1}), M({1})) == QSymmElement(2 * M({1, 1}) + M({2})));
    CHECK(quasi_shuffle(M({2}), M({3})) == QSymmElement(M({2, 3}) + M({3, 2}) + M({5})));
    const auto x = parse_qsymm("M(2,1) - 1/2*M(3)");
    CHECK(quasi_shuffle(QSymmElement(LinearCombination::unit()), x) == x);
    CHECK(quasi_shuffle(x, QSymmElement(LinearCombination::unit())) == x);
}

TEST_CASE("quasi-shuffle agrees with products of explicit quasisymmetric polynomials") {
    for (int wa = 1; wa <= 3; ++wa)
        for (int wb = 1; wb <= 3; ++wb)
            for (const auto& a : compositions_of(wa))
                for (const auto& b : compositions_of(wb)) {
                    const int n = static_cast<int>(a.length() + b.length());
                    const auto prod = quasi_shuffle(QSymmElement(a), QSymmElement(b));
                    CHECK(explicit_element(prod, n) == explicit_M(a, n) * explicit_M(b, n));
                }
}

TEST_CASE("quasi-shuffle is commutative and associative") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const QSymmElement a(random_composition(rng, 3)), b(random_composition(rng, 3)), c(random_composition(rng, 2));
        CHECK(quasi_shuffle(a, b) == quasi_shuffle(b, a));
        CHECK(quasi_shuffle(quasi_shuffle(a, b), c) == quasi_shuffle(a, quasi_shuffle(b, c)));
    }
    // weight 8 exactly
    for (const auto& a : compositions_of(3))
        for (const auto& b : compositions_of(3))
            for (const auto& c : compositions_of(2)) {
                const QSymmElement x(a), y(b), z(c);
                REQUIRE(quasi_shuffle(quasi_shuffle(x, y), z) == quasi_shuffle(x, quasi_shuffle(y, z)));
            }
}

TEST_CASE("deconcatenation coproduct") {
    CompositionTensor d2;
    d2.add(Composition({2}), Composition{}, 1);
    d2.add(Composition{}, Composition({2}), 1);
    CHECK(deconcatenation_coproduct(M({2})) == d2);

    CompositionTensor d12;
    d12.add(Composition({1, 2}), Composition{}, 1);
    d12.add(Composition({1}), Composition({2}), 1);
    d12.add(Composition{}, Composition({1, 2}), 1);
    CHECK(deconcatenation_coproduct(M({1, 2})) == d12);

    for (int wa = 1; wa <= 3; ++wa)
        for (int wb = 1; wb <= 3; ++wb)
            for (const auto& a : compositions_of(wa))
                for (const auto& b : compositions_of(wb)) {
                    const QSymmElement x(a), y(b);
                    CHECK(deconcatenation_coproduct(quasi_shuffle(x, y)) ==
                          quasi_shuffle(deconcatenation_coproduct(x), deconcatenation_coproduct(y)));
                }
}

TEST_CASE("NSymm pairing is dual to deconcatenation") {
    for (int w = 1; w <= 6; ++w)
        for (const auto& x : compositions_of(w)) {
            const auto dx = deconcatenation_coproduct(QSymmElement(x));
            for (int wa = 0; wa <= w; ++wa)
                for (const auto& a : compositions_of(wa))
                    for (const auto& b : compositions_of(w - wa)) {
                        const NSymmElement na(a), nb(b);
                        REQUIRE(pairing(concatenate(na, nb), QSymmElement(x)) == pairing(na, nb, dx));
                    }
        }
}

TEST_CASE("symm into qsymm") {
    using symm::SymmBasis;
    using symm::SymmFn;
    auto m = [](std::vector<int> parts) {
        return SymmFn{SymmBasis::M, Polynomial(symm::basis_monomial(SymmBasis::M, Partition(std::move(parts))), 1)};
    };
    CHECK(symm_into_qsymm(m({2, 1})) == QSymmElement(M({2, 1}) + M({1, 2})));
    CHECK(symm_into_qsymm(m({3})) == M({3}));
    CHECK(symm_into_qsymm(SymmFn{SymmBasis::P, testing::P("N[2]")}) == M({2}));
    CHECK(symm_into_qsymm(m({1, 1, 2})) == QSymmElement(M({1, 1, 2}) + M({1, 2, 1}) + M({2, 1, 1})));

    for (int wa = 1; wa <= 3; ++wa)
        for (int wb = 1; wb <= 6 - wa; ++wb)
            for (const auto& l : partitions_of(wa))
                for (const auto& u : partitions_of(wb)) {
                    const SymmFn a = m(l.parts()), b = m(u.parts());
                    const SymmFn prod{SymmBasis::M, symm::multiply(a, b).value};
                    REQUIRE(symm_into_qsymm(prod) == quasi_shuffle(symm_into_qsymm(a), symm_into_qsymm(b)));
                }
}

TEST_CASE("abelianization") {
    const auto h = [](const char* t) { return testing::P(t); };
    CHECK(abelianize(NSymmElement(Composition({2, 3}))).value == h("h[2]*h[3]"));
    CHECK(abelianize(NSymmElement(Composition({3, 2})) - NSymmElement(Composition({2, 3}))).value.is_zero());
    const NSymmElement z1(Composition({1}));
    CHECK(abelianize(concatenate(z1, z1) - 2 * NSymmElement(Composition({2}))).value == h("h[1]^2 - 2*h[2]"));
}

TEST_CASE("Lyndon words") {
    const auto all = GeneratorProfile::all_positive();
    CHECK(lyndon_generators(2, all) == std::vector<Composition>{Composition({2})});
    const auto three = lyndon_generators(3, all);
    CHECK(three.size() == 2);
    CHECK(std::find(three.begin(), three.end(), Composition({3})) != three.end());
    CHECK(std::find(three.begin(), three.end(), Composition({1, 2})) != three.end());
    CHECK(lyndon_generators(1, GeneratorProfile::parse("odd3")).empty());
    CHECK(is_lyndon(Composition({1, 1, 2})));
    CHECK_FALSE(is_lyndon(Composition({1, 2, 1, 2})));
    CHECK_FALSE(is_lyndon(Composition({2, 1})));
    CHECK_THROWS_AS(lyndon_generators(0, all), Error);
}

TEST_CASE("Lyndon enumeration matches a brute-force rotation test") {
    const auto p = GeneratorProfile::explicit_weights({1, 2});
    for (int n = 1; n <= 12; ++n) {
        std::size_t brute = 0;
        for (const auto& c : compositions_of(n)) {
            bool ok = true;
            for (int part : c.parts()) ok = ok && part <= 2;
            if (!ok) continue;
            const auto& w = c.parts();
            bool lyndon = true;
            for (std::size_t i = 1; i < w.size() && lyndon; ++i) {
                std::vector<int> r(w.begin() + static_cast<long>(i), w.end());
                r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(i));
                lyndon = w < r;
            }
            brute += lyndon;
        }
        CHECK(lyndon_generators(n, p).size() == brute);
    }
}

TEST_CASE("free algebra Hilbert series") {
    const auto all = GeneratorProfile::all_positive();
    const auto assoc = free_algebra_hilbert(all, 4, HilbertFlavor::Associative);
    CHECK(assoc == std::vector<Integer>{1, 1, 2, 4, 8});

    const auto odd = free_algebra_hilbert(GeneratorProfile::parse("odd3"), 8, HilbertFlavor::Associative);
    CHECK(std::vector<Integer>(odd.begin() + 3, odd.end()) == std::vector<Integer>{1, 0, 1, 1, 1, 2});

    const auto poly = free_algebra_hilbert(all, 12, HilbertFlavor::PolynomialOnLyndon);
    for (int n = 1; n <= 12; ++n) CHECK(poly[n] == Integer(1) << (n - 1));

    // Lie dimensions coincide with Lyndon counts
    for (const auto& name : {"all", "odd3", "ko", "2,3"}) {
        const auto profile = GeneratorProfile::parse(name);
        const auto lie = free_algebra_hilbert(profile, 14, HilbertFlavor::Lie);
        for (int n = 1; n <= 14; ++n) CHECK(lie[n] == Integer(lyndon_generators(n, profile).size()));
    }
    // one letter: free Lie algebra is one-dimensional
    const auto single = free_algebra_hilbert(GeneratorProfile::explicit_weights({1}), 6, HilbertFlavor::Lie);
    CHECK(single == std::vector<Integer>{0, 1, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(free_algebra_hilbert(all, 0, HilbertFlavor::Lie), Error);
}

TEST_CASE("generator profiles") {
    CHECK(GeneratorProfile::parse("ko").letters_up_to(14) == std::vector<int>{5, 9, 13});
    CHECK(GeneratorProfile::parse("ap:2:3").contains(8));
    CHECK_FALSE(GeneratorProfile::parse("odd3").contains(1));
    CHECK(GeneratorProfile::parse("(4,2,4)").letters_up_to(10) == std::vector<int>{2, 4});
    CHECK_THROWS_AS(GeneratorProfile::parse("ap:0:2"), Error);
    CHECK_THROWS_AS(GeneratorProfile::parse("bogus"), Error);
    CHECK(flavor_from_name("lie") == HilbertFlavor::Lie);
    CHECK_THROWS_AS(flavor_from_name("nope"), Error);
}

TEST_CASE("qsymm text") {
    const auto x = parse_qsymm("M(2,1) - 1/2*M(3) + 4");
    CHECK(x.coefficient(Composition({2, 1})) == 1);
    CHECK(x.coefficient(Composition({3})) == make_rational(-1, 2));
    CHECK(x.coefficient(Composition{}) == 4);
    CHECK(parse_qsymm(to_string(x)) == x);
    CHECK(to_string(QSymmElement()) == "0");
    CHECK(parse_qsymm("(1,1) + 2*(2)") == QSymmElement(M({1, 1}) + 2 * M({2})));
    CHECK_THROWS_AS(parse_qsymm("M(2"), Error);
    CHECK_THROWS_AS(parse_qsymm(""), Error);
}
