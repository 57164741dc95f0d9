#pragma once

#include "symgen/core/polynomial.hpp"

#include <random>

namespace symgen::testing {

inline Polynomial P(const char* text) { return parse_polynomial(text); }

/// Random sparse polynomial in c[1..4], x[1..2] with small rational coefficients.
inline Polynomial random_polynomial(std::mt19937& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> fam(0, 1);
    std::uniform_int_distribution<int> idx(1, 4);
    std::uniform_int_distribution<int> exp(0, 3);
    std::uniform_int_distribution<int> nfactors(0, 3);
    Polynomial p;
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<Monomial::Factor> factors;
        const int k = nfactors(rng);
        for (int f = 0; f < k; ++f) {
            const char family = fam(rng) ? 'c' : 'x';
            const int i = family == 'x' ? 1 + idx(rng) % 2 : idx(rng);
            factors.emplace_back(weighted(family, i), exp(rng));
        }
        p.add_term(Monomial::from_factors(factors), make_rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace symgen::testing
