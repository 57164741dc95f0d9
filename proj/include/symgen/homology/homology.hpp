#pragma once

#include "symgen/core/rational.hpp"
#include "symgen/symm/symmetric.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symgen::homology {

/// Connected graded algebra given by a basis of its augmentation ideal (the
/// unit is implicit) and a structure-constant table. Elements above
/// `truncation` are absent; `complete` records that nothing was dropped.
struct GradedAlgebraPresentation {
    std::vector<int> degrees;
    std::vector<std::string> names;
    std::map<std::pair<int, int>, std::map<int, Rational>> products;  // missing entry = 0
    int truncation = 0;
    bool complete = true;
    std::string description;

    std::size_t size() const { return degrees.size(); }
    const std::map<int, Rational>& multiply(int i, int j) const;
    /// Dimension per degree 0..truncation, unit included.
    std::vector<Integer> hilbert_series() const;
};

GradedAlgebraPresentation exterior_algebra(const std::vector<int>& degrees, int truncation);
GradedAlgebraPresentation square_zero_extension(const std::vector<int>& degrees, int truncation);
/// "exterior:5,9" or "squarezero:5,9".
GradedAlgebraPresentation parse_algebra(const std::string& text, int truncation);

enum class TruncationPolicy { Strict, MarkUnknown };

struct TorTable {
    int bound = 0;
    std::map<std::pair<int, int>, long> dims;  // (s, t) -> dim; zero cells omitted
    std::set<std::pair<int, int>> unknown;     // cells beyond the truncation
    bool differential_squares_to_zero = false;

    long dimension(int s, int t) const;
    bool is_known(int s, int t) const { return !unknown.contains({s, t}); }
    /// Dimension per total degree s + t; throws if an unknown cell contributes.
    std::vector<Integer> total_series() const;
};

/// Homology of the reduced bar complex with total degree s + t <= bound.
TorTable tor_via_bar(const GradedAlgebraPresentation& a, int bound, TruncationPolicy policy = TruncationPolicy::Strict);

/// Coefficients of prod_d (1 - t^d)^-1 through degree `bound`.
std::vector<Integer> predicted_polynomial_series(const std::vector<int>& degrees, int bound);
/// Coefficients of 1 / (1 - sum_d t^d): ordered words in the given letters.
std::vector<Integer> predicted_word_series(const std::vector<int>& degrees, int bound);
/// Coefficients of prod_d (1 + t^d).
std::vector<Integer> predicted_exterior_series(const std::vector<int>& degrees, int bound);

enum class CoefficientRing { SOmega, THH, KTheoryFiber };
CoefficientRing ring_from_name(const std::string& name);
std::string ring_name(CoefficientRing ring);

/// Degrees 4i + offset for i >= 0 (FromZero) or i >= 1 (FromOne), up to bound.
std::vector<int> generator_degrees(int offset, int bound, symm::GeneratorStart start);

/// sOmega = Lambda[y_{4i+1}], THH = Lambda[y_{4i+1}] (x) Q[y_{4i+2}],
/// KTheoryFiber = augmentation ideal of Q[y_{4i+2}].
std::vector<Integer> coefficient_ring_series(CoefficientRing ring, int bound,
                                             symm::GeneratorStart start = symm::GeneratorStart::FromZero);

}  // namespace symgen::homology
