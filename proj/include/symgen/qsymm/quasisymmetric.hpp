#pragma once

#include "symgen/core/combinatorics.hpp"
#include "symgen/core/rational.hpp"
#include "symgen/symm/symmetric.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symgen::qsymm {

/// Finite linear combination of composition-indexed basis elements. Used for
/// QSymm in the monomial quasisymmetric basis M_alpha and for NSymm in the
/// word basis Z_{i1} ... Z_{ik}; the product decides which algebra it is.
class LinearCombination {
public:
    using TermMap = std::map<Composition, Rational>;

    LinearCombination() = default;
    explicit LinearCombination(const Composition& c, const Rational& coeff = 1);

    static LinearCombination unit() { return LinearCombination(Composition{}); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Composition& c) const;
    void add_term(const Composition& c, const Rational& coeff);

    LinearCombination& operator+=(const LinearCombination& o);
    LinearCombination& operator-=(const LinearCombination& o);
    LinearCombination& operator*=(const Rational& c);
    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(LinearCombination a, const Rational& c) { return a *= c; }
    friend LinearCombination operator*(const Rational& c, LinearCombination a) { return a *= c; }

    bool operator==(const LinearCombination&) const = default;

private:
    TermMap terms_;
};

/// M_alpha basis; product is the quasi-shuffle.
struct QSymmElement : LinearCombination {
    using LinearCombination::LinearCombination;
    QSymmElement(LinearCombination l) : LinearCombination(std::move(l)) {}
};

/// Word basis; product is concatenation.
struct NSymmElement : LinearCombination {
    using LinearCombination::LinearCombination;
    NSymmElement(LinearCombination l) : LinearCombination(std::move(l)) {}
};

QSymmElement quasi_shuffle(const QSymmElement& a, const QSymmElement& b);
NSymmElement concatenate(const NSymmElement& a, const NSymmElement& b);

/// Elements of a tensor square, keyed by composition pairs.
struct CompositionTensor {
    std::map<std::pair<Composition, Composition>, Rational> terms;

    void add(const Composition& left, const Composition& right, const Rational& c);
    bool operator==(const CompositionTensor&) const = default;
};

/// Delta M_alpha = sum over splittings alpha = beta . gamma of M_beta (x) M_gamma.
CompositionTensor deconcatenation_coproduct(const QSymmElement& a);

/// Componentwise quasi-shuffle on the tensor square.
CompositionTensor quasi_shuffle(const CompositionTensor& a, const CompositionTensor& b);

/// <w, M_alpha> = delta_{w, alpha}, extended bilinearly.
Rational pairing(const NSymmElement& a, const QSymmElement& x);
/// <a (x) b, t> for t in QSymm (x) QSymm.
Rational pairing(const NSymmElement& a, const NSymmElement& b, const CompositionTensor& t);

/// m_lambda -> sum of M_alpha over the distinct rearrangements alpha of lambda.
/// Input in any basis; it is first converted to the monomial basis.
QSymmElement symm_into_qsymm(const symm::SymmFn& f);

/// Word (i1,...,ik) -> h_{i1} ... h_{ik} in the H basis.
symm::SymmFn abelianize(const NSymmElement& a);

/// Allowed letter weights: either an arithmetic progression first, first+step, ...
/// or an explicit finite list.
class GeneratorProfile {
public:
    static GeneratorProfile all_positive() { return progression(1, 1); }
    static GeneratorProfile progression(int first, int step);
    static GeneratorProfile explicit_weights(std::vector<int> weights);
    /// `all`, `odd3` ({3,5,7,...}), `ko` ({5,9,13,...}), `ap:<first>:<step>`, or a list `3,5,8`.
    static GeneratorProfile parse(std::string_view text);

    /// Letters of weight <= n in increasing order.
    std::vector<int> letters_up_to(int n) const;
    bool contains(int weight) const;
    std::string describe() const;

private:
    int first_ = 1;
    int step_ = 1;
    std::vector<int> explicit_;
};

/// Lyndon words of total weight n over the profile's alphabet, letters
/// ordered by weight, words compared lexicographically.
std::vector<Composition> lyndon_generators(int n, const GeneratorProfile& profile);

bool is_lyndon(const Composition& word);

enum class HilbertFlavor { Associative, Lie, PolynomialOnLyndon };
HilbertFlavor flavor_from_name(const std::string& name);

/// Dimensions in degrees 0..bound.
std::vector<Integer> free_algebra_hilbert(const GeneratorProfile& profile, int bound, HilbertFlavor flavor);

/// `M(2,1) - 1/2*M(3) + 4` style text; `(2,1)` alone means M(2,1).
QSymmElement parse_qsymm(std::string_view text);
std::string to_string(const LinearCombination& a, char symbol = 'M');

}  // namespace symgen::qsymm
