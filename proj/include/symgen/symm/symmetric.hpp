#pragma once

#include "symgen/core/combinatorics.hpp"
#include "symgen/core/polynomial.hpp"
#include "symgen/core/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symgen::symm {

/// Bases of the ring of symmetric functions. Generator i of every basis has
/// weight i (topological degree 2i is never stored).
///   E  elementary  = Chern classes       c[i]
///   P  power sums  = Newton polynomials  N[i]
///   H  complete homogeneous              h[i]
///   M  monomial symmetric                m[..]  (a monomial m[l1]*m[l2]*... is
///      only a key for the partition l; M is not a multiplicative basis)
enum class SymmBasis { E, P, H, M };

char family(SymmBasis basis);
SymmBasis basis_from_name(const std::string& name);
std::string basis_name(SymmBasis basis);

inline Generator generator(SymmBasis basis, int i) { return weighted(family(basis), i); }

/// Grading of all Symm families for the text parser (weight = index).
int symm_grading(char family, int index);

struct SymmFn {
    SymmBasis basis = SymmBasis::E;
    Polynomial value;

    static SymmFn generator(SymmBasis basis, int i) {
        return {basis, Polynomial::generator(symm::generator(basis, i))};
    }
    bool operator==(const SymmFn&) const = default;
};

/// Key monomial of the basis element indexed by `lambda`.
Monomial basis_monomial(SymmBasis basis, const Partition& lambda);
Partition partition_of(const Monomial& m);

/// Change of basis; an exact weight-preserving linear isomorphism.
SymmFn convert(const SymmFn& f, SymmBasis target);

/// Product of two symmetric functions, expressed in the basis of `a`.
SymmFn multiply(const SymmFn& a, const SymmFn& b);

/// sum_k c_k as a series in N: the weight-k component is e_k in the P basis,
/// obtained from prod_i exp((-1)^i N_{i+1}/(i+1)).
TruncatedSeries chern_from_newton(int bound);

/// sum_i d_i = (sum (-1)^i c_i) / (sum c_i), a series in the c[i].
TruncatedSeries d_classes(int bound);

/// prod_i exp(-2 N_{2i+1}/(2i+1)) with every N rewritten in Chern classes.
TruncatedSeries d_classes_via_newton(int bound);

/// sum_i a_i = (sum b_i)(sum (-1)^i b_i), a series in the homology classes b[i].
TruncatedSeries a_classes(int bound);

char homology_family();  // 'b'

// ------------------------------------------------------------------ Hopf

/// Element of Symm (x) Symm in the E basis, keyed by monomial pairs.
struct HopfTensor {
    std::map<std::pair<Monomial, Monomial>, Rational> terms;

    void add(const Monomial& left, const Monomial& right, const Rational& c);
    HopfTensor& operator+=(const HopfTensor& o);
    friend HopfTensor operator*(const HopfTensor& a, const HopfTensor& b);
    bool operator==(const HopfTensor&) const = default;
};

/// f (x) 1 + 1 (x) f with f in the E basis.
HopfTensor primitive_tensor(const Polynomial& e_basis_value);

/// Multiplicative extension of  Delta c_n = sum_{i+j=n} c_i (x) c_j.
/// Input in any basis; output in the E basis.
HopfTensor coproduct(const SymmFn& f);

bool is_primitive(const SymmFn& f);

enum class Model { BU, BUmodSO };

/// Whether weight-1 classes belong to the B(U/SO) model (k >= 0 convention)
/// or not (i > 0 convention).
enum class GeneratorStart { FromZero, FromOne };

Model model_from_name(const std::string& name);
std::string model_name(Model model);

/// Generator weights that the B(U/SO) model carries: odd k, optionally without 1.
bool model_has_weight(Model model, GeneratorStart start, int weight);

/// Basis of the weight-k primitives, as E-basis functions. For BU this is the
/// nullspace of Delta f - f(x)1 - 1(x)f over all weight-k monomials; for
/// BUmodSO the nullspace is intersected with the subalgebra generated by the
/// odd d-classes (the image of H*(B(U/SO))).
std::vector<SymmFn> primitive_space(int weight, Model model, GeneratorStart start = GeneratorStart::FromZero);

struct Indecomposables {
    int dimension = 0;
    std::vector<Polynomial> representatives;
};

/// I/I^2 in weight k for a polynomial algebra whose generators sit in the
/// weights `model_has_weight` allows (all weights for BU).
Indecomposables indecomposables(int weight, Model model, GeneratorStart start = GeneratorStart::FromZero);

/// True when p lies in the square of the augmentation ideal of Q[c_1, c_2, ...].
bool is_decomposable(const Polynomial& p);

struct IdentityReport {
    std::string identity;
    int max_weight = 0;
    bool exact_match = true;
    std::optional<int> first_mismatch_weight;
};

/// Compares two independently computed series weight by weight.
IdentityReport compare_series(const std::string& identity, const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// Named identity checks: "d-classes", "chern-newton", "a-classes".
IdentityReport identity_check(const std::string& which, int max_weight);

}  // namespace symgen::symm
