#pragma once

#include "symgen/core/polynomial.hpp"
#include "symgen/core/series.hpp"
#include "symgen/mzv/mzv.hpp"
#include "symgen/symm/symmetric.hpp"

#include <map>
#include <string>
#include <vector>

namespace symgen::genus {

// ---------------------------------------------------------------- manifolds

/// Cohomology generator of even real degree 2 * gen.degree with gen^nilpotency = 0
/// (nilpotency is the smallest vanishing power: 3 for the hyperplane class of CP2).
struct CohomologyGenerator {
    Generator gen;
    int nilpotency = 1;
};

/// Rational shadow of a stably almost complex manifold: a truncated polynomial
/// cohomology ring, the total Chern class of the tangent bundle, and the
/// volume monomial that the fundamental class pairs to 1.
class ManifoldModel {
public:
    ManifoldModel(std::string name, int dim_c, std::vector<CohomologyGenerator> generators, Polynomial total_chern,
                  Monomial volume);

    static ManifoldModel point();
    static ManifoldModel projective_space(int n);
    static ManifoldModel product(const ManifoldModel& m, const ManifoldModel& n);
    /// "point", "CPn", or products "CP1xCP2xCP1".
    static ManifoldModel from_name(const std::string& name);
    static ManifoldModel from_json(const std::string& text);
    std::string to_json() const;

    const std::string& name() const noexcept { return name_; }
    int dim_c() const noexcept { return dim_c_; }
    const std::vector<CohomologyGenerator>& generators() const noexcept { return generators_; }
    const Polynomial& total_chern() const noexcept { return total_chern_; }
    const Monomial& volume() const noexcept { return volume_; }

    /// Complex degree of the cohomology part of a monomial; other factors are coefficients.
    int class_degree(const Monomial& m) const;
    /// Kills monomials that vanish in the cohomology ring.
    Polynomial reduce(const Polynomial& p) const;
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const { return reduce(a * b); }
    /// Coefficient of the volume monomial; a polynomial in any non-cohomology symbols.
    Polynomial pair(const Polynomial& p) const;
    Polynomial chern_class(int i) const;
    /// Parses a class written in this model's generators, e.g. "x[1]^2 - 1/2*x[2]".
    Polynomial parse_class(const std::string& text) const;
    /// Betti numbers by real degree 0..2n.
    std::vector<Integer> betti() const;
    /// Rewrites the generators of `other` as they appear in product(*this, other).
    Polynomial embed_second_factor(const ManifoldModel& other, const Polynomial& p) const;

private:
    bool is_cohomology(const Generator& g) const;
    int max_index() const;

    std::string name_;
    int dim_c_;
    std::vector<CohomologyGenerator> generators_;
    Polynomial total_chern_;
    Monomial volume_;
};

/// ch_k = N_k(c_1, ..., c_k) / k!, reduced; ch_0 is the rank.
Polynomial chern_character(const ManifoldModel& m, int k);

// ------------------------------------------------------------------- genera

/// Characteristic power series Q(x) = 1 + ... of a multiplicative genus.
/// Coefficients may be symbolic.
struct GenusSeries {
    std::string name;
    TruncatedSeries characteristic;

    static GenusSeries a_hat(int bound);  // (x/2) / sinh(x/2)
    static GenusSeries todd(int bound);   // x / (1 - e^-x)
    static GenusSeries l_genus(int bound);  // x / tanh(x)
    /// Q_f = x / f(x) for an exponential f = x + O(x^2).
    static GenusSeries from_exponential(const std::string& name, const TruncatedSeries& f);
    static GenusSeries from_name(const std::string& name, int bound);

    /// f = x / Q.
    TruncatedSeries exponential() const;
};

/// exp(sum_k q_k N_k(c(M))) where log Q = sum_k q_k x^k.
Polynomial multiplicative_class(const ManifoldModel& m, const GenusSeries& rho);
/// <K_rho(TM), [M]>; symbolic when rho is.
Polynomial genus(const ManifoldModel& m, const GenusSeries& rho);
/// Rational value; throws Error("not-rational") for symbolic series.
Rational genus_value(const ManifoldModel& m, const GenusSeries& rho);

/// (n + 1) [x^{n+1}] f^{-1}: the value on CPn of the genus with exponential f.
Polynomial genus_from_exponential(const TruncatedSeries& f, int n);

/// 1/Gamma(x) = x exp(g x - sum_{k>=2} (-1)^k z_k x^k / k) through x^bound, with
/// symbolic g[1] (Euler's constant) and z[k] (zeta(k)); [x^m] has weight m - 1.
TruncatedSeries gamma_exponential(int bound);
Generator euler_constant_symbol();
Generator zeta_symbol(int k);
/// The same coefficients evaluated with certified Euler and zeta values.
std::vector<mzv::CertifiedReal> gamma_exponential_numeric(int bound, double target_error);

// -------------------------------------------------------------- deformation

/// t_k for odd k >= 1. Values are polynomials so that symbolic or rational
/// parameters share one code path.
struct DeformationParameters {
    std::map<int, Polynomial> values;

    static DeformationParameters symbolic(int max_k, symm::GeneratorStart start = symm::GeneratorStart::FromZero);
    /// "1:1/3,3:0" -> t_1 = 1/3, t_3 = 0.
    static DeformationParameters parse(const std::string& text);
    void set(int k, const Polynomial& value);
    Polynomial get(int k) const;
    /// Largest k with a nonzero entry, 0 if none.
    int max_k() const;

    friend DeformationParameters operator+(const DeformationParameters& a, const DeformationParameters& b);
    bool operator==(const DeformationParameters&) const = default;
};

Generator deformation_symbol(int k);  // t[k]

/// Rejects nonzero t_1 under the FromOne convention.
void check_convention(const DeformationParameters& t, symm::GeneratorStart start);

/// < exp(sum_k t_k ch_k(TM)) K_rho(TM), [M] >.
Polynomial deform_genus(const ManifoldModel& m, const GenusSeries& rho, const DeformationParameters& t,
                        symm::GeneratorStart start = symm::GeneratorStart::FromZero);

/// The deformed genus as a series: Q'(x) = Q(x) exp(sum_k t_k x^k / k!).
GenusSeries deform_series(const GenusSeries& rho, const DeformationParameters& t,
                          symm::GeneratorStart start = symm::GeneratorStart::FromZero);

/// z = re + i im over Q.
struct GaussianRational {
    Rational re = 0, im = 0;
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool operator==(const GaussianRational&) const = default;
};

GaussianRational evaluate_gaussian(const Polynomial& p, const std::map<Generator, GaussianRational>& values);

/// A-hat deformed by t_k = zeta(k) for odd 3 <= k <= n (or the given overrides),
/// evaluated with certified zeta values.
mzv::CertifiedReal a_hat_zeta(const ManifoldModel& m, double target_error,
                              const std::map<int, mzv::CertifiedReal>& overrides = {});

// ------------------------------------------------------------------- checks

/// ch_k(TM) + ch_k(conj TM) == 0, with c_i(conj) = (-1)^i c_i.
bool diagonal_vanishing_check(const ManifoldModel& m, int k);
/// ch_k(T(M x N)) == ch_k(TM) (x) 1 + 1 (x) ch_k(TN); k must be odd.
bool primitivity_check(const ManifoldModel& m, const ManifoldModel& n, int k);

/// Betti series of M (real degrees) convolved with the sOmega coefficient series.
std::vector<Integer> morphism_module_series(const ManifoldModel& m, int bound,
                                            symm::GeneratorStart start = symm::GeneratorStart::FromZero);

// ------------------------------------------------------------------ coaction

/// sum over keys beta of class (x) beta, where beta runs over monomials in the
/// y[4i+2] (dual basis of Q[y_{4i+2}]); key degree is the real degree.
using CoactionElement = std::map<Monomial, Polynomial>;
using IteratedCoaction = std::map<std::pair<Monomial, Monomial>, Polynomial>;

Generator coaction_symbol(int i);  // y[4i+2]

/// x -> sum_alpha (x * prod d_{2i+1}(TM)^{alpha_i}) (x) beta_alpha, keys of real degree <= bound.
CoactionElement coaction(const ManifoldModel& m, const Polynomial& x, int bound,
                         symm::GeneratorStart start = symm::GeneratorStart::FromZero);
Polynomial counit(const CoactionElement& e);
/// (coaction (x) id) o coaction.
IteratedCoaction coaction_then_coaction(const ManifoldModel& m, const Polynomial& x, int bound,
                                        symm::GeneratorStart start = symm::GeneratorStart::FromZero);
/// (id (x) Delta) o coaction with Delta beta_g = sum_{a b = g} beta_a (x) beta_b.
IteratedCoaction coaction_then_coproduct(const ManifoldModel& m, const Polynomial& x, int bound,
                                         symm::GeneratorStart start = symm::GeneratorStart::FromZero);

/// d_k(TM): the weight-k part of c(conj TM) / c(TM).
Polynomial d_class(const ManifoldModel& m, int k);

}  // namespace symgen::genus
