#pragma once

#include "symgen/core/combinatorics.hpp"
#include "symgen/qsymm/quasisymmetric.hpp"

#include <string>

namespace symgen::mzv {

/// A real number together with a rigorous absolute error bound.
struct CertifiedReal {
    double value = 0;
    double error_bound = 0;

    double lower() const { return value - error_bound; }
    double upper() const { return value + error_bound; }
    bool contains(double x) const { return lower() <= x && x <= upper(); }
};

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal scale(const CertifiedReal& a, double c);

/// Increasing convention: (s1,...,sk) -> sum over i1 < ... < ik of i1^-s1 ... ik^-sk.
/// Admissible iff k >= 1 and sk >= 2, or the empty index (value 1).
bool admissible(const Composition& index);

/// Certified value with error_bound <= target_error. Throws Error("divergent") for
/// inadmissible indices and Error("invalid-argument") for a nonpositive target.
CertifiedReal mzv_eval(const Composition& index, double target_error);

/// Linear extension of mzv_eval along M_alpha -> zeta(alpha).
CertifiedReal zeta_specialize(const qsymm::QSymmElement& q, double target_error);

struct HomomorphismReport {
    CertifiedReal product_of_values;   // zeta(a) zeta(b)
    CertifiedReal value_of_product;    // zeta(a * b)
    double difference = 0;
    double allowed = 0;                // tol + propagated bounds
    bool pass = false;
};

HomomorphismReport homomorphism_check(const qsymm::QSymmElement& a, const qsymm::QSymmElement& b, double tol);

/// Euler's constant with a certified bound.
CertifiedReal euler_gamma(double target_error);

}  // namespace symgen::mzv
