#pragma once

#include "pspec/types.hpp"

namespace pspec {

// Even polynomial n(s)d(-s) + n(-s)d(s); coefficients in descending powers
// with the odd entries exactly zero.
struct EvenPolynomial {
    Vector coeffs;  // length 2n+1
    Eigen::Index degree() const { return coeffs.size() - 1; }
};

struct VietaReport {
    double product_lhs = 0;      // |mu_1 ... mu_n|
    double product_rhs = 0;      // sqrt(prod p * prod z)
    double sum_sq_lhs = 0;       // sum mu_i^2
    double sum_sq_rhs = 0;       // pole/zero symmetric-function formula
    double product_rel_err = 0;
    double sum_sq_rel_err = 0;
    bool pass = false;
};

EvenPolynomial szp_polynomial(const RationalFunction& f);

// Roots computed in the x = s^2 variable, then split into both half-planes.
Spectrum szp_roots(const EvenPolynomial& p);

VietaReport vieta_checks(const RationalFunction& f, double rel_tol = 1e-8);

// Zeros of f(x) = sum_k q_k / (x^2 - p_k^2) via the cleared-denominator
// polynomial; true when every zero is real within tol.
bool real_zero_lemma_check(const Vector& p, const Vector& q, double tol = 1e-8);

}  // namespace pspec
