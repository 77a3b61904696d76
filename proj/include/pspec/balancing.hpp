#pragma once

#include "pspec/passivity.hpp"

namespace pspec {

enum class BalancedForm { PR, QuasiI, QuasiII };

// A realization together with the state transform that produced it and the
// singular values of its form (sigma, sigma+ or sigma-, ascending).
struct BalancedRealization {
    Realization realization;
    BalancedForm form;
    Vector sigma;
    Matrix T;  // state transform from the source realization (x = T x_new)
};

// Multiset comparison of sigma, sqrt(sigma+) and 1/sqrt(sigma-).
struct SigmaRelations {
    Vector sigma;
    Vector sigma_plus;
    Vector sigma_minus;
    double max_deviation = 0;
};

struct SymmetricBalanceReport {
    bool balanced = false;
    double product_defect = 0;       // || K_max * K_min - I ||
    double inverse_residual = 0;     // ARE residual of K_max^{-1}
};

// Applies the state transform x = T x_new: A' = T^{-1} A T, B' = T^{-1} B,
// C' = C T, D' = D. Storage functions transform congruently, K' = T^T K T.
Realization apply_state_transform(const Realization& R, const Matrix& T);

BalancedRealization pr_balance(const Realization& R);
BalancedRealization quasi_balance_form1(const Realization& R);
BalancedRealization quasi_balance_form2(const Realization& R);
BalancedRealization form1_to_form2(const BalancedRealization& B1);

SigmaRelations singular_value_relations(const Realization& R);

SymmetricBalanceReport check_symmetric_implies_balanced(const Realization& R,
                                                        double tol = 1e-8);

}  // namespace pspec
