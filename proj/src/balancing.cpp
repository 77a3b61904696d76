#include "pspec/balancing.hpp"

#include <algorithm>
#include <cmath>

namespace pspec {

Realization apply_state_transform(const Realization& R, const Matrix& T) {
    Eigen::FullPivLU<Matrix> lu(T);
    if (!lu.isInvertible())
        throw ValidationError("state transform must be invertible");
    const Matrix Tinv = lu.inverse();
    return Realization(Tinv * R.A * T, Tinv * R.B, R.C * T, R.D);
}

BalancedRealization pr_balance(const Realization& R) {
    const StoragePair pair = extremal_solutions(R);

    // Balance K_max^{-1} (contravariant) against K_min (covariant) with the
    // square-root algorithm; the resulting congruence sends K_min to diag(s)
    // and K_max to diag(1/s).
    const Matrix L = cholesky(pair.K_max.inverse()).transpose();
    const EigenSym es = sym_eig(L.transpose() * pair.K_min * L);
    if (es.eigenvalues.minCoeff() <= 0)
        throw NumericalError("pr_balance: K_min lost definiteness");
    const Vector sigma = es.eigenvalues.cwiseSqrt();
    const Matrix T =
        L * es.eigenvectors * sigma.cwiseInverse().cwiseSqrt().asDiagonal();

    return {apply_state_transform(R, T), BalancedForm::PR, sigma, T};
}

BalancedRealization quasi_balance_form1(const Realization& R) {
    const StoragePair pair = extremal_solutions(R);
    const Congruence c = simultaneous_diagonalize(pair.K_max, pair.K_min);
    return {apply_state_transform(R, c.T), BalancedForm::QuasiI, c.diagonal, c.T};
}

BalancedRealization quasi_balance_form2(const Realization& R) {
    const StoragePair pair = extremal_solutions(R);
    const Congruence c = simultaneous_diagonalize(pair.K_min, pair.K_max);
    return {apply_state_transform(R, c.T), BalancedForm::QuasiII, c.diagonal, c.T};
}

BalancedRealization form1_to_form2(const BalancedRealization& B1) {
    if (B1.form != BalancedForm::QuasiI)
        throw ValidationError("form1_to_form2: input must be in quasi-balanced Form-I");
    const auto n = B1.sigma.size();

    // (Lambda+)^{-1/2} followed by an order reversal so the Form-II diagonal
    // comes out ascending again.
    Matrix T = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        T(i, n - 1 - i) = 1.0 / std::sqrt(B1.sigma(i));

    Vector sigma_minus(n);
    for (Eigen::Index i = 0; i < n; ++i)
        sigma_minus(i) = 1.0 / B1.sigma(n - 1 - i);

    return {apply_state_transform(B1.realization, T), BalancedForm::QuasiII,
            sigma_minus, T};
}

SigmaRelations singular_value_relations(const Realization& R) {
    SigmaRelations rel;
    rel.sigma = pr_balance(R).sigma;
    rel.sigma_plus = quasi_balance_form1(R).sigma;
    rel.sigma_minus = quasi_balance_form2(R).sigma;

    const auto n = rel.sigma.size();
    Vector from_plus = rel.sigma_plus.cwiseSqrt();
    Vector from_minus(n);
    for (Eigen::Index i = 0; i < n; ++i)
        from_minus(i) = 1.0 / std::sqrt(rel.sigma_minus(n - 1 - i));

    rel.max_deviation =
        std::max((rel.sigma - from_plus).cwiseAbs().maxCoeff(),
                 (rel.sigma - from_minus).cwiseAbs().maxCoeff());
    return rel;
}

SymmetricBalanceReport check_symmetric_implies_balanced(const Realization& R,
                                                        double tol) {
    const SymmetryCertificate cert = validate_realization(R);
    if (!cert.is_symmetric)
        throw ValidationError("check_symmetric_implies_balanced: realization is not symmetric");

    const StoragePair pair = extremal_solutions(R);
    SymmetricBalanceReport rep;
    rep.product_defect =
        (pair.K_max * pair.K_min - Matrix::Identity(R.n(), R.n())).norm();
    rep.inverse_residual = are_residual(R, pair.K_max.inverse());
    const double scale = std::max(1.0, pair.K_max.norm() * pair.K_min.norm());
    rep.balanced = rep.product_defect <= tol * scale &&
                   rep.inverse_residual <= tol * scale;
    return rep;
}

}  // namespace pspec
