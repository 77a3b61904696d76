#include "pspec/linops.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>

namespace pspec {

EigenSym sym_eig(const Matrix& M, double tol) {
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    if ((M - M.transpose()).cwiseAbs().maxCoeff() > tol * scale)
        throw ValidationError("sym_eig: input is not symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (M + M.transpose()));
    if (es.info() != Eigen::Success)
        throw NumericalError("sym_eig: eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

Matrix cholesky(const Matrix& M) {
    Eigen::LLT<Matrix> llt(0.5 * (M + M.transpose()));
    if (llt.info() != Eigen::Success)
        throw NumericalError("cholesky: matrix is not positive definite");
    return Matrix(llt.matrixU());
}

bool is_spd(const Matrix& M, double sym_tol) {
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    if ((M - M.transpose()).cwiseAbs().maxCoeff() > sym_tol * scale) return false;
    Eigen::LLT<Matrix> llt(0.5 * (M + M.transpose()));
    return llt.info() == Eigen::Success;
}

Matrix sqrt_spd(const Matrix& M) {
    const EigenSym es = sym_eig(M);
    if (es.eigenvalues.minCoeff() <= 0)
        throw NumericalError("sqrt_spd: matrix is not positive definite");
    return es.eigenvectors *
           es.eigenvalues.cwiseSqrt().asDiagonal() *
           es.eigenvectors.transpose();
}

Spectrum general_eig(const Matrix& M) {
    if (M.rows() != M.cols()) throw ValidationError("general_eig: matrix not square");
    Eigen::EigenSolver<Matrix> es(M);
    if (es.info() != Eigen::Success)
        throw NumericalError("general_eig: eigensolver did not converge");
    std::vector<Complex> vals(es.eigenvalues().data(),
                              es.eigenvalues().data() + es.eigenvalues().size());
    return Spectrum(std::move(vals));
}

namespace {
lapack_logical select_stable(const double* re, const double* /*im*/) {
    return *re < 0.0;
}
lapack_logical select_antistable(const double* re, const double* /*im*/) {
    return *re > 0.0;
}
}  // namespace

InvariantSubspace stable_invariant_subspace(const Matrix& H, HalfPlane half,
                                            double guard_rel) {
    const auto N = H.rows();
    if (H.cols() != N || N % 2 != 0)
        throw ValidationError("stable_invariant_subspace: expected square 2n x 2n matrix");
    const auto n = N / 2;
    const double guard = guard_rel * H.norm();

    // Row-major copy for LAPACKE.
    std::vector<double> a(N * N);
    for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index j = 0; j < N; ++j) a[i * N + j] = H(i, j);

    std::vector<double> wr(N), wi(N), vs(N * N);
    lapack_int sdim = 0;
    const lapack_int info = LAPACKE_dgees(
        LAPACK_ROW_MAJOR, 'V', 'S',
        half == HalfPlane::Stable ? select_stable : select_antistable,
        static_cast<lapack_int>(N), a.data(), static_cast<lapack_int>(N), &sdim,
        wr.data(), wi.data(), vs.data(), static_cast<lapack_int>(N));
    if (info != 0)
        throw NumericalError("ordered Schur decomposition failed");

    for (Eigen::Index i = 0; i < N; ++i)
        if (std::abs(wr[i]) < guard)
            throw NumericalError(
                "eigenvalue within the imaginary-axis guard band: system not strictly passive");
    if (sdim != n)
        throw NumericalError("invariant subspace has wrong dimension");

    InvariantSubspace out;
    out.basis = Matrix(N, n);
    out.restriction = Matrix(n, n);
    for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out.basis(i, j) = vs[i * N + j];
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out.restriction(i, j) = a[i * N + j];
    for (Eigen::Index i = 0; i < n; ++i)
        out.eigenvalues.emplace_back(wr[i], wi[i]);
    return out;
}

Congruence simultaneous_diagonalize(const Matrix& Kmax, const Matrix& Kmin) {
    const Matrix R = cholesky(Kmax);
    const Matrix S = R.inverse();
    if (!is_spd(Kmin))
        throw NumericalError("simultaneous_diagonalize: Kmin is not SPD");
    const EigenSym es = sym_eig(S.transpose() * Kmin * S);
    return {S * es.eigenvectors, es.eigenvalues};
}

}  // namespace pspec
