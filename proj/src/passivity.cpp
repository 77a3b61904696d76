#include "pspec/passivity.hpp"

#include <cmath>

namespace pspec {

namespace {

// (D + D^T)^{-1}, failing loudly when D + D^T is singular.
Matrix feedthrough_inverse(const Realization& R) {
    const Matrix Dsym = R.D + R.D.transpose();
    Eigen::FullPivLU<Matrix> lu(Dsym);
    if (!lu.isInvertible())
        throw NumericalError("D + D^T is singular");
    return lu.inverse();
}

}  // namespace

Hamiltonian hamiltonian(const Realization& R) {
    const Matrix S = feedthrough_inverse(R);
    const auto n = R.n();

    Hamiltonian H;
    H.P = R.A - R.B * S * R.C;
    H.Q = R.B * S * R.B.transpose();
    H.R = -R.C.transpose() * S * R.C;
    H.matrix = Matrix(2 * n, 2 * n);
    H.matrix << H.P, H.Q, H.R, -H.P.transpose();
    return H;
}

Spectrum spectral_zeros(const Realization& R, double guard_rel) {
    const Hamiltonian H = hamiltonian(R);
    Spectrum spec = general_eig(H.matrix);
    const double guard = guard_rel * H.matrix.norm();
    for (const auto& v : spec.values)
        if (std::abs(v.real()) < guard)
            throw NumericalError(
                "spectral zero within the imaginary-axis guard band: system not strictly passive");
    return spec;
}

double are_residual(const Realization& R, const Matrix& K) {
    if (K.rows() != R.n() || K.cols() != R.n())
        throw ValidationError("K dimension mismatch");
    const double scale = std::max(1.0, K.cwiseAbs().maxCoeff());
    if ((K - K.transpose()).cwiseAbs().maxCoeff() > kDefaultTol * scale)
        throw ValidationError("K must be symmetric");
    const Matrix S = feedthrough_inverse(R);
    const Matrix E = K * R.B - R.C.transpose();
    const Matrix res =
        R.A.transpose() * K + K * R.A + E * S * E.transpose();
    return res.norm();
}

StoragePair extremal_solutions(const Realization& R) {
    const Hamiltonian H = hamiltonian(R);

    auto solve = [&](HalfPlane half) {
        const InvariantSubspace sub = stable_invariant_subspace(H.matrix, half);
        Eigen::FullPivLU<Matrix> lu(sub.X());
        if (!lu.isInvertible())
            throw NumericalError("singular X block: realization not minimal");
        Matrix K = sub.Y() * lu.inverse();
        return Matrix(0.5 * (K + K.transpose()));
    };

    StoragePair pair;
    pair.K_min = solve(HalfPlane::Stable);
    pair.K_max = solve(HalfPlane::Antistable);
    pair.residual_min = are_residual(R, pair.K_min);
    pair.residual_max = are_residual(R, pair.K_max);

    if (!is_spd(pair.K_min))
        throw NumericalError("K_min is not positive definite: system not strictly passive");
    const double tol = 1e-8 * std::max(1.0, pair.K_max.norm());
    const EigenSym gap = sym_eig(pair.K_max - pair.K_min);
    if (gap.eigenvalues.minCoeff() < -tol)
        throw NumericalError("K_min exceeds K_max: extremal ordering violated");
    return pair;
}

double energy(const Matrix& K, const Vector& a) {
    if (!is_spd(K)) throw ValidationError("energy: K must be SPD");
    return a.dot(K * a);
}

PassivityReport is_strictly_passive(const Realization& R) {
    PassivityReport rep;

    rep.d_part_positive_definite = is_spd(R.D + R.D.transpose());
    if (!rep.d_part_positive_definite) {
        rep.reason = "D + D^T is not positive definite";
        return rep;
    }

    try {
        spectral_zeros(R);
        rep.no_imaginary_axis_spectral_zeros = true;
    } catch (const NumericalError& e) {
        rep.reason = e.what();
        return rep;
    }

    try {
        extremal_solutions(R);
        rep.k_min_positive_definite = true;
    } catch (const NumericalError& e) {
        rep.reason = e.what();
        return rep;
    }

    rep.strictly_passive = true;
    return rep;
}

}  // namespace pspec
