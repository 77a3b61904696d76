#pragma once

#include "pspec/types.hpp"

namespace pspec {

struct EigenSym {
    Vector eigenvalues;   // ascending
    Matrix eigenvectors;  // orthonormal columns
};

enum class HalfPlane { Stable, Antistable };

// Basis of an n-dimensional invariant subspace of a 2n x 2n matrix, with the
// spectrum of the restriction confined to one open half-plane.
struct InvariantSubspace {
    Matrix basis;        // 2n x n, [X; Y] stacked
    Matrix restriction;  // quasi-triangular R with H*basis = basis*R
    std::vector<Complex> eigenvalues;

    Matrix X() const { return basis.topRows(basis.rows() / 2); }
    Matrix Y() const { return basis.bottomRows(basis.rows() / 2); }
};

// Congruence T with T^T * Kmax * T = I and T^T * Kmin * T = diag ascending.
struct Congruence {
    Matrix T;
    Vector diagonal;
};

EigenSym sym_eig(const Matrix& M, double tol = kDefaultTol);

// Upper-triangular R with M = R^T R. Throws NumericalError when M is not SPD.
Matrix cholesky(const Matrix& M);

bool is_spd(const Matrix& M, double sym_tol = kDefaultTol);

Matrix sqrt_spd(const Matrix& M);

Spectrum general_eig(const Matrix& M);

// Ordered real Schur decomposition: the selected eigenvalues are moved to the
// leading block and the corresponding Schur vectors span the subspace.
// Throws NumericalError when an eigenvalue sits inside the imaginary-axis
// guard band |Re| < guard_rel * ||H||_F.
InvariantSubspace stable_invariant_subspace(const Matrix& H, HalfPlane half,
                                            double guard_rel = 1e-8);

Congruence simultaneous_diagonalize(const Matrix& Kmax, const Matrix& Kmin);

}  // namespace pspec
