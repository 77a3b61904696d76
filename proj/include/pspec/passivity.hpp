#pragma once

#include "pspec/linops.hpp"
#include "pspec/types.hpp"

namespace pspec {

// Passivity Hamiltonian of a realization, with the defining blocks kept
// around for inspection: matrix = [P, Q; R, -P^T].
struct Hamiltonian {
    Matrix matrix;
    Matrix P;
    Matrix Q;
    Matrix R;
};

// Extremal ARE solutions K_min (available storage) and K_max (required
// supply), with their residual norms.
struct StoragePair {
    Matrix K_min;
    Matrix K_max;
    double residual_min = 0;
    double residual_max = 0;
};

struct PassivityReport {
    bool strictly_passive = false;
    bool d_part_positive_definite = false;
    bool no_imaginary_axis_spectral_zeros = false;
    bool k_min_positive_definite = false;
    std::string reason;  // empty when strictly passive
};

Hamiltonian hamiltonian(const Realization& R);

// All 2n eigenvalues of the Hamiltonian. Throws when one of them falls inside
// the imaginary-axis guard band.
Spectrum spectral_zeros(const Realization& R, double guard_rel = 1e-8);

// Frobenius norm of A^T K + K A + (K B - C^T)(D + D^T)^{-1}(B^T K - C).
double are_residual(const Realization& R, const Matrix& K);

StoragePair extremal_solutions(const Realization& R);

// a^T K a, the stored-energy quadratic form.
double energy(const Matrix& K, const Vector& a);

PassivityReport is_strictly_passive(const Realization& R);

}  // namespace pspec
