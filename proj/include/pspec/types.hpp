#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pspec {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Complex = std::complex<double>;

// Structural problems with the input data (dimensions, rank, malformed files).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failures (non-SPD matrix, eigenvalue on the imaginary axis, ...).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kDefaultTol = 1e-9;

// State-space quadruple (A, B, C, D) of a square LTI system.
struct Realization {
    Matrix A;
    Matrix B;
    Matrix C;
    Matrix D;

    Realization(Matrix A_, Matrix B_, Matrix C_, Matrix D_);

    Eigen::Index n() const { return A.rows(); }
    Eigen::Index m() const { return B.cols(); }
};

struct SymmetryCertificate {
    bool is_symmetric = false;
    int sign = 0;       // +1 if B = C^T, -1 if B = -C^T; 0 when not symmetric
    double defect = 0;  // max elementwise deviation among A-A^T, B -/+ C^T, D-D^T
};

// Biproper SISO rational function, coefficients in descending powers.
// Denominator is normalized monic on construction.
struct RationalFunction {
    Vector num;
    Vector den;

    RationalFunction(Vector num_, Vector den_);

    Eigen::Index degree() const { return den.size() - 1; }

    // Builds (s - z_1)...(s - z_n) / (s - p_1)...(s - p_n) scaled by gain.
    static RationalFunction from_roots(const std::vector<Complex>& zeros,
                                       const std::vector<Complex>& poles,
                                       double gain = 1.0);

    Complex eval(Complex s) const;
};

// Partial-fraction form g_inf + sum_k g_k / (s - p_k) with common residue sign.
struct PoleResidue {
    double g_inf = 0;
    Vector poles;     // strictly increasing, all negative
    Vector residues;  // all of one sign
    int sign = 0;     // sign shared by the residues

    PoleResidue(double g_inf_, Vector poles_, Vector residues_);
};

// Multiset of complex eigenvalues, sorted ascending by (Re, Im).
struct Spectrum {
    std::vector<Complex> values;

    explicit Spectrum(std::vector<Complex> v);
    Spectrum() = default;

    std::vector<Complex> stable() const;
    std::vector<Complex> antistable() const;
    bool all_real(double tol = 1e-8) const;
    // Real parts of the stable half, sorted ascending.
    Vector stable_reals() const;
};

// Ascending real list with successive differences.
struct OrderedReals {
    Vector values;
    Vector diffs;          // length n-1
    bool has_diffs = false;
    double nu_min = 0;
    double nu_max = 0;
};

SymmetryCertificate validate_realization(const Realization& R,
                                         double tol = kDefaultTol);

OrderedReals order_reals(const std::vector<double>& xs);
OrderedReals order_reals(const Vector& xs);

}  // namespace pspec
