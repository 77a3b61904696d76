#include "pspec/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pspec {

Realization::Realization(Matrix A_, Matrix B_, Matrix C_, Matrix D_)
    : A(std::move(A_)), B(std::move(B_)), C(std::move(C_)), D(std::move(D_)) {
    const auto n = A.rows();
    if (A.cols() != n) throw ValidationError("A must be square");
    if (B.rows() != n) throw ValidationError("B row count must match A");
    if (C.cols() != n) throw ValidationError("C column count must match A");
    if (C.rows() != B.cols())
        throw ValidationError("transfer matrix must be square (C rows == B cols)");
    if (D.rows() != C.rows() || D.cols() != B.cols())
        throw ValidationError("D dimensions must match B, C");
}

RationalFunction::RationalFunction(Vector num_, Vector den_)
    : num(std::move(num_)), den(std::move(den_)) {
    if (num.size() == 0 || den.size() == 0)
        throw ValidationError("empty coefficient list");
    if (num.size() != den.size())
        throw ValidationError("rational function must be biproper (deg num == deg den)");
    if (num(0) == 0.0 || den(0) == 0.0)
        throw ValidationError("leading coefficients must be nonzero");
    const double lead = den(0);
    den /= lead;
    num /= lead;
}

RationalFunction RationalFunction::from_roots(const std::vector<Complex>& zeros,
                                              const std::vector<Complex>& poles,
                                              double gain) {
    auto expand = [](const std::vector<Complex>& roots) {
        std::vector<Complex> c{1.0};
        for (const auto& r : roots) {
            std::vector<Complex> next(c.size() + 1, 0.0);
            for (size_t i = 0; i < c.size(); ++i) {
                next[i] += c[i];
                next[i + 1] -= c[i] * r;
            }
            c = std::move(next);
        }
        Vector out(c.size());
        for (size_t i = 0; i < c.size(); ++i) out(i) = c[i].real();
        return out;
    };
    if (zeros.size() != poles.size())
        throw ValidationError("biproper function needs equal pole/zero counts");
    return RationalFunction(gain * expand(zeros), expand(poles));
}

Complex RationalFunction::eval(Complex s) const {
    auto horner = [&](const Vector& c) {
        Complex acc = 0.0;
        for (Eigen::Index i = 0; i < c.size(); ++i) acc = acc * s + c(i);
        return acc;
    };
    return horner(num) / horner(den);
}

PoleResidue::PoleResidue(double g_inf_, Vector poles_, Vector residues_)
    : g_inf(g_inf_), poles(std::move(poles_)), residues(std::move(residues_)) {
    if (poles.size() != residues.size())
        throw ValidationError("pole/residue length mismatch");
    if (g_inf <= 0) throw ValidationError("g_inf must be positive");
    for (Eigen::Index i = 0; i < poles.size(); ++i) {
        if (poles(i) >= 0) throw ValidationError("poles must be negative");
        if (i > 0 && poles(i) <= poles(i - 1))
            throw ValidationError("poles must be distinct and strictly increasing");
        if (residues(i) == 0) throw ValidationError("zero residue: non-minimal data");
    }
    if (residues.size() > 0) {
        sign = residues(0) > 0 ? 1 : -1;
        for (Eigen::Index i = 1; i < residues.size(); ++i)
            if ((residues(i) > 0 ? 1 : -1) != sign)
                throw ValidationError("residues must share one sign");
    }
}

Spectrum::Spectrum(std::vector<Complex> v) : values(std::move(v)) {
    std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

std::vector<Complex> Spectrum::stable() const {
    std::vector<Complex> out;
    for (const auto& v : values)
        if (v.real() < 0) out.push_back(v);
    return out;
}

std::vector<Complex> Spectrum::antistable() const {
    std::vector<Complex> out;
    for (const auto& v : values)
        if (v.real() > 0) out.push_back(v);
    return out;
}

bool Spectrum::all_real(double tol) const {
    for (const auto& v : values)
        if (std::abs(v.imag()) > tol) return false;
    return true;
}

Vector Spectrum::stable_reals() const {
    const auto s = stable();
    Vector out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out(i) = s[i].real();
    std::sort(out.begin(), out.end());
    return out;
}

SymmetryCertificate validate_realization(const Realization& R, double tol) {
    const auto n = R.n();
    const auto m = R.m();
    if (n < m)
        throw ValidationError("state dimension must be at least the port dimension");

    // Numerical rank via singular values, threshold n*eps*sigma_max.
    auto rank_of = [](const Matrix& M) {
        Eigen::JacobiSVD<Matrix> svd(M);
        const auto& sv = svd.singularValues();
        if (sv.size() == 0 || sv(0) == 0.0) return Eigen::Index(0);
        const double thresh =
            static_cast<double>(std::max(M.rows(), M.cols())) *
            std::numeric_limits<double>::epsilon() * sv(0);
        Eigen::Index r = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > thresh) ++r;
        return r;
    };
    if (rank_of(R.B) < m) throw ValidationError("B is rank deficient");
    if (rank_of(R.C) < m) throw ValidationError("C is rank deficient");

    const double dA = (R.A - R.A.transpose()).cwiseAbs().maxCoeff();
    const double dD = (R.D - R.D.transpose()).cwiseAbs().maxCoeff();
    const double dPlus = (R.B - R.C.transpose()).cwiseAbs().maxCoeff();
    const double dMinus = (R.B + R.C.transpose()).cwiseAbs().maxCoeff();

    SymmetryCertificate cert;
    const int sign = dPlus <= dMinus ? 1 : -1;
    cert.defect = std::max({dA, dD, std::min(dPlus, dMinus)});
    cert.is_symmetric = cert.defect <= tol;
    cert.sign = cert.is_symmetric ? sign : 0;
    return cert;
}

OrderedReals order_reals(const std::vector<double>& xs) {
    if (xs.empty()) throw ValidationError("cannot order an empty list");
    std::vector<double> sorted = xs;
    std::stable_sort(sorted.begin(), sorted.end());

    OrderedReals out;
    out.values = Eigen::Map<const Vector>(sorted.data(), sorted.size());
    const auto n = out.values.size();
    out.diffs = Vector(n - 1);
    for (Eigen::Index i = 0; i + 1 < n; ++i)
        out.diffs(i) = out.values(i + 1) - out.values(i);
    out.has_diffs = n > 1;
    if (out.has_diffs) {
        out.nu_min = out.diffs.minCoeff();
        out.nu_max = out.diffs.maxCoeff();
    }
    return out;
}

OrderedReals order_reals(const Vector& xs) {
    return order_reals(std::vector<double>(xs.begin(), xs.end()));
}

}  // namespace pspec
