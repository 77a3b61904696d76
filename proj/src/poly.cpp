#include "pspec/poly.hpp"

#include "pspec/linops.hpp"

namespace pspec {

std::vector<Complex> poly_roots(const Vector& coeffs) {
    if (coeffs.size() == 0 || coeffs(0) == 0.0)
        throw ValidationError("poly_roots: zero leading coefficient");
    const auto n = coeffs.size() - 1;
    if (n == 0) return {};
    Matrix comp = Matrix::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) comp(i, n - 1) = -coeffs(n - i) / coeffs(0);
    // Companion in control-canonical layout: last column holds the
    // negated monic coefficients, subdiagonal is identity.
    return general_eig(comp).values;
}

Vector poly_mul(const Vector& a, const Vector& b) {
    Vector out = Vector::Zero(a.size() + b.size() - 1);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j) out(i + j) += a(i) * b(j);
    return out;
}

Vector poly_derivative(const Vector& coeffs) {
    const auto n = coeffs.size() - 1;
    if (n == 0) return Vector::Zero(1);
    Vector out(n);
    for (Eigen::Index i = 0; i < n; ++i) out(i) = coeffs(i) * static_cast<double>(n - i);
    return out;
}

double poly_eval(const Vector& coeffs, double x) {
    double acc = 0;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) acc = acc * x + coeffs(i);
    return acc;
}

Complex poly_eval(const Vector& coeffs, Complex x) {
    Complex acc = 0;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) acc = acc * x + coeffs(i);
    return acc;
}

Vector poly_reflect(const Vector& coeffs) {
    Vector out = coeffs;
    const auto deg = coeffs.size() - 1;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        if ((deg - i) % 2 == 1) out(i) = -out(i);
    return out;
}

}  // namespace pspec
