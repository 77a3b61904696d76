#include "pspec/oracle.hpp"

#include "pspec/poly.hpp"

#include <cmath>

namespace pspec {

EvenPolynomial szp_polynomial(const RationalFunction& f) {
    const Vector lhs = poly_mul(f.num, poly_reflect(f.den));
    const Vector rhs = poly_mul(poly_reflect(f.num), f.den);
    Vector coeffs = lhs + rhs;

    const auto deg = coeffs.size() - 1;
    const double scale = std::max(1.0, coeffs.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        if ((deg - i) % 2 == 1) {
            if (std::abs(coeffs(i)) > 1e-12 * scale)
                throw NumericalError("szp_polynomial: odd coefficient failed to cancel");
            coeffs(i) = 0.0;
        }
    }
    return {coeffs};
}

Spectrum szp_roots(const EvenPolynomial& p) {
    if (p.coeffs.size() == 0 || p.coeffs(0) == 0.0)
        throw ValidationError("szp_roots: zero leading coefficient");
    const auto n = p.degree() / 2;

    // Degree halving: solve in x = s^2 for conditioning.
    Vector xpoly(n + 1);
    for (Eigen::Index i = 0; i <= n; ++i) xpoly(i) = p.coeffs(2 * i);
    const std::vector<Complex> xroots = poly_roots(xpoly);

    std::vector<Complex> out;
    for (const auto& x : xroots) {
        const Complex s = std::sqrt(x);
        out.push_back(s);
        out.push_back(-s);
    }
    return Spectrum(std::move(out));
}

namespace {

Vector real_negative_roots(const Vector& coeffs, const char* what) {
    const std::vector<Complex> roots = poly_roots(coeffs);
    Vector out(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) {
        if (std::abs(roots[i].imag()) > 1e-8 * std::max(1.0, std::abs(roots[i])))
            throw ValidationError(std::string("vieta_checks: nonreal ") + what);
        if (roots[i].real() >= 0)
            throw ValidationError(std::string("vieta_checks: nonnegative ") + what);
        out(i) = roots[i].real();
    }
    return out;
}

}  // namespace

VietaReport vieta_checks(const RationalFunction& f, double rel_tol) {
    const Vector z = real_negative_roots(f.num / f.num(0), "zero");
    const Vector p = real_negative_roots(f.den, "pole");

    const Spectrum mu = szp_roots(szp_polynomial(f));
    const auto stable = mu.stable();

    VietaReport rep;
    Complex prod = 1.0;
    Complex sumsq = 0.0;
    for (const auto& m : stable) {
        prod *= m;
        sumsq += m * m;
    }
    rep.product_lhs = std::abs(prod);
    rep.sum_sq_lhs = sumsq.real();

    double pz = 1.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) pz *= p(i) * z(i);
    rep.product_rhs = std::sqrt(pz);

    auto pair_sum = [](const Vector& v) {
        double acc = 0;
        for (Eigen::Index i = 0; i < v.size(); ++i)
            for (Eigen::Index k = i + 1; k < v.size(); ++k) acc += v(i) * v(k);
        return acc;
    };
    rep.sum_sq_rhs = p.sum() * z.sum() - pair_sum(p) - pair_sum(z);

    const double pscale = std::max(1.0, std::abs(rep.product_rhs));
    const double sscale = std::max(1.0, std::abs(rep.sum_sq_rhs));
    rep.product_rel_err = std::abs(rep.product_lhs - rep.product_rhs) / pscale;
    rep.sum_sq_rel_err = std::abs(rep.sum_sq_lhs - rep.sum_sq_rhs) / sscale;
    rep.pass = rep.product_rel_err <= rel_tol && rep.sum_sq_rel_err <= rel_tol;
    return rep;
}

bool real_zero_lemma_check(const Vector& p, const Vector& q, double tol) {
    if (p.size() != q.size())
        throw ValidationError("real_zero_lemma_check: length mismatch");
    if (q.size() > 0 && q.minCoeff() <= 0)
        throw ValidationError("real_zero_lemma_check: weights must be positive");
    const auto n = p.size();
    if (n <= 1) return true;  // no finite zeros

    // Cleared-denominator polynomial in u = x^2:
    //   sum_k q_k * prod_{j != k} (u - p_j^2), degree n-1.
    Vector cleared = Vector::Zero(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Vector term(1);
        term << q(k);
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == k) continue;
            Vector factor(2);
            factor << 1.0, -p(j) * p(j);
            term = poly_mul(term, factor);
        }
        cleared.tail(term.size()) += term;
    }

    for (const auto& u : poly_roots(cleared)) {
        const Complex x = std::sqrt(u);
        if (std::abs(x.imag()) > tol * std::max(1.0, std::abs(x))) return false;
    }
    return true;
}

}  // namespace pspec
