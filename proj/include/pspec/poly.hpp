#pragma once

#include "pspec/types.hpp"

namespace pspec {

// Dense polynomial helpers, coefficients in descending powers.

// Roots via the companion matrix of the monic-normalized polynomial.
std::vector<Complex> poly_roots(const Vector& coeffs);

Vector poly_mul(const Vector& a, const Vector& b);

Vector poly_derivative(const Vector& coeffs);

double poly_eval(const Vector& coeffs, double x);
Complex poly_eval(const Vector& coeffs, Complex x);

// Coefficients of p(-s).
Vector poly_reflect(const Vector& coeffs);

}  // namespace pspec
