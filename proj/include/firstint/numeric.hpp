#pragma once

#include <complex>
#include <vector>

#include "firstint/errors.hpp"
#include "firstint/polynomial.hpp"

namespace firstint {

using ComplexF = std::complex<double>;

/// Floating evaluation, Horner in z2 over Horner-in-z1 coefficients.
/// Throws NumericOverflowError past 1e300 so growth probes can treat it as divergence.
ComplexF eval_numeric(const Polynomial& p, ComplexF z1, ComplexF z2);

/// All roots of one univariate complex polynomial with per-root relative residuals
/// |p(root)| / max|coeff|.
struct RootSet {
    std::vector<ComplexF> roots;
    std::vector<double> residuals;
};

struct RootFindOptions {
    double tol = 1e-10;           // relative; update stopping and residual acceptance
    int max_iterations = 500;
    double cluster_radius = 1e-6; // relative; multiple-root residual relaxation
    double relaxed_residual = 1e-6;
};

/// Weierstrass/Durand-Kerner simultaneous iteration. coeffs[k] multiplies z^k and the
/// leading coefficient must be nonzero. Deterministic: fixed initial guesses on a circle
/// of radius 1 + max|a_i/a_n| at angles offset by an irrational rotation.
/// Throws DegreeZeroError and NoConvergenceError.
RootSet find_roots(const std::vector<ComplexF>& coeffs, const RootFindOptions& opts = {});

/// coeffs[k] of p(z1_0, z2) as a polynomial in z2, evaluated in floating arithmetic.
std::vector<ComplexF> z2_slice_coeffs(const Polynomial& p, ComplexF z1_0);

/// Exact coefficients of a z1-only (or z2-only) polynomial as floating values.
std::vector<ComplexF> numeric_coeffs_z1(const Polynomial& p);

ComplexF eval_poly(const std::vector<ComplexF>& coeffs, ComplexF z);

/// A few Newton steps on p; returns the refined point (no-op when p' underflows).
ComplexF newton_polish(const std::vector<ComplexF>& coeffs, ComplexF z, int steps = 3);

}  // namespace firstint
